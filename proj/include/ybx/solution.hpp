#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

struct PermutationSolutionSpec {
    int n = 0;
    std::vector<int> f; // one-line notation, 1-based: f[i-1] is the image of i
};

/// A finite quadratic set (X, r): a total map r on X x X together with the
/// cached left action  L_x(y) = x|>y  and right action  R_y(x) = x<|y,
/// where r(x,y) = (L_x(y), R_y(x)). Internally 0-indexed; all I/O is
/// 1-indexed.
struct SolutionTable {
    int n = 0;
    std::vector<std::pair<int, int>> r; // r[x*n+y] = (x', y')
    std::vector<int> left;              // left[x*n+y]  = first component
    std::vector<int> right;             // right[x*n+y] = second component

    std::pair<int, int> apply(int x, int y) const { return r[x * n + y]; }
    int left_act(int x, int y) const { return left[x * n + y]; }
    int right_act(int x, int y) const { return right[x * n + y]; }

    void rebuild_actions();

    friend bool operator==(const SolutionTable&, const SolutionTable&) = default;

    /// Flat 1-based encoding, usable as a deterministic sort key.
    std::vector<int> encoding() const;
};

SolutionTable make_permutation_solution(const PermutationSolutionSpec& spec);

/// r(x,y) = (y,x).
SolutionTable flip_solution(int n);

/// r = id on X^2 (not left nondegenerate for n >= 2).
SolutionTable identity_map_solution(int n);

/// Braid relation  r12 r23 r12 = r23 r12 r23  on all of X^3, evaluated both
/// directly and through the three pointwise conditions on the actions; the
/// two formulations are cross-checked against each other.
bool check_braid(const SolutionTable& s);

/// Witness for a braid failure: the lexicographically first bad triple.
std::optional<std::array<int, 3>> braid_counterexample(const SolutionTable& s);

bool check_idempotent(const SolutionTable& s);

struct Nondegeneracy {
    bool left = false;
    bool right = false;
};
Nondegeneracy check_nondegenerate(const SolutionTable& s);

/// If r has the shape r(x,y) = (f(y), y) for a bijection f, return f
/// (1-based one-line notation).
std::optional<std::vector<int>> recover_permutation(const SolutionTable& s);

/// Searches for a bijection phi with (phi x phi) r1 = r2 (phi x phi),
/// backtracking with cycle-type pruning on the left actions. Returns phi
/// 1-based, or nullopt.
std::optional<std::vector<int>> solutions_isomorphic(const SolutionTable& s1,
                                                     const SolutionTable& s2);

/// Relabel s by the bijection phi (1-based): the solution with
/// r'(phi x, phi y) = (phi x phi) r(x, y).
SolutionTable relabel_solution(const SolutionTable& s, const std::vector<int>& phi);

nlohmann::json solution_to_json(const SolutionTable& s);
SolutionTable solution_from_json(const nlohmann::json& j);
SolutionTable solution_from_json_text(const std::string& text);

} // namespace ybx
