#pragma once

#include "ybx/yb_algebra.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ybx {

/// Left and right actions of the monoid of a braided set on itself,
/// extended from the letter-level actions by the graded recursions
///   c |> (b1...bq) = (c|>b1)((c<|b1)|>b2)... ,  (a1 a') |> b = a1 |> (a' |> b),
///   x <| (b1...bq) = ((x<|b1)<|b2)... ,         (a1 a') <| b = (a1 <| (a'|>b)) (a' <| b).
/// Words keep their length under both actions. Memo tables are built on
/// demand and single-threaded; a finished object is safe to share.
class ExtendedActions {
public:
    explicit ExtendedActions(const SolutionTable& s) : s_(s) {}

    const SolutionTable& table() const { return s_; }

    /// a |> b (the word b twisted by a).
    Word left(const Word& a, const Word& b);
    /// a <| b.
    Word right(const Word& a, const Word& b);

private:
    SolutionTable s_;
    std::map<std::pair<Word, Word>, Word> memo_left_, memo_right_;

    int check_letter(Letter l) const;
};

/// The braiding on normal words: rho(a, b) = (Nor(a|>b), Nor(a<|b)),
/// computed with the word-level actions and a truncated basis of the orbit
/// relations for normal forms.
class NormalizedBraiding {
public:
    NormalizedBraiding(const SolutionTable& s, std::size_t degree_bound);

    const SolutionTable& table() const { return solution_; }
    const GroebnerBasis<Rational>& basis() const { return gb_; }
    std::size_t degree_bound() const { return gb_.degree_bound; }

    /// Normal words of length d in deg-lex order.
    std::vector<Word> normal_of_degree(std::size_t d) const;

    Word nor(const Word& w) const;

    /// Both arguments and both results are normal words.
    std::pair<Word, Word> rho(const Word& a, const Word& b);

private:
    SolutionTable solution_;
    GroebnerBasis<Rational> gb_;
    ExtendedActions actions_;
};

struct RhoPowerReport {
    bool rho3_eq_rho = false;
    bool rho2_eq_rho = false;
    // first witness pair with rho^2 != rho, when one exists
    std::optional<std::pair<Word, Word>> rho2_witness;
};

/// Exhaustive check of rho^3 = rho (and whether rho^2 = rho) over all
/// pairs of normal words of length <= max_deg.
RhoPowerReport rho_power_check(NormalizedBraiding& braiding, std::size_t max_deg);

/// Closed form of the braiding for a permutation solution:
/// rho(x_1^{d-1} x_p, x_1^{m-1} x_q) = (x_1^{m-1} f^d(x_q), x_1^{d-1} x_q).
std::pair<Word, Word> rho_closed_form(const std::vector<int>& f, const Word& a, const Word& b);

/// The solution induced on the normal words of length d: the braiding
/// restricted to N_d, with N_d enumerated in deg-lex order. For a
/// permutation input this is the permutation solution of f^d up to the
/// relabeling N_d -> {1..|N_d|}.
SolutionTable d_veronese_solution(const SolutionTable& s, int d);

/// |N_d| = dim A_d, the order of the degree-d monomial solution.
long long monomial_veronese_order(const SolutionTable& s, int d);

} // namespace ybx
