#include "ybx/solution.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace ybx {

void SolutionTable::rebuild_actions() {
    left.assign(n * n, 0);
    right.assign(n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            left[x * n + y] = r[x * n + y].first;
            right[x * n + y] = r[x * n + y].second;
        }
}

std::vector<int> SolutionTable::encoding() const {
    std::vector<int> e;
    e.reserve(2 * n * n);
    for (const auto& [a, b] : r) {
        e.push_back(a + 1);
        e.push_back(b + 1);
    }
    return e;
}

SolutionTable make_permutation_solution(const PermutationSolutionSpec& spec) {
    const int n = spec.n;
    if (n <= 0 || static_cast<int>(spec.f.size()) != n)
        throw std::invalid_argument("permutation solution: bad size");
    std::vector<bool> seen(n, false);
    for (int v : spec.f) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("permutation solution: f is not a bijection");
        seen[v - 1] = true;
    }
    SolutionTable s;
    s.n = n;
    s.r.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.r[x * n + y] = {spec.f[y] - 1, y};
    s.rebuild_actions();
    return s;
}

SolutionTable flip_solution(int n) {
    SolutionTable s;
    s.n = n;
    s.r.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.r[x * n + y] = {y, x};
    s.rebuild_actions();
    return s;
}

SolutionTable identity_map_solution(int n) {
    SolutionTable s;
    s.n = n;
    s.r.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.r[x * n + y] = {x, y};
    s.rebuild_actions();
    return s;
}

namespace {

// r12 r23 r12 and r23 r12 r23 on one triple
std::array<int, 3> braid_lhs(const SolutionTable& s, std::array<int, 3> t) {
    auto r12 = [&](std::array<int, 3> u) {
        auto [a, b] = s.apply(u[0], u[1]);
        return std::array<int, 3>{a, b, u[2]};
    };
    auto r23 = [&](std::array<int, 3> u) {
        auto [a, b] = s.apply(u[1], u[2]);
        return std::array<int, 3>{u[0], a, b};
    };
    return r12(r23(r12(t)));
}

std::array<int, 3> braid_rhs(const SolutionTable& s, std::array<int, 3> t) {
    auto r12 = [&](std::array<int, 3> u) {
        auto [a, b] = s.apply(u[0], u[1]);
        return std::array<int, 3>{a, b, u[2]};
    };
    auto r23 = [&](std::array<int, 3> u) {
        auto [a, b] = s.apply(u[1], u[2]);
        return std::array<int, 3>{u[0], a, b};
    };
    return r23(r12(r23(t)));
}

// the three pointwise conditions on the actions, equivalent to the braid
// relation: composition of left actions, composition of right actions,
// and the mixed compatibility
bool braid_conditions(const SolutionTable& s) {
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = s.left_act(x, y);      // x |> y
                int x_y = s.right_act(x, y);    // x <| y
                int yz = s.left_act(y, z);
                int y_z = s.right_act(y, z);
                // l1: x|>(y|>z) = (x|>y) |> ((x<|y) |> z)
                if (s.left_act(x, yz) != s.left_act(xy, s.left_act(x_y, z))) return false;
                // r1: (x<|y) <| z  = (x <| (y|>z)) <| (y<|z)
                if (s.right_act(x_y, z) != s.right_act(s.right_act(x, yz), y_z)) return false;
                // lr3: (x|>y) <| ((x<|y)|>z) = (x <| (y|>z)) |> (y<|z)
                if (s.right_act(xy, s.left_act(x_y, z)) != s.left_act(s.right_act(x, yz), y_z))
                    return false;
            }
    return true;
}

} // namespace

bool check_braid(const SolutionTable& s) {
    bool direct = !braid_counterexample(s).has_value();
    bool pointwise = braid_conditions(s);
    if (direct != pointwise)
        throw std::logic_error("braid check: the two formulations disagree");
    return direct;
}

std::optional<std::array<int, 3>> braid_counterexample(const SolutionTable& s) {
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::array<int, 3> t{x, y, z};
                if (braid_lhs(s, t) != braid_rhs(s, t)) return t;
            }
    return std::nullopt;
}

bool check_idempotent(const SolutionTable& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            auto [a, b] = s.apply(x, y);
            if (s.apply(a, b) != std::make_pair(a, b)) return false;
        }
    return true;
}

Nondegeneracy check_nondegenerate(const SolutionTable& s) {
    Nondegeneracy nd{true, true};
    std::vector<bool> seen;
    for (int x = 0; x < s.n && nd.left; ++x) {
        seen.assign(s.n, false);
        for (int y = 0; y < s.n; ++y) {
            int v = s.left_act(x, y);
            if (seen[v]) { nd.left = false; break; }
            seen[v] = true;
        }
    }
    // R_y(x) = right action with the second argument fixed
    for (int y = 0; y < s.n && nd.right; ++y) {
        seen.assign(s.n, false);
        for (int x = 0; x < s.n; ++x) {
            int v = s.right_act(x, y);
            if (seen[v]) { nd.right = false; break; }
            seen[v] = true;
        }
    }
    return nd;
}

std::optional<std::vector<int>> recover_permutation(const SolutionTable& s) {
    const int n = s.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.right_act(x, y) != y) return std::nullopt;
    // left action must be constant in x
    for (int x = 1; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.left_act(x, y) != s.left_act(0, y)) return std::nullopt;
    std::vector<int> f(n);
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
        int v = s.left_act(0, y);
        if (seen[v]) return std::nullopt;
        seen[v] = true;
        f[y] = v + 1;
    }
    return f;
}

namespace {

// cycle type of L_x when bijective, otherwise the sorted fiber profile;
// both are isomorphism invariants of the vertex x
std::vector<int> left_action_signature(const SolutionTable& s, int x) {
    const int n = s.n;
    std::vector<int> img(n);
    for (int y = 0; y < n; ++y) img[y] = s.left_act(x, y);
    std::vector<bool> hit(n, false);
    for (int v : img) hit[v] = true;
    bool bij = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    std::vector<int> sig;
    if (bij) {
        std::vector<bool> used(n, false);
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            int len = 0, c = y;
            while (!used[c]) { used[c] = true; c = img[c]; ++len; }
            sig.push_back(len);
        }
    } else {
        std::vector<int> fibers(n, 0);
        for (int v : img) ++fibers[v];
        sig = fibers;
        sig.push_back(-1); // distinguish from the bijective case
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool extends_to_isomorphism(const SolutionTable& s1, const SolutionTable& s2,
                            std::vector<int>& phi, std::vector<bool>& used, int x) {
    const int n = s1.n;
    if (x == n) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto [c, d] = s1.apply(a, b);
                if (s2.apply(phi[a], phi[b]) != std::make_pair(phi[c], phi[d])) return false;
            }
        return true;
    }
    auto sig = left_action_signature(s1, x);
    for (int v = 0; v < n; ++v) {
        if (used[v] || left_action_signature(s2, v) != sig) continue;
        phi[x] = v;
        used[v] = true;
        // prune on the pairs already fully mapped
        bool ok = true;
        for (int a = 0; a <= x && ok; ++a)
            for (int b = 0; b <= x && ok; ++b) {
                auto [c, d] = s1.apply(a, b);
                if (c <= x && d <= x &&
                    s2.apply(phi[a], phi[b]) != std::make_pair(phi[c], phi[d]))
                    ok = false;
            }
        if (ok && extends_to_isomorphism(s1, s2, phi, used, x + 1)) return true;
        used[v] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> solutions_isomorphic(const SolutionTable& s1,
                                                     const SolutionTable& s2) {
    if (s1.n != s2.n) throw std::invalid_argument("solutions_isomorphic: size mismatch");
    std::vector<int> phi(s1.n, -1);
    std::vector<bool> used(s1.n, false);
    if (!extends_to_isomorphism(s1, s2, phi, used, 0)) return std::nullopt;
    for (int& v : phi) ++v; // 1-based for I/O
    return phi;
}

SolutionTable relabel_solution(const SolutionTable& s, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != s.n)
        throw std::invalid_argument("relabel_solution: bad bijection");
    SolutionTable t;
    t.n = s.n;
    t.r.resize(s.n * s.n);
    auto p = [&](int i) { return phi[i] - 1; };
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            auto [a, b] = s.apply(x, y);
            t.r[p(x) * s.n + p(y)] = {p(a), p(b)};
        }
    t.rebuild_actions();
    return t;
}

nlohmann::json solution_to_json(const SolutionTable& s) {
    nlohmann::json j;
    j["n"] = s.n;
    if (auto f = recover_permutation(s)) {
        j["kind"] = "permutation";
        j["f"] = *f;
        return j;
    }
    j["kind"] = "table";
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < s.n; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (int y = 0; y < s.n; ++y) {
            auto [a, b] = s.apply(x, y);
            row.push_back(nlohmann::json::array({a + 1, b + 1}));
        }
        rows.push_back(row);
    }
    j["r"] = rows;
    return j;
}

SolutionTable solution_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("kind"))
        throw std::invalid_argument("solution JSON: need fields n, kind");
    const int n = j.at("n").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "permutation") {
        PermutationSolutionSpec spec;
        spec.n = n;
        spec.f = j.at("f").get<std::vector<int>>();
        return make_permutation_solution(spec);
    }
    if (kind != "table") throw std::invalid_argument("solution JSON: unknown kind");
    const auto& rows = j.at("r");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("solution JSON: table has wrong row count");
    SolutionTable s;
    s.n = n;
    s.r.resize(n * n);
    for (int x = 0; x < n; ++x) {
        const auto& row = rows.at(x);
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("solution JSON: table row has wrong length");
        for (int y = 0; y < n; ++y) {
            int a = row.at(y).at(0).get<int>();
            int b = row.at(y).at(1).get<int>();
            if (a < 1 || a > n || b < 1 || b > n)
                throw std::invalid_argument("solution JSON: entry out of range");
            s.r[x * n + y] = {a - 1, b - 1};
        }
    }
    s.rebuild_actions();
    return s;
}

SolutionTable solution_from_json_text(const std::string& text) {
    return solution_from_json(nlohmann::json::parse(text));
}

} // namespace ybx
