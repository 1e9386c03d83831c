#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/braided.hpp"

#include <random>

using namespace ybx;

namespace {

Word xw(std::vector<int> idx) { return make_word(Alphabet::X, std::move(idx)); }

std::vector<int> perm_power(const std::vector<int>& f, int d) {
    std::vector<int> out(f.size());
    for (std::size_t q = 0; q < f.size(); ++q) {
        int cur = static_cast<int>(q) + 1;
        for (int i = 0; i < d; ++i) cur = f[cur - 1];
        out[q] = cur;
    }
    return out;
}

// apply a random chain of one-position rewrites; stays inside the word's class
Word random_orbit_mate(const SolutionTable& s, const Word& w, std::mt19937_64& rng) {
    std::vector<int> v;
    for (const Letter& l : w.letters()) v.push_back(l.index - 1);
    int steps = static_cast<int>(rng() % 4);
    for (int t = 0; t < steps && v.size() >= 2; ++t) {
        int i = static_cast<int>(rng() % (v.size() - 1));
        auto [a, b] = s.apply(v[i], v[i + 1]);
        v[i] = a;
        v[i + 1] = b;
    }
    std::vector<int> one;
    for (int x : v) one.push_back(x + 1);
    return xw(one);
}

} // namespace

TEST_CASE("single letters act by the table, words by iteration") {
    auto s = make_permutation_solution({3, {2, 3, 1}});
    ExtendedActions act(s);
    // a |> single-letter word applies f once per letter of a
    CHECK(act.left(xw({1, 2}), xw({3})) == xw({2}));     // f^2(x3) = x2
    CHECK(act.left(Word{}, xw({3, 1})) == xw({3, 1}));   // 1 |> u = u
    CHECK(act.left(xw({1, 2}), xw({3, 1})) == xw({2, 3})); // letterwise f^2
    // right action returns the tail in the permutation case
    CHECK(act.right(xw({1}), xw({2, 3, 1})) == xw({1}));
    CHECK(act.right(xw({2, 1, 1}), Word{}) == xw({2, 1, 1})); // a <| 1 = a
    CHECK(act.right(xw({1, 2}), xw({1, 3})) == xw({1, 3}));
}

TEST_CASE("word actions satisfy the monoid action laws") {
    std::mt19937_64 rng(3);
    for (int n : {2, 3}) {
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = i + 2 > n ? 1 : i + 2;
        auto s = make_permutation_solution({n, cyc});
        ExtendedActions act(s);
        std::uniform_int_distribution<int> gen(1, n);
        auto rnd_word = [&](int maxlen) {
            std::vector<int> v;
            int l = 1 + static_cast<int>(rng() % maxlen);
            for (int i = 0; i < l; ++i) v.push_back(gen(rng));
            return xw(v);
        };
        for (int trial = 0; trial < 60; ++trial) {
            Word a = rnd_word(4), b = rnd_word(4), u = rnd_word(4), v = rnd_word(4);
            // composition laws
            CHECK(act.left(a * b, u) == act.left(a, act.left(b, u)));
            CHECK(act.right(a, u * v) == act.right(act.right(a, u), v));
            // action on a product twists the left factor
            CHECK(act.left(a, u * v) == act.left(a, u) * act.left(act.right(a, u), v));
            CHECK(act.right(a * b, u) == act.right(a, act.left(b, u)) * act.right(b, u));
            // the rewritten pair multiplies back to the original in the monoid
            Word lhs = act.left(a, b) * act.right(a, b);
            CHECK(normal_form_closed(lhs) == normal_form_closed(a * b));
        }
    }
}

TEST_CASE("braiding on normal words") {
    auto s = make_permutation_solution({3, {2, 3, 1}});
    NormalizedBraiding braiding(s, 8);
    // worked example: degrees 2 and 3
    auto [u, v] = braiding.rho(xw({1, 2}), xw({1, 1, 3}));
    CHECK(u == xw({1, 1, 2}));
    CHECK(v == xw({1, 3}));
    // length-1 pairs restrict to the table
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            auto [a, b] = braiding.rho(xw({p}), xw({q}));
            auto [ea, eb] = s.apply(p - 1, q - 1);
            CHECK(a == xw({ea + 1}));
            CHECK(b == xw({eb + 1}));
        }
    CHECK_THROWS_AS((void)braiding.rho(xw({2, 1}), xw({1})), std::invalid_argument);
}

TEST_CASE("braiding matches its closed form everywhere") {
    for (int n : {2, 3}) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        do {
            auto s = make_permutation_solution({n, p});
            NormalizedBraiding braiding(s, 7);
            std::vector<Word> normals;
            for (int d = 1; d <= 4; ++d)
                for (const Word& w : braiding.normal_of_degree(d)) normals.push_back(w);
            for (const Word& a : normals)
                for (const Word& b : normals) CHECK(braiding.rho(a, b) == rho_closed_form(p, a, b));
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("third power reproduces the braiding, second does not") {
    auto s = make_permutation_solution({3, {2, 3, 1}});
    NormalizedBraiding braiding(s, 7);
    auto rep = rho_power_check(braiding, 4);
    CHECK(rep.rho3_eq_rho);
    CHECK(!rep.rho2_eq_rho);
    REQUIRE(rep.rho2_witness.has_value());
    CHECK(rep.rho2_witness->first.size() != rep.rho2_witness->second.size());

    // restricted to equal degrees the square already fixes everything
    for (int d = 1; d <= 4; ++d)
        for (const Word& a : braiding.normal_of_degree(d))
            for (const Word& b : braiding.normal_of_degree(d)) {
                auto r1 = braiding.rho(a, b);
                auto r2 = braiding.rho(r1.first, r1.second);
                CHECK(r1 == r2);
            }

    // one generator: the braiding flips the two power words, so the square
    // is the identity and differs from the braiding on mixed degrees
    auto one = make_permutation_solution({1, {1}});
    NormalizedBraiding triv(one, 6);
    auto rep1 = rho_power_check(triv, 3);
    CHECK(rep1.rho3_eq_rho);
    CHECK(!rep1.rho2_eq_rho);
    CHECK(rho_power_check(triv, 1).rho2_eq_rho);
}

TEST_CASE("action normal forms are class invariants") {
    std::mt19937_64 rng(13);
    auto s = make_permutation_solution({3, {3, 1, 2}});
    NormalizedBraiding braiding(s, 9);
    ExtendedActions act(s);
    std::uniform_int_distribution<int> gen(1, 3);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<int> va, vb;
        int la = 1 + static_cast<int>(rng() % 3), lb = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < la; ++i) va.push_back(gen(rng));
        for (int i = 0; i < lb; ++i) vb.push_back(gen(rng));
        Word a = xw(va), b = xw(vb);
        Word a1 = random_orbit_mate(s, a, rng), b1 = random_orbit_mate(s, b, rng);
        CHECK(braiding.nor(act.left(a1, b1)) == braiding.nor(act.left(a, b)));
        CHECK(braiding.nor(act.right(a1, b1)) == braiding.nor(act.right(a, b)));
        CHECK(braiding.nor(act.left(a, b)) ==
              braiding.nor(act.left(braiding.nor(a), braiding.nor(b))));
    }
}

TEST_CASE("degree-d restriction is the power permutation") {
    auto f = std::vector<int>{2, 3, 1};
    auto s = make_permutation_solution({3, f});
    auto v2 = d_veronese_solution(s, 2);
    // F cycles w1 -> w3 -> w2 -> w1, i.e. the square of f
    CHECK(v2 == make_permutation_solution({3, {3, 1, 2}}));
    CHECK(v2 == make_permutation_solution({3, perm_power(f, 2)}));
    CHECK(check_braid(v2));
    CHECK(check_idempotent(v2));

    auto id = make_permutation_solution({4, {1, 2, 3, 4}});
    CHECK(d_veronese_solution(id, 3) == id);
    CHECK(d_veronese_solution(s, 1) == s);
}

TEST_CASE("degree-d restriction via the rewritten pairs agrees with the table map") {
    // the map on degree-d classes is isomorphic to the braiding restriction
    auto f = std::vector<int>{2, 1, 3};
    auto s = make_permutation_solution({3, f});
    NormalizedBraiding braiding(s, 7);
    ExtendedActions act(s);
    const int d = 2;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            Word u = xw({a / 3 + 1, a % 3 + 1});
            Word v = xw({b / 3 + 1, b % 3 + 1});
            // (Nor x Nor) of the pair action equals rho of the normal forms
            Word nu = braiding.nor(act.left(u, v));
            Word nv = braiding.nor(act.right(u, v));
            auto r = braiding.rho(braiding.nor(u), braiding.nor(v));
            CHECK(nu == r.first);
            CHECK(nv == r.second);
            (void)d;
        }
}

TEST_CASE("degree component sizes") {
    auto s = make_permutation_solution({4, {2, 3, 4, 1}});
    CHECK(monomial_veronese_order(s, 3) == 4);
    CHECK(monomial_veronese_order(s, 0) == 1);
    CHECK(monomial_veronese_order(identity_map_solution(2), 2) == 4);
}

TEST_CASE("general braided sets go through the same machinery") {
    // the involutive flip: braided but not idempotent
    auto flip = flip_solution(2);
    REQUIRE(check_braid(flip));
    CHECK(monomial_veronese_order(flip, 2) == 3);
    auto v = d_veronese_solution(flip, 2);
    CHECK(v.n == 3);
    CHECK(check_braid(v));
    // the flip restricted to degree-2 classes is again involutive
    for (int a = 0; a < v.n; ++a)
        for (int b = 0; b < v.n; ++b) {
            auto [c, d] = v.apply(a, b);
            CHECK(v.apply(c, d) == std::make_pair(a, b));
        }

    // a non-permutation idempotent left-nondegenerate braided set:
    // left actions id and the transposition, right action constant
    auto exotic = solution_from_json_text(
        R"({"n":2,"kind":"table","r":[[[1,1],[2,1]],[[2,1],[1,1]]]})");
    REQUIRE(check_braid(exotic));
    REQUIRE(check_idempotent(exotic));
    REQUIRE(check_nondegenerate(exotic).left);
    REQUIRE(!recover_permutation(exotic).has_value());
    auto ve = d_veronese_solution(exotic, 2);
    CHECK(check_braid(ve));
    // class invariance of the rewritten pairs holds here as well
    NormalizedBraiding braiding(exotic, 7);
    ExtendedActions act(exotic);
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> va, vb;
        for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i)
            va.push_back(1 + static_cast<int>(rng() % 2));
        for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i)
            vb.push_back(1 + static_cast<int>(rng() % 2));
        Word a = xw(va), b = xw(vb);
        Word a1 = random_orbit_mate(exotic, a, rng), b1 = random_orbit_mate(exotic, b, rng);
        CHECK(braiding.nor(act.left(a1, b1)) == braiding.nor(act.left(a, b)));
        CHECK(braiding.nor(act.right(a1, b1)) == braiding.nor(act.right(a, b)));
    }
}
