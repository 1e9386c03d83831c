#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/groebner.hpp"
#include "ybx/yb_algebra.hpp"

#include <random>
#include <set>

using namespace ybx;

namespace {

std::vector<Letter> xalpha(int n) {
    std::vector<Letter> g;
    for (int i = 1; i <= n; ++i) g.push_back(xgen(i));
    return g;
}

RPoly binom(std::vector<int> u, std::vector<int> v) {
    RPoly p;
    p.add_term(make_word(Alphabet::X, u), 1);
    p.add_term(make_word(Alphabet::X, v), -1);
    return p;
}

// reducer that picks a random reducible term and a random matching rule at
// each step; an independent probe of reduction-order independence
RPoly random_strategy_normal_form(const RPoly& f, const GroebnerBasis<Rational>& G,
                                  std::mt19937_64& rng) {
    RPoly out;
    RPoly work = f;
    while (!work.is_zero()) {
        std::vector<std::pair<Word, Rational>> reducible;
        for (const auto& [w, c] : work.terms())
            if (!G.word_is_normal(w)) reducible.emplace_back(w, c);
        if (reducible.empty()) {
            out += work;
            break;
        }
        auto [w, c] = reducible[std::uniform_int_distribution<std::size_t>(
            0, reducible.size() - 1)(rng)];
        // all in-word matches, choose one at random
        std::vector<std::pair<std::size_t, std::size_t>> hits;
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (std::size_t len : G.lm_lengths) {
                if (pos + len > w.size()) break;
                auto it = G.lm_index.find(w.subword(pos, len));
                if (it != G.lm_index.end()) hits.emplace_back(pos, it->second);
            }
        auto [pos, ri] =
            hits[std::uniform_int_distribution<std::size_t>(0, hits.size() - 1)(rng)];
        const RPoly& g = G.rules[ri];
        Word a = w.prefix(pos);
        Word b = w.subword(pos + g.lm().size(), w.size() - pos - g.lm().size());
        work -= g.framed(a, b, c);
    }
    return out;
}

} // namespace

TEST_CASE("normal form rewrites with the stated rules") {
    auto G = buchberger(xalpha(2), std::vector<RPoly>{binom({2, 1}, {1, 1})}, 4);
    CHECK(normal_form_word(make_word(Alphabet::X, {2, 1}), G).str() == "1*x1.x1");
    RPoly already(make_word(Alphabet::X, {1, 2}));
    CHECK(normal_form(already, G) == already);
}

TEST_CASE("normal form under the standard 3-generator rules") {
    auto G = groebner_of(canonical_presentation(3), 5);
    CHECK(normal_form_word(make_word(Alphabet::X, {3, 2, 1}), G).str() == "1*x1.x1.x1");
}

TEST_CASE("reduction trace witnesses ideal membership") {
    auto G = groebner_of(canonical_presentation(3), 6);
    RPoly f;
    f.add_term(make_word(Alphabet::X, {3, 2, 1}), Rational(5, 3));
    f.add_term(make_word(Alphabet::X, {2, 2}), -2);
    std::vector<ReductionStep<Rational>> trace;
    RPoly nor = normal_form(f, G, &trace);
    RPoly rebuilt = nor;
    for (const auto& step : trace)
        rebuilt += G.rules[step.rule].framed(step.left, step.right, step.coeff);
    CHECK(rebuilt == f);
    CHECK(!trace.empty());
}

TEST_CASE("degree bound is enforced") {
    auto G = groebner_of(canonical_presentation(2), 3);
    RPoly f(make_word(Alphabet::X, {2, 2, 2, 2}));
    CHECK_THROWS_AS((void)normal_form(f, G), std::invalid_argument);
    CHECK_THROWS_AS((void)bullet_multiply(f, f, G), std::invalid_argument);
}

TEST_CASE("completion of the orbit relations gives the standard basis") {
    auto s = make_permutation_solution({3, {2, 3, 1}});
    auto G = groebner_of(orbit_relations(s), 4);
    std::set<std::string> got;
    for (const auto& r : G.rules) got.insert(r.str());
    std::set<std::string> expect = {
        "1*x2.x1 + -1*x1.x1", "1*x3.x1 + -1*x1.x1", "1*x2.x2 + -1*x1.x2",
        "1*x3.x2 + -1*x1.x2", "1*x2.x3 + -1*x1.x3", "1*x3.x3 + -1*x1.x3",
    };
    CHECK(got == expect);
    CHECK(G.complete);
}

TEST_CASE("empty relation set gives the free algebra") {
    auto G = buchberger(xalpha(2), std::vector<RPoly>{}, 5);
    CHECK(G.rules.empty());
    CHECK(normal_words(G, 3).size() == 8);
    CHECK(hilbert_function(G, 3) == std::vector<long long>{1, 2, 4, 8});
}

TEST_CASE("commuting relation on two generators is already closed") {
    auto G = buchberger(xalpha(2), std::vector<RPoly>{binom({2, 1}, {1, 2})}, 4);
    CHECK(G.rules.size() == 1);
    CHECK(G.rules[0].str() == "1*x2.x1 + -1*x1.x2");
    CHECK(hilbert_function(G, 4) == std::vector<long long>{1, 2, 3, 4, 5});
}

TEST_CASE("quadratic basis recognition") {
    CHECK(is_groebner(canonical_presentation(4).relations));
    CHECK(is_groebner(std::vector<RPoly>{binom({2, 1}, {1, 2})}));
    // a pair that rewrites the same leading word two inequivalent ways
    std::vector<RPoly> bad = {binom({2, 2}, {1, 2}), binom({2, 1}, {2, 2})};
    CHECK(!is_groebner(bad));
    RPoly cubic;
    cubic.add_term(make_word(Alphabet::X, {1, 1, 1}), 1);
    CHECK_THROWS_AS((void)is_groebner(std::vector<RPoly>{cubic}), std::invalid_argument);
}

TEST_CASE("inhomogeneous and low-degree inputs are rejected") {
    RPoly mixed;
    mixed.add_term(make_word(Alphabet::X, {2, 1}), 1);
    mixed.add_term(make_word(Alphabet::X, {1}), -1);
    CHECK_THROWS_AS((void)buchberger(xalpha(2), std::vector<RPoly>{mixed}, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)buchberger(std::vector<Letter>{}, std::vector<RPoly>{binom({2, 1}, {1, 1})}, 4), std::invalid_argument);
}

TEST_CASE("normal words of the standard basis") {
    auto G = groebner_of(canonical_presentation(3), 4);
    auto words = normal_words(G, 2);
    REQUIRE(words.size() == 3);
    CHECK(words[0].str() == "x1.x1");
    CHECK(words[1].str() == "x1.x2");
    CHECK(words[2].str() == "x1.x3");
    CHECK(normal_words(G, 0) == std::vector<Word>{Word{}});
}

TEST_CASE("graded dimensions") {
    auto G = groebner_of(canonical_presentation(3), 5);
    CHECK(hilbert_function(G, 4) == std::vector<long long>{1, 3, 3, 3, 3});
    // monomial model of the commuting plane
    auto M = buchberger(xalpha(2), std::vector<RPoly>{RPoly(make_word(Alphabet::X, {2, 1}))}, 6);
    CHECK(hilbert_function(M, 5) == std::vector<long long>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("quotient multiplication") {
    auto G = groebner_of(canonical_presentation(3), 6);
    RPoly u(make_word(Alphabet::X, {1, 2}));
    RPoly v(make_word(Alphabet::X, {1, 3}));
    CHECK(bullet_multiply(u, v, G).str() == "1*x1.x1.x1.x3");
    CHECK(bullet_multiply(RPoly::one(), v, G) == normal_form(v, G));
    CHECK(bullet_multiply(RPoly(Word{xgen(2)}), RPoly(Word{xgen(3)}), G).str() == "1*x1.x3");
}

TEST_CASE("reduction is independent of strategy on a closed basis") {
    std::mt19937_64 rng(2024);
    auto G = groebner_of(canonical_presentation(3), 6);
    std::uniform_int_distribution<int> idx(1, 3);
    std::uniform_int_distribution<int> len(1, 5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 120; ++trial) {
        RPoly f;
        for (int t = 0; t < 4; ++t) {
            std::vector<int> w;
            int l = len(rng);
            for (int i = 0; i < l; ++i) w.push_back(idx(rng));
            f.add_term(make_word(Alphabet::X, w), coef(rng));
        }
        RPoly a = normal_form(f, G);
        RPoly b = random_strategy_normal_form(f, G, rng);
        CHECK(a == b);
    }
}

TEST_CASE("multiplication respects normal forms") {
    std::mt19937_64 rng(7);
    auto G = groebner_of(canonical_presentation(3), 8);
    std::uniform_int_distribution<int> idx(1, 3);
    std::uniform_int_distribution<int> len(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<int> wu, wv;
        for (int i = 0; i < len(rng); ++i) wu.push_back(idx(rng));
        for (int i = 0; i < len(rng); ++i) wv.push_back(idx(rng));
        RPoly u(make_word(Alphabet::X, wu)), v(make_word(Alphabet::X, wv));
        RPoly lhs = normal_form(normal_form(u, G) * normal_form(v, G), G);
        RPoly rhs = normal_form(u * v, G);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("normal and obstructed words partition each degree") {
    auto G = groebner_of(canonical_presentation(3), 5);
    for (int d = 0; d <= 5; ++d) {
        long long normal = 0, obstructed = 0;
        // enumerate all 3^d words
        std::vector<int> w(d, 1);
        for (;;) {
            Word word = make_word(Alphabet::X, w);
            if (G.word_is_normal(word))
                ++normal;
            else
                ++obstructed;
            int i = d - 1;
            while (i >= 0 && w[i] == 3) w[i--] = 1;
            if (i < 0) break;
            ++w[i];
        }
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= 3;
        CHECK(normal + obstructed == total);
        CHECK(normal == static_cast<long long>(normal_words(G, d).size()));
    }
}

TEST_CASE("prime-field cross-check of the completion") {
    using K = Fp<1000003>;
    std::vector<Poly<K>> rels;
    for (const RPoly& r : orbit_relations(make_permutation_solution({3, {3, 1, 2}})).relations) {
        Poly<K> p;
        for (const auto& [w, c] : r.terms())
            p.add_term(w, K(static_cast<long long>(numerator(c))));
        rels.push_back(p);
    }
    auto Gp = buchberger(xalpha(3), rels, 4);
    auto Gq = groebner_of(canonical_presentation(3), 4);
    REQUIRE(Gp.rules.size() == Gq.rules.size());
    // identical monomial structure; signs differ in representation only
    for (std::size_t i = 0; i < Gp.rules.size(); ++i) {
        CHECK(Gp.rules[i].lm() == Gq.rules[i].lm());
        REQUIRE(Gp.rules[i].term_count() == Gq.rules[i].term_count());
        auto pit = Gp.rules[i].terms().begin();
        auto qit = Gq.rules[i].terms().begin();
        for (; pit != Gp.rules[i].terms().end(); ++pit, ++qit) {
            CHECK(pit->first == qit->first);
            long long qc = static_cast<long long>(numerator(qit->second));
            CHECK(pit->second == Fp<1000003>(qc));
        }
    }
}
