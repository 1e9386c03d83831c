#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/poly.hpp"
#include "ybx/word.hpp"

#include <random>

using namespace ybx;

namespace {

Word random_word(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, n);
    std::vector<Letter> ls;
    int l = len(rng);
    for (int i = 0; i < l; ++i) ls.push_back(xgen(idx(rng)));
    return Word(std::move(ls));
}

} // namespace

TEST_CASE("deg-lex compares length first, then letters") {
    CHECK(deg_lex_compare(Word{xgen(1), xgen(2)}, Word{xgen(2), xgen(1)}) ==
          std::strong_ordering::less);
    CHECK(deg_lex_compare(Word{xgen(3)}, Word{xgen(1), xgen(1)}) == std::strong_ordering::less);
    Word u{xgen(2), xgen(1), xgen(3)};
    CHECK(deg_lex_compare(u, u) == std::strong_ordering::equal);
}

TEST_CASE("deg-lex is total and multiplicative") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        Word u = random_word(rng, 3, 4);
        Word v = random_word(rng, 3, 4);
        auto c = deg_lex_compare(u, v);
        // totality: exactly one of <, =, > and antisymmetry
        CHECK((c == std::strong_ordering::less) == (deg_lex_compare(v, u) ==
                                                    std::strong_ordering::greater));
        if (c == std::strong_ordering::less) {
            Word a = random_word(rng, 3, 2), b = random_word(rng, 3, 2);
            CHECK(deg_lex_less(a * u * b, a * v * b));
        }
    }
}

TEST_CASE("words over distinct alphabets order by block") {
    CHECK(deg_lex_less(Word{xgen(2)}, Word{ygen(1)}));
    CHECK(deg_lex_less(Word{xgen(1), ygen(1)}, Word{ygen(1), xgen(1)}));
}

TEST_CASE("word text form") {
    CHECK(Word{}.str() == "1");
    CHECK(Word{xgen(1), xgen(2), xgen(3)}.str() == "x1.x2.x3");
    CHECK(Word{thgen(2)}.str() == "th2");
}

TEST_CASE("polynomial canonical text form is leading-term first") {
    RPoly p;
    p.add_term(Word{xgen(1), xgen(1)}, -1);
    p.add_term(Word{xgen(2), xgen(1)}, 1);
    CHECK(p.str() == "1*x2.x1 + -1*x1.x1");
    CHECK(RPoly::zero().str() == "0");
    RPoly q(Word{}, Rational(3, 2));
    CHECK(q.str() == "3/2*1");
}

TEST_CASE("polynomial arithmetic") {
    RPoly a(Word{xgen(1)});
    RPoly b(Word{xgen(2)});
    RPoly prod = (a + b) * (a - b);
    // (x1 + x2)(x1 - x2) = x1x1 - x1x2 + x2x1 - x2x2
    CHECK(prod.coeff(Word{xgen(1), xgen(1)}) == 1);
    CHECK(prod.coeff(Word{xgen(1), xgen(2)}) == -1);
    CHECK(prod.coeff(Word{xgen(2), xgen(1)}) == 1);
    CHECK(prod.coeff(Word{xgen(2), xgen(2)}) == -1);
    CHECK((prod - prod).is_zero());
    CHECK(prod.is_homogeneous());
    CHECK(prod.degree() == 2);
    CHECK(prod.lm() == Word{xgen(2), xgen(2)});
}

TEST_CASE("oriented binomial picks the deg-lex larger side") {
    auto p = oriented_binomial<Rational>(Word{xgen(1), xgen(2)}, Word{xgen(2), xgen(1)});
    CHECK(p.lm() == Word{xgen(2), xgen(1)});
    CHECK(p.lc() == 1);
    CHECK(oriented_binomial<Rational>(Word{xgen(1)}, Word{xgen(1)}).is_zero());
}
