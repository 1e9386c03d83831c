#pragma once

#include "ybx/scalar.hpp"
#include "ybx/word.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// Element of the free associative algebra over the field K: a finite
/// K-linear combination of words, stored leading-term-first in deg-lex
/// order and with no zero coefficients.
template <class K>
class Poly {
public:
    using Terms = std::map<Word, K, DegLexGreater>;

    Poly() = default;
    explicit Poly(const Word& w) { terms_.emplace(w, K(1)); }
    Poly(const Word& w, const K& c) { if (!scalar_is_zero(c)) terms_.emplace(w, c); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Word{}); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Word& lm() const {
        if (is_zero()) throw std::domain_error("leading monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const K& lc() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Word& w, const K& c) {
        if (scalar_is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    Poly operator-() const {
        Poly r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r;
        if (scalar_is_zero(c)) return r;
        for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
        return r;
    }

    /// a * this * b for words a, b, scaled by c.
    Poly framed(const Word& a, const Word& b, const K& c) const {
        Poly r;
        if (scalar_is_zero(c)) return r;
        for (const auto& [w, k] : terms_) r.add_term(a * w * b, k * c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    bool is_monic() const { return !is_zero() && lc() == K(1); }
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / lc());
    }

    /// Degree = length of the leading monomial (0 for constants).
    std::size_t degree() const {
        if (is_zero()) return 0;
        return lm().size();
    }
    bool is_homogeneous() const {
        if (is_zero()) return true;
        std::size_t d = lm().size();
        for (const auto& [w, c] : terms_)
            if (w.size() != d) return false;
        return true;
    }

    /// Canonical text form "c1*w1 + c2*w2" with terms in descending
    /// deg-lex order; golden-file tests compare it byte-exactly.
    std::string str() const {
        using ybx::to_string;
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) out += " + ";
            out += to_string(c);
            out += '*';
            out += w.str();
            first = false;
        }
        return out;
    }

private:
    Terms terms_;
};

using RPoly = Poly<Rational>;

/// u - v oriented so the deg-lex larger word leads; zero if u == v.
template <class K>
Poly<K> oriented_binomial(const Word& u, const Word& v) {
    auto c = deg_lex_compare(u, v);
    if (c == std::strong_ordering::equal) return Poly<K>::zero();
    Poly<K> p;
    if (c == std::strong_ordering::greater) {
        p.add_term(u, K(1));
        p.add_term(v, K(-1));
    } else {
        p.add_term(v, K(1));
        p.add_term(u, K(-1));
    }
    return p;
}

} // namespace ybx
