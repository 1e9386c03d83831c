#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ybx {

// Exact rational coefficients. All core computations run over this field;
// a small prime field (below) is available as a cross-check mode.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Prime field F_p for p < 2^31, used to cross-check Groebner runs whose
/// rational coefficients stay integral.
template <std::uint32_t P>
struct Fp {
    static_assert(P >= 2 && P < (1u << 31), "modulus out of range");
    std::uint32_t v = 0;

    Fp() = default;
    Fp(long long x) {
        long long m = x % static_cast<long long>(P);
        if (m < 0) m += P;
        v = static_cast<std::uint32_t>(m);
    }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v + static_cast<std::uint64_t>(b.v)) % P); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v + static_cast<std::uint64_t>(P) - b.v) % P); }
    friend Fp operator*(Fp a, Fp b) { return from_raw(static_cast<std::uint64_t>(a.v) * b.v % P); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v == 0 ? 0 : P - v); }
    Fp& operator+=(Fp o) { *this = *this + o; return *this; }
    Fp& operator-=(Fp o) { *this = *this - o; return *this; }
    Fp& operator*=(Fp o) { *this = *this * o; return *this; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    Fp inverse() const {
        // extended Euclid; P prime and v != 0
        std::int64_t a = v, b = P, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0);
    }

    static Fp from_raw(std::uint64_t raw) { Fp r; r.v = static_cast<std::uint32_t>(raw); return r; }
};

template <std::uint32_t P>
inline std::string to_string(const Fp<P>& a) { return std::to_string(a.v); }

template <class K>
inline bool scalar_is_zero(const K& k) { return k == K(0); }

} // namespace ybx
