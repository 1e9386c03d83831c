#pragma once

#include "ybx/groebner.hpp"
#include "ybx/solution.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace ybx {

enum class PresentationKind { OrbitForm, CanonicalForm };

/// Homogeneous quadratic presentation of the algebra of a quadratic set.
struct PresentationIdeal {
    int n = 0;
    Alphabet alphabet = Alphabet::X;
    std::vector<RPoly> relations;
    PresentationKind kind = PresentationKind::OrbitForm;

    std::vector<Letter> generators() const {
        std::vector<Letter> g;
        for (int i = 1; i <= n; ++i) g.push_back(Letter{alphabet, i});
        return g;
    }
};

/// Defining relations read off the r-orbits: one deg-lex-oriented binomial
/// uv - u'v' per pair with r(u,v) = (u',v') != (u,v), deduplicated.
PresentationIdeal orbit_relations(const SolutionTable& s, Alphabet alphabet = Alphabet::X);

/// The n(n-1) binomials  g_j g_p - g_1 g_p,  2 <= j <= n, 1 <= p <= n.
/// Independent of any particular permutation; already a Groebner basis.
PresentationIdeal canonical_presentation(int n, Alphabet alphabet = Alphabet::X);

/// Mutual reduction: every relation of each ideal reduces to zero modulo
/// the truncated basis of the other.
bool presentations_equivalent(const PresentationIdeal& p1, const PresentationIdeal& p2,
                              std::size_t bound);

GroebnerBasis<Rational> groebner_of(const PresentationIdeal& p, std::size_t bound);

/// Closed-form normal form in the canonical quotient:
/// a word of length d over the x-alphabet maps to x_1^{d-1} (last letter).
Word normal_form_closed(const Word& w);

/// Partition of X^m into the orbits of the maps id^(i-1) x r x id^(m-i-1),
/// i.e. the equality classes of length-m words in the monoid of (X, r).
struct OrbitPartition {
    int n = 0;
    int m = 0;
    std::vector<int> block_of; // indexed by base-n word rank, size n^m

    long long rank(const std::vector<int>& word) const; // 0-based letters
};

/// Builds the partition by union-find over one-step replacements; fails
/// (nullopt) when n^m exceeds max_states.
std::optional<OrbitPartition> build_orbit_partition(const SolutionTable& s, int m,
                                                    long long max_states);

enum class MonoidEq { Equal, Distinct, CapExceeded };

/// Word problem for length-m words of the monoid of (X, r): equal iff the
/// words lie in the same replacement orbit. Words are given over the
/// x-alphabet with 1-based letters matching the table.
MonoidEq monoid_equal(const Word& w1, const Word& w2, const SolutionTable& s,
                      long long max_orbit);

struct CancellativityReport {
    bool left = true;
    // (a, b, c) with a != b but a c = b c in the monoid, 1-based words
    std::optional<std::tuple<Word, Word, Word>> right_counterexample;
};

/// Exhaustive cancellation tests on normal monomials up to the degree.
CancellativityReport cancellativity_report(const SolutionTable& s, std::size_t degree);

/// Element of the canonical quotient in the normal basis
/// { 1 } u { x_1^{d-1} x_q }: a constant plus finitely many slice
/// coefficients keyed by (degree d >= 1, generator q).
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(int n) : n_(n) {}
    AlgebraElement(int n, const Rational& c) : n_(n), constant_(c) {}

    static AlgebraElement generator(int n, int q) {
        AlgebraElement a(n);
        a.set(1, q, 1);
        return a;
    }
    /// x_1^{d-1} x_q as an element.
    static AlgebraElement normal_word(int n, int d, int q) {
        AlgebraElement a(n);
        a.set(d, q, 1);
        return a;
    }
    static AlgebraElement from_word(int n, const Word& w);

    int n() const { return n_; }
    const Rational& constant() const { return constant_; }
    const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int d, int q) const {
        auto it = coeffs_.find({d, q});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    void set(int d, int q, const Rational& c);
    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.first; }

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }
    AlgebraElement scaled(const Rational& c) const;
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    /// Closed-form product: (x_1^{d-1} x_p)(x_1^{m-1} x_q) = x_1^{d+m-1} x_q.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

    RPoly to_poly() const;
    std::string str() const { return to_poly().str(); }

private:
    int n_ = 0;
    Rational constant_ = 0;
    std::map<std::pair<int, int>, Rational> coeffs_;
};

/// Membership in the left annihilator of the augmentation ideal: zero
/// constant term and zero coefficient sum in every degree slice.
bool annihilator_membership(const AlgebraElement& a);

/// The elements x_1^k (x_i - x_{i+1}), 0 <= k < d_max, 1 <= i <= n-1, in
/// normal form; a free basis of the annihilator over k[x_1].
std::vector<AlgebraElement> annihilator_basis(int n, int d_max);

/// True when no nonconstant element of degree <= d_max commutes with both
/// x_1 and x_2 (degreewise nullspace computation).
bool center_trivial_upto(int n, int d_max);

} // namespace ybx
