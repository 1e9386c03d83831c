#pragma once

#include "ybx/report.hpp"
#include "ybx/yb_algebra.hpp"

#include <optional>
#include <vector>

namespace ybx {

/// Square matrix over the algebra, row-major.
struct AlgebraMatrix {
    int n = 0;
    std::vector<AlgebraElement> entries;

    AlgebraMatrix() = default;
    AlgebraMatrix(int size, int rank) : n(size), entries(size * size, AlgebraElement(rank)) {}

    AlgebraElement& at(int i, int k) { return entries[i * n + k]; }
    const AlgebraElement& at(int i, int k) const { return entries[i * n + k]; }

    friend AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b);
    friend AlgebraMatrix operator-(const AlgebraMatrix& a, const AlgebraMatrix& b);
    bool is_zero() const;
};

/// Commutation data for a first-order calculus: matrices rho(x_j) with
/// entries in the algebra, encoding  dx_i . x_j = sum_k rho(x_j)_{ik} dx_k.
struct CommutationRep {
    int n = 0;
    std::vector<AlgebraMatrix> rho; // rho[j-1] = matrix of x_j

    const AlgebraMatrix& of(int j) const { return rho[j - 1]; }

    /// rho extended multiplicatively to an element of the algebra.
    AlgebraMatrix apply(const AlgebraElement& a) const;
};

/// Both compatibility conditions for the calculus: rho is an algebra map
/// on the relations, and the Leibniz extension of d is consistent on them.
bool check_commutation_rep(const CommutationRep& rep, const PresentationIdeal& presentation);

/// The four-parameter family of degree-1 commutation matrices on the
/// two-generator algebra; coefficients are exact rationals (characteristic
/// zero, in particular not two).
struct FamilyParams {
    Rational alpha, beta, lambda, mu;
};

CommutationRep family_rep(const FamilyParams& p);

/// The four entry equations satisfied by the family matrices, evaluated
/// exactly in the algebra.
bool verify_family_equations(const FamilyParams& p);

/// Polynomial-identity proof that the entry equations hold for all
/// parameter values: every coefficient is a polynomial of degree at most
/// two in each parameter, so vanishing on the grid {0,1,2}^4 forces the
/// identity.
bool verify_family_equations_symbolic();

/// Element of the degree-one forms in the free left basis {dx_i}.
struct OmegaOneElement {
    int n = 0;
    std::vector<AlgebraElement> coeff; // coefficient of dx_i at index i-1

    OmegaOneElement() = default;
    OmegaOneElement(int size, int rank) : n(size), coeff(size, AlgebraElement(rank)) {}

    static OmegaOneElement dx(int n, int i);

    bool is_zero() const;
    friend OmegaOneElement operator+(const OmegaOneElement& a, const OmegaOneElement& b);
    friend OmegaOneElement operator-(const OmegaOneElement& a, const OmegaOneElement& b);
    friend bool operator==(const OmegaOneElement&, const OmegaOneElement&) = default;

    OmegaOneElement left_mul(const AlgebraElement& a) const;
};

/// (omega) . x_j via the commutation matrices.
OmegaOneElement omega_right_mul_generator(const OmegaOneElement& w, int j,
                                          const CommutationRep& rep);
OmegaOneElement omega_right_mul_word(const OmegaOneElement& w, const Word& u,
                                     const CommutationRep& rep);
OmegaOneElement omega_right_mul(const OmegaOneElement& w, const AlgebraElement& a,
                                const CommutationRep& rep);

/// d extended as a derivation from d(x_i) = dx_i.
OmegaOneElement differential_word(const Word& u, const CommutationRep& rep);
OmegaOneElement differential(const AlgebraElement& a, const CommutationRep& rep);

/// Coefficients of the differential in the left basis {dx_i}.
std::vector<AlgebraElement> partials(const AlgebraElement& a, const CommutationRep& rep);

/// d vanishes on every defining relation, and equal words have equal
/// differentials (checked on both factorizations of each squared word).
bool differential_well_defined(const CommutationRep& rep, const PresentationIdeal& presentation);

/// ker d = k.1 on all degrees <= D (degreewise rank computation).
bool connectedness_check(const CommutationRep& rep, int D);

/// A homogeneous quadratic relation among the wedges dx_i ^ dx_j, stored
/// as the n^2 coefficients with index (i-1)*n + (j-1).
struct WedgeRelation {
    int n = 0;
    std::vector<Rational> coeff;

    Rational at(int i, int j) const { return coeff[(i - 1) * n + (j - 1)]; }
    friend bool operator==(const WedgeRelation&, const WedgeRelation&) = default;
};

/// Degree-2 relations of the maximal prolongation: apply d to each
/// commutation relation with d^2 = 0 and the graded Leibniz rule. The four
/// generator pairs yield two distinct relations.
std::vector<WedgeRelation> omega_max_degree2(const FamilyParams& p);

/// Input data for the monoid-graded calculi: a rank-one representation
/// x_i -> xi (x) u_i with u_i . xi = 1 + mu, and a covector theta.
struct MonoidCalculusData {
    int n = 0;
    std::vector<Rational> xi;              // column vector, length n
    std::vector<std::vector<Rational>> u;  // rows u_i
    std::vector<Rational> theta;           // row vector
    Rational mu;
};

struct MonoidCalculusResult {
    std::vector<std::vector<Rational>> e;      // rows e_i = (theta.xi) u_i - theta
    std::vector<std::vector<Rational>> gamma;  // e_k . rho_i = sum_j gamma[i][j] e_j, all k
    std::vector<std::vector<Rational>> v;      // v_i = sum_{j != i} gamma[i][j] e_j
    bool generic = false;                      // all v_i nonzero
    bool relations_independent_of_k = false;
    bool grading_compatible = false;           // both relation sides share one monoid grade
    bool left_annihilation = false;            // x_i - x_j kills the image forms
};

/// Builds the translation-covariant calculus data; throws when the e_i are
/// dependent.
MonoidCalculusResult monoid_graded_calculus(const MonoidCalculusData& data);

/// Quadratic bialgebra on generators t^i_j (encoded as letter (i-1)n + j)
/// induced by the linearized braiding of a permutation solution.
struct FrtBialgebra {
    int n = 0;
    std::vector<int> f;            // 1-based permutation
    std::vector<RPoly> relations;  // over Alphabet::T

    int t_index(int i, int j) const { return (i - 1) * n + j; }
    /// R-matrix entry R^a_i^b_j of the linearized braiding.
    Rational r_entry(int a, int i, int b, int j) const;
};

FrtBialgebra frt_bialgebra(int n, std::vector<int> f = {});

/// The coaction x_j -> sum_a x_a (x) t^a_j preserves the algebra relations
/// (combined-algebra reduction at degree <= D) and is counital.
Certificate verify_comodule_algebra(int n, int D);

/// The covariance condition for a degree-1 commutation representation
/// against the quadratic bialgebra on two generators; returns true iff all
/// n^4 component equations hold after reduction.
bool covariance_condition_check(const CommutationRep& rep);
bool covariance_condition_check(const FamilyParams& p);

/// Sign-twisted braiding on the theta-span together with the quadratic
/// algebra with relations f(theta_j) theta_j = 0: idempotency of the
/// twisted braiding and the degree-2 coproduct identity.
Certificate fermionic_consistency(int n, std::vector<int> f = {});

/// No nonzero degree-lowering derivation exists: the linear system
/// D(x_i) = alpha_i against all defining relations forces alpha = 0.
bool no_degree_lowering_derivation(int n);

} // namespace ybx
