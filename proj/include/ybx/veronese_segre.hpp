#pragma once

#include "ybx/braided.hpp"
#include "ybx/report.hpp"
#include "ybx/yb_algebra.hpp"

#include <vector>

namespace ybx {

/// Degree-d regrading data: generators w_1..w_n identified with the normal
/// words of length d in deg-lex order, the standard quadratic relations
/// over the w-alphabet, and the section w_i -> word in the x-alphabet.
struct VeroneseData {
    int n = 0;
    int d = 0;
    PresentationIdeal relations;   // over Alphabet::W
    std::vector<Word> section;     // section[i-1] = image of w_i
};

VeroneseData veronese_presentation(int n, int d);

/// Certifies the embedding of the regraded algebra: relation images vanish,
/// graded dimensions agree degree by degree up to D, and the image basis in
/// degree s is exactly the normal words of length s*d.
Certificate verify_veronese_embedding(int n, int d, int D);

/// Cartesian product of two braided sets on the pair set, pairs enumerated
/// lexicographically ((i-1)*|Y| + a for (x_i, y_a), 1-based).
SolutionTable cartesian_product_solution(const SolutionTable& sx, const SolutionTable& sy);

/// Product-generator data: the standard mn(mn-1) relations over the
/// w-alphabet, the alternate generating set built from the product
/// permutation, and that permutation itself.
struct SegreData {
    int m = 0;
    int n = 0;
    PresentationIdeal canonical;        // F_{jb,ia} = w_jb w_ia - w_11 w_ia
    std::vector<RPoly> product_form;    // f_{jb,ia} = w_jb w_ia - Psi(w_ia) w_ia
    std::vector<int> psi;               // 1-based permutation of the mn generators
};

/// f and phi are 1-based one-line permutations of size m and n (identity
/// when empty).
SegreData segre_presentation(int m, int n, std::vector<int> f = {}, std::vector<int> phi = {});

/// Tensor-product model of A (x) B: disjoint x/y alphabets, both standard
/// presentations, and the cross commutation y_a x_i -> x_i y_a.
GroebnerBasis<Rational> tensor_model_basis(int m, int n, std::size_t degree_bound);

/// Certifies the Segre product data: relation count and basis property,
/// mutual reduction of the two generating sets, graded dimensions mn per
/// degree on both sides, and Hilbert multiplicativity, up to degree D.
Certificate verify_segre_product(int m, int n, int D, std::vector<int> f = {},
                                 std::vector<int> phi = {});

/// Certifies the product morphism: the z-algebra relations map to zero in
/// the tensor model and the graded dimensions match up to D.
Certificate verify_segre_map(int m, int n, int D, std::vector<int> f = {},
                             std::vector<int> phi = {});

} // namespace ybx
