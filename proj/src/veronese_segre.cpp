#include "ybx/veronese_segre.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ybx {

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

void validate_perm(const std::vector<int>& p, int n, const char* where) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument(std::string(where) + ": bad size");
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument(std::string(where) + ": not a permutation");
        seen[v - 1] = true;
    }
}

} // namespace

VeroneseData veronese_presentation(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("veronese_presentation: n, d >= 1");
    VeroneseData v;
    v.n = n;
    v.d = d;
    v.relations = canonical_presentation(n, Alphabet::W);
    for (int i = 1; i <= n; ++i)
        v.section.push_back(word_power(xgen(1), d - 1) * Word{xgen(i)});
    return v;
}

Certificate verify_veronese_embedding(int n, int d, int D) {
    VeroneseData v = veronese_presentation(n, d);
    Certificate cert;
    cert.check = "veronese-embedding";
    cert.statement = "the degree-" + std::to_string(d) +
                     " regrading embeds isomorphically: relation images vanish and graded "
                     "dimensions match";
    cert.parameters = {{"n", n}, {"d", d}, {"D", D}};
    cert.degree_bound = D;
    cert.pass = true;

    std::size_t x_bound = static_cast<std::size_t>(2 * d * std::max(D, 1) + 2);
    auto gx = groebner_of(canonical_presentation(n), x_bound);
    auto gw = groebner_of(v.relations, static_cast<std::size_t>(D) + 2);

    cert.require(is_groebner(v.relations.relations), "w-relations form a quadratic basis");
    cert.require(static_cast<int>(v.relations.relations.size()) == n * (n - 1),
                 "relation count n(n-1)");

    // (a) images of the w-relations vanish in the x-algebra
    auto section_of = [&](const Word& wword) {
        Word out;
        for (const Letter& l : wword.letters()) out = out * v.section[l.index - 1];
        return out;
    };
    for (const RPoly& rel : v.relations.relations) {
        RPoly image;
        for (const auto& [w, c] : rel.terms()) image.add_term(section_of(w), c);
        if (!normal_form(image, gx).is_zero()) {
            cert.require(false, "relation image vanishes: " + rel.str());
            break;
        }
    }

    // (b) graded dimensions agree: dim in w-degree s equals dim in x-degree s*d
    for (int s = 1; s <= D; ++s) {
        auto dim_w = normal_words(gw, static_cast<std::size_t>(s)).size();
        auto dim_x = normal_words(gx, static_cast<std::size_t>(s) * d).size();
        if (dim_w != dim_x) {
            cert.require(false, "dimension match at degree " + std::to_string(s));
            cert.details["dimension_mismatch"] = {{"s", s}, {"w", dim_w}, {"x", dim_x}};
        }
    }

    // (c) the image normal basis of degree s is exactly the normal words of
    // length s*d
    for (int s = 1; s <= D; ++s) {
        std::set<Word, DegLexLess> images;
        for (const Word& ww : normal_words(gw, static_cast<std::size_t>(s)))
            images.insert(normal_form_word(section_of(ww), gx).lm());
        auto target = normal_words(gx, static_cast<std::size_t>(s) * d);
        std::set<Word, DegLexLess> expect(target.begin(), target.end());
        if (images != expect) cert.require(false, "image basis at degree " + std::to_string(s));
    }
    return cert;
}

SolutionTable cartesian_product_solution(const SolutionTable& sx, const SolutionTable& sy) {
    const int m = sx.n, n = sy.n;
    SolutionTable out;
    out.n = m * n;
    out.r.resize(out.n * out.n);
    auto enc = [&](int i, int a) { return i * n + a; };
    for (int j = 0; j < m; ++j)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < m; ++i)
                for (int a = 0; a < n; ++a) {
                    auto [xi_l, xj_r] = sx.apply(j, i); // r_X(x_j, x_i)
                    auto [ya_l, yb_r] = sy.apply(b, a); // r_Y(y_b, y_a)
                    out.r[enc(j, b) * out.n + enc(i, a)] = {enc(xi_l, ya_l), enc(xj_r, yb_r)};
                }
    out.rebuild_actions();
    return out;
}

SegreData segre_presentation(int m, int n, std::vector<int> f, std::vector<int> phi) {
    if (m < 1 || n < 1) throw std::invalid_argument("segre_presentation: m, n >= 1");
    if (f.empty()) f = identity_perm(m);
    if (phi.empty()) phi = identity_perm(n);
    validate_perm(f, m, "segre_presentation f");
    validate_perm(phi, n, "segre_presentation phi");

    SegreData s;
    s.m = m;
    s.n = n;
    s.canonical = canonical_presentation(m * n, Alphabet::W);
    auto enc = [&](int i, int a) { return (i - 1) * n + a; }; // 1-based single index
    s.psi.resize(m * n);
    for (int i = 1; i <= m; ++i)
        for (int a = 1; a <= n; ++a) s.psi[enc(i, a) - 1] = enc(f[i - 1], phi[a - 1]);
    for (int j = 1; j <= m; ++j)
        for (int b = 1; b <= n; ++b)
            for (int i = 1; i <= m; ++i)
                for (int a = 1; a <= n; ++a) {
                    int lhs = enc(j, b);
                    int rhs = s.psi[enc(i, a) - 1];
                    if (lhs == rhs) continue; // the relation is trivially zero
                    RPoly rel;
                    rel.add_term(Word{wgen(lhs), wgen(enc(i, a))}, 1);
                    rel.add_term(Word{wgen(rhs), wgen(enc(i, a))}, -1);
                    if (!rel.is_zero()) s.product_form.push_back(rel);
                }
    return s;
}

GroebnerBasis<Rational> tensor_model_basis(int m, int n, std::size_t degree_bound) {
    std::vector<Letter> gens;
    for (int i = 1; i <= m; ++i) gens.push_back(xgen(i));
    for (int a = 1; a <= n; ++a) gens.push_back(ygen(a));
    std::vector<RPoly> rels;
    for (const RPoly& r : canonical_presentation(m, Alphabet::X).relations) rels.push_back(r);
    for (const RPoly& r : canonical_presentation(n, Alphabet::Y).relations) rels.push_back(r);
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= m; ++i) {
            RPoly cross;
            cross.add_term(Word{ygen(a), xgen(i)}, 1);
            cross.add_term(Word{xgen(i), ygen(a)}, -1);
            rels.push_back(cross);
        }
    return buchberger(gens, rels, degree_bound);
}

namespace {

// count tensor normal words of length 2s with s letters from each factor
long long tensor_bidegree_dim(const GroebnerBasis<Rational>& gt, int s) {
    long long count = 0;
    for (const Word& w : normal_words(gt, static_cast<std::size_t>(2 * s))) {
        int xs = 0;
        for (const Letter& l : w.letters())
            if (l.alphabet == Alphabet::X) ++xs;
        if (xs == s) ++count;
    }
    return count;
}

Word segre_image(const Word& wword, int n) {
    // w_{ia} -> x_i y_a with the 1-based single-index encoding
    Word out;
    for (const Letter& l : wword.letters()) {
        int k = l.index - 1;
        out.push_back(xgen(k / n + 1));
        out.push_back(ygen(k % n + 1));
    }
    return out;
}

} // namespace

Certificate verify_segre_product(int m, int n, int D, std::vector<int> f, std::vector<int> phi) {
    SegreData data = segre_presentation(m, n, std::move(f), std::move(phi));
    Certificate cert;
    cert.check = "segre-product";
    cert.statement = "the product-generator presentation is a quadratic basis equivalent to the "
                     "pair-permutation form, with multiplicative graded dimensions";
    cert.parameters = {{"m", m}, {"n", n}, {"D", D}};
    cert.degree_bound = D;
    cert.pass = true;

    const int mn = m * n;
    cert.require(static_cast<int>(data.canonical.relations.size()) == mn * (mn - 1),
                 "relation count mn(mn-1)");
    cert.require(is_groebner(data.canonical.relations), "canonical relations form a basis");

    // mutual reduction of the two generating sets
    auto gw = groebner_of(data.canonical, static_cast<std::size_t>(D) + 2);
    for (const RPoly& r : data.product_form)
        if (!normal_form(r, gw).is_zero()) {
            cert.require(false, "product-form relation reduces to zero: " + r.str());
            break;
        }
    PresentationIdeal alt;
    alt.n = mn;
    alt.alphabet = Alphabet::W;
    alt.relations = data.product_form;
    auto galt = groebner_of(alt, 3);
    for (const RPoly& r : data.canonical.relations)
        if (!normal_form(r, galt).is_zero()) {
            cert.require(false, "canonical relation reduces to zero in product form: " + r.str());
            break;
        }

    // graded dimensions: w-algebra vs tensor bidegree, and multiplicativity
    std::size_t tensor_bound = static_cast<std::size_t>(2 * D + 2);
    auto gt = tensor_model_basis(m, n, tensor_bound);
    auto gx = groebner_of(canonical_presentation(m), static_cast<std::size_t>(D) + 2);
    auto gy = groebner_of(canonical_presentation(n, Alphabet::Y), static_cast<std::size_t>(D) + 2);
    nlohmann::json dims = nlohmann::json::array();
    for (int s = 1; s <= D; ++s) {
        long long dim_w = static_cast<long long>(normal_words(gw, s).size());
        long long dim_t = tensor_bidegree_dim(gt, s);
        long long ha = static_cast<long long>(normal_words(gx, s).size());
        long long hb = static_cast<long long>(normal_words(gy, s).size());
        dims.push_back({{"s", s}, {"w", dim_w}, {"tensor", dim_t}, {"hA*hB", ha * hb}});
        cert.require(dim_w == dim_t, "w-algebra dimension matches tensor bidegree at s=" +
                                         std::to_string(s));
        cert.require(dim_t == ha * hb, "Hilbert multiplicativity at s=" + std::to_string(s));
        cert.require(dim_t == static_cast<long long>(mn),
                     "dimension mn at s=" + std::to_string(s));
    }
    cert.details["dimensions"] = dims;

    // product-form relation images vanish in the tensor model
    for (const RPoly& r : data.product_form) {
        RPoly image;
        for (const auto& [w, c] : r.terms()) image.add_term(segre_image(w, n), c);
        if (!normal_form(image, gt).is_zero()) {
            cert.require(false, "tensor image of relation vanishes: " + r.str());
            break;
        }
    }
    return cert;
}

Certificate verify_segre_map(int m, int n, int D, std::vector<int> f, std::vector<int> phi) {
    Certificate cert;
    cert.check = "segre-map";
    cert.statement = "the generator assignment z_ia -> x_i (x) y_a extends to a graded "
                     "isomorphism onto the matched-degree subalgebra";
    cert.parameters = {{"m", m}, {"n", n}, {"D", D}};
    cert.degree_bound = D;
    cert.pass = true;

    const int mn = m * n;
    if (f.empty()) f = identity_perm(m);
    if (phi.empty()) phi = identity_perm(n);
    validate_perm(f, m, "verify_segre_map f");
    validate_perm(phi, n, "verify_segre_map phi");

    // the induced pair permutation matches the product solution under the
    // lexicographic pair encoding
    std::vector<int> product_perm(mn);
    for (int i = 1; i <= m; ++i)
        for (int a = 1; a <= n; ++a)
            product_perm[(i - 1) * n + a - 1] = (f[i - 1] - 1) * n + phi[a - 1];
    SolutionTable z_solution = make_permutation_solution({mn, product_perm});
    SolutionTable product = cartesian_product_solution(
        make_permutation_solution({m, f}), make_permutation_solution({n, phi}));
    cert.require(z_solution == product, "pair permutation equals the product solution");

    // the z-algebra of the induced pair permutation
    PresentationIdeal pz = canonical_presentation(mn, Alphabet::Z);
    cert.require(static_cast<int>(pz.relations.size()) == mn * (mn - 1),
                 "z-relation count mn(mn-1)");
    auto gz = groebner_of(pz, static_cast<std::size_t>(D) + 2);

    std::size_t tensor_bound = static_cast<std::size_t>(2 * D + 2);
    auto gt = tensor_model_basis(m, n, tensor_bound);

    // relation images vanish in the tensor model
    auto image_word = [&](const Word& zw) {
        Word out;
        for (const Letter& l : zw.letters()) {
            int k = l.index - 1;
            out.push_back(xgen(k / n + 1));
            out.push_back(ygen(k % n + 1));
        }
        return out;
    };
    for (const RPoly& r : pz.relations) {
        RPoly image;
        for (const auto& [w, c] : r.terms()) image.add_term(image_word(w), c);
        if (!normal_form(image, gt).is_zero()) {
            cert.require(false, "image of z-relation vanishes: " + r.str());
            break;
        }
    }

    // graded dimensions agree degreewise, certifying bijectivity
    for (int s = 1; s <= D; ++s) {
        long long dim_z = static_cast<long long>(normal_words(gz, s).size());
        long long dim_t = tensor_bidegree_dim(gt, s);
        cert.require(dim_z == dim_t, "graded dimension match at s=" + std::to_string(s));
        cert.require(dim_z == static_cast<long long>(mn),
                     "dimension mn at s=" + std::to_string(s));
    }

    // the image basis is exactly the bidegree-(s,s) normal basis for s <= D
    for (int s = 1; s <= D; ++s) {
        std::set<Word, DegLexLess> images;
        for (const Word& zw : normal_words(gz, s))
            images.insert(normal_form_word(image_word(zw), gt).lm());
        std::set<Word, DegLexLess> expect;
        for (const Word& w : normal_words(gt, static_cast<std::size_t>(2 * s))) {
            int xs = 0;
            for (const Letter& l : w.letters())
                if (l.alphabet == Alphabet::X) ++xs;
            if (xs == s) expect.insert(w);
        }
        if (images != expect) cert.require(false, "image basis at s=" + std::to_string(s));
    }
    return cert;
}

} // namespace ybx
