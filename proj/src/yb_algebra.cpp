#include "ybx/yb_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ybx {

PresentationIdeal orbit_relations(const SolutionTable& s, Alphabet alphabet) {
    PresentationIdeal p;
    p.n = s.n;
    p.alphabet = alphabet;
    p.kind = PresentationKind::OrbitForm;
    std::set<std::string> seen;
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            auto [a, b] = s.apply(x, y);
            if (a == x && b == y) continue;
            Word u{Letter{alphabet, x + 1}, Letter{alphabet, y + 1}};
            Word v{Letter{alphabet, a + 1}, Letter{alphabet, b + 1}};
            RPoly rel = oriented_binomial<Rational>(u, v);
            if (rel.is_zero()) continue;
            if (seen.insert(rel.str()).second) p.relations.push_back(rel);
        }
    std::sort(p.relations.begin(), p.relations.end(),
              [](const RPoly& a, const RPoly& b) { return deg_lex_less(a.lm(), b.lm()); });
    return p;
}

PresentationIdeal canonical_presentation(int n, Alphabet alphabet) {
    if (n <= 0) throw std::invalid_argument("canonical_presentation: n must be positive");
    PresentationIdeal p;
    p.n = n;
    p.alphabet = alphabet;
    p.kind = PresentationKind::CanonicalForm;
    for (int j = 2; j <= n; ++j)
        for (int q = 1; q <= n; ++q) {
            RPoly rel;
            rel.add_term(Word{Letter{alphabet, j}, Letter{alphabet, q}}, 1);
            rel.add_term(Word{Letter{alphabet, 1}, Letter{alphabet, q}}, -1);
            p.relations.push_back(rel);
        }
    return p;
}

GroebnerBasis<Rational> groebner_of(const PresentationIdeal& p, std::size_t bound) {
    return buchberger(p.generators(), p.relations, bound);
}

bool presentations_equivalent(const PresentationIdeal& p1, const PresentationIdeal& p2,
                              std::size_t bound) {
    auto g1 = groebner_of(p1, bound);
    auto g2 = groebner_of(p2, bound);
    for (const RPoly& r : p1.relations)
        if (!normal_form(r, g2).is_zero()) return false;
    for (const RPoly& r : p2.relations)
        if (!normal_form(r, g1).is_zero()) return false;
    return true;
}

Word normal_form_closed(const Word& w) {
    if (w.empty()) throw std::invalid_argument("normal_form_closed: empty word");
    std::vector<Letter> out(w.size(), Letter{w[0].alphabet, 1});
    out.back() = w[w.size() - 1];
    return Word(std::move(out));
}

long long OrbitPartition::rank(const std::vector<int>& word) const {
    long long r = 0;
    for (int l : word) r = r * n + l;
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t sz) : parent(sz) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::optional<OrbitPartition> build_orbit_partition(const SolutionTable& s, int m,
                                                    long long max_states) {
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= s.n;
        if (total > max_states) return std::nullopt;
    }
    OrbitPartition part;
    part.n = s.n;
    part.m = m;
    UnionFind uf(static_cast<std::size_t>(total));
    std::vector<int> word(m, 0);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = m - 1; i >= 0; --i) { word[i] = static_cast<int>(c % s.n); c /= s.n; }
        for (int i = 0; i + 1 < m; ++i) {
            auto [a, b] = s.apply(word[i], word[i + 1]);
            int oi = word[i], oj = word[i + 1];
            word[i] = a; word[i + 1] = b;
            uf.unite(static_cast<int>(code), static_cast<int>(part.rank(word)));
            word[i] = oi; word[i + 1] = oj;
        }
    }
    part.block_of.resize(static_cast<std::size_t>(total));
    for (long long code = 0; code < total; ++code)
        part.block_of[code] = uf.find(static_cast<int>(code));
    return part;
}

namespace {

std::vector<int> word_to_indices(const Word& w, int n) {
    std::vector<int> v;
    v.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (l.index < 1 || l.index > n)
            throw std::invalid_argument("word letter outside the solution's alphabet");
        v.push_back(l.index - 1);
    }
    return v;
}

} // namespace

MonoidEq monoid_equal(const Word& w1, const Word& w2, const SolutionTable& s,
                      long long max_orbit) {
    if (w1.size() != w2.size())
        throw std::invalid_argument("monoid_equal: words must have equal length");
    if (w1 == w2) return MonoidEq::Equal;
    auto part = build_orbit_partition(s, static_cast<int>(w1.size()), max_orbit);
    if (!part) return MonoidEq::CapExceeded;
    auto a = word_to_indices(w1, s.n);
    auto b = word_to_indices(w2, s.n);
    return part->block_of[part->rank(a)] == part->block_of[part->rank(b)]
               ? MonoidEq::Equal
               : MonoidEq::Distinct;
}

CancellativityReport cancellativity_report(const SolutionTable& s, std::size_t degree) {
    CancellativityReport rep;
    auto gb = groebner_of(orbit_relations(s), degree + 2);

    std::vector<std::vector<Word>> normals(degree + 1);
    for (std::size_t d = 1; d <= degree; ++d) normals[d] = normal_words(gb, d);

    auto nor = [&](const Word& w) { return normal_form_word(w, gb).lm(); };

    // left: u a = u b forces a = b, over normal u, a, b with |ua| <= degree
    for (std::size_t du = 1; du < degree && rep.left; ++du)
        for (std::size_t dv = 1; du + dv <= degree && rep.left; ++dv)
            for (const Word& u : normals[du]) {
                for (std::size_t i = 0; i < normals[dv].size() && rep.left; ++i)
                    for (std::size_t j = i + 1; j < normals[dv].size(); ++j) {
                        if (nor(u * normals[dv][i]) == nor(u * normals[dv][j])) {
                            rep.left = false;
                            break;
                        }
                    }
                if (!rep.left) break;
            }

    // right: search the first (a, b, c) with a != b, a c = b c
    for (std::size_t dv = 1; dv < degree && !rep.right_counterexample; ++dv)
        for (std::size_t dc = 1; dv + dc <= degree && !rep.right_counterexample; ++dc)
            for (std::size_t i = 0; i < normals[dv].size() && !rep.right_counterexample; ++i)
                for (std::size_t j = i + 1; j < normals[dv].size() && !rep.right_counterexample; ++j)
                    for (const Word& c : normals[dc])
                        if (nor(normals[dv][i] * c) == nor(normals[dv][j] * c)) {
                            rep.right_counterexample =
                                std::make_tuple(normals[dv][i], normals[dv][j], c);
                            break;
                        }
    return rep;
}

AlgebraElement AlgebraElement::from_word(int n, const Word& w) {
    AlgebraElement a(n);
    if (w.empty()) {
        a.constant_ = 1;
        return a;
    }
    Word nf = normal_form_closed(w);
    a.set(static_cast<int>(nf.size()), nf[nf.size() - 1].index, 1);
    return a;
}

void AlgebraElement::set(int d, int q, const Rational& c) {
    if (d < 1 || q < 1 || q > n_) throw std::invalid_argument("AlgebraElement: bad slice index");
    if (c == 0)
        coeffs_.erase({d, q});
    else
        coeffs_[{d, q}] = c;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    constant_ += o.constant_;
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    *this += o.scaled(-1);
    return *this;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r(n_);
    if (c == 0) return r;
    r.constant_ = constant_ * c;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AlgebraElement: mixed ranks");
    AlgebraElement r(a.n_);
    r.constant_ = a.constant_ * b.constant_;
    for (const auto& [k, c] : b.coeffs_) {
        auto it = r.coeffs_.find(k);
        Rational add = a.constant_ * c;
        if (add != 0) {
            if (it == r.coeffs_.end()) r.coeffs_.emplace(k, add);
            else { it->second += add; if (it->second == 0) r.coeffs_.erase(it); }
        }
    }
    for (const auto& [k, c] : a.coeffs_) {
        Rational add = c * b.constant_;
        if (add != 0) {
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end()) r.coeffs_.emplace(k, add);
            else { it->second += add; if (it->second == 0) r.coeffs_.erase(it); }
        }
    }
    // slice x slice: (x_1^{d-1} x_p)(x_1^{m-1} x_q) = x_1^{d+m-1} x_q,
    // so only the coefficient sum of each left slice matters
    std::map<int, Rational> left_sums;
    for (const auto& [k, c] : a.coeffs_) left_sums[k.first] += c;
    for (const auto& [ls, sum] : left_sums) {
        if (sum == 0) continue;
        for (const auto& [k, c] : b.coeffs_) {
            auto key = std::make_pair(ls + k.first, k.second);
            auto it = r.coeffs_.find(key);
            Rational add = sum * c;
            if (it == r.coeffs_.end()) r.coeffs_.emplace(key, add);
            else { it->second += add; if (it->second == 0) r.coeffs_.erase(it); }
        }
    }
    return r;
}

RPoly AlgebraElement::to_poly() const {
    RPoly p;
    if (constant_ != 0) p.add_term(Word{}, constant_);
    for (const auto& [k, c] : coeffs_) {
        auto [d, q] = k;
        Word w = word_power(xgen(1), d - 1) * Word{xgen(q)};
        p.add_term(w, c);
    }
    return p;
}

bool annihilator_membership(const AlgebraElement& a) {
    if (a.constant() != 0) return false;
    std::map<int, Rational> sums;
    for (const auto& [k, c] : a.coeffs()) sums[k.first] += c;
    for (const auto& [d, s] : sums)
        if (s != 0) return false;
    return true;
}

std::vector<AlgebraElement> annihilator_basis(int n, int d_max) {
    if (n < 2) throw std::invalid_argument("annihilator_basis: need n >= 2");
    std::vector<AlgebraElement> basis;
    for (int k = 0; k < d_max; ++k)
        for (int i = 1; i <= n - 1; ++i) {
            AlgebraElement a(n);
            a.set(k + 1, i, 1);
            a.set(k + 1, i + 1, -1);
            basis.push_back(a);
        }
    return basis;
}

bool center_trivial_upto(int n, int d_max) {
    if (n < 2) throw std::invalid_argument("center_trivial_upto: need n >= 2");
    // a degree-d slice sum_q c_q x_1^{d-1} x_q commutes with x_j iff
    // (sum c_q) x_1^d x_j = sum_q c_q x_1^d x_q; solving against both x_1
    // and x_2 must force c = 0
    for (int d = 1; d <= d_max; ++d) {
        // commutators are linear in the slice coefficients: a degree-d
        // element sum_q c_q x_1^{d-1} x_q is central iff c annihilates the
        // commutator columns against x_1 and x_2
        std::vector<std::vector<Rational>> rows; // conditions x unknowns
        for (int j = 1; j <= 2; ++j) {
            AlgebraElement xj = AlgebraElement::generator(n, j);
            std::vector<AlgebraElement> comms;
            for (int q = 1; q <= n; ++q) {
                AlgebraElement e = AlgebraElement::normal_word(n, d, q);
                comms.push_back(e * xj - xj * e);
            }
            // coefficients live in degree d+1
            for (int t = 1; t <= n; ++t) {
                std::vector<Rational> row(n);
                for (int q = 1; q <= n; ++q) row[q - 1] = comms[q - 1].coeff(d + 1, t);
                rows.push_back(row);
            }
        }
        // Gaussian elimination; nullspace must be trivial
        std::size_t rank = 0;
        for (int col = 0; col < n && rank < rows.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t rr = 0; rr < rows.size(); ++rr) {
                if (rr == rank || rows[rr][col] == 0) continue;
                Rational f = rows[rr][col] / rows[rank][col];
                for (int cc = 0; cc < n; ++cc) rows[rr][cc] -= f * rows[rank][cc];
            }
            ++rank;
        }
        if (rank < static_cast<std::size_t>(n)) return false;
    }
    return true;
}

} // namespace ybx
