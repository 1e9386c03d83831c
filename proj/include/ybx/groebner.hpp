#pragma once

#include "ybx/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ybx {

/// A degree-truncated reduced Groebner basis for a two-sided ideal of the
/// free associative algebra, together with the data needed for reduction
/// and normal-word enumeration.
///
/// `complete` certifies genuine completeness below the bound: it is true
/// iff every overlap ambiguity among the final rules has overlap word of
/// length <= degree_bound, so every ambiguity was examined and resolved.
/// For quadratic bases this is exact; a rule of degree == degree_bound
/// whose ambiguities would exceed the bound clears the flag.
template <class K>
struct GroebnerBasis {
    std::vector<Letter> generators;      // the ordered alphabet
    std::vector<Poly<K>> rules;          // monic, inter-reduced, ascending LM
    std::size_t degree_bound = 0;
    std::set<Word, DegLexLess> obstructions; // = { LM(g) : g in rules }
    bool complete = false;

    // reduction index
    std::unordered_map<Word, std::size_t, WordHash> lm_index;
    std::vector<std::size_t> lm_lengths; // distinct rule LM lengths, ascending

    void rebuild_index() {
        lm_index.clear();
        obstructions.clear();
        std::set<std::size_t> lens;
        for (std::size_t i = 0; i < rules.size(); ++i) {
            lm_index.emplace(rules[i].lm(), i);
            obstructions.insert(rules[i].lm());
            lens.insert(rules[i].lm().size());
        }
        lm_lengths.assign(lens.begin(), lens.end());
    }

    /// Leftmost (position, rule) whose LM occurs in w; shorter patterns
    /// win ties at the same position, keeping reduction deterministic.
    std::optional<std::pair<std::size_t, std::size_t>> find_reduction(const Word& w) const {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (std::size_t len : lm_lengths) {
                if (pos + len > w.size()) break;
                auto it = lm_index.find(w.subword(pos, len));
                if (it != lm_index.end()) return std::make_pair(pos, it->second);
            }
        }
        return std::nullopt;
    }

    bool word_is_normal(const Word& w) const { return !find_reduction(w).has_value(); }
};

using RGb = GroebnerBasis<Rational>;

template <class K>
struct ReductionStep {
    std::size_t rule;
    Word left, right;
    K coeff; // f gained -coeff * left * rule * right at this step
};

/// Fully reduce f modulo G; each step rewrites the deg-lex-largest
/// reducible term, so the procedure terminates and is deterministic.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& G,
                    std::vector<ReductionStep<K>>* trace = nullptr) {
    if (f.degree() > G.degree_bound)
        throw std::invalid_argument("normal_form: degree exceeds the basis bound");
    Poly<K> out;
    Poly<K> work = f;
    while (!work.is_zero()) {
        const Word w = work.lm();
        const K c = work.lc();
        auto hit = G.find_reduction(w);
        if (!hit) {
            out.add_term(w, c);
            work.add_term(w, -c);
            continue;
        }
        auto [pos, ri] = *hit;
        const Poly<K>& g = G.rules[ri];
        Word a = w.prefix(pos);
        Word b = w.subword(pos + g.lm().size(), w.size() - pos - g.lm().size());
        work -= g.framed(a, b, c);
        if (trace) trace->push_back(ReductionStep<K>{ri, a, b, c});
    }
    return out;
}

template <class K>
Poly<K> normal_form_word(const Word& w, const GroebnerBasis<K>& G) {
    return normal_form(Poly<K>(w), G);
}

namespace detail {

/// One full inter-reduction sweep to the unique reduced basis: drop rules
/// whose LM is divisible by another LM, then rewrite every rule to normal
/// form modulo the others until nothing changes.
template <class K>
void inter_reduce(std::vector<Poly<K>>& rules, std::size_t degree_bound) {
    bool changed = true;
    while (changed) {
        changed = false;
        // deterministic processing order
        std::sort(rules.begin(), rules.end(), [](const Poly<K>& a, const Poly<K>& b) {
            return deg_lex_less(a.lm(), b.lm());
        });
        for (std::size_t i = 0; i < rules.size(); ++i) {
            GroebnerBasis<K> rest;
            rest.degree_bound = degree_bound;
            for (std::size_t j = 0; j < rules.size(); ++j)
                if (j != i) rest.rules.push_back(rules[j]);
            rest.rebuild_index();
            Poly<K> nf = normal_form(rules[i], rest);
            if (nf.is_zero()) {
                rules.erase(rules.begin() + i);
                changed = true;
                break;
            }
            nf = nf.monic();
            if (!(nf == rules[i])) {
                rules[i] = nf;
                changed = true;
                break;
            }
        }
    }
}

struct Overlap {
    Word word;           // ambiguity word  w = LM(f) * b = a * LM(g)
    std::size_t fi, gi;  // rule indices
    std::size_t olap;    // overlap length, 0 < olap < min(|LM f|,|LM g|)
};

/// All overlap ambiguities of LM(f) followed by LM(g):
/// a proper suffix of LM(f) equals a proper prefix of LM(g).
template <class K>
void collect_overlaps(const std::vector<Poly<K>>& rules, std::size_t fi, std::size_t gi,
                      std::size_t degree_bound, std::deque<Overlap>& out) {
    const Word& u = rules[fi].lm();
    const Word& v = rules[gi].lm();
    std::size_t max_o = std::min(u.size(), v.size()) - 1;
    for (std::size_t o = 1; o <= max_o; ++o) {
        if (u.suffix(o) == v.prefix(o)) {
            Word w = u * v.subword(o, v.size() - o);
            if (w.size() <= degree_bound) out.push_back(Overlap{w, fi, gi, o});
        }
    }
}

} // namespace detail

/// Truncated completion: resolves every overlap ambiguity whose word has
/// length <= degree_bound, then inter-reduces to the unique reduced basis.
/// Inputs must be homogeneous of degree >= 2 over a non-empty alphabet.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Letter>& generators,
                            const std::vector<Poly<K>>& relations,
                            std::size_t degree_bound) {
    if (generators.empty() && !relations.empty())
        throw std::invalid_argument("buchberger: empty alphabet");
    std::vector<Poly<K>> rules;
    for (const Poly<K>& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous() || r.degree() < 2)
            throw std::invalid_argument("buchberger: relations must be homogeneous of degree >= 2");
        if (r.degree() > degree_bound)
            throw std::invalid_argument("buchberger: degree bound below input degree");
        rules.push_back(r.monic());
    }

    GroebnerBasis<K> G;
    G.generators = generators;
    G.degree_bound = degree_bound;
    G.rules = rules;

    // Alternate ambiguity resolution with inter-reduction until the rule
    // set stabilizes. At the fixed point the set is inter-reduced, so no
    // leading monomial divides another (inclusion ambiguities cannot
    // occur), and every overlap ambiguity under the bound reduced to zero
    // in the last round.
    for (int round = 0;; ++round) {
        if (round > 256) throw std::logic_error("buchberger: completion did not stabilize");
        detail::inter_reduce(G.rules, degree_bound);
        G.rebuild_index();
        auto before = G.rules;

        std::deque<detail::Overlap> queue;
        for (std::size_t i = 0; i < G.rules.size(); ++i)
            for (std::size_t j = 0; j < G.rules.size(); ++j)
                detail::collect_overlaps(G.rules, i, j, degree_bound, queue);

        while (!queue.empty()) {
            detail::Overlap ov = queue.front();
            queue.pop_front();
            const Poly<K>& f = G.rules[ov.fi];
            const Poly<K>& g = G.rules[ov.gi];
            // S-polynomial of the ambiguity  w = LM(f)*b = a*LM(g)
            Word b = ov.word.subword(f.lm().size(), ov.word.size() - f.lm().size());
            Word a = ov.word.prefix(ov.word.size() - g.lm().size());
            Poly<K> s = f.framed(Word{}, b, K(1)) - g.framed(a, Word{}, K(1));
            Poly<K> h = normal_form(s, G);
            if (h.is_zero()) continue;
            h = h.monic();
            std::size_t ni = G.rules.size();
            G.rules.push_back(h);
            G.rebuild_index();
            for (std::size_t i = 0; i <= ni; ++i) {
                detail::collect_overlaps(G.rules, i, ni, degree_bound, queue);
                if (i != ni) detail::collect_overlaps(G.rules, ni, i, degree_bound, queue);
            }
        }

        detail::inter_reduce(G.rules, degree_bound);
        G.rebuild_index();
        if (G.rules == before) break;
    }

    // completeness certificate: every ambiguity among the final rules
    // fits under the bound, hence was resolved above
    G.complete = true;
    std::deque<detail::Overlap> all;
    for (std::size_t i = 0; i < G.rules.size() && G.complete; ++i)
        for (std::size_t j = 0; j < G.rules.size() && G.complete; ++j) {
            const Word& u = G.rules[i].lm();
            const Word& v = G.rules[j].lm();
            std::size_t max_o = std::min(u.size(), v.size()) - 1;
            for (std::size_t o = 1; o <= max_o; ++o)
                if (u.suffix(o) == v.prefix(o) && u.size() + v.size() - o > degree_bound)
                    G.complete = false;
        }
    return G;
}

/// Decides whether a set of quadratic relations, deg-lex oriented, is
/// already a Groebner basis of the ideal it generates: every degree-3
/// overlap ambiguity must resolve, and coinciding leading monomials must
/// cancel modulo the set.
template <class K>
bool is_groebner(const std::vector<Poly<K>>& relations) {
    std::vector<Poly<K>> rules;
    for (const Poly<K>& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous() || r.degree() != 2)
            throw std::invalid_argument("is_groebner: quadratic relations required");
        rules.push_back(r.monic());
    }
    GroebnerBasis<K> G;
    G.degree_bound = 3;
    G.rules = rules;
    G.rebuild_index();

    // duplicated leading monomials: the pairwise difference exposes a
    // smaller leading monomial; it must still reduce to zero
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = i + 1; j < rules.size(); ++j)
            if (rules[i].lm() == rules[j].lm())
                if (!normal_form(rules[i] - rules[j], G).is_zero()) return false;

    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& u = rules[i].lm();
            const Word& v = rules[j].lm();
            if (!(u.suffix(1) == v.prefix(1))) continue;
            // w = u * last(v): reduce the two one-step divergences
            Word w = u * v.suffix(1);
            Poly<K> left = rules[i].framed(Word{}, v.suffix(1), K(1));   // w - (w reduced by rule i at 0)
            Poly<K> right = rules[j].framed(u.prefix(1), Word{}, K(1));  // w - (w reduced by rule j at 1)
            if (!normal_form(left - right, G).is_zero()) return false;
        }
    return true;
}

/// All normal words of length d, in deg-lex order, by prefix-tree search:
/// every prefix of a normal word is normal, so pruning keeps the walk
/// proportional to the answer.
template <class K>
std::vector<Word> normal_words(const GroebnerBasis<K>& G, std::size_t d) {
    if (d > G.degree_bound)
        throw std::invalid_argument("normal_words: degree exceeds the basis bound");
    std::vector<Word> out;
    Word cur;
    auto extend = [&](auto&& self) -> void {
        if (cur.size() == d) {
            out.push_back(cur);
            return;
        }
        for (const Letter& l : G.generators) {
            cur.push_back(l);
            // only suffixes ending at the new letter can introduce an obstruction
            bool ok = true;
            for (std::size_t len : G.lm_lengths) {
                if (len > cur.size()) break;
                if (G.lm_index.count(cur.suffix(len))) { ok = false; break; }
            }
            if (ok) self(self);
            cur = cur.prefix(cur.size() - 1);
        }
    };
    extend(extend);
    return out;
}

/// Hilbert function [dim A_0, ..., dim A_dmax] by normal-word counting.
template <class K>
std::vector<long long> hilbert_function(const GroebnerBasis<K>& G, std::size_t d_max) {
    std::vector<long long> h;
    for (std::size_t d = 0; d <= d_max; ++d)
        h.push_back(static_cast<long long>(normal_words(G, d).size()));
    return h;
}

/// Multiplication in the quotient: Nor(u v).
template <class K>
Poly<K> bullet_multiply(const Poly<K>& u, const Poly<K>& v, const GroebnerBasis<K>& G) {
    if (u.degree() + v.degree() > G.degree_bound)
        throw std::invalid_argument("bullet_multiply: combined degree exceeds bound");
    return normal_form(u * v, G);
}

} // namespace ybx
