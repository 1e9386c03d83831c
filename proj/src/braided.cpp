#include "ybx/braided.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybx {

int ExtendedActions::check_letter(Letter l) const {
    if (l.index < 1 || l.index > s_.n)
        throw std::invalid_argument("extended action: letter outside the solution's set");
    return l.index - 1;
}

Word ExtendedActions::left(const Word& a, const Word& b) {
    if (a.empty()) return b;   // 1 |> u = u
    if (b.empty()) return b;   // a |> 1 = 1
    auto key = std::make_pair(a, b);
    auto it = memo_left_.find(key);
    if (it != memo_left_.end()) return it->second;
    Word result;
    if (a.size() == 1) {
        // c |> (b1..bq): act on each letter while the actor is twisted from
        // the right by the letters already passed
        int actor = check_letter(a[0]);
        std::vector<Letter> out;
        out.reserve(b.size());
        for (const Letter& bl : b.letters()) {
            int y = check_letter(bl);
            out.push_back(Letter{bl.alphabet, s_.left_act(actor, y) + 1});
            actor = s_.right_act(actor, y);
        }
        result = Word(std::move(out));
    } else {
        Word tail = a.subword(1, a.size() - 1);
        result = left(a.prefix(1), left(tail, b));
    }
    memo_left_.emplace(std::move(key), result);
    return result;
}

Word ExtendedActions::right(const Word& a, const Word& b) {
    if (b.empty()) return a;   // a <| 1 = a
    if (a.empty()) return a;   // 1 <| u = 1
    auto key = std::make_pair(a, b);
    auto it = memo_right_.find(key);
    if (it != memo_right_.end()) return it->second;
    Word result;
    if (a.size() == 1) {
        // x <| (b1..bq) = ((x <| b1) <| b2) ...
        int cur = check_letter(a[0]);
        for (const Letter& bl : b.letters()) cur = s_.right_act(cur, check_letter(bl));
        result = Word{Letter{a[0].alphabet, cur + 1}};
    } else {
        // (a1 a') <| b = (a1 <| (a' |> b)) (a' <| b)
        Word head = a.prefix(1);
        Word tail = a.subword(1, a.size() - 1);
        result = right(head, left(tail, b)) * right(tail, b);
    }
    memo_right_.emplace(std::move(key), result);
    return result;
}

NormalizedBraiding::NormalizedBraiding(const SolutionTable& s, std::size_t degree_bound)
    : solution_(s),
      gb_(groebner_of(orbit_relations(s), degree_bound)),
      actions_(s) {}

std::vector<Word> NormalizedBraiding::normal_of_degree(std::size_t d) const {
    return normal_words(gb_, d);
}

Word NormalizedBraiding::nor(const Word& w) const {
    if (w.empty()) return w;
    RPoly nf = normal_form_word(w, gb_);
    if (nf.term_count() != 1 || nf.lc() != 1)
        throw std::logic_error("nor: word did not reduce to a single monomial");
    return nf.lm();
}

std::pair<Word, Word> NormalizedBraiding::rho(const Word& a, const Word& b) {
    if (!gb_.word_is_normal(a) || !gb_.word_is_normal(b))
        throw std::invalid_argument("rho: arguments must be normal words");
    return {nor(actions_.left(a, b)), nor(actions_.right(a, b))};
}

RhoPowerReport rho_power_check(NormalizedBraiding& braiding, std::size_t max_deg) {
    RhoPowerReport rep;
    rep.rho3_eq_rho = true;
    rep.rho2_eq_rho = true;
    std::vector<Word> normals;
    for (std::size_t d = 1; d <= max_deg; ++d)
        for (const Word& w : braiding.normal_of_degree(d)) normals.push_back(w);
    for (const Word& a : normals)
        for (const Word& b : normals) {
            auto r1 = braiding.rho(a, b);
            auto r2 = braiding.rho(r1.first, r1.second);
            auto r3 = braiding.rho(r2.first, r2.second);
            if (r3 != r1) rep.rho3_eq_rho = false;
            if (r2 != r1) {
                rep.rho2_eq_rho = false;
                if (!rep.rho2_witness) rep.rho2_witness = std::make_pair(a, b);
            }
        }
    return rep;
}

std::pair<Word, Word> rho_closed_form(const std::vector<int>& f, const Word& a, const Word& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("rho_closed_form: empty word");
    auto iterate = [&](int q, std::size_t times) {
        int cur = q;
        for (std::size_t i = 0; i < times; ++i) cur = f[cur - 1];
        return cur;
    };
    int q = b[b.size() - 1].index;
    int fq = iterate(q, a.size());
    Word first = word_power(xgen(1), b.size() - 1) * Word{xgen(fq)};
    Word second = word_power(xgen(1), a.size() - 1) * Word{xgen(q)};
    return {first, second};
}

SolutionTable d_veronese_solution(const SolutionTable& s, int d) {
    if (d < 1) throw std::invalid_argument("d_veronese_solution: d >= 1 required");
    if (d == 1) return s;
    std::size_t bound = static_cast<std::size_t>(2 * d + 1);
    NormalizedBraiding braiding(s, bound);
    std::vector<Word> nd = braiding.normal_of_degree(d);
    const int m = static_cast<int>(nd.size());
    std::map<Word, int, DegLexLess> index;
    for (int i = 0; i < m; ++i) index.emplace(nd[i], i);
    SolutionTable out;
    out.n = m;
    out.r.resize(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto [u, v] = braiding.rho(nd[i], nd[j]);
            auto iu = index.find(u);
            auto iv = index.find(v);
            if (iu == index.end() || iv == index.end())
                throw std::logic_error("d_veronese_solution: braiding left the degree component");
            out.r[i * m + j] = {iu->second, iv->second};
        }
    out.rebuild_actions();
    return out;
}

long long monomial_veronese_order(const SolutionTable& s, int d) {
    if (d < 0) throw std::invalid_argument("monomial_veronese_order: d >= 0 required");
    if (d == 0) return 1;
    auto gb = groebner_of(orbit_relations(s), static_cast<std::size_t>(std::max(d + 1, 3)));
    return static_cast<long long>(normal_words(gb, static_cast<std::size_t>(d)).size());
}

} // namespace ybx
