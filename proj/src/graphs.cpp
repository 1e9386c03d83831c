#include "ybx/graphs.hpp"

#include "ybx/yb_algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ybx {

void DirectedGraph::add_edge(int a, int b) {
    if (a < 0 || a >= order() || b < 0 || b >= order())
        throw std::out_of_range("DirectedGraph::add_edge");
    edges.insert({a, b});
}

DirectedGraph DirectedGraph::dual() const {
    DirectedGraph d;
    d.vertices = vertices;
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b)
            if (!has_edge(a, b)) d.edges.insert({a, b});
    return d;
}

std::string DirectedGraph::to_dot(const std::string& name) const {
    std::string out = "digraph " + name + " {\n";
    for (const Letter& v : vertices) {
        out += "  ";
        out += alphabet_prefix(v.alphabet) + std::to_string(v.index);
        out += ";\n";
    }
    for (const auto& [a, b] : edges) {
        out += "  ";
        out += alphabet_prefix(vertices[a].alphabet) + std::to_string(vertices[a].index);
        out += " -> ";
        out += alphabet_prefix(vertices[b].alphabet) + std::to_string(vertices[b].index);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

DirectedGraph graph_of_normal_words(const GroebnerBasis<Rational>& G) {
    DirectedGraph g;
    g.vertices = G.generators;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Word w{g.vertices[a], g.vertices[b]};
            if (G.word_is_normal(w)) g.edges.insert({a, b});
        }
    return g;
}

DirectedGraph graph_of_obstructions(const GroebnerBasis<Rational>& G) {
    return graph_of_normal_words(G).dual();
}

std::vector<std::vector<int>> strongly_connected_components(const DirectedGraph& g) {
    // Tarjan; the component list comes out in reverse topological order and
    // is flipped before returning
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.edges) adj[a].push_back(b);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : adj[v]) {
            if (index[w] == -1) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(comp);
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] == -1) strongconnect(v);
    std::reverse(comps.begin(), comps.end());
    return comps;
}

namespace {

struct Condensation {
    std::vector<std::vector<int>> comps; // topological order
    std::vector<int> comp_of;
    std::vector<int> intra_edges;        // edge count within each component
    std::vector<std::set<int>> dag;      // condensation adjacency
};

Condensation condense(const DirectedGraph& g) {
    Condensation c;
    c.comps = strongly_connected_components(g);
    c.comp_of.assign(g.order(), -1);
    for (std::size_t i = 0; i < c.comps.size(); ++i)
        for (int v : c.comps[i]) c.comp_of[v] = static_cast<int>(i);
    c.intra_edges.assign(c.comps.size(), 0);
    c.dag.assign(c.comps.size(), {});
    for (auto [a, b] : g.edges) {
        if (c.comp_of[a] == c.comp_of[b])
            ++c.intra_edges[c.comp_of[a]];
        else
            c.dag[c.comp_of[a]].insert(c.comp_of[b]);
    }
    return c;
}

// a strongly connected set with as many internal edges as vertices is a
// single cycle; more edges means two cycles through a common vertex
bool component_is_cyclic(const Condensation& c, std::size_t i) {
    return c.intra_edges[i] >= static_cast<int>(c.comps[i].size()) &&
           c.intra_edges[i] > 0;
}

// walk a cycle inside one SCC starting anywhere
std::vector<int> extract_cycle(const DirectedGraph& g, const std::vector<int>& comp) {
    int start = comp.front();
    std::vector<int> path{start};
    std::set<int> seen{start};
    int cur = start;
    for (;;) {
        int next = -1;
        for (int v : comp)
            if (g.has_edge(cur, v)) { next = v; break; }
        if (next == -1) return {}; // not strongly connected after all
        if (seen.count(next)) {
            // close the cycle at the first repeat
            auto it = std::find(path.begin(), path.end(), next);
            return std::vector<int>(it, path.end());
        }
        path.push_back(next);
        seen.insert(next);
        cur = next;
    }
}

} // namespace

bool has_cycle(const DirectedGraph& g) {
    auto c = condense(g);
    for (std::size_t i = 0; i < c.comps.size(); ++i)
        if (c.intra_edges[i] > 0) return true;
    return false;
}

GrowthResult gk_dimension(const DirectedGraph& g) {
    GrowthResult res;
    auto c = condense(g);
    for (std::size_t i = 0; i < c.comps.size(); ++i) {
        if (c.intra_edges[i] > static_cast<int>(c.comps[i].size())) {
            // two distinct cycles through a shared vertex: pick a vertex of
            // internal out-degree >= 2 and close a cycle through each exit
            res.kind = GrowthResult::Kind::Exponential;
            const auto& comp = c.comps[i];
            for (int v : comp) {
                std::vector<int> outs;
                for (int w : comp)
                    if (g.has_edge(v, w)) outs.push_back(w);
                if (outs.size() < 2) continue;
                // close a cycle v -> first -> ... -> v through each exit
                auto close = [&](int first) {
                    if (first == v) return std::vector<int>{v};
                    std::vector<int> prev(g.order(), -1);
                    std::vector<int> queue{first};
                    std::set<int> seen{first};
                    for (std::size_t qi = 0; qi < queue.size() && prev[v] == -1; ++qi)
                        for (int w : comp)
                            if (g.has_edge(queue[qi], w) && !seen.count(w)) {
                                seen.insert(w);
                                prev[w] = queue[qi];
                                queue.push_back(w);
                            }
                    std::vector<int> cyc;
                    for (int u = prev[v]; u != -1; u = prev[u]) cyc.push_back(u);
                    std::reverse(cyc.begin(), cyc.end());
                    cyc.insert(cyc.begin(), v);
                    return cyc;
                };
                res.cycle_a = close(outs[0]);
                res.cycle_b = close(outs[1]);
                return res;
            }
            return res;
        }
    }
    // condensation DAG: longest path counting cyclic components
    const std::size_t k = c.comps.size();
    std::vector<int> best(k, 0);
    std::vector<int> next(k, -1);
    for (std::size_t i = k; i-- > 0;) {
        best[i] = component_is_cyclic(c, i) ? 1 : 0;
        int carry = 0;
        for (int j : c.dag[i]) {
            if (best[j] > carry) { carry = best[j]; next[i] = j; }
        }
        best[i] += carry;
    }
    int start = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (best[i] > best[start]) start = static_cast<int>(i);
    res.kind = GrowthResult::Kind::Polynomial;
    res.degree = k == 0 ? 0 : best[start];
    for (int i = start; i != -1; i = next[i]) res.witness_path.push_back(c.comps[i].front());
    return res;
}

GlDimResult global_dimension(const DirectedGraph& gW) {
    GlDimResult res;
    auto c = condense(gW);
    for (std::size_t i = 0; i < c.comps.size(); ++i)
        if (c.intra_edges[i] > 0) {
            res.kind = GlDimResult::Kind::Infinite;
            res.witness = extract_cycle(gW, c.comps[i]);
            return res;
        }
    // acyclic: longest path by DP over a topological order of vertices
    const int n = gW.order();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : gW.edges) adj[a].push_back(b);
    std::vector<int> best(n, 0), next(n, -1);
    // components are singletons in topological order
    for (std::size_t i = c.comps.size(); i-- > 0;) {
        int v = c.comps[i].front();
        for (int w : adj[v])
            if (best[w] + 1 > best[v]) {
                best[v] = best[w] + 1;
                next[v] = w;
            }
    }
    int start = 0;
    for (int v = 0; v < n; ++v)
        if (best[v] > best[start]) start = v;
    res.kind = GlDimResult::Kind::Finite;
    res.value = n == 0 ? 1 : best[start] + 1;
    if (n > 0)
        for (int v = start; v != -1; v = next[v]) res.witness.push_back(v);
    return res;
}

DirectedGraph complete_to_acyclic_tournament(const DirectedGraph& g) {
    for (auto [a, b] : g.edges)
        if (a == b) throw std::invalid_argument("tournament completion: input has a loop");
    if (has_cycle(g)) throw std::invalid_argument("tournament completion: input has a cycle");
    DirectedGraph out = g;
    auto reaches = [&](int from, int to) {
        std::vector<int> queue{from};
        std::set<int> seen{from};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            if (queue[qi] == to) return true;
            for (auto [a, b] : out.edges)
                if (a == queue[qi] && !seen.count(b)) {
                    seen.insert(b);
                    queue.push_back(b);
                }
        }
        return false;
    };
    for (int a = 0; a < out.order(); ++a)
        for (int b = a + 1; b < out.order(); ++b) {
            if (out.has_edge(a, b) || out.has_edge(b, a)) continue;
            // a -> b is safe unless b already reaches a
            if (reaches(b, a))
                out.edges.insert({b, a});
            else
                out.edges.insert({a, b});
        }
    return out;
}

bool classify_max_monomial(const DirectedGraph& g, const Letter& loop_vertex) {
    auto it = std::find(g.vertices.begin(), g.vertices.end(), loop_vertex);
    if (it == g.vertices.end()) throw std::invalid_argument("classify_max_monomial: bad vertex");
    int v = static_cast<int>(it - g.vertices.begin());
    if (!g.has_edge(v, v)) return false;
    DirectedGraph rest = g;
    rest.edges.erase({v, v});
    const int n = g.order();
    bool tournament = static_cast<int>(rest.edges.size()) == n * (n - 1) / 2;
    for (auto [a, b] : rest.edges) {
        if (a == b) tournament = false;
        if (rest.has_edge(b, a)) tournament = false;
    }
    bool shape = tournament && !has_cycle(rest);

    // equivalent characterization: C(n,2)+1 edges and growth degree one
    bool count = static_cast<int>(g.edges.size()) == n * (n - 1) / 2 + 1;
    auto growth = gk_dimension(g);
    bool gk1 = growth.kind == GrowthResult::Kind::Polynomial && growth.degree == 1;
    if (shape != (count && gk1))
        throw std::logic_error("classify_max_monomial: characterizations disagree");
    return shape;
}

DimA2Bounds dim_a2_bounds_check(const SolutionTable& s) {
    if (!check_idempotent(s) || !check_nondegenerate(s).left || !check_braid(s))
        throw std::invalid_argument("dim_a2_bounds_check: input must be an idempotent "
                                    "left-nondegenerate braided set");
    DimA2Bounds out;
    const int n = s.n;
    out.lower = n;
    out.upper = n * (n - 1) / 2 + 1;
    auto gb = groebner_of(orbit_relations(s), 3);
    out.pbw_witness = true;
    for (const auto& r : gb.rules)
        if (r.degree() > 2) out.pbw_witness = false;
    out.dim_a2 = static_cast<int>(normal_words(gb, 2).size());
    out.within = out.lower <= out.dim_a2 && out.dim_a2 <= out.upper;
    return out;
}

long long count_paths(const DirectedGraph& g, int edges) {
    const int n = g.order();
    if (edges < 0) return 0;
    std::vector<long long> cur(n, 1); // paths with 0 edges starting at v
    for (int e = 0; e < edges; ++e) {
        std::vector<long long> next_counts(n, 0);
        for (auto [a, b] : g.edges) next_counts[a] += cur[b];
        cur = next_counts;
    }
    long long total = 0;
    for (long long v : cur) total += v;
    return total;
}

} // namespace ybx
