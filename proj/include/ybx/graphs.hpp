#pragma once

#include "ybx/groebner.hpp"
#include "ybx/solution.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// Directed graph on an ordered list of generators; loops allowed, edge
/// set deduplicated. Edges are stored as ordered index pairs.
struct DirectedGraph {
    std::vector<Letter> vertices;
    std::set<std::pair<int, int>> edges;

    int order() const { return static_cast<int>(vertices.size()); }
    bool has_edge(int a, int b) const { return edges.count({a, b}) > 0; }
    void add_edge(int a, int b);

    /// Complement graph on the same vertices: edge iff not present here.
    DirectedGraph dual() const;

    std::string to_dot(const std::string& name) const;
};

/// Graph of normal length-2 words of a quadratic basis: edge u -> v iff
/// the word uv is normal.
DirectedGraph graph_of_normal_words(const GroebnerBasis<Rational>& G);

/// Graph of length-2 obstructions, the complement of the former.
DirectedGraph graph_of_obstructions(const GroebnerBasis<Rational>& G);

/// Strongly connected components in topological order of the condensation.
std::vector<std::vector<int>> strongly_connected_components(const DirectedGraph& g);

/// True when g has a directed cycle (loops and 2-cycles included).
bool has_cycle(const DirectedGraph& g);

struct GrowthResult {
    enum class Kind { Polynomial, Exponential };
    Kind kind = Kind::Polynomial;
    int degree = 0; // meaningful for Polynomial
    // Exponential: two distinct cycles sharing a vertex.
    std::vector<int> cycle_a, cycle_b;
    // Polynomial: a vertex path passing through `degree` cyclic components.
    std::vector<int> witness_path;
};

/// Growth read off the graph of normal words: exponential iff two cycles
/// intersect; otherwise the polynomial growth degree is the largest number
/// of cycles met along a path, computed on the condensation DAG.
GrowthResult gk_dimension(const DirectedGraph& g);

struct GlDimResult {
    enum class Kind { Finite, Infinite };
    Kind kind = Kind::Infinite;
    int value = 0;             // the finite global dimension
    std::vector<int> witness;  // longest path (finite) or a cycle (infinite)
};

/// Global dimension from the obstruction graph: finite iff acyclic, and
/// then one more than the longest path length.
GlDimResult global_dimension(const DirectedGraph& gW);

/// Extends an acyclic loop-free graph to an acyclic tournament on the same
/// vertices by inserting one safe edge at a time.
DirectedGraph complete_to_acyclic_tournament(const DirectedGraph& g);

/// True iff removing the loop at `loop_vertex` leaves an acyclic
/// tournament; cross-validated against |E| = C(n,2)+1 together with
/// polynomial growth of degree one.
bool classify_max_monomial(const DirectedGraph& g, const Letter& loop_vertex);

struct DimA2Bounds {
    int dim_a2 = 0;
    int lower = 0;
    int upper = 0;
    bool within = false;
    bool pbw_witness = false; // quadratic basis closed at degree 3
};

/// Bounds n <= dim A_2 <= C(n,2)+1 for the algebra of an idempotent
/// left-nondegenerate braided set whose quadratic relations close at
/// degree 3.
DimA2Bounds dim_a2_bounds_check(const SolutionTable& s);

/// Number of paths with `edges` edges, for the path/normal-word counting
/// cross-check.
long long count_paths(const DirectedGraph& g, int edges);

} // namespace ybx
