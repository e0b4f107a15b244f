// graph.hpp — simple undirected labeled graphs, structural classification,
// constructors for cycle/starlike families, and a canonical form for
// isomorphism testing at small orders.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lapco {

using Edge = std::pair<int, int>;

// Immutable simple graph on vertices 0..n-1. Edges are normalized to
// (min,max) and kept sorted; adjacency lists are sorted ascending.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Validating constructor. Rejects self-loops, duplicate edges and
// out-of-range endpoints, each with its own diagnostic.
Graph make_graph(int n, std::vector<Edge> edges);

struct StructuralReport {
    bool connected = false;
    bool is_tree = false;
    bool is_unicyclic = false;
    std::optional<int> girth;        // unicyclic only
    std::vector<int> cycle_vertices; // unicyclic only; starts at the smallest
                                     // cycle vertex, toward its smaller neighbor
    int leaf_count = 0;              // degree-1 vertices
};

StructuralReport classify(const Graph& g);

// Parameters of the balanced starlike unicyclic graph: cycle of length g,
// tail path of length p from one cycle vertex, balanced starlike tree with
// l legs rooted at the tail end.
struct FamilySpec {
    int n = 0;
    int l = 0;
    int g = 0;
    int p = 0;
};

// Balanced starlike tree: center 0, l legs of near-equal length covering
// n-1 vertices, longer legs first, labels consecutive along each leg.
Graph build_bst(int n, int l);

// Balanced starlike unicyclic graph. Labels: cycle 0..g-1 (attachment
// vertex 0), tail g..g+p-1, then legs in nonincreasing length order.
Graph build_u(const FamilySpec& spec);

struct RootedTree {
    Graph tree;
    int root = 0;
};

// Cycle of length `girth` with trees[i] attached by identifying its root
// with cycle vertex i. Tree vertices are relabeled in BFS order.
Graph compose_cycle_trees(int girth, const std::vector<RootedTree>& trees);

// Complete isomorphism invariant for small graphs: byte 0 is the order,
// followed by the bit-packed upper triangle of the adjacency matrix in
// placement order, minimized over all relabelings that respect the stable
// degree-refinement partition. Practical for n <= 16.
using CanonicalForm = std::string;
CanonicalForm canonical_form(const Graph& g);
std::string to_hex(const CanonicalForm& form);

// Relabels vertex v to perm[v]. Helper for isomorphism property tests.
Graph relabel(const Graph& g, const std::vector<int>& perm);

} // namespace lapco
