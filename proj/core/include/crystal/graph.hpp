#pragma once

#include <map>
#include <string>
#include <vector>

#include "crystal/rational.hpp"

namespace crystal {

/* Finite connected multigraph with loops. Each undirected edge is stored
   once, under a chosen orientation (origin -> terminus); the reversed edge
   is represented implicitly by negative chain coefficients. Vertex and edge
   ids are opaque strings; input order is the canonical order everywhere. */
class Graph {
public:
    struct Edge {
        std::string id;
        int origin;
        int terminus;
    };

    Graph(std::vector<std::string> vertex_ids,
          std::vector<std::tuple<std::string, std::string, std::string>> edges); // (id, from, to)

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int i) const { return vertex_ids_[i]; }
    const Edge& edge(int i) const { return edges_[i]; }

    int vertex_index(const std::string& id) const; // UnknownVertex
    int edge_index(const std::string& id) const;   // UnknownEdge

    // Directed-edge count with origin x; a loop contributes 2.
    int degree(int vertex) const { return degrees_[vertex]; }

    bool connected() const;

    // Semantic validation: connected and minimum degree >= 3.
    // Errors: Disconnected, DegreeTooLow.
    void validate() const;

    // First Betti number |E| - |V| + 1.
    int betti() const { return edge_count() - vertex_count() + 1; }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> edge_lookup_;
    std::vector<int> degrees_;
};

// Integer 1-chain in the edge coordinates of a fixed graph: coefficient
// c[i] on the stored orientation of edge i, so the reversed edge is -e.
struct OneChain {
    std::vector<Int> c;

    bool operator==(const OneChain& o) const { return c == o.c; }
    bool is_zero() const;
};

OneChain zero_chain(const Graph& g);
OneChain chain_add(const OneChain& x, const OneChain& y);
OneChain chain_sub(const OneChain& x, const OneChain& y);
OneChain chain_scale(const Int& k, const OneChain& x);

// Chain from a sparse edge-id -> coefficient map. Unknown edge ids error.
OneChain chain_from_map(const Graph& g, const std::map<std::string, Int>& coeffs);
std::map<std::string, Int> chain_to_map(const Graph& g, const OneChain& x);
std::string chain_to_string(const Graph& g, const OneChain& x); // e.g. "e1 + e2 + 2*e3"

Int chain_norm_l1(const OneChain& x);

// Boundary vector: for each vertex, sum of incoming minus outgoing
// coefficients. Loops cancel and contribute nothing.
std::vector<Int> boundary(const Graph& g, const OneChain& x);

bool is_cycle(const Graph& g, const OneChain& x);

// Deterministic spanning tree: BFS from the lexicographically smallest
// vertex id, scanning edges in input order. Returns edge indices.
std::vector<int> spanning_tree(const Graph& g);

/* Fundamental cycles: one per non-tree edge e, namely e plus the tree path
   from its terminus back to its origin. Their classes form a Z-basis of the
   first homology lattice; the homology coordinates of any cycle are just
   its coefficients on the non-tree edges. */
struct HomologyBasis {
    std::vector<int> tree_edges;
    std::vector<int> nontree_edges;
    std::vector<OneChain> cycles; // cycles[k] belongs to nontree_edges[k]
};

HomologyBasis homology_basis(const Graph& g);

// Coordinates of a cycle in the fundamental-cycle basis (restriction to the
// non-tree edges). Errors NotACycle if the chain has nonzero boundary.
std::vector<Int> homology_coordinates(const Graph& g, const HomologyBasis& hb, const OneChain& x);

} // namespace crystal
