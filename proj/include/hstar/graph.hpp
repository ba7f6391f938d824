#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hstar {

/// Finite simple graph on vertices 1..n. The edge list is ordered and the
/// order is part of the value: internal-activity computations depend on it.
/// Edges are stored with the smaller endpoint first.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int i, int j) const;
    std::vector<std::vector<int>> adjacency_lists() const;  // 1-indexed, index 0 unused

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

bool is_connected(const Graph& g);
int component_count(const Graph& g);
// 2-coloring; the side containing the smallest vertex of each component is V1.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

Graph complement(const Graph& g);
// Induced subgraph on `verts` (sorted ascending), relabeled to 1..|verts|.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// New vertex n+1 joined to every existing vertex; new edges appended last.
Graph suspension(const Graph& g);

// For bipartite G with bipartition (V1, V2) covering all vertices: adds
// vertices n+1, n+2 with edges {i, n+1} for i in V1 and {j, n+2} for
// j in V2 ∪ {n+1}. The result is connected and bipartite.
Graph tilde_extend(const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2);

// Contract edge e = {i, j}: merged vertex keeps label min(i,j), labels above
// max(i,j) shift down, multiple edges are removed. Throws if e is not an edge.
Graph contract(const Graph& g, std::pair<int, int> e);

Graph delete_edge(const Graph& g, std::pair<int, int> e);
bool is_bridge(const Graph& g, std::pair<int, int> e);

// Blocks (maximal 2-connected subgraphs and bridges), each relabeled to its
// own vertex set 1..k preserving relative order. Isolated vertices give no block.
std::vector<Graph> two_connected_components(const Graph& g);

struct Cut {
    std::vector<int> s;  // the side containing vertex 1
    Graph edge_graph;    // the cut edges, as a graph on the full vertex set [n]
};
// All 2^{n-1} cuts, one per complementary pair {S, [n] \ S}; the canonical
// representative is the side containing vertex 1.
std::vector<Cut> cuts(const Graph& g);

bool is_cycle_graph(const Graph& g);
bool is_complete_graph(const Graph& g);
// For a complete bipartite graph with both sides nonempty, the two sides.
std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts(const Graph& g);
// A vertex adjacent to all others, if any (smallest such).
std::optional<int> dominating_vertex(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph edgeless_graph(int n);

// Canonical key under vertex relabeling (n <= 10: minimum adjacency bitmask
// over all permutations). Used to deduplicate isomorphism classes in sweeps.
std::string canonical_code(const Graph& g);

// All graphs on exactly n vertices, one representative per isomorphism class,
// filtered by `keep` (applied before deduplication).
std::vector<Graph> graphs_up_to_iso(int n, const std::function<bool(const Graph&)>& keep);

}  // namespace hstar
