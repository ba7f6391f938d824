#pragma once

#include <vector>

#include "hstar/graph.hpp"
#include "hstar/int_polynomial.hpp"

namespace hstar {

/// Hypergraph on vertices 1..num_vertices with an ordered multiset of
/// hyperedges. The hyperedge order drives the internal-activity computation
/// (the resulting interior polynomial is order-independent; that fact is
/// exercised by the tests rather than assumed silently).
struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> hyperedges;
};

// The incidence bipartite graph: vertices 1..m, then hyperedges m+1..m+n.
Graph bip_graph(const Hypergraph& h);

/// Degree vector of a hypertree: f(e) such that some spanning tree of Bip H
/// has degree f(e)+1 at each hyperedge vertex e.
using Hypertree = std::vector<int>;

// All hypertrees, via exhaustive spanning-tree enumeration of Bip H.
// Requires Bip H connected.
std::vector<Hypertree> hypertrees(const Hypergraph& h);

// Generating function of internal inactivity over all hypertrees: hyperedge
// e_j is internally inactive for f when some transfer of one unit from e_j to
// an earlier e_{j'} lands on another hypertree. deg <= min(|V|,|E|) - 1.
IntPolynomial interior_polynomial(const Hypergraph& h);

// Reads a connected bipartite graph as a hypergraph: the vertices in
// `edge_side` (sorted) become the hyperedges, ordered by their labels, and
// the rest become the ground set.
Hypergraph hypergraph_from_bipartite(const Graph& g, const std::vector<int>& edge_side);

// Interior polynomial of a connected bipartite graph G = Bip H; by the
// transpose invariance of the interior polynomial either side may serve as
// the hyperedge side, so the smaller one is used.
IntPolynomial interior_polynomial(const Graph& g);

}  // namespace hstar
