#pragma once

#include <json.hpp>

#include "hstar/graph.hpp"
#include "hstar/hypergraph.hpp"
#include "hstar/orthant.hpp"
#include "hstar/polytope.hpp"
#include "hstar/poset.hpp"

namespace hstar {

using json = nlohmann::json;

// Arbitrary-precision integers go through JSON as plain numbers while they
// fit in 64 bits and as decimal strings beyond; both forms are accepted back.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

// Polynomials are integer arrays, lowest degree first.
json to_json(const IntPolynomial& f);
IntPolynomial int_polynomial_from_json(const json& j);

// {"dim": d, "vertices": [[...], ...]}
json to_json(const VPolytope& p);
VPolytope vpolytope_from_json(const json& j);  // re-runs hull()

// {"dim": n, "counts": [...], "hstar": [...], "ehrhart_num": [...], "ehrhart_den": k}
json to_json(const EhrhartData& e);

// {"n": k, "edges": [[i, j], ...]} (1-indexed)
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"vertices": k, "hyperedges": [[...], ...]}
json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

// {"n": k, "covers": [[i, j], ...]}
json to_json(const Poset& p);
Poset poset_from_json(const json& j);

// {"d": k, "pieces": [{"signs": [...], "polytope": {...} | "graph": {...}}, ...],
//  "default": {...}} — orthants without an explicit piece fall back to the
// designated default piece.
json to_json(const OrthantAssignment& a);
OrthantAssignment orthant_assignment_from_json(const json& j);

}  // namespace hstar
