#include <doctest.h>

#include "hstar/errors.hpp"
#include "hstar/json_io.hpp"
#include "hstar/poset_polytopes.hpp"

using namespace hstar;

TEST_CASE("big integers round-trip as numbers or strings") {
    Int big = pow_int(Int(10), 30);
    json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    json small = int_to_json(Int(-42));
    CHECK(small.is_number_integer());
    CHECK(int_from_json(small) == -42);
}

TEST_CASE("polynomial arrays") {
    IntPolynomial f{1, 4, 1};
    CHECK(to_json(f).dump() == "[1,4,1]");
    CHECK(int_polynomial_from_json(json::parse("[1,4,1]")) == f);
    CHECK(int_polynomial_from_json(json::parse("[]")).is_zero());
    CHECK(int_polynomial_from_json(json::parse("[\"100000000000000000000\"]")).coeff(0) ==
          pow_int(Int(10), 20));
}

TEST_CASE("polytope round trip re-canonicalizes") {
    json j = json::parse(R"({"dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1],[0,0]]})");
    VPolytope p = vpolytope_from_json(j);
    CHECK(p.num_vertices() == 4);
    VPolytope q = vpolytope_from_json(to_json(p));
    CHECK(p == q);
}

TEST_CASE("graph, hypergraph, poset round trips") {
    Graph g(4, {{1, 2}, {2, 3}, {1, 4}});
    CHECK(graph_from_json(to_json(g)) == g);

    Hypergraph h{3, {{1, 2}, {2, 3}, {1, 2, 3}}};
    Hypergraph h2 = hypergraph_from_json(to_json(h));
    CHECK(h2.num_vertices == 3);
    CHECK(h2.hyperedges == h.hyperedges);

    Poset p = Poset::from_covers(4, {{1, 2}, {2, 4}, {3, 4}});
    CHECK(poset_from_json(to_json(p)) == p);
}

TEST_CASE("ehrhart data serialization") {
    EhrhartData e = ehrhart_data(enriched_chain_polytope(Poset::chain(2)));
    json j = to_json(e);
    CHECK(j["dim"] == 2);
    CHECK(j["hstar"].dump() == "[1,2,1]");
    CHECK(j["counts"].dump() == "[1,5,13]");
    CHECK(j["ehrhart_den"] == 1);
    CHECK(j["ehrhart_num"].dump() == "[1,2,2]");
}

TEST_CASE("orthant assignment with defaults") {
    json j = json::parse(R"({
      "d": 2,
      "pieces": [{"signs": [1, 1], "polytope": {"dim": 2, "vertices": [[0,0],[1,0],[0,1]]}}],
      "default": {"graph": {"n": 2, "edges": [[1,2]]}}
    })");
    OrthantAssignment a = orthant_assignment_from_json(j);
    CHECK(a.pieces.size() == 4);
    CHECK(a.pieces[0].num_vertices() == 3);   // the triangle
    CHECK(a.pieces[3].num_vertices() == 3);   // stable sets of K2: 0, e1, e2
    OrthantAssignment b = orthant_assignment_from_json(to_json(a));
    for (size_t m = 0; m < 4; ++m) CHECK(a.pieces[m] == b.pieces[m]);

    json missing = json::parse(R"({"d": 1, "pieces": []})");
    CHECK_THROWS_AS(orthant_assignment_from_json(missing), invalid_argument_error);
}
