#include <doctest.h>

#include "hstar/errors.hpp"
#include "hstar/graph_polytopes.hpp"
#include "hstar/orthant.hpp"
#include "hstar/poset_polytopes.hpp"
#include "hstar/properties.hpp"

using namespace hstar;

namespace {

VPolytope unit_cube(int d) {
    std::vector<Vec> pts;
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
        Vec v(d, Int(0));
        for (int i = 0; i < d; ++i)
            if (mask & (size_t(1) << i)) v[i] = 1;
        pts.push_back(std::move(v));
    }
    return hull(d, pts);
}

VPolytope triangle() {
    return hull(2, {Vec{Int(0), Int(0)}, Vec{Int(1), Int(0)}, Vec{Int(0), Int(1)}});
}

// The orthant pieces of a twinned chain polytope: chain polytopes of the
// per-orthant ordinal sums.
OrthantAssignment twinned_assignment(const Poset& p, const Poset& q) {
    const int d = p.n();
    OrthantAssignment a;
    a.d = d;
    a.pieces.resize(size_t(1) << d);
    for (size_t mask = 0; mask < a.pieces.size(); ++mask) {
        std::vector<int> i_set;
        for (int v = 1; v <= d; ++v)
            if (!(mask & (size_t(1) << (v - 1)))) i_set.push_back(v);
        a.pieces[mask] = chain_polytope(ordinal_sum_on_labels(p, q, i_set));
    }
    return a;
}

}  // namespace

TEST_CASE("uniform assignments assemble to the unconditional closure") {
    for (int d = 1; d <= 3; ++d) {
        OrthantAssignment a = OrthantAssignment::uniform(d, unit_cube(d));
        CHECK(consistent(a));
        VPolytope assembled = assemble(a);
        CHECK(assembled == unconditional_closure(unit_cube(d)));
    }
}

TEST_CASE("incompatible pieces are rejected") {
    // unit square in three orthants, 2x2 square in one: the hull bulges
    VPolytope small = unit_cube(2);
    VPolytope big = hull(2, {Vec{Int(0), Int(0)}, Vec{Int(2), Int(0)}, Vec{Int(0), Int(2)},
                             Vec{Int(2), Int(2)}});
    OrthantAssignment a = OrthantAssignment::uniform(2, small);
    a.pieces[1] = big;
    CHECK(!consistent(a));
    CHECK_THROWS_AS(assemble(a), verification_error);
}

TEST_CASE("piece validation") {
    OrthantAssignment a = OrthantAssignment::uniform(2, triangle());
    a.pieces.pop_back();
    CHECK_THROWS_AS(assemble(a), invalid_argument_error);

    VPolytope shifted = hull(2, {Vec{Int(1), Int(1)}, Vec{Int(2), Int(1)}, Vec{Int(1), Int(2)},
                                 Vec{Int(2), Int(2)}});
    CHECK_THROWS_AS(assemble(OrthantAssignment::uniform(2, shifted)), invalid_argument_error);
}

TEST_CASE("projection formula on worked examples") {
    // d = 1: (x-1) + 2 = x+1
    VPolytope seg = hull(1, {Vec{Int(0)}, Vec{Int(1)}});
    CHECK(hstar_unconditional_via_projections(seg) == IntPolynomial{1, 1});
    // d = 2 square: 1+6x+x^2
    CHECK(hstar_unconditional_via_projections(unit_cube(2)) == IntPolynomial{1, 6, 1});
    // triangle: closure is the cross polytope, h* = (x+1)^2
    CHECK(hstar_unconditional_via_projections(triangle()) == IntPolynomial{1, 2, 1});
    CHECK_THROWS_AS(hstar_unconditional_via_projections(hull(2, {Vec{Int(0), Int(0)}})),
                    invalid_argument_error);
}

TEST_CASE("projection formula equals the closure oracle on stable set pieces") {
    for (int n = 1; n <= 3; ++n) {
        for (const Graph& g : graphs_up_to_iso(n, nullptr)) {
            VPolytope q = stable_set_polytope(g);
            CHECK(hstar_unconditional_via_projections(q) ==
                  ehrhart_data(unconditional_closure(q)).hstar);
        }
    }
}

TEST_CASE("orthant average: unconditional case collapses to a single term") {
    OrthantAssignment a = OrthantAssignment::uniform(2, triangle());
    IntPolynomial avg = hstar_locally_antiblocking(a, PieceMethod::projections, EngineMode::checked);
    CHECK(avg == IntPolynomial{1, 2, 1});
    CHECK(avg == hstar_unconditional_via_projections(triangle()));
}

TEST_CASE("orthant average on twinned chain pieces") {
    Poset p = Poset::chain(2);
    Poset q = Poset::antichain(2);
    OrthantAssignment a = twinned_assignment(p, q);
    CHECK(consistent(a));
    VPolytope assembled = assemble(a);
    CHECK(assembled == twinned_chain_polytope(p, q));
    IntPolynomial h = hstar_locally_antiblocking(a, PieceMethod::projections, EngineMode::checked);
    CHECK(h == hstar_twinned(p, q));
    CHECK(h == IntPolynomial{1, 3, 1});

    // oracle piece method agrees
    CHECK(hstar_locally_antiblocking(a, PieceMethod::oracle) == h);
}

TEST_CASE("orthant average on the A(suspension) model") {
    // P = conv(+-e_i, +-(e_i - e_j) over edges) is locally anti-blocking with
    // pieces B_{E_S}; for G = K2 it reproduces h*(A_{C3}) = 1+4x+x^2.
    Graph g = complete_graph(2);
    const int d = 2;
    OrthantAssignment a;
    a.d = d;
    a.pieces.resize(4);
    for (size_t mask = 0; mask < 4; ++mask) {
        std::vector<bool> in_s(d + 1, false);
        for (int v = 1; v <= d; ++v)
            if (!(mask & (size_t(1) << (v - 1)))) in_s[v] = true;
        std::vector<std::pair<int, int>> cut_edges;
        for (auto [i, j] : g.edges())
            if (in_s[i] != in_s[j]) cut_edges.emplace_back(i, j);
        a.pieces[mask] = b_polytope(Graph(d, cut_edges));
    }
    CHECK(consistent(a));
    IntPolynomial h = hstar_locally_antiblocking(a, PieceMethod::projections, EngineMode::checked);
    CHECK(h == IntPolynomial{1, 4, 1});
    CHECK(h == hstar_A_suspension(g));
}

TEST_CASE("gamma vector of the average is the average of gamma vectors") {
    Poset p = Poset::chain(2);
    Poset q = Poset::antichain(2);
    OrthantAssignment a = twinned_assignment(p, q);
    IntPolynomial avg = hstar_locally_antiblocking(a);
    auto g_avg = gamma_decompose(avg, a.d);
    REQUIRE(g_avg.has_value());
    std::vector<Rat> expected(g_avg->size(), Rat(0));
    for (const VPolytope& piece : a.pieces) {
        IntPolynomial h = hstar_unconditional_via_projections(piece);
        auto g = gamma_decompose(h, a.d);
        REQUIRE(g.has_value());
        for (size_t i = 0; i < g->size(); ++i) expected[i] += Rat((*g)[i]);
        // every piece is gamma-positive here, so the average must be too
        for (const Int& gi : *g) CHECK(sgn(gi) >= 0);
    }
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(Rat((*g_avg)[i]) == expected[i] / 4);
}

TEST_CASE("perfect graphs") {
    CHECK(!is_perfect(cycle_graph(5)));
    CHECK(is_perfect(cycle_graph(4)));
    CHECK(is_perfect(complete_graph(5)));
    CHECK(is_perfect(path_graph(6)));
    CHECK(!is_perfect(cycle_graph(7)));
    CHECK(!is_perfect(complement(cycle_graph(7))));  // odd antihole
    for (const Graph& g : {path_graph(4), cycle_graph(4), complete_bipartite_graph(2, 3)})
        CHECK(is_perfect(g));  // bipartite graphs are perfect

    // comparability graphs are perfect
    for (const Poset& p : all_posets(3)) CHECK(is_perfect(comparability_graph(p)));

    // SPGT route agrees with the definitional route on all graphs <= 5 vertices
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : graphs_up_to_iso(n, nullptr)) {
            CHECK(is_perfect(g) == is_perfect_by_definition(g));
        }
    }
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK_THROWS_AS(is_perfect(complete_graph(13)), resource_error);
}

TEST_CASE("reflexivity via perfect pieces") {
    // same perfect graph everywhere: reflexive unconditional closure
    {
        std::vector<Graph> gs(4, path_graph(2));
        ReflexivityCheck rc = check_reflexive_via_perfect(gs);
        CHECK(rc.all_perfect);
        CHECK(rc.reflexive);
    }
    // C5 everywhere: both verdicts false, biconditional consistent
    {
        std::vector<Graph> gs(32, cycle_graph(5));
        ReflexivityCheck rc = check_reflexive_via_perfect(gs);
        CHECK(!rc.all_perfect);
        CHECK(!rc.reflexive);
    }
    // twinned chain pieces are stable set polytopes of comparability graphs
    {
        Poset p = Poset::chain(2);
        Poset q = Poset::antichain(2);
        std::vector<Graph> gs;
        for (size_t mask = 0; mask < 4; ++mask) {
            std::vector<int> i_set;
            for (int v = 1; v <= 2; ++v)
                if (!(mask & (size_t(1) << (v - 1)))) i_set.push_back(v);
            gs.push_back(comparability_graph(ordinal_sum_on_labels(p, q, i_set)));
        }
        ReflexivityCheck rc = check_reflexive_via_perfect(gs);
        CHECK(rc.all_perfect);
        CHECK(rc.reflexive);
        CHECK(rc.assembled == twinned_chain_polytope(p, q));
    }
}

TEST_CASE("perfect graph spot checks at the definitional cap") {
    // 7-cycle and its complement are the smallest non-perfect pair past C5
    CHECK(!is_perfect_by_definition(cycle_graph(7), 8));
    CHECK(!is_perfect_by_definition(complement(cycle_graph(7)), 8));
    CHECK(is_perfect(cycle_graph(7), 8) == is_perfect_by_definition(cycle_graph(7), 8));
    // an 8-vertex bipartite graph and an 8-vertex chordal-ish graph
    Graph cube(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8},
                   {1, 5}, {2, 6}, {3, 7}, {4, 8}});
    CHECK(is_perfect(cube, 8));
    CHECK(is_perfect_by_definition(cube, 8));
    Graph k8 = complete_graph(8);
    CHECK(is_perfect(k8, 8) == is_perfect_by_definition(k8, 8));
}
