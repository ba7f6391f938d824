#include <doctest.h>

#include <algorithm>

#include "hstar/errors.hpp"
#include "hstar/poset.hpp"

using namespace hstar;

TEST_CASE("poset construction and closure") {
    Poset p = Poset::from_covers(3, {{1, 2}, {2, 3}});
    CHECK(p.less(1, 3));  // transitive closure
    CHECK(!p.less(3, 1));
    CHECK(p.naturally_labeled());
    CHECK_THROWS_AS(Poset::from_covers(2, {{1, 2}, {2, 1}}), invalid_argument_error);

    Poset down = Poset::from_covers(2, {{2, 1}});
    CHECK(!down.naturally_labeled());
    CHECK(down.covers() == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("antichains") {
    auto free3 = antichains(Poset::antichain(3));
    CHECK(free3.size() == 8);
    auto chain2 = antichains(Poset::chain(2));
    CHECK(chain2 == std::vector<std::vector<int>>{{}, {1}, {2}});
    // 1 < 3, 2 < 3
    Poset v = Poset::from_covers(3, {{1, 3}, {2, 3}});
    auto a = antichains(v);
    CHECK(a == std::vector<std::vector<int>>{{}, {1}, {1, 2}, {2}, {3}});
}

TEST_CASE("order filters") {
    Poset chain = Poset::chain(2);
    auto f = order_filters(chain);
    std::sort(f.begin(), f.end());
    CHECK(f == std::vector<std::vector<int>>{{}, {1, 2}, {2}});
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(Poset::chain(4)).size() == 1);
    CHECK(linear_extensions(Poset::antichain(2)).size() == 2);
    CHECK(linear_extensions(Poset::antichain(3)).size() == 6);
    Poset v = Poset::from_covers(3, {{1, 2}, {1, 3}});
    auto exts = linear_extensions(v);
    CHECK(exts.size() == 2);
    for (const auto& e : exts) CHECK(e[0] == 1);
}

TEST_CASE("left peaks") {
    CHECK(left_peaks({1, 2}) == 0);
    CHECK(left_peaks({2, 1}) == 1);  // 0 < 2 > 1
    CHECK(left_peaks({1}) == 0);
    CHECK(left_peaks({2, 1, 4, 3}) == 2);
    CHECK(left_peaks({1, 2, 3}) == 0);
}

TEST_CASE("left peak polynomials") {
    CHECK(left_peak_polynomial(Poset::antichain(1)) == IntPolynomial{1});
    CHECK(left_peak_polynomial(Poset::antichain(2)) == IntPolynomial{1, 1});
    CHECK(left_peak_polynomial(Poset::chain(2)) == IntPolynomial{1});
    CHECK_THROWS_AS(left_peak_polynomial(Poset::from_covers(2, {{2, 1}})), invalid_argument_error);
}

TEST_CASE("ordinal sums") {
    CHECK(ordinal_sum(Poset::antichain(1), Poset::antichain(1)) == Poset::chain(2));
    Poset s = ordinal_sum(Poset::antichain(2), Poset::antichain(1));
    CHECK(s.less(1, 3));
    CHECK(s.less(2, 3));
    CHECK(!s.comparable(1, 2));
}

TEST_CASE("induced subposets") {
    Poset chain = Poset::chain(3);
    CHECK(induced_subposet(chain, {2}) == Poset::antichain(1));
    CHECK(induced_subposet(chain, {1, 3}) == Poset::chain(2));
    Poset v = Poset::from_covers(3, {{1, 3}, {2, 3}});
    CHECK(induced_subposet(v, {1, 2}) == Poset::antichain(2));
}

TEST_CASE("ordinal sum on labels") {
    // P = chain 1<2<3, Q = antichain; I = {2}: 2 below 1 and 3, 1,3 ordered by Q (not at all)
    Poset p = Poset::chain(3);
    Poset q = Poset::antichain(3);
    Poset r = ordinal_sum_on_labels(p, q, {2});
    CHECK(r.less(2, 1));
    CHECK(r.less(2, 3));
    CHECK(!r.comparable(1, 3));
}

TEST_CASE("natural relabeling") {
    Poset down = Poset::from_covers(3, {{3, 2}, {2, 1}});
    auto [nat, perm] = relabel_natural(down);
    CHECK(nat == Poset::chain(3));
    CHECK(perm == std::vector<int>{3, 2, 1});

    // relabeling a natural poset along any permutation then re-normalizing
    // returns an isomorphic natural poset
    Poset v = Poset::from_covers(3, {{1, 2}, {1, 3}});
    Poset moved = relabel(v, {3, 1, 2});
    auto [nat2, perm2] = relabel_natural(moved);
    CHECK(linear_extensions(nat2).size() == linear_extensions(v).size());
    CHECK(nat2.naturally_labeled());
}

TEST_CASE("comparability graph") {
    Graph g = comparability_graph(Poset::chain(3));
    CHECK(g.edge_count() == 3);
    Graph h = comparability_graph(Poset::from_covers(3, {{1, 3}, {2, 3}}));
    CHECK(h.edge_count() == 2);
}

TEST_CASE("common linear extensions") {
    CHECK(have_common_linear_extension(Poset::chain(2), Poset::chain(2)));
    CHECK(!have_common_linear_extension(Poset::chain(2), Poset::from_covers(2, {{2, 1}})));
    CHECK(have_common_linear_extension(Poset::antichain(3), Poset::chain(3)));
}

TEST_CASE("poset enumeration counts") {
    CHECK(all_posets(1).size() == 1);
    CHECK(all_posets(2).size() == 3);
    CHECK(all_posets(3).size() == 19);
    CHECK(all_posets(4).size() == 219);
    CHECK(all_natural_posets(3).size() == 7);
    CHECK(all_natural_posets(4).size() == 40);
}
