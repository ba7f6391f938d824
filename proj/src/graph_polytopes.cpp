#include "hstar/graph_polytopes.hpp"

#include <algorithm>

#include "hstar/errors.hpp"
#include "hstar/hypergraph.hpp"
#include "hstar/properties.hpp"

namespace hstar {

VPolytope symmetric_edge_A(const Graph& g) {
    if (g.edge_count() == 0) throw invalid_argument_error("symmetric_edge_A: graph has no edges");
    std::vector<Vec> pts;
    for (auto [i, j] : g.edges()) {
        Vec v(g.n(), Int(0));
        v[i - 1] = 1;
        v[j - 1] = -1;
        pts.push_back(v);
        pts.push_back(vec_neg(v));
    }
    return hull(g.n(), pts);
}

VPolytope b_polytope(const Graph& g) {
    std::vector<Vec> pts;
    pts.push_back(Vec(g.n(), Int(0)));
    for (int i = 1; i <= g.n(); ++i) {
        Vec v(g.n(), Int(0));
        v[i - 1] = 1;
        pts.push_back(std::move(v));
    }
    for (auto [i, j] : g.edges()) {
        Vec v(g.n(), Int(0));
        v[i - 1] = 1;
        v[j - 1] = 1;
        pts.push_back(std::move(v));
    }
    return hull(g.n(), pts);
}

VPolytope symmetric_edge_B(const Graph& g, const CountingConfig& cfg) {
    return unconditional_closure(b_polytope(g), cfg);
}

IntPolynomial interior_polynomial_tilde(const Graph& g, const std::vector<int>& v1,
                                        const std::vector<int>& v2) {
    Graph tilde = tilde_extend(g, v1, v2);
    return interior_polynomial(tilde);
}

IntPolynomial hstar_B(const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2) {
    IntPolynomial interior = interior_polynomial_tilde(g, v1, v2);
    return gamma_expand(interior, g.n());
}

IntPolynomial hstar_B(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) throw invalid_argument_error("hstar_B: graph is not bipartite");
    return hstar_B(g, parts->first, parts->second);
}

RatPolynomial cut_average_polynomial(const Graph& g) {
    const int d = g.n();
    RatPolynomial sum;
    for (const Cut& cut : cuts(g)) {
        std::vector<int> v2;
        std::vector<bool> in_s(d + 1, false);
        for (int v : cut.s) in_s[v] = true;
        for (int v = 1; v <= d; ++v)
            if (!in_s[v]) v2.push_back(v);
        IntPolynomial interior = interior_polynomial_tilde(cut.edge_graph, cut.s, v2);
        sum = sum + RatPolynomial(interior);
    }
    return sum * Rat(Int(1), pow2(d - 1));
}

IntPolynomial hstar_A_suspension(const Graph& g) {
    return gamma_expand(cut_average_polynomial(g), g.n());
}

IntPolynomial closed_form_cycle(int d) {
    if (d < 3) throw invalid_argument_error("closed_form_cycle: need d >= 3");
    IntPolynomial h;
    for (int i = 0; 2 * i <= d - 1; ++i) {
        h = h + IntPolynomial::binomial_power(d - 1 - 2 * i).shifted_up(i) * binomial(2 * i, i);
    }
    return h;
}

IntPolynomial closed_form_delpezzo(int m) {
    if (m < 1) throw invalid_argument_error("closed_form_delpezzo: need m >= 1");
    IntPolynomial h;
    for (int i = 0; i <= m; ++i) {
        h = h + IntPolynomial::binomial_power(2 * m - 2 * i).shifted_up(i) * binomial(2 * i, i);
    }
    return h;
}

IntPolynomial closed_form_pseudo_delpezzo(int m) {
    if (m < 1) throw invalid_argument_error("closed_form_pseudo_delpezzo: need m >= 1");
    IntPolynomial h = IntPolynomial::binomial_power(2 * m);
    for (int i = 1; i <= m; ++i) {
        h = h + IntPolynomial::binomial_power(2 * m - 2 * i).shifted_up(i) * binomial(2 * i - 1, i - 1);
    }
    return h;
}

IntPolynomial closed_form_complete(int d) {
    if (d < 2) throw invalid_argument_error("closed_form_complete: need d >= 2");
    IntPolynomial h;
    for (int i = 0; 2 * i <= d - 1; ++i) {
        Int c = binomial(d - 1, 2 * i) * binomial(2 * i, i);
        h = h + IntPolynomial::binomial_power(d - 1 - 2 * i).shifted_up(i) * c;
    }
    return h;
}

IntPolynomial closed_form_complete_bipartite(int m, int n) {
    if (m < 0 || n < 0) throw invalid_argument_error("closed_form_complete_bipartite: need m, n >= 0");
    IntPolynomial h;
    for (int a = 0; a <= std::min(m, n); ++a) {
        Int c = binomial(2 * a, a) * binomial(m, a) * binomial(n, a);
        h = h + IntPolynomial::binomial_power(m + n - 2 * a + 1).shifted_up(a) * c;
    }
    return h;
}

VPolytope del_pezzo_polytope(int m) {
    if (m < 1) throw invalid_argument_error("del_pezzo_polytope: need m >= 1");
    const int d = 2 * m;
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i) {
        Vec v(d, Int(0));
        v[i] = 1;
        pts.push_back(v);
        pts.push_back(vec_neg(v));
    }
    Vec ones(d, Int(1));
    pts.push_back(ones);
    pts.push_back(vec_neg(ones));
    return hull(d, pts);
}

VPolytope pseudo_del_pezzo_polytope(int m) {
    if (m < 1) throw invalid_argument_error("pseudo_del_pezzo_polytope: need m >= 1");
    const int d = 2 * m;
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i) {
        Vec v(d, Int(0));
        v[i] = 1;
        pts.push_back(v);
        pts.push_back(vec_neg(v));
    }
    pts.push_back(Vec(d, Int(-1)));
    return hull(d, pts);
}

VPolytope cross_polytope(int d) {
    if (d < 1) throw invalid_argument_error("cross_polytope: need d >= 1");
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i) {
        Vec v(d, Int(0));
        v[i] = 1;
        pts.push_back(v);
        pts.push_back(vec_neg(v));
    }
    return hull(d, pts);
}

IntPolynomial hstar_A(const Graph& g, const CountingConfig& cfg) {
    if (!is_connected(g)) throw invalid_argument_error("hstar_A: graph must be connected");
    if (g.edge_count() == 0) return IntPolynomial::one();  // single vertex

    std::vector<Graph> blocks = two_connected_components(g);
    if (blocks.size() > 1) {
        IntPolynomial h = IntPolynomial::one();
        for (const Graph& block : blocks) h = h * hstar_A(block, cfg);
        return h;
    }

    const Graph& b = blocks.empty() ? g : blocks[0];
    if (b.edge_count() == 1) return IntPolynomial{1, 1};
    if (is_cycle_graph(b)) return closed_form_cycle(b.n());
    if (is_complete_graph(b)) return closed_form_complete(b.n());
    if (auto parts = complete_bipartite_parts(b)) {
        int a = static_cast<int>(parts->first.size());
        int c = static_cast<int>(parts->second.size());
        if (a >= 2 && c >= 2) return closed_form_complete_bipartite(a - 1, c - 1);
    }
    if (is_bipartite(b)) {
        Graph contracted = contract(b, b.edges().front());
        return IntPolynomial{1, 1} * hstar_A(contracted, cfg);
    }
    if (auto v = dominating_vertex(b)) {
        std::vector<int> rest;
        for (int u = 1; u <= b.n(); ++u)
            if (u != *v) rest.push_back(u);
        return hstar_A_suspension(induced_subgraph(b, rest));
    }
    if (b.n() > cfg.max_dim)
        throw resource_error("hstar_A: no closed form applies and the oracle dimension cap is exceeded");
    return ehrhart_data(symmetric_edge_A(b), cfg).hstar;
}

std::pair<VPolytope, IntPolynomial> delete_edge_polytope(const Graph& g, std::pair<int, int> e,
                                                         const CountingConfig& cfg) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!is_connected(g)) throw invalid_argument_error("delete_edge_polytope: graph must be connected");
    if (is_bridge(g, e)) throw invalid_argument_error("delete_edge_polytope: edge is a bridge");

    std::vector<Vec> pts;
    for (auto [i, j] : g.edges()) {
        Vec v(g.n(), Int(0));
        v[i - 1] = 1;
        v[j - 1] = -1;
        if (std::make_pair(i, j) != e) pts.push_back(v);
        pts.push_back(vec_neg(v));
    }
    VPolytope poly = hull(g.n(), pts);

    IntPolynomial hg = hstar_A(g, cfg);
    IntPolynomial hdel = hstar_A(delete_edge(g, e), cfg);
    RatPolynomial half = (RatPolynomial(hg) + RatPolynomial(hdel)) * Rat(1, 2);
    auto hint = half.as_integer();
    if (!hint) throw internal_error("delete_edge_polytope: halved sum is not integral");
    return {std::move(poly), std::move(*hint)};
}

IntPolynomial pseudo_symmetric_hstar(const std::vector<PseudoSymmetricComponent>& components) {
    if (components.empty())
        throw invalid_argument_error("pseudo_symmetric_hstar: empty component list");
    IntPolynomial h = IntPolynomial::one();
    int degree = 0;
    for (const auto& c : components) {
        switch (c.kind) {
            case PseudoSymmetricComponent::Kind::cross:
                h = h * IntPolynomial::binomial_power(c.param);
                degree += c.param;
                break;
            case PseudoSymmetricComponent::Kind::delpezzo:
                h = h * closed_form_delpezzo(c.param);
                degree += 2 * c.param;
                break;
            case PseudoSymmetricComponent::Kind::pseudo_delpezzo:
                h = h * closed_form_pseudo_delpezzo(c.param);
                degree += 2 * c.param;
                break;
        }
    }
    if (!is_gamma_positive(h, degree))
        throw internal_error("pseudo_symmetric_hstar: product failed gamma positivity");
    return h;
}

}  // namespace hstar
