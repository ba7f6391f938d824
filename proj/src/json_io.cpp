#include "hstar/json_io.hpp"

#include "hstar/errors.hpp"
#include "hstar/poset_polytopes.hpp"

namespace hstar {

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw invalid_argument_error("json: expected integer or decimal string");
}

json to_json(const IntPolynomial& f) {
    json arr = json::array();
    for (const Int& c : f.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

IntPolynomial int_polynomial_from_json(const json& j) {
    if (!j.is_array()) throw invalid_argument_error("json: polynomial must be an array");
    std::vector<Int> coeffs;
    for (const json& c : j) coeffs.push_back(int_from_json(c));
    return IntPolynomial(std::move(coeffs));
}

json to_json(const VPolytope& p) {
    json verts = json::array();
    for (const Vec& v : p.vertices()) {
        json row = json::array();
        for (const Int& x : v) row.push_back(int_to_json(x));
        verts.push_back(std::move(row));
    }
    return json{{"dim", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

VPolytope vpolytope_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<Vec> pts;
    for (const json& row : j.at("vertices")) {
        Vec v;
        for (const json& x : row) v.push_back(int_from_json(x));
        pts.push_back(std::move(v));
    }
    return hull(dim, pts);
}

json to_json(const EhrhartData& e) {
    json counts = json::array();
    for (const Int& c : e.counts) counts.push_back(int_to_json(c));
    // common-denominator form of the Ehrhart polynomial
    Int den = 1;
    for (const Rat& q : e.ehrhart.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    json num = json::array();
    for (int i = 0; i <= e.ehrhart.degree(); ++i) {
        Rat scaled = e.ehrhart.coeff(i) * Rat(den);
        num.push_back(int_to_json(scaled.get_num()));
    }
    return json{{"dim", e.dim},
                {"counts", std::move(counts)},
                {"hstar", to_json(e.hstar)},
                {"ehrhart_num", std::move(num)},
                {"ehrhart_den", int_to_json(den)}};
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
    return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw invalid_argument_error("json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const auto& e : h.hyperedges) edges.push_back(json(e));
    return json{{"vertices", h.num_vertices}, {"hyperedges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const json& j) {
    Hypergraph h;
    h.num_vertices = j.at("vertices").get<int>();
    for (const json& e : j.at("hyperedges")) h.hyperedges.push_back(e.get<std::vector<int>>());
    return h;
}

json to_json(const Poset& p) {
    json covers = json::array();
    for (auto [i, j] : p.covers()) covers.push_back(json::array({i, j}));
    return json{{"n", p.n()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const json& e : j.at("covers")) {
        if (!e.is_array() || e.size() != 2) throw invalid_argument_error("json: cover must be a pair");
        covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Poset::from_covers(n, covers);
}

json to_json(const OrthantAssignment& a) {
    json pieces = json::array();
    for (size_t mask = 0; mask < a.pieces.size(); ++mask) {
        pieces.push_back(json{{"signs", OrthantAssignment::signs_of_mask(a.d, mask)},
                              {"polytope", to_json(a.pieces[mask])}});
    }
    return json{{"d", a.d}, {"pieces", std::move(pieces)}};
}

OrthantAssignment orthant_assignment_from_json(const json& j) {
    OrthantAssignment a;
    a.d = j.at("d").get<int>();
    if (a.d < 1 || a.d > 20) throw invalid_argument_error("json: orthant assignment dimension");
    const size_t total = size_t(1) << a.d;

    auto piece_of = [](const json& spec) -> VPolytope {
        if (spec.contains("polytope")) return vpolytope_from_json(spec.at("polytope"));
        if (spec.contains("graph")) return stable_set_polytope(graph_from_json(spec.at("graph")));
        throw invalid_argument_error("json: piece needs a \"polytope\" or a \"graph\"");
    };

    std::vector<VPolytope> pieces(total);
    std::vector<bool> filled(total, false);
    for (const json& spec : j.at("pieces")) {
        auto signs = spec.at("signs").get<std::vector<int>>();
        if (static_cast<int>(signs.size()) != a.d)
            throw invalid_argument_error("json: sign vector length mismatch");
        size_t mask = OrthantAssignment::mask_of_signs(signs);
        pieces[mask] = piece_of(spec);
        filled[mask] = true;
    }
    if (j.contains("default")) {
        VPolytope def = piece_of(j.at("default"));
        for (size_t mask = 0; mask < total; ++mask) {
            if (!filled[mask]) {
                pieces[mask] = def;
                filled[mask] = true;
            }
        }
    }
    for (size_t mask = 0; mask < total; ++mask) {
        if (!filled[mask])
            throw invalid_argument_error("json: missing orthant piece and no default given");
    }
    a.pieces = std::move(pieces);
    return a;
}

}  // namespace hstar
