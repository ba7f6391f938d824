#include "hstar/orthant.hpp"

#include <algorithm>

#include "hstar/errors.hpp"
#include "hstar/poset_polytopes.hpp"
#include "hstar/properties.hpp"
#include "hstar/rat_polynomial.hpp"

namespace hstar {

size_t OrthantAssignment::mask_of_signs(const std::vector<int>& signs) {
    size_t mask = 0;
    for (size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == -1)
            mask |= size_t(1) << i;
        else if (signs[i] != 1)
            throw invalid_argument_error("OrthantAssignment: signs must be +-1");
    }
    return mask;
}

std::vector<int> OrthantAssignment::signs_of_mask(int d, size_t mask) {
    std::vector<int> signs(d, 1);
    for (int i = 0; i < d; ++i)
        if (mask & (size_t(1) << i)) signs[i] = -1;
    return signs;
}

OrthantAssignment OrthantAssignment::uniform(int d, const VPolytope& piece) {
    OrthantAssignment a;
    a.d = d;
    a.pieces.assign(size_t(1) << d, piece);
    return a;
}

namespace {

void validate_assignment(const OrthantAssignment& assignment, const CountingConfig& cfg) {
    if (assignment.d < 1) throw invalid_argument_error("OrthantAssignment: need d >= 1");
    if (assignment.pieces.size() != (size_t(1) << assignment.d))
        throw invalid_argument_error("OrthantAssignment: need a piece for every orthant");
    for (const VPolytope& piece : assignment.pieces) {
        if (piece.ambient_dim() != assignment.d)
            throw invalid_argument_error("OrthantAssignment: piece dimension mismatch");
        if (!is_anti_blocking(piece, cfg))
            throw invalid_argument_error("OrthantAssignment: piece is not anti-blocking");
    }
}

// Sign rows for the closed orthant of `signs`: -signs_i x_i <= 0.
std::vector<Vec> orthant_rows(const std::vector<int>& signs) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < signs.size(); ++i) {
        Vec a(signs.size(), Int(0));
        a[i] = -signs[i];
        rows.push_back(std::move(a));
    }
    return rows;
}

}  // namespace

bool consistent(const OrthantAssignment& assignment, const CountingConfig& cfg) {
    validate_assignment(assignment, cfg);
    const int d = assignment.d;
    std::vector<VPolytope> closures;
    closures.reserve(assignment.pieces.size());
    for (const VPolytope& piece : assignment.pieces)
        closures.push_back(unconditional_closure(piece, cfg));

    for (size_t mask = 0; mask < closures.size(); ++mask) {
        for (int k = 0; k < d; ++k) {
            size_t other = mask ^ (size_t(1) << k);
            if (other < mask) continue;
            // restrict both closures to x_k = 0 inside the common orthant
            std::vector<int> signs = OrthantAssignment::signs_of_mask(d, mask);
            std::vector<Vec> rows = orthant_rows(signs);
            Vec up(d, Int(0)), down(d, Int(0));
            up[k] = 1;
            down[k] = -1;
            rows.push_back(up);
            rows.push_back(down);
            for (int m = 1; m <= d; ++m) {
                auto a = enumerate_lattice_points(closures[mask], Int(m), rows, cfg);
                auto b = enumerate_lattice_points(closures[other], Int(m), rows, cfg);
                if (a != b) return false;
            }
        }
    }
    return true;
}

VPolytope assemble(const OrthantAssignment& assignment, const CountingConfig& cfg) {
    validate_assignment(assignment, cfg);
    const int d = assignment.d;

    std::vector<Vec> points;
    for (size_t mask = 0; mask < assignment.pieces.size(); ++mask) {
        std::vector<int> signs = OrthantAssignment::signs_of_mask(d, mask);
        for (const Vec& v : assignment.pieces[mask].vertices()) {
            Vec w(d);
            for (int i = 0; i < d; ++i) w[i] = signs[i] * v[i];
            points.push_back(std::move(w));
        }
    }
    VPolytope result = hull(d, points);

    // Verification: the hull restricted to each orthant must reproduce the
    // piece's closure there, at the Ehrhart level for dilations 1..d.
    for (size_t mask = 0; mask < assignment.pieces.size(); ++mask) {
        std::vector<int> signs = OrthantAssignment::signs_of_mask(d, mask);
        std::vector<Vec> rows = orthant_rows(signs);
        VPolytope closure = unconditional_closure(assignment.pieces[mask], cfg);
        for (int m = 1; m <= d; ++m) {
            auto got = enumerate_lattice_points(result, Int(m), rows, cfg);
            auto want = enumerate_lattice_points(closure, Int(m), rows, cfg);
            if (got != want)
                throw verification_error("assemble: assignment is not locally anti-blocking");
        }
    }
    return result;
}

IntPolynomial hstar_unconditional_via_projections(const VPolytope& p, const CountingConfig& cfg) {
    if (!is_anti_blocking(p, cfg))
        throw invalid_argument_error("hstar_unconditional_via_projections: input not anti-blocking");
    const int d = p.ambient_dim();
    IntPolynomial x_minus_1{-1, 1};
    IntPolynomial total;
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
        std::vector<int> j;
        for (int i = 1; i <= d; ++i)
            if (mask & (size_t(1) << (i - 1))) j.push_back(i);
        IntPolynomial h = ehrhart_data(project(p, j), cfg).hstar;
        IntPolynomial term = h * pow2(j.size());
        total = total + term * poly_pow(x_minus_1, d - static_cast<int>(j.size()));
    }
    return total;
}

IntPolynomial hstar_locally_antiblocking(const OrthantAssignment& assignment, PieceMethod method,
                                         EngineMode mode, const CountingConfig& cfg) {
    validate_assignment(assignment, cfg);
    const int d = assignment.d;
    RatPolynomial sum;
    for (const VPolytope& piece : assignment.pieces) {
        IntPolynomial h = method == PieceMethod::projections
                              ? hstar_unconditional_via_projections(piece, cfg)
                              : ehrhart_data(unconditional_closure(piece, cfg), cfg).hstar;
        sum = sum + RatPolynomial(h);
    }
    RatPolynomial average = sum * Rat(Int(1), pow2(d));
    auto result = average.as_integer();
    if (!result) throw internal_error("hstar_locally_antiblocking: average is not integral");

    if (mode == EngineMode::checked) {
        IntPolynomial oracle = ehrhart_data(assemble(assignment, cfg), cfg).hstar;
        if (oracle != *result)
            throw verification_error("hstar_locally_antiblocking: formula disagrees with oracle");
    }
    return *result;
}

namespace {

// Any induced cycle of odd length >= 5? Subsets are cheap at n <= 12.
bool has_odd_hole(const Graph& g) {
    const int n = g.n();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size < 5 || size % 2 == 0) continue;
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (size_t(1) << (v - 1))) verts.push_back(v);
        Graph h = induced_subgraph(g, verts);
        if (is_cycle_graph(h)) return true;
    }
    return false;
}

bool can_color(const Graph& g, int k) {
    const int n = g.n();
    std::vector<int> color(n + 1, 0);
    auto adj = g.adjacency_lists();
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v > n) return true;
        int used_new = 0;
        for (int u = 1; u < v; ++u) used_new = std::max(used_new, color[u]);
        for (int c = 1; c <= std::min(k, used_new + 1); ++c) {
            bool ok = true;
            for (int u : adj[v])
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (rec(v + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    return rec(1);
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int next) {
        best = std::max(best, static_cast<int>(current.size()));
        for (int v = next; v <= g.n(); ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(1);
    return best;
}

int chromatic_number(const Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = std::max(1, clique_number(g));; ++k) {
        if (can_color(g, k)) return k;
    }
}

bool is_perfect(const Graph& g, int max_n) {
    if (g.n() > max_n) throw resource_error("is_perfect: vertex count above cap");
    return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

bool is_perfect_by_definition(const Graph& g, int max_n) {
    if (g.n() > max_n) throw resource_error("is_perfect_by_definition: vertex count above cap");
    const int n = g.n();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (size_t(1) << (v - 1))) verts.push_back(v);
        Graph h = induced_subgraph(g, verts);
        if (chromatic_number(h) != clique_number(h)) return false;
    }
    return true;
}

ReflexivityCheck check_reflexive_via_perfect(const std::vector<Graph>& graphs_by_mask,
                                             const CountingConfig& cfg) {
    if (graphs_by_mask.empty()) throw invalid_argument_error("check_reflexive_via_perfect: empty");
    const int d = graphs_by_mask.front().n();
    OrthantAssignment assignment;
    assignment.d = d;
    for (const Graph& g : graphs_by_mask) {
        if (g.n() != d) throw invalid_argument_error("check_reflexive_via_perfect: size mismatch");
        assignment.pieces.push_back(stable_set_polytope(g));
    }

    ReflexivityCheck out;
    out.all_perfect = true;
    for (const Graph& g : graphs_by_mask)
        if (!is_perfect(g)) out.all_perfect = false;
    out.assembled = assemble(assignment, cfg);
    out.reflexive = is_reflexive(out.assembled, cfg);
    if (out.all_perfect != out.reflexive)
        throw verification_error("check_reflexive_via_perfect: biconditional failed");
    return out;
}

}  // namespace hstar
