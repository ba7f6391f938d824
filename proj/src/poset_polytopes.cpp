#include "hstar/poset_polytopes.hpp"

#include <algorithm>

#include "hstar/errors.hpp"
#include "hstar/properties.hpp"

namespace hstar {

namespace {

Vec indicator(int n, const std::vector<int>& subset) {
    Vec v(n, Int(0));
    for (int i : subset) v[i - 1] = 1;
    return v;
}

}  // namespace

VPolytope chain_polytope(const Poset& p) {
    std::vector<Vec> pts;
    for (const auto& a : antichains(p)) pts.push_back(indicator(p.n(), a));
    return hull(p.n(), pts);
}

VPolytope order_polytope(const Poset& p) {
    std::vector<Vec> pts;
    for (const auto& f : order_filters(p)) pts.push_back(indicator(p.n(), f));
    return hull(p.n(), pts);
}

VPolytope enriched_chain_polytope(const Poset& p, const CountingConfig& cfg) {
    return unconditional_closure(chain_polytope(p), cfg);
}

VPolytope stable_set_polytope(const Graph& g) {
    // Stable sets = independent vertex sets, enumerated by backtracking.
    std::vector<Vec> pts;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int next) {
        if (next > g.n()) {
            pts.push_back(indicator(g.n(), current));
            return;
        }
        rec(next + 1);
        for (int v : current)
            if (g.has_edge(v, next)) return;
        current.push_back(next);
        rec(next + 1);
        current.pop_back();
    };
    rec(1);
    return hull(g.n(), pts);
}

Int left_enriched_order_count(const Poset& p, int m) {
    if (m < 1) throw invalid_argument_error("left_enriched_order_count: need m >= 1");
    if (!p.naturally_labeled())
        throw invalid_argument_error("left_enriched_order_count: poset must be naturally labeled");
    const int n = p.n();
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (p.less(i, j)) rel.emplace_back(i, j);

    Int count = 0;
    std::vector<int> f(n);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
            count += 1;
            return;
        }
        for (int v = -m; v <= m; ++v) {
            f[idx] = v;
            bool ok = true;
            for (auto [x, y] : rel) {
                if (x - 1 > idx || y - 1 > idx) continue;
                int ax = std::abs(f[x - 1]), ay = std::abs(f[y - 1]);
                if (ax > ay || (ax == ay && f[y - 1] < 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(idx + 1);
        }
    };
    rec(0);
    return count;
}

IntPolynomial hstar_enriched_chain(const Poset& p) {
    Poset natural = relabel_natural(p).first;
    return gamma_expand(left_peak_polynomial(natural), p.n());
}

VPolytope twinned_chain_polytope(const Poset& p, const Poset& q) {
    if (p.n() != q.n()) throw invalid_argument_error("twinned_chain_polytope: ground set mismatch");
    return gamma_join(chain_polytope(p), chain_polytope(q));
}

RatPolynomial f_twinned(const Poset& p, const Poset& q) {
    if (p.n() != q.n()) throw invalid_argument_error("f_twinned: ground set mismatch");
    const int d = p.n();
    RatPolynomial sum;
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
        std::vector<int> i_set;  // indices with epsilon_i = +1
        for (int v = 1; v <= d; ++v)
            if (mask & (size_t(1) << (v - 1))) i_set.push_back(v);
        Poset r = ordinal_sum_on_labels(p, q, i_set);
        Poset natural = relabel_natural(r).first;
        sum = sum + RatPolynomial(left_peak_polynomial(natural));
    }
    return sum * Rat(Int(1), pow2(d));
}

IntPolynomial hstar_twinned(const Poset& p, const Poset& q) {
    return gamma_expand(f_twinned(p, q), p.n());
}

Int enriched_PQ_count(const Poset& p, const Poset& q, int m) {
    if (p.n() != q.n()) throw invalid_argument_error("enriched_PQ_count: ground set mismatch");
    if (m < 1) throw invalid_argument_error("enriched_PQ_count: need m >= 1");
    if (!p.naturally_labeled() || !q.naturally_labeled())
        throw invalid_argument_error("enriched_PQ_count: posets must be naturally labeled");
    const int n = p.n();
    Int count = 0;
    std::vector<int> f(n);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
            int lo = 0, hi = 0;
            for (int v : f) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (hi - lo <= m) count += 1;
            return;
        }
        for (int v = -m; v <= m; ++v) {
            f[idx] = v;
            bool ok = true;
            for (int u = 0; u < idx && ok; ++u) {
                for (int pass = 0; pass < 2 && ok; ++pass) {
                    int x = pass == 0 ? u : idx;
                    int y = pass == 0 ? idx : u;
                    // weak along P on the nonnegative part; strict along Q on
                    // the strictly negative part (zero values live on the P
                    // side, matching the transfer bijection with the lattice
                    // points of the twinned chain polytope)
                    if (p.less(x + 1, y + 1) && f[x] >= 0 && f[y] >= 0 && f[x] > f[y]) ok = false;
                    if (q.less(x + 1, y + 1) && f[x] < 0 && f[y] < 0 && f[x] <= f[y]) ok = false;
                }
            }
            if (ok) rec(idx + 1);
        }
    };
    rec(0);
    return count;
}

IdentityReport related_hstar_identities(const Poset& p, const Poset& q, const CountingConfig& cfg) {
    if (p.n() != q.n()) throw invalid_argument_error("related_hstar_identities: ground set mismatch");
    IdentityReport rep;
    VPolytope cp = chain_polytope(p);
    VPolytope cq = chain_polytope(q);
    VPolytope op = order_polytope(p);

    rep.h_twinned = ehrhart_data(gamma_join(cp, cq), cfg).hstar;
    rep.h_gamma_oc = ehrhart_data(gamma_join(op, cq), cfg).hstar;
    rep.h_omega_oc = ehrhart_data(omega_join(op, cq), cfg).hstar;
    rep.h_cayley_oc = ehrhart_data(cayley_sum(op, cq), cfg).hstar;

    rep.gamma_ok = rep.h_gamma_oc == rep.h_twinned;
    rep.omega_ok = rep.h_omega_oc == rep.h_twinned * IntPolynomial{1, 1};
    rep.cayley_ok = rep.h_cayley_oc == rep.h_twinned;

    rep.common_extension = have_common_linear_extension(p, q);
    if (rep.common_extension) {
        VPolytope oq = order_polytope(q);
        rep.h_gamma_oo = ehrhart_data(gamma_join(op, oq), cfg).hstar;
        rep.h_omega_oo = ehrhart_data(omega_join(op, oq), cfg).hstar;
        rep.gamma_oo_ok = *rep.h_gamma_oo == rep.h_twinned;
        rep.omega_oo_ok = *rep.h_omega_oo == rep.h_twinned * IntPolynomial{1, 1};
    }
    return rep;
}

}  // namespace hstar
