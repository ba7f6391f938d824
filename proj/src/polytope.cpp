#include "hstar/polytope.hpp"

#include <algorithm>
#include <set>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

struct AffineFrame {
    int ambient = 0;
    int n = 0;  // intrinsic dimension
    Vec v0;
    Mat kernel_cols;  // n columns of length ambient
    Mat vtop_rows;    // n rows of length ambient
    std::vector<HEq> equalities;
};

void canonicalize_sign(Vec& v, Int& b) {
    for (const Int& x : v) {
        if (sgn(x) > 0) return;
        if (sgn(x) < 0) {
            for (Int& y : v) y = -y;
            b = -b;
            return;
        }
    }
}

AffineFrame affine_frame(int d, const std::vector<Vec>& pts) {
    AffineFrame fr;
    fr.ambient = d;
    const Vec& base = pts[0];
    Mat gens;
    gens.reserve(pts.size() - 1);
    for (size_t i = 1; i < pts.size(); ++i) gens.push_back(vec_sub(pts[i], base));
    Mat normals = nullspace_int(gens, d);
    fr.n = d - static_cast<int>(normals.size());

    bool origin_in_hull = true;
    for (const Vec& c : normals) {
        if (sgn(dot(c, base)) != 0) {
            origin_in_hull = false;
            break;
        }
    }
    fr.v0 = origin_in_hull ? Vec(d, Int(0)) : base;
    for (Vec& c : normals) {
        Int e = dot(c, base);
        canonicalize_sign(c, e);
        fr.equalities.push_back(HEq{c, e});
    }

    if (normals.empty()) {
        fr.kernel_cols.assign(d, Vec(d, Int(0)));
        fr.vtop_rows.assign(d, Vec(d, Int(0)));
        for (int i = 0; i < d; ++i) {
            fr.kernel_cols[i][i] = 1;
            fr.vtop_rows[i][i] = 1;
        }
    } else {
        Mat cmat;
        for (const HEq& eq : fr.equalities) cmat.push_back(eq.c);
        KernelBasis kb = integer_kernel(cmat, d);
        if (static_cast<int>(kb.kernel_cols.size()) != fr.n)
            throw internal_error("affine_frame: kernel dimension mismatch");
        fr.kernel_cols = std::move(kb.kernel_cols);
        fr.vtop_rows = std::move(kb.vtop_rows);
    }
    return fr;
}

Vec tcoords(const AffineFrame& fr, const Vec& x) {
    Vec diff = vec_sub(x, fr.v0);
    Vec t(fr.n);
    for (int j = 0; j < fr.n; ++j) t[j] = dot(fr.vtop_rows[j], diff);
    return t;
}

Vec ambient_of(const AffineFrame& fr, const Vec& t, const Int& m) {
    Vec x(fr.ambient);
    for (int i = 0; i < fr.ambient; ++i) {
        x[i] = m * fr.v0[i];
        for (int j = 0; j < fr.n; ++j) {
            if (sgn(t[j]) != 0) x[i] += t[j] * fr.kernel_cols[j][i];
        }
    }
    return x;
}

void check_in_lattice(const AffineFrame& fr, const Vec& x, const Vec& t) {
    Vec diff = vec_sub(x, fr.v0);
    for (int i = 0; i < fr.ambient; ++i) {
        Int acc = 0;
        for (int j = 0; j < fr.n; ++j) acc += t[j] * fr.kernel_cols[j][i];
        if (acc != diff[i]) throw internal_error("affine_frame: point outside hull lattice");
    }
}

// ---------------------------------------------------------------------------
// Double description: extreme rays of { y in R^k : row . y <= 0 }.
// The constraint matrix must have full column rank k (pointed dual cone).
// ---------------------------------------------------------------------------

struct DDRay {
    Vec r;
    std::vector<uint64_t> tight;  // bit per constraint, only processed ones set
};

bool bits_subset(const std::vector<uint64_t>& sub, const std::vector<uint64_t>& sup) {
    for (size_t i = 0; i < sub.size(); ++i) {
        if (sub[i] & ~sup[i]) return false;
    }
    return true;
}

int bits_popcount(const std::vector<uint64_t>& b) {
    int c = 0;
    for (uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

Vec ray_to_int(const RatVec& q) {
    Int lcm = 1;
    for (const Rat& x : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    Vec v(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rat s = q[i] * Rat(lcm);
        v[i] = s.get_num();
    }
    make_primitive(v);
    return v;
}

std::vector<Vec> dual_cone_rays(const std::vector<Vec>& rows, int k) {
    const int m = static_cast<int>(rows.size());
    const size_t words = (static_cast<size_t>(m) + 63) / 64;

    // Greedy linearly independent subset for the simplicial start cone.
    std::vector<int> basis_idx;
    {
        RatMat ech;
        for (int i = 0; i < m && static_cast<int>(basis_idx.size()) < k; ++i) {
            RatVec v(k);
            for (int j = 0; j < k; ++j) v[j] = Rat(rows[i][j]);
            for (const RatVec& e : ech) {
                int lead = -1;
                for (int j = 0; j < k; ++j)
                    if (sgn(e[j]) != 0) {
                        lead = j;
                        break;
                    }
                if (lead >= 0 && sgn(v[lead]) != 0) {
                    Rat f = v[lead] / e[lead];
                    for (int j = 0; j < k; ++j) v[j] -= f * e[j];
                }
            }
            bool nonzero = false;
            for (int j = 0; j < k; ++j)
                if (sgn(v[j]) != 0) {
                    nonzero = true;
                    break;
                }
            if (nonzero) {
                ech.push_back(std::move(v));
                basis_idx.push_back(i);
            }
        }
    }
    if (static_cast<int>(basis_idx.size()) != k)
        throw internal_error("dual_cone_rays: constraint matrix not full rank");

    Mat b(k);
    for (int j = 0; j < k; ++j) b[j] = rows[basis_idx[j]];
    auto binv = invert_rational(b);
    if (!binv) throw internal_error("dual_cone_rays: singular start basis");

    std::vector<DDRay> rays;
    std::vector<bool> processed(m, false);
    for (int idx : basis_idx) processed[idx] = true;

    for (int j = 0; j < k; ++j) {
        RatVec col(k);
        for (int i = 0; i < k; ++i) col[i] = -(*binv)[i][j];
        DDRay ray;
        ray.r = ray_to_int(col);
        ray.tight.assign(words, 0);
        for (int idx : basis_idx) {
            if (sgn(dot(rows[idx], ray.r)) == 0) ray.tight[idx / 64] |= uint64_t(1) << (idx % 64);
        }
        rays.push_back(std::move(ray));
    }

    for (int ci = 0; ci < m; ++ci) {
        if (processed[ci]) continue;
        processed[ci] = true;
        const Vec& a = rows[ci];
        std::vector<Int> s(rays.size());
        std::vector<int> pos, neg, zero;
        for (size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(a, rays[i].r);
            int sg = sgn(s[i]);
            if (sg > 0)
                pos.push_back(static_cast<int>(i));
            else if (sg < 0)
                neg.push_back(static_cast<int>(i));
            else
                zero.push_back(static_cast<int>(i));
        }
        if (pos.empty()) {
            for (int i : zero) rays[i].tight[ci / 64] |= uint64_t(1) << (ci % 64);
            continue;
        }
        // The adjacency test runs against the complete extreme-ray list of the
        // cone before this constraint is added, so build the new rays first
        // and only then drop the positive side.
        std::vector<DDRay> news;
        for (int p : pos) {
            const DDRay& rp = rays[p];
            const Int& sp = s[p];
            for (int q : neg) {
                const DDRay& rn = rays[q];
                const Int& sn = s[q];
                std::vector<uint64_t> t(words);
                for (size_t w = 0; w < words; ++w) t[w] = rp.tight[w] & rn.tight[w];
                if (bits_popcount(t) < k - 2) continue;
                bool adjacent = true;
                for (size_t o = 0; o < rays.size(); ++o) {
                    if (static_cast<int>(o) == p || static_cast<int>(o) == q) continue;
                    if (bits_subset(t, rays[o].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                DDRay w;
                w.r.resize(k);
                for (int j = 0; j < k; ++j) w.r[j] = sp * rn.r[j] - sn * rp.r[j];
                make_primitive(w.r);
                w.tight = std::move(t);
                w.tight[ci / 64] |= uint64_t(1) << (ci % 64);
                news.push_back(std::move(w));
            }
        }
        std::vector<DDRay> next;
        next.reserve(zero.size() + neg.size() + news.size());
        for (int i : zero) {
            rays[i].tight[ci / 64] |= uint64_t(1) << (ci % 64);
            next.push_back(std::move(rays[i]));
        }
        for (int i : neg) next.push_back(std::move(rays[i]));
        for (DDRay& w : news) next.push_back(std::move(w));
        rays = std::move(next);
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (DDRay& ray : rays) out.push_back(std::move(ray.r));
    return out;
}

// Facets of the full-dimensional polytope conv(tpts) in Z^n, as pairs
// (a, b) with a . t <= b, via the homogenization cone over (t, 1).
std::vector<std::pair<Vec, Int>> dd_facets(const std::vector<Vec>& tpts, int n) {
    std::vector<Vec> rows;
    rows.reserve(tpts.size());
    for (const Vec& t : tpts) {
        Vec r = t;
        r.push_back(Int(1));
        rows.push_back(std::move(r));
    }
    std::vector<Vec> rays = dual_cone_rays(rows, n + 1);
    std::vector<std::pair<Vec, Int>> facets;
    facets.reserve(rays.size());
    for (const Vec& y : rays) {
        Vec a(y.begin(), y.end() - 1);
        if (is_zero_vec(a)) throw internal_error("dd_facets: unbounded direction (input not a polytope?)");
        facets.emplace_back(std::move(a), -y.back());
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

std::vector<Vec> dedup_sorted(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

struct CountCtx {
    AffineFrame fr;
    Mat rows_a;  // reduced rows in t-space
    Vec rows_b;  // rhs at dilation 1; the rhs at dilation m is m * rows_b
    std::vector<Vec> tverts;
    Vec lo, hi;  // bounding box of the t-space polytope at dilation 1
    bool empty = false;
};

CountCtx make_count_ctx(const VPolytope& p, const std::vector<Vec>& extra,
                        const CountingConfig& cfg) {
    if (p.ambient_dim() > cfg.max_dim)
        throw resource_error("count: ambient dimension exceeds configured cap");
    for (const Vec& a : extra) {
        if (static_cast<int>(a.size()) != p.ambient_dim())
            throw invalid_argument_error("count: extra row dimension mismatch");
    }
    CountCtx ctx;
    ctx.fr = affine_frame(p.ambient_dim(), p.vertices());
    const AffineFrame& fr = ctx.fr;
    for (const Vec& v : p.vertices()) {
        Vec t = tcoords(fr, v);
        check_in_lattice(fr, v, t);
        ctx.tverts.push_back(std::move(t));
    }
    if (fr.n > 0) {
        for (auto& [a, b] : dd_facets(ctx.tverts, fr.n)) {
            ctx.rows_a.push_back(a);
            ctx.rows_b.push_back(b);
        }
        ctx.lo.assign(fr.n, Int(0));
        ctx.hi.assign(fr.n, Int(0));
        for (int j = 0; j < fr.n; ++j) {
            ctx.lo[j] = ctx.tverts[0][j];
            ctx.hi[j] = ctx.tverts[0][j];
            for (const Vec& t : ctx.tverts) {
                if (t[j] < ctx.lo[j]) ctx.lo[j] = t[j];
                if (t[j] > ctx.hi[j]) ctx.hi[j] = t[j];
            }
        }
    }
    for (const Vec& a : extra) {
        Vec at(fr.n);
        for (int j = 0; j < fr.n; ++j) at[j] = dot(a, fr.kernel_cols[j]);
        Int rhs = -dot(a, fr.v0);
        if (is_zero_vec(at)) {
            if (sgn(rhs) < 0) ctx.empty = true;  // constraint violated on the whole hull
            continue;
        }
        ctx.rows_a.push_back(std::move(at));
        ctx.rows_b.push_back(std::move(rhs));
    }
    return ctx;
}

// Exact scan of the dilation-m lattice points, with suffix-bound pruning and
// an interval intersection at the innermost coordinate. `out` may be null.
Int scan(const CountCtx& ctx, const Int& m, std::vector<Vec>* out, const CountingConfig& cfg) {
    if (sgn(m) <= 0) throw invalid_argument_error("count: dilation must be >= 1");
    if (ctx.empty) return 0;
    const AffineFrame& fr = ctx.fr;
    const int n = fr.n;
    const int nrows = static_cast<int>(ctx.rows_a.size());

    std::vector<Int> rhs(nrows);
    for (int r = 0; r < nrows; ++r) rhs[r] = m * ctx.rows_b[r];

    if (n == 0) {
        for (int r = 0; r < nrows; ++r) {
            if (sgn(rhs[r]) < 0) return 0;
        }
        if (out) out->push_back(ambient_of(fr, Vec(), m));
        return 1;
    }

    Vec lo(n), hi(n);
    Int volume = 1;
    for (int j = 0; j < n; ++j) {
        lo[j] = m * ctx.lo[j];
        hi[j] = m * ctx.hi[j];
        volume *= hi[j] - lo[j] + 1;
        if (volume > cfg.max_box_volume)
            throw resource_error("count: bounding box volume exceeds budget");
    }

    // suffix_min[r][i] = minimal contribution of coordinates i..n-1 to row r.
    std::vector<std::vector<Int>> suffix_min(nrows, std::vector<Int>(n + 1, Int(0)));
    for (int r = 0; r < nrows; ++r) {
        for (int i = n - 1; i >= 0; --i) {
            const Int& c = ctx.rows_a[r][i];
            Int contrib = sgn(c) >= 0 ? c * lo[i] : c * hi[i];
            suffix_min[r][i] = suffix_min[r][i + 1] + contrib;
        }
    }

    std::vector<std::vector<Int>> partial(n + 1, std::vector<Int>(nrows, Int(0)));
    Vec point(n);
    Int total = 0;

    auto recurse = [&](auto&& self, int depth) -> void {
        if (depth == n - 1) {
            Int tlo = lo[depth], thi = hi[depth];
            for (int r = 0; r < nrows; ++r) {
                const Int& c = ctx.rows_a[r][depth];
                Int room = rhs[r] - partial[depth][r];
                if (sgn(c) == 0) {
                    if (sgn(room) < 0) return;
                } else if (sgn(c) > 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), room.get_mpz_t(), c.get_mpz_t());
                    if (q < thi) thi = q;
                } else {
                    Int q;
                    mpz_cdiv_q(q.get_mpz_t(), room.get_mpz_t(), c.get_mpz_t());
                    if (q > tlo) tlo = q;
                }
                if (tlo > thi) return;
            }
            if (out) {
                for (Int t = tlo; t <= thi; ++t) {
                    point[depth] = t;
                    out->push_back(ambient_of(fr, point, m));
                }
            }
            total += thi - tlo + 1;
            return;
        }
        for (int r = 0; r < nrows; ++r) {
            partial[depth + 1][r] = partial[depth][r] + ctx.rows_a[r][depth] * lo[depth];
        }
        for (Int t = lo[depth];; ++t) {
            bool feasible = true;
            for (int r = 0; r < nrows; ++r) {
                if (partial[depth + 1][r] + suffix_min[r][depth + 1] > rhs[r]) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                point[depth] = t;
                self(self, depth + 1);
            }
            if (t == hi[depth]) break;
            for (int r = 0; r < nrows; ++r) partial[depth + 1][r] += ctx.rows_a[r][depth];
        }
    };
    recurse(recurse, 0);
    return total;
}

HPolytope hrep_of(const VPolytope& p, const CountingConfig& cfg) {
    if (p.ambient_dim() > cfg.max_dim)
        throw resource_error("vrep_to_hrep: ambient dimension exceeds configured cap");
    HPolytope h;
    h.ambient_dim = p.ambient_dim();
    if (p.ambient_dim() == 0) return h;
    AffineFrame fr = affine_frame(p.ambient_dim(), p.vertices());
    h.equalities = fr.equalities;
    if (fr.n == 0) return h;
    std::vector<Vec> tpts;
    tpts.reserve(p.num_vertices());
    for (const Vec& v : p.vertices()) tpts.push_back(tcoords(fr, v));
    for (auto& [at, bt] : dd_facets(tpts, fr.n)) {
        Vec ax(fr.ambient, Int(0));
        for (int j = 0; j < fr.n; ++j) {
            if (sgn(at[j]) == 0) continue;
            for (int i = 0; i < fr.ambient; ++i) ax[i] += at[j] * fr.vtop_rows[j][i];
        }
        Int bx = bt + dot(ax, fr.v0);
        make_primitive(ax, bx);
        h.rows.push_back(HRow{std::move(ax), std::move(bx)});
    }
    std::sort(h.rows.begin(), h.rows.end(),
              [](const HRow& x, const HRow& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return h;
}

}  // namespace

VPolytope VPolytope::from_canonical(int ambient_dim, std::vector<Vec> verts) {
    VPolytope p;
    p.ambient_dim_ = ambient_dim;
    p.vertices_ = dedup_sorted(std::move(verts));
    return p;
}

VPolytope hull(int ambient_dim, const std::vector<Vec>& points) {
    if (points.empty()) throw invalid_argument_error("hull: empty point set");
    for (const Vec& p : points) {
        if (static_cast<int>(p.size()) != ambient_dim)
            throw invalid_argument_error("hull: point dimension mismatch");
    }
    if (ambient_dim == 0) return VPolytope::from_canonical(0, {Vec{}});
    std::vector<Vec> pts = dedup_sorted(points);
    if (pts.size() == 1) return VPolytope::from_canonical(ambient_dim, std::move(pts));

    AffineFrame fr = affine_frame(ambient_dim, pts);
    if (fr.n == 0) throw internal_error("hull: distinct points with zero-dimensional hull");
    std::vector<Vec> tpts;
    tpts.reserve(pts.size());
    for (const Vec& p : pts) {
        Vec t = tcoords(fr, p);
        check_in_lattice(fr, p, t);
        tpts.push_back(std::move(t));
    }
    auto facets = dd_facets(tpts, fr.n);

    // A point of the polytope is a vertex iff the normals of the facets tight
    // at it span the intrinsic space, equivalently it is not in the hull of
    // the remaining points.
    std::vector<Vec> verts;
    for (size_t i = 0; i < pts.size(); ++i) {
        Mat active;
        for (const auto& [a, b] : facets) {
            if (dot(a, tpts[i]) == b) active.push_back(a);
        }
        if (static_cast<int>(active.size()) >= fr.n && rank_rational(active) == fr.n)
            verts.push_back(pts[i]);
    }
    return VPolytope::from_canonical(ambient_dim, std::move(verts));
}

HPolytope vrep_to_hrep(const VPolytope& p, const CountingConfig& cfg) { return hrep_of(p, cfg); }

bool contains(const HPolytope& h, const std::vector<Rat>& z) {
    if (static_cast<int>(z.size()) != h.ambient_dim)
        throw invalid_argument_error("contains: dimension mismatch");
    for (const HEq& eq : h.equalities) {
        Rat s = 0;
        for (int i = 0; i < h.ambient_dim; ++i) s += Rat(eq.c[i]) * z[i];
        if (s != Rat(eq.e)) return false;
    }
    for (const HRow& row : h.rows) {
        Rat s = 0;
        for (int i = 0; i < h.ambient_dim; ++i) s += Rat(row.a[i]) * z[i];
        if (s > Rat(row.b)) return false;
    }
    return true;
}

bool contains(const HPolytope& h, const Vec& z) {
    std::vector<Rat> q(z.size());
    for (size_t i = 0; i < z.size(); ++i) q[i] = Rat(z[i]);
    return contains(h, q);
}

int intrinsic_dim(const VPolytope& p) {
    if (p.ambient_dim() == 0 || p.num_vertices() == 1) return 0;
    return affine_frame(p.ambient_dim(), p.vertices()).n;
}

VPolytope intrinsic_copy(const VPolytope& p) {
    if (p.ambient_dim() == 0) return p;
    AffineFrame fr = affine_frame(p.ambient_dim(), p.vertices());
    if (fr.n == p.ambient_dim()) return p;
    std::vector<Vec> tverts;
    tverts.reserve(p.num_vertices());
    for (const Vec& v : p.vertices()) tverts.push_back(tcoords(fr, v));
    return VPolytope::from_canonical(fr.n, std::move(tverts));
}

Int count_lattice_points(const VPolytope& p, const Int& m, const CountingConfig& cfg) {
    CountCtx ctx = make_count_ctx(p, {}, cfg);
    return scan(ctx, m, nullptr, cfg);
}

std::vector<Vec> enumerate_lattice_points(const VPolytope& p, const Int& m,
                                          const std::vector<Vec>& extra_homogeneous,
                                          const CountingConfig& cfg) {
    CountCtx ctx = make_count_ctx(p, extra_homogeneous, cfg);
    std::vector<Vec> out;
    scan(ctx, m, &out, cfg);
    std::sort(out.begin(), out.end());
    return out;
}

Int count_lattice_points_restricted(const VPolytope& p, const Int& m,
                                    const std::vector<Vec>& extra_homogeneous,
                                    const CountingConfig& cfg) {
    CountCtx ctx = make_count_ctx(p, extra_homogeneous, cfg);
    return scan(ctx, m, nullptr, cfg);
}

EhrhartData ehrhart_data(const VPolytope& p, const CountingConfig& cfg) {
    EhrhartData data;
    CountCtx ctx = make_count_ctx(p, {}, cfg);
    const int n = ctx.fr.n;
    data.dim = n;
    data.counts.assign(static_cast<size_t>(n) + 1, Int(1));
    for (int m = 1; m <= n; ++m) data.counts[m] = scan(ctx, Int(m), nullptr, cfg);

    // h*_i = sum_{j=0}^{i} (-1)^j C(n+1, j) L(i-j): the (1-x)^{n+1}-fold
    // convolution of the Ehrhart series, truncated at degree n.
    std::vector<Int> hc(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Int term = binomial(n + 1, j) * data.counts[i - j];
            if (j % 2 == 0)
                hc[i] += term;
            else
                hc[i] -= term;
        }
    }
    data.hstar = IntPolynomial(std::move(hc));
    if (!data.hstar.has_nonnegative_coeffs())
        throw internal_error("ehrhart_data: negative h* coefficient (oracle bug)");
    if (data.hstar.coeff(0) != 1) throw internal_error("ehrhart_data: h* constant term != 1");

    std::vector<std::pair<Rat, Rat>> pts;
    for (int m = 0; m <= n; ++m) pts.emplace_back(Rat(m), Rat(data.counts[m]));
    data.ehrhart = lagrange_interpolate(pts);
    if (data.ehrhart.degree() != n)
        throw internal_error("ehrhart_data: Ehrhart polynomial degree mismatch");
    if (data.ehrhart.coeff(0) != 1) throw internal_error("ehrhart_data: constant term != 1");
    Int factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (data.ehrhart.coeff(n) * Rat(factorial) != Rat(data.hstar.sum_of_coeffs()))
        throw internal_error("ehrhart_data: normalized volume mismatch");
    return data;
}

bool is_anti_blocking(const VPolytope& p, const CountingConfig& cfg) {
    const int d = p.ambient_dim();
    if (d == 0) return false;
    for (const Vec& v : p.vertices()) {
        for (const Int& x : v)
            if (sgn(x) < 0) return false;
    }
    if (intrinsic_dim(p) != d) return false;
    HPolytope h = hrep_of(p, cfg);
    for (const Vec& v : p.vertices()) {
        for (int k = 0; k < d; ++k) {
            if (sgn(v[k]) == 0) continue;
            Vec w = v;
            w[k] = 0;
            if (!contains(h, w)) return false;
        }
    }
    return true;
}

VPolytope unconditional_closure(const VPolytope& p, const CountingConfig& cfg) {
    if (!is_anti_blocking(p, cfg))
        throw invalid_argument_error("unconditional_closure: input is not anti-blocking");
    const int d = p.ambient_dim();
    std::set<Vec> points;
    for (const Vec& v : p.vertices()) {
        std::vector<int> support;
        for (int i = 0; i < d; ++i)
            if (sgn(v[i]) != 0) support.push_back(i);
        const size_t masks = size_t(1) << support.size();
        for (size_t mask = 0; mask < masks; ++mask) {
            Vec w = v;
            for (size_t j = 0; j < support.size(); ++j) {
                if (mask & (size_t(1) << j)) w[support[j]] = -w[support[j]];
            }
            points.insert(std::move(w));
        }
    }
    return hull(d, std::vector<Vec>(points.begin(), points.end()));
}

VPolytope free_sum(const VPolytope& p, const VPolytope& q, const CountingConfig& cfg) {
    for (const VPolytope* poly : {&p, &q}) {
        HPolytope h = hrep_of(*poly, cfg);
        if (!contains(h, Vec(poly->ambient_dim(), Int(0))))
            throw invalid_argument_error("free_sum: polytope does not contain the origin");
    }
    const int d1 = p.ambient_dim(), d2 = q.ambient_dim();
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) {
        Vec w(d1 + d2, Int(0));
        std::copy(v.begin(), v.end(), w.begin());
        pts.push_back(std::move(w));
    }
    for (const Vec& v : q.vertices()) {
        Vec w(d1 + d2, Int(0));
        std::copy(v.begin(), v.end(), w.begin() + d1);
        pts.push_back(std::move(w));
    }
    return hull(d1 + d2, pts);
}

VPolytope cayley_sum(const VPolytope& p, const VPolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw invalid_argument_error("cayley_sum: ambient dimension mismatch");
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) {
        Vec w = v;
        w.push_back(Int(0));
        pts.push_back(std::move(w));
    }
    for (const Vec& v : q.vertices()) {
        Vec w = v;
        w.push_back(Int(1));
        pts.push_back(std::move(w));
    }
    return hull(p.ambient_dim() + 1, pts);
}

VPolytope gamma_join(const VPolytope& p, const VPolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw invalid_argument_error("gamma_join: ambient dimension mismatch");
    std::vector<Vec> pts = p.vertices();
    for (const Vec& v : q.vertices()) pts.push_back(vec_neg(v));
    return hull(p.ambient_dim(), pts);
}

VPolytope omega_join(const VPolytope& p, const VPolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw invalid_argument_error("omega_join: ambient dimension mismatch");
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) {
        Vec w = v;
        w.push_back(Int(1));
        pts.push_back(std::move(w));
    }
    for (const Vec& v : q.vertices()) {
        Vec w = vec_neg(v);
        w.push_back(Int(-1));
        pts.push_back(std::move(w));
    }
    return hull(p.ambient_dim() + 1, pts);
}

VPolytope project(const VPolytope& p, const std::vector<int>& j) {
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i] < 1 || j[i] > p.ambient_dim() || (i > 0 && j[i] <= j[i - 1]))
            throw invalid_argument_error("project: J must be a strictly increasing subset of [d]");
    }
    if (j.empty()) return VPolytope::from_canonical(0, {Vec{}});
    std::vector<Vec> pts;
    pts.reserve(p.num_vertices());
    for (const Vec& v : p.vertices()) {
        Vec w(j.size());
        for (size_t i = 0; i < j.size(); ++i) w[i] = v[j[i] - 1];
        pts.push_back(std::move(w));
    }
    return hull(static_cast<int>(j.size()), pts);
}

bool is_reflexive(const VPolytope& p, const CountingConfig& cfg) {
    if (p.ambient_dim() == 0) throw invalid_argument_error("is_reflexive: zero-dimensional ambient");
    if (intrinsic_dim(p) != p.ambient_dim())
        throw invalid_argument_error("is_reflexive: polytope is not full-dimensional");
    HPolytope h = hrep_of(p, cfg);
    for (const HRow& row : h.rows) {
        if (row.b != 1) return false;
    }
    return true;
}

VPolytope dual(const VPolytope& p, const CountingConfig& cfg) {
    if (!is_reflexive(p, cfg)) throw invalid_argument_error("dual: polytope is not reflexive");
    HPolytope h = hrep_of(p, cfg);
    std::vector<Vec> pts;
    pts.reserve(h.rows.size());
    for (const HRow& row : h.rows) pts.push_back(row.a);
    return hull(p.ambient_dim(), pts);
}

std::vector<HRow> facets_exhaustive(const VPolytope& p) {
    AffineFrame fr = affine_frame(p.ambient_dim(), p.vertices());
    const int n = fr.n;
    if (n == 0) return {};
    std::vector<Vec> tpts;
    for (const Vec& v : p.vertices()) tpts.push_back(tcoords(fr, v));
    const int npts = static_cast<int>(tpts.size());

    std::set<std::pair<Vec, Int>> found;
    std::vector<int> idx(n);
    // All n-subsets of the points.
    auto emit = [&](const std::vector<int>& subset) {
        Mat m;
        for (int i : subset) {
            Vec row = tpts[i];
            row.push_back(Int(-1));
            m.push_back(std::move(row));
        }
        Mat ns = nullspace_int(m, n + 1);
        if (ns.size() != 1) return;  // affinely dependent subset
        Vec a(ns[0].begin(), ns[0].end() - 1);
        Int b = ns[0].back();
        if (is_zero_vec(a)) return;
        bool all_le = true, all_ge = true;
        for (const Vec& t : tpts) {
            int c = sgn(dot(a, t) - b);
            if (c > 0) all_le = false;
            if (c < 0) all_ge = false;
        }
        if (all_le) found.insert({a, b});
        if (all_ge) found.insert({vec_neg(a), -b});
    };
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == n) {
            emit(subset);
            return;
        }
        for (int i = start; i < npts; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<HRow> rows;
    for (const auto& [at, bt] : found) {
        Vec ax(fr.ambient, Int(0));
        for (int j = 0; j < n; ++j) {
            if (sgn(at[j]) == 0) continue;
            for (int i = 0; i < fr.ambient; ++i) ax[i] += at[j] * fr.vtop_rows[j][i];
        }
        Int bx = bt + dot(ax, fr.v0);
        make_primitive(ax, bx);
        rows.push_back(HRow{std::move(ax), std::move(bx)});
    }
    std::sort(rows.begin(), rows.end(),
              [](const HRow& x, const HRow& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return rows;
}

}  // namespace hstar
