#include "hstar/linalg.hpp"

#include <algorithm>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

RatMat to_rat(const Mat& m) {
    RatMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const Int& x : m[i]) r[i].emplace_back(x);
    }
    return r;
}

// Row echelon over Q in place; returns pivot columns.
std::vector<int> echelon(RatMat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (sgn(a[i][c]) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_rational(const Mat& m) {
    RatMat a = to_rat(m);
    return static_cast<int>(echelon(a).size());
}

Mat nullspace_int(const Mat& m, int cols) {
    RatMat a = to_rat(m);
    if (a.empty()) a.push_back(RatVec(cols, Rat(0)));
    std::vector<int> pivots = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    Mat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        // Back-substitute: pivot row r has leading 1 at pivots[r].
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a[r][free];
        }
        Int lcm = 1;
        for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        Vec w(cols);
        for (int j = 0; j < cols; ++j) {
            Rat s = v[j] * Rat(lcm);
            w[j] = s.get_num();
        }
        make_primitive(w);
        basis.push_back(std::move(w));
    }
    return basis;
}

std::optional<RatMat> invert_rational(const Mat& a) {
    const int n = static_cast<int>(a.size());
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw invalid_argument_error("invert_rational: not square");
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(a[i][j]);
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = echelon(aug);
    for (int i = 0; i < n; ++i) {
        if (i >= static_cast<int>(pivots.size()) || pivots[i] != i) return std::nullopt;
    }
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

KernelBasis integer_kernel(const Mat& c, int d) {
    const int rows = static_cast<int>(c.size());
    // Column-style Hermite reduction C*U with U unimodular; the columns of U
    // at which C*U vanishes form a saturated basis of the integer kernel.
    Mat a = c;
    Mat u(d, Vec(d, Int(0)));  // row-major; column ops applied to both
    for (int i = 0; i < d; ++i) u[i][i] = 1;

    auto col_sub = [&](int target, int src, const Int& q) {
        // column[target] -= q * column[src]
        for (int i = 0; i < rows; ++i) a[i][target] -= q * a[i][src];
        for (int i = 0; i < d; ++i) u[i][target] -= q * u[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < d; ++i) std::swap(u[i][x], u[i][y]);
    };

    int pivot_col = 0;
    for (int r = 0; r < rows && pivot_col < d; ++r) {
        while (true) {
            int best = -1;
            for (int j = pivot_col; j < d; ++j) {
                if (sgn(a[r][j]) == 0) continue;
                if (best < 0 || abs(a[r][j]) < abs(a[r][best])) best = j;
            }
            if (best < 0) break;  // row already zero on the active columns
            bool reduced_all = true;
            for (int j = pivot_col; j < d; ++j) {
                if (j == best || sgn(a[r][j]) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][best].get_mpz_t());
                col_sub(j, best, q);
                if (sgn(a[r][j]) != 0) reduced_all = false;
            }
            if (reduced_all) {
                col_swap(pivot_col, best);
                ++pivot_col;
                break;
            }
        }
    }

    KernelBasis kb;
    for (int j = pivot_col; j < d; ++j) {
        Vec col(d);
        for (int i = 0; i < d; ++i) col[i] = u[i][j];
        kb.kernel_cols.push_back(std::move(col));
    }

    auto uinv = invert_rational(u);
    if (!uinv) throw internal_error("integer_kernel: transform not unimodular");
    for (int j = pivot_col; j < d; ++j) {
        Vec row(d);
        for (int k = 0; k < d; ++k) {
            const Rat& q = (*uinv)[j][k];
            if (q.get_den() != 1) throw internal_error("integer_kernel: non-integer inverse");
            row[k] = q.get_num();
        }
        kb.vtop_rows.push_back(std::move(row));
    }
    return kb;
}

}  // namespace hstar
