#pragma once

#include <optional>
#include <vector>

#include "hstar/numbers.hpp"

namespace hstar {

using Mat = std::vector<Vec>;  // row-major integer matrix
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

int rank_rational(const Mat& m);

// Primitive integer basis (as rows) of { c : M c = 0 }.
Mat nullspace_int(const Mat& m, int cols);

// Inverse of a square integer matrix over Q; nullopt if singular.
std::optional<RatMat> invert_rational(const Mat& a);

// Lattice data for ker_Z(C) = { x in Z^d : C x = 0 }, which is saturated:
// kernel_cols is a lattice basis (n columns of length d) and vtop_rows is the
// matching left inverse (n rows of length d) with Vtop * K = I_n, so every
// kernel vector x satisfies x = K * (Vtop x) with integer coordinates.
struct KernelBasis {
    Mat kernel_cols;
    Mat vtop_rows;
};
KernelBasis integer_kernel(const Mat& c, int d);

}  // namespace hstar
