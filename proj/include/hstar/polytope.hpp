#pragma once

#include <optional>
#include <vector>

#include "hstar/int_polynomial.hpp"
#include "hstar/linalg.hpp"
#include "hstar/numbers.hpp"
#include "hstar/rat_polynomial.hpp"

namespace hstar {

struct CountingConfig {
    Int max_box_volume = Int(100000000);
    int max_dim = 9;
};

/// Lattice polytope given by its vertex list. Construction via hull() prunes
/// points that are not vertices and stores the rest in lexicographic order,
/// so equality of polytopes is plain equality of the representation.
class VPolytope {
public:
    VPolytope() = default;  // empty; fill via hull() or from_canonical()

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    size_t num_vertices() const { return vertices_.size(); }
    bool operator==(const VPolytope& o) const {
        return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
    }
    bool operator!=(const VPolytope& o) const { return !(*this == o); }

    // Trusted constructor: `verts` must already be exactly the vertex set.
    // Used internally and by deserialization (which re-runs hull()).
    static VPolytope from_canonical(int ambient_dim, std::vector<Vec> verts);

private:
    int ambient_dim_ = 0;
    std::vector<Vec> vertices_;
};

// Convex hull: prunes non-vertices exactly and canonicalizes the order.
VPolytope hull(int ambient_dim, const std::vector<Vec>& points);

struct HRow {
    Vec a;
    Int b;  // a . x <= b, with (a, b) jointly primitive
};
struct HEq {
    Vec c;
    Int e;  // c . x == e
};

/// Irredundant facet description plus affine-hull equalities for
/// lower-dimensional polytopes. Every row supports a facet.
struct HPolytope {
    int ambient_dim = 0;
    std::vector<HRow> rows;
    std::vector<HEq> equalities;
};

HPolytope vrep_to_hrep(const VPolytope& p, const CountingConfig& cfg = {});

bool contains(const HPolytope& h, const std::vector<Rat>& z);
bool contains(const HPolytope& h, const Vec& z);

int intrinsic_dim(const VPolytope& p);

// Lattice-isomorphic full-dimensional copy in Z^n (n = intrinsic dimension).
// When the origin lies in the affine hull the map is linear, so the origin
// maps to the origin (needed for reflexivity checks of embedded polytopes).
VPolytope intrinsic_copy(const VPolytope& p);

// |mP ∩ Z^d| for m >= 1, by exact scan of the lattice parametrization of the
// affine hull. Throws resource_error when the bounding box exceeds the budget.
Int count_lattice_points(const VPolytope& p, const Int& m, const CountingConfig& cfg = {});

// The lattice points themselves (ambient coordinates, sorted), optionally
// restricted by extra homogeneous inequalities a . x <= 0 (orthant slices and
// coordinate hyperplanes; these are not dilated).
std::vector<Vec> enumerate_lattice_points(const VPolytope& p, const Int& m,
                                          const std::vector<Vec>& extra_homogeneous = {},
                                          const CountingConfig& cfg = {});

Int count_lattice_points_restricted(const VPolytope& p, const Int& m,
                                    const std::vector<Vec>& extra_homogeneous,
                                    const CountingConfig& cfg = {});

struct EhrhartData {
    int dim = 0;              // intrinsic dimension n
    std::vector<Int> counts;  // L(0), ..., L(n)
    IntPolynomial hstar;
    RatPolynomial ehrhart;  // polynomial in the dilation variable
};

// The brute-force oracle: counts L(1..n), inverts the Ehrhart series for h*,
// interpolates the Ehrhart polynomial. Validates Stanley nonnegativity and
// the normalized-volume identity h*(1) = n! * lead(ehrhart).
EhrhartData ehrhart_data(const VPolytope& p, const CountingConfig& cfg = {});

// Anti-blocking test for P in the nonnegative orthant: full-dimensional and
// closed under zeroing coordinates of vertices.
bool is_anti_blocking(const VPolytope& p, const CountingConfig& cfg = {});

// P^{±}: hull of all sign flips of an anti-blocking polytope.
VPolytope unconditional_closure(const VPolytope& p, const CountingConfig& cfg = {});

// Free sum in R^{d1+d2}; both polytopes must contain the origin.
VPolytope free_sum(const VPolytope& p, const VPolytope& q, const CountingConfig& cfg = {});

// Cayley sum conv(P x {0} ∪ Q x {1}) in R^{d+1}.
VPolytope cayley_sum(const VPolytope& p, const VPolytope& q);

// conv(P ∪ -Q) in R^d.
VPolytope gamma_join(const VPolytope& p, const VPolytope& q);

// conv(P x {1} ∪ -Q x {-1}) in R^{d+1}.
VPolytope omega_join(const VPolytope& p, const VPolytope& q);

// Coordinate projection onto J (1-indexed, strictly increasing); J empty
// gives the point polytope in R^0 with h* = 1.
VPolytope project(const VPolytope& p, const std::vector<int>& j);

// Facet criterion: every facet is { a . x <= 1 } with a primitive integer.
// Requires a full-dimensional polytope.
bool is_reflexive(const VPolytope& p, const CountingConfig& cfg = {});

// Dual of a reflexive polytope: hull of the facet normals.
VPolytope dual(const VPolytope& p, const CountingConfig& cfg = {});

// Test-support routine: facets by exhaustive enumeration of hyperplanes
// through affinely independent vertex subsets. Exponential; used to
// cross-check the double-description path on small instances.
std::vector<HRow> facets_exhaustive(const VPolytope& p);

}  // namespace hstar
