#pragma once

#include <optional>

#include "hstar/poset.hpp"
#include "hstar/polytope.hpp"
#include "hstar/rat_polynomial.hpp"

namespace hstar {

// Hull of the antichain indicator vectors.
VPolytope chain_polytope(const Poset& p);
// Hull of the order-filter indicator vectors, equivalently
// { x in [0,1]^d : x_i <= x_j whenever i <_P j }.
VPolytope order_polytope(const Poset& p);
// Sign-flip closure of the chain polytope.
VPolytope enriched_chain_polytope(const Poset& p, const CountingConfig& cfg = {});
// Hull of the stable-set indicator vectors of a graph.
VPolytope stable_set_polytope(const Graph& g);

// Number of maps f : [d] -> {-m..m} with |f(x)| <= |f(y)| for x <_P y, and
// f(y) >= 0 whenever the magnitudes tie. Requires a naturally labeled poset.
Int left_enriched_order_count(const Poset& p, int m);

// h* of the enriched chain polytope: the gamma substitution of the left peak
// polynomial (the poset is relabeled naturally first; the result is
// invariant under relabeling).
IntPolynomial hstar_enriched_chain(const Poset& p);

// conv(C_P ∪ -C_Q) for posets on the same ground set.
VPolytope twinned_chain_polytope(const Poset& p, const Poset& q);

// Average over the 2^d sign vectors of the left peak polynomials of the
// naturally relabeled orthant posets P_I ⊕ Q_complement.
RatPolynomial f_twinned(const Poset& p, const Poset& q);
IntPolynomial hstar_twinned(const Poset& p, const Poset& q);

// Number of enriched (P,Q)-partitions f : [d] -> Z with M(f) - m(f) <= m,
// where m(f), M(f) include 0: f must increase weakly along P on values >= 0
// and strictly along Q on values < 0. Both posets must be naturally labeled.
// The enumeration window {-m..m}^d is exhaustive because 0 lies between m(f)
// and M(f), so a window of width m containing 0 bounds every value by m.
Int enriched_PQ_count(const Poset& p, const Poset& q, int m);

struct IdentityReport {
    IntPolynomial h_twinned;       // h*(C_{P,Q}) by the oracle
    IntPolynomial h_gamma_oc;      // h*(Gamma(O_P, C_Q))
    IntPolynomial h_omega_oc;      // h*(Omega(O_P, C_Q))
    IntPolynomial h_cayley_oc;     // h*(O_P * C_Q)
    bool gamma_ok = false;         // h_twinned == h_gamma_oc
    bool omega_ok = false;         // (1+x) h_twinned == h_omega_oc
    bool cayley_ok = false;        // h_twinned == h_cayley_oc
    bool common_extension = false;
    std::optional<IntPolynomial> h_gamma_oo;  // when a common linear extension exists
    std::optional<IntPolynomial> h_omega_oo;
    bool gamma_oo_ok = false;
    bool omega_oo_ok = false;
};

// Builds the Gamma / Omega / Cayley companions of the twinned chain polytope,
// computes oracle h* for each, and reports which of the exchange identities
// hold (they are expected to; failures are reported, not thrown).
IdentityReport related_hstar_identities(const Poset& p, const Poset& q,
                                        const CountingConfig& cfg = {});

}  // namespace hstar
