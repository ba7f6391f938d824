#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hstar/graph.hpp"
#include "hstar/int_polynomial.hpp"
#include "hstar/polytope.hpp"
#include "hstar/rat_polynomial.hpp"

namespace hstar {

// Hull of { +-(e_i - e_j) : {i,j} edge }. Requires at least one edge; the
// intrinsic dimension is n-1 exactly when G is connected.
VPolytope symmetric_edge_A(const Graph& g);

// B_G = conv({0, e_1..e_d} ∪ {e_i + e_j : edges}).
VPolytope b_polytope(const Graph& g);

// The sign-flip closure of B_G.
VPolytope symmetric_edge_B(const Graph& g, const CountingConfig& cfg = {});

// Interior polynomial of the extension G~ of a bipartite graph with the
// given bipartition (defaults to the 2-coloring computed from G).
IntPolynomial interior_polynomial_tilde(const Graph& g, const std::vector<int>& v1,
                                        const std::vector<int>& v2);

// h*(B_G closure) = (x+1)^d I_{G~}(4x/(x+1)^2), for bipartite G. Gamma
// positive by construction.
IntPolynomial hstar_B(const Graph& g);
IntPolynomial hstar_B(const Graph& g, const std::vector<int>& v1, const std::vector<int>& v2);

// The cut-average route to h* of the symmetric edge polytope of the
// suspension of G: average of I over the 2^{d-1} cuts (each cut read with
// its defining bipartition), then the gamma substitution in degree d.
IntPolynomial hstar_A_suspension(const Graph& g);
// The averaged polynomial itself (rational in general; only the gamma-scaled
// expansion is integral).
RatPolynomial cut_average_polynomial(const Graph& g);

IntPolynomial closed_form_cycle(int d);                        // d >= 3
IntPolynomial closed_form_delpezzo(int m);                     // m >= 1
IntPolynomial closed_form_pseudo_delpezzo(int m);              // m >= 1
IntPolynomial closed_form_complete(int d);                     // d >= 2
IntPolynomial closed_form_complete_bipartite(int m, int n);    // h* of A_{K_{m+1,n+1}}

VPolytope del_pezzo_polytope(int m);         // conv(+-e_i, +-(1,..,1)) in R^{2m}
VPolytope pseudo_del_pezzo_polytope(int m);  // conv(+-e_i, -(1,..,1)) in R^{2m}
VPolytope cross_polytope(int d);

// h*(A_G) for connected G: block factorization, closed forms, bipartite
// contraction, suspension recognition, oracle fallback, in that order.
IntPolynomial hstar_A(const Graph& g, const CountingConfig& cfg = {});

// Hull of A(G) minus the single generator e_i - e_j of a non-bridge edge
// {i,j} (i < j), together with the halved-sum polynomial
// (h*(A_G) + h*(A_{G minus e}))/2, whose integrality is asserted.
std::pair<VPolytope, IntPolynomial> delete_edge_polytope(const Graph& g, std::pair<int, int> e,
                                                         const CountingConfig& cfg = {});

struct PseudoSymmetricComponent {
    enum class Kind { cross, delpezzo, pseudo_delpezzo };
    Kind kind;
    int param;  // cross dimension k, or the del Pezzo index m
};

// h* of a free sum of cross / del Pezzo / pseudo-del Pezzo polytopes:
// the product of the component h*-polynomials. Gamma positivity is asserted.
IntPolynomial pseudo_symmetric_hstar(const std::vector<PseudoSymmetricComponent>& components);

}  // namespace hstar
