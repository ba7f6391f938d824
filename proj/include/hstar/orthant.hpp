#pragma once

#include <vector>

#include "hstar/graph.hpp"
#include "hstar/int_polynomial.hpp"
#include "hstar/polytope.hpp"

namespace hstar {

/// Assignment of an anti-blocking piece to every closed orthant of R^d.
/// Index = bitmask over coordinates, with bit i-1 set when epsilon_i = -1
/// (so index 0 is the all-positive orthant).
struct OrthantAssignment {
    int d = 0;
    std::vector<VPolytope> pieces;  // size 2^d

    static size_t mask_of_signs(const std::vector<int>& signs);
    static std::vector<int> signs_of_mask(int d, size_t mask);
    // The same piece everywhere (the unconditional case).
    static OrthantAssignment uniform(int d, const VPolytope& piece);
};

// Pairwise boundary compatibility: pieces of adjacent orthants agree on the
// shared coordinate hyperplane (compared through lattice points of the
// closures restricted to x_k = 0, at dilations 1..d).
bool consistent(const OrthantAssignment& assignment, const CountingConfig& cfg = {});

// Hull of the union of the reflected pieces. After building the hull this
// VERIFIES the defining property: for every orthant and dilation 1..d the
// lattice points of the result agree with those of the piece's closure.
// Throws verification_error when the assignment is not locally anti-blocking
// (the hull bulges past a piece).
VPolytope assemble(const OrthantAssignment& assignment, const CountingConfig& cfg = {});

enum class PieceMethod { projections, oracle };
enum class EngineMode { fast, checked };

// The orthant-average formula: h* of the assembled polytope equals the
// average over all 2^d sign vectors of h* of the pieces' sign-flip closures.
// In checked mode the result is also compared against the oracle h* of the
// assembled polytope (verification_error on mismatch).
IntPolynomial hstar_locally_antiblocking(const OrthantAssignment& assignment,
                                         PieceMethod method = PieceMethod::projections,
                                         EngineMode mode = EngineMode::fast,
                                         const CountingConfig& cfg = {});

// Projection inclusion-exclusion for the sign-flip closure of a single
// anti-blocking polytope:
//   h*(P^pm) = sum_j 2^j (x-1)^{d-j} sum_{|J|=j} h*(pi_J(P)).
IntPolynomial hstar_unconditional_via_projections(const VPolytope& p,
                                                  const CountingConfig& cfg = {});

// No induced odd hole in the graph or its complement. Exact and exponential;
// capped at max_n vertices.
bool is_perfect(const Graph& g, int max_n = 12);
// The definitional route: chromatic number equals clique number on every
// induced subgraph. Exact backtracking, capped lower.
bool is_perfect_by_definition(const Graph& g, int max_n = 8);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

struct ReflexivityCheck {
    bool all_perfect = false;
    bool reflexive = false;
    VPolytope assembled;
};

// Builds the stable-set-polytope pieces of the given per-orthant graphs,
// assembles them, and checks the biconditional "reflexive iff every orthant
// graph is perfect". The two verdicts are returned; their disagreement
// throws verification_error.
ReflexivityCheck check_reflexive_via_perfect(const std::vector<Graph>& graphs_by_mask,
                                             const CountingConfig& cfg = {});

}  // namespace hstar
