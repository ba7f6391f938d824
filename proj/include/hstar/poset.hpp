#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hstar/graph.hpp"
#include "hstar/int_polynomial.hpp"

namespace hstar {

/// Finite poset on 1..n, stored as the full strict order relation
/// (transitively closed). Built from cover relations or from an arbitrary
/// relation whose transitive closure is checked for antisymmetry.
class Poset {
public:
    Poset() = default;
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
    static Poset antichain(int n);
    static Poset chain(int n);

    int n() const { return n_; }
    bool less(int i, int j) const;  // i <_P j, 1-indexed
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
    // i <_P j implies i < j as integers.
    bool naturally_labeled() const;
    // The covers (transitive reduction), for serialization.
    std::vector<std::pair<int, int>> covers() const;

    bool operator==(const Poset& o) const { return n_ == o.n_ && less_ == o.less_; }

private:
    friend Poset poset_from_relation(int n, const std::vector<std::pair<int, int>>& relation);
    int n_ = 0;
    std::vector<std::vector<bool>> less_;  // 0-indexed internally
};

// Transitive closure of the given strict relation; throws on cycles.
Poset poset_from_relation(int n, const std::vector<std::pair<int, int>>& relation);

std::vector<std::vector<int>> antichains(const Poset& p);
// Upward closed subsets, as sorted vertex lists (includes the empty set).
std::vector<std::vector<int>> order_filters(const Poset& p);

// All linear extensions as sequences (pi_1, ..., pi_n) of elements.
std::vector<std::vector<int>> linear_extensions(const Poset& p);

// Left peak statistic of a permutation written as a word pi_1..pi_n with the
// convention pi_0 = 0: the number of 1 <= i <= n-1 with pi_{i-1} < pi_i > pi_{i+1}.
int left_peaks(const std::vector<int>& word);

// Generating polynomial of left peaks over the linear extensions. Requires a
// naturally labeled poset.
IntPolynomial left_peak_polynomial(const Poset& p);

// Ordinal sum on [p.n + q.n]: Q's elements are shifted above P's, and every
// P element is below every Q element.
Poset ordinal_sum(const Poset& p, const Poset& q);

// Induced subposet on the sorted label set `labels`, relabeled to 1..k by the
// order-preserving map (k-th smallest label -> k).
Poset induced_subposet(const Poset& p, const std::vector<int>& labels);

// Poset on the full ground set [n] with P induced on `i`, Q induced on the
// complement, and everything in `i` below everything outside (original labels
// are kept). Used for the orthant pieces of twinned chain polytopes.
Poset ordinal_sum_on_labels(const Poset& p, const Poset& q, const std::vector<int>& i);

// Relabels along the lexicographically smallest linear extension, so the
// result is naturally labeled. Returns the poset and the map old -> new.
std::pair<Poset, std::vector<int>> relabel_natural(const Poset& p);

// Image of P under a permutation of labels: i <_P j iff perm(i) < perm(j) in
// the result (perm is 1-indexed, perm[i-1] is the new label of i).
Poset relabel(const Poset& p, const std::vector<int>& perm);

// Edges between comparable pairs.
Graph comparability_graph(const Poset& p);

bool have_common_linear_extension(const Poset& p, const Poset& q);

// All labeled posets on [n] (transitively closed strict orders).
std::vector<Poset> all_posets(int n);
// Only the naturally labeled ones.
std::vector<Poset> all_natural_posets(int n);

}  // namespace hstar
