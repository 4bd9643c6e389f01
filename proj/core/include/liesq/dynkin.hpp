#pragma once

#include "liesq/rootsys.hpp"

#include <set>

namespace liesq {

/// An ordered list of simple-root indices (1-based) joining two weights.
struct Chain {
  std::vector<int> root_indices;
  bool operator==(const Chain&) const = default;
  auto operator<=>(const Chain&) const = default;
};

/// lambda is subordinate to mu iff lambda_k <= mu_k for all k
/// (simple-representation version).
bool subordinate(const Weight& lambda, const Weight& mu);

/// Delete the given (1-based) diagram nodes.  Returns the algebra of the
/// remaining diagram — connected components recognised and reported in
/// node order — together with the surviving labels of lambda, reordered
/// to each component's canonical numbering.
std::pair<SemisimpleAlgebra, Weight> part_weight(const SimpleType& t, const Weight& lambda,
                                                 const std::set<int>& deleted);

/// All minimal chains joining lambda and mu: sequences of simple roots
/// with (a) (lambda|a_j1) != 0, (b) consecutive roots non-orthogonal,
/// (c) (a_jn|mu) != 0, and no proper joining subsequence, i.e.
/// (d) (lambda|a_jk) = 0 for k>1, (e) non-consecutive roots orthogonal,
/// (f) (a_jk|mu) = 0 for k<n.  Sorted lexicographically.
std::vector<Chain> minimal_chains(const SimpleType& t, const Weight& lambda,
                                  const Weight& mu);

/// Constituents of lambda (x) mu guaranteed by the minimal-chain bound:
/// lambda+mu itself plus lambda+mu minus the root sum of each minimal
/// chain (when dominant).
std::set<Weight> guaranteed_constituents(const SimpleType& t, const Weight& lambda,
                                         const Weight& mu);

}  // namespace liesq
