#pragma once

#include "liesq/gq.hpp"

#include <cstdint>
#include <vector>

namespace liesq {

/// Certified exact commutant basis of a family of k x k Gaussian-rational
/// matrices: a basis of {X : A_i X = X A_i for all i}, canonical
/// (reduced-echelon) over the Gaussian rationals.
///
/// Strategy: the kernel is computed modulo word-sized primes p = 1 (mod 4)
/// (so that i has a square root mod p), lifted by CRT + rational
/// reconstruction, and then verified exactly against every generator.
/// The modular dimension upper-bounds the true kernel dimension, and the
/// verified lifted vectors lower-bound it, so agreement certifies the
/// result.  Deterministic for a fixed seed.
std::vector<GQMatrix> commutant_basis_exact(const std::vector<GQMatrix>& gens,
                                            std::uint64_t seed = 1);

/// Reduced row-echelon form of a small dense Gaussian-rational matrix
/// (in place); returns the pivot column of each nonzero row.
std::vector<int> gq_rref(std::vector<std::vector<GQ>>& rows);

int gq_rank(std::vector<std::vector<GQ>> rows);

}  // namespace liesq
