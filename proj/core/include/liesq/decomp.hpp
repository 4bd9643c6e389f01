#pragma once

#include "liesq/rootsys.hpp"

namespace liesq {

/// A (virtual) direct sum of irreducibles of a semisimple algebra,
/// stored as highest weight -> multiplicity.  Multiplicities may be
/// negative for virtual characters (e.g. the Adams operation).
struct Decomposition {
  SemisimpleAlgebra algebra;
  std::map<Weight, Int> terms;

  Int total_dim() const;
  /// Sum of multiplicities ("one-norm" of the decomposition).
  Int one_norm() const;
  /// Sum of squared multiplicities; for the decomposition of a rep this
  /// equals the dimension of the commutant of its image.
  Int two_norm() const;
  /// Multiplicity of one highest weight (0 if absent).
  Int mult(const Weight& w) const;

  Decomposition& add(const Weight& w, const Int& mult);
  bool operator==(const Decomposition&) const = default;
};

/// Dimension of the irrep of a semisimple algebra (product over factors).
Int irrep_dim(const SemisimpleAlgebra& g, const Weight& lambda);

/// Dual (conjugate) representation's highest weight, computed per family:
/// A reverses the labels, D with odd rank swaps the last two, E6 applies
/// its diagram flip, all other families are self-dual.
Weight dual_weight(const SemisimpleAlgebra& g, const Weight& lambda);
Weight dual_weight(const SimpleType& t, const Weight& lambda);
bool is_self_dual(const SemisimpleAlgebra& g, const Weight& lambda);

/// Highest weight of the adjoint representation (highest root; for a
/// semisimple algebra the reducible sum of the factor adjoints is
/// returned factor by factor).
Weight adjoint_weight(const SimpleType& t);

/// Decompose the tensor product of two irreps (Klimyk's formula, run
/// over the weight system of the smaller factor).
Decomposition tensor_decompose(const SemisimpleAlgebra& g, const Weight& lambda,
                               const Weight& mu);

/// Alternating and symmetric squares of an irrep.  Computed from the
/// halved dominant weight multiset of the square (the virtual character
/// with weight multiset {2w}) by highest-weight stripping with
/// lexicographic-greatest tie-breaking.
Decomposition alt_square(const SemisimpleAlgebra& g, const Weight& lambda);
Decomposition sym_square(const SemisimpleAlgebra& g, const Weight& lambda);

/// Both at once (cheaper than calling the two separately).
std::pair<Decomposition, Decomposition> alt_sym_squares(const SemisimpleAlgebra& g,
                                                        const Weight& lambda);

/// Decomposition of phi (x) dual(phi).
Decomposition tensor_with_dual(const SemisimpleAlgebra& g, const Weight& lambda);

/// Signed decomposition of the second Adams operation applied to the
/// irrep with highest weight lambda (the virtual character whose weight
/// multiset is the doubled weight multiset of the irrep).  Satisfies
/// sym_square - alt_square = adams.
Decomposition adams_square(const SemisimpleAlgebra& g, const Weight& lambda);

enum class SquareKind { alt, sym };

/// True iff the alternating (resp. symmetric) square of the irrep is
/// itself irreducible (exactly one term with multiplicity 1).
bool is_irreducible_square(const SemisimpleAlgebra& g, const Weight& lambda,
                           SquareKind kind);

/// One row of a square-irreducibility scan.
struct ScanRow {
  SimpleType type;
  Weight lambda;
  Weight square;   // highest weight of the (irreducible) square
  Int dim;         // dim of the scanned irrep
  Int square_dim;  // dim of its alt/sym square
};

/// All (t, lambda) with rank <= max_rank, 0 < sum(lambda) <= max_label_sum
/// whose alternating (resp. symmetric) square is irreducible.  Each
/// algebra is reported under its own label, so low-rank coincidences
/// (sp(1)=su(2), so(5)=sp(2), so(6)=su(4)) appear once per label.
/// Uses only dimension comparisons of candidate maximal weights, so it is
/// cheap even at rank 8.
std::vector<ScanRow> scan_tables(SquareKind kind, int max_rank, int max_label_sum);

}  // namespace liesq
