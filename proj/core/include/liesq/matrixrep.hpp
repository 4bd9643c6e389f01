#pragma once

#include "liesq/gq.hpp"

#include <optional>
#include <string>

namespace liesq {

enum class Backend { exact, floating };

/// A set of generator matrices (not necessarily a basis).  Exact storage
/// when available; float-only inputs carry Eigen matrices instead.
struct MatrixRep {
  int dim = 0;
  std::vector<GQMatrix> exact;          // used when non-empty
  std::vector<Eigen::MatrixXcd> flt;    // float-only inputs

  bool is_exact() const { return !exact.empty(); }
  size_t generator_count() const { return is_exact() ? exact.size() : flt.size(); }
  std::vector<Eigen::MatrixXcd> to_float() const;
};

/// Defining-representation bases of the classical compact algebras.
/// su(n): n^2-1 skew-Hermitian traceless; so(k): k(k-1)/2 real
/// antisymmetric; sp(l): l(2l+1) skew-Hermitian preserving
/// J = [[0, I], [-I, 0]] (X^T J + J X = 0).
enum class ClassicalFamily { su, so, sp };
MatrixRep standard_generators(ClassicalFamily f, int size);

/// Generator-wise A -> A (x) 1 + 1 (x) A (Lie-algebra tensor square).
MatrixRep tensor_square(const MatrixRep& r);
/// Generator-wise A -> -A^T.
MatrixRep dual_rep(const MatrixRep& r);
/// Generator-wise A -> A (x) 1 - 1 (x) A^T.
MatrixRep tensor_with_dual_rep(const MatrixRep& r);

struct CommutantResult {
  int dim = -1;                   // complex dimension; -1 when indeterminate
  bool indeterminate = false;
  Backend backend = Backend::exact;
  double tolerance = 0.0;         // float backend only
  double spectral_gap = 0.0;      // float backend only; ratio across the cut
  std::vector<GQMatrix> basis;    // exact backend only (spanning set)
  std::vector<Eigen::VectorXcd> float_basis;  // float backend only
};

/// Dimension (over C) of {X : [X, A_i] = 0 for all generators}, via the
/// nullspace of the stacked Sylvester operators.  The float backend
/// reports the spectral gap at the rank cut and returns indeterminate
/// when the gap ratio is below 1e3.
CommutantResult commutant(const MatrixRep& r, Backend backend,
                          double tolerance = 1e-9, std::uint64_t seed = 1);

/// Convenience: commutant dimension with preconditions of `commutant`.
int commutant_dimension(const MatrixRep& r, Backend backend = Backend::exact,
                        double tolerance = 1e-9);

/// Commutant dimension of {U (x) U : U in the list} (group tensor square).
/// Inputs must be unitary (checked exactly / within tolerance).
int commutant_dimension_group(const std::vector<GQMatrix>& unitaries,
                              Backend backend = Backend::exact,
                              double tolerance = 1e-9);

/// Real Lie algebra generated by the generators under commutators.
struct ClosureResult {
  int dim = 0;                       // real dimension
  std::vector<GQMatrix> basis;       // exact inputs
  std::vector<Eigen::MatrixXcd> float_basis;
};
ClosureResult lie_closure(const MatrixRep& r, double tolerance = 1e-9);

/// Split a bracket-closed exact basis into center and semisimple part
/// ([g,g]); dimensions add up to the input dimension.
struct ReductiveSplit {
  std::vector<GQMatrix> center;
  std::vector<GQMatrix> semisimple;
};
ReductiveSplit split_reductive(const std::vector<GQMatrix>& closure_basis);

/// Isotypic block structure detected from a random Hermitian commutant
/// element: blocks (d_i, m_i) with sum d_i m_i = dim, sum m_i^2 =
/// commutant dimension.
struct IsotypicProfile {
  bool indeterminate = false;
  std::string diagnostic;
  std::vector<std::pair<int, int>> blocks;  // (irrep dim d_i, multiplicity m_i)
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};
IsotypicProfile isotypic_profile(const MatrixRep& r, std::uint64_t seed = 1,
                                 double tolerance = 1e-7);

/// Exact membership test: is m in the real span of the given matrices?
bool in_real_span(const std::vector<GQMatrix>& basis, const GQMatrix& m);

/// Duality identity check: the commutant of phi (x) psi equals the
/// partial transpose (second factor) of the commutant of phi (x) dual(psi).
bool partial_transpose_check(const MatrixRep& rphi, const MatrixRep& rpsi);

}  // namespace liesq
