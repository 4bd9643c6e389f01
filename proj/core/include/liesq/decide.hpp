#pragma once

#include "liesq/decomp.hpp"
#include "liesq/matrixrep.hpp"

namespace liesq {

enum class Verdict { full, proper, indeterminate };
const char* to_string(Verdict v);

/// Outcome of one decision procedure, with enough metadata to reproduce
/// the run.  `full`/`proper` are only issued when the backend certifies
/// the commutant dimensions (exact, or float with an adequate spectral
/// gap); everything else is `indeterminate`.
struct DecisionReport {
  std::string procedure;
  Verdict verdict = Verdict::indeterminate;
  int computed_dim = -1;  // commutant dim of the (restricted) tensor square
  int expected_dim = -1;  // the dimension a full algebra would give
  Backend backend = Backend::exact;
  double tolerance = 0.0;
  std::uint64_t seed = 1;
  double spectral_gap = 0.0;  // float backend only
  std::string note;

  // equals_parent extras
  int center_dim = -1;             // parent center dimension (-1: not computed)
  bool semisimple_certified = false;

  // optional closure-oracle cross-check
  int closure_dim = -1;
  int parent_closure_dim = -1;

  int exit_code() const;  // 0 full, 1 proper, 2 indeterminate
  std::string to_json() const;
  std::string to_text() const;
};

struct DecideOptions {
  Backend backend = Backend::exact;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  bool cross_check_closure = false;  // also run the Lie-closure oracle
};

/// Full-algebra tests: the tensor-square commutant has dimension exactly
/// 2 for su(n) (n >= 2) and exactly 3 for so(k) (k >= 5) and sp(l)
/// (l >= 2); any larger certified dimension proves the generated algebra
/// proper.  Preconditions on the generators (shape, tracelessness,
/// skew-Hermiticity, invariant form) are checked and reported as errors.
DecisionReport is_full_su(const MatrixRep& r, int n, const DecideOptions& opt = {});
DecisionReport is_full_so(const MatrixRep& r, int k, const DecideOptions& opt = {});
DecisionReport is_full_sp(const MatrixRep& r, int l, const DecideOptions& opt = {});

/// Generic equality test: do the generators of r_h generate the same
/// algebra as those of r_g (both acting in the same representation
/// space)?  Requires the r_h generators to lie in the Lie closure of
/// r_g.  When the parent closure is semisimple (certified by its
/// center being zero), equal tensor-square commutant dimensions decide
/// equality.  A nonzero center restricts the conclusion to the
/// semisimple parts: equal dimensions then give an indeterminate
/// verdict with the center comparison marked unresolved.
DecisionReport equals_parent(const MatrixRep& r_h, const MatrixRep& r_g,
                             const DecideOptions& opt = {});

/// Weight-level check for self-dual lambda: the number of nonzero Dynkin
/// labels equals the multiplicity of the adjoint representation in the
/// tensor square.
bool gap_bound_check(const SimpleType& t, const Weight& lambda);

}  // namespace liesq
