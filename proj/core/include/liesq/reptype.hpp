#pragma once

#include "liesq/rootsys.hpp"

namespace liesq {

/// Reality class of an irreducible representation of a compact algebra:
/// orthogonal (real), symplectic (quaternionic) or unitary (complex).
enum class RepClass { orthogonal, symplectic, unitary };

const char* to_string(RepClass c);

/// Classification by closed-form label rules (one rule per family).
RepClass malcev_class(const SimpleType& t, const Weight& lambda);
RepClass malcev_class(const SemisimpleAlgebra& g, const Weight& lambda);

/// Independent oracle: unitary iff not self-dual; otherwise the sign of
/// the trivial component of the second Adams operation (equivalently,
/// whether the invariant bilinear form sits in the symmetric or the
/// alternating square) separates orthogonal from symplectic.
RepClass fs_oracle(const SimpleType& t, const Weight& lambda);
RepClass fs_oracle(const SemisimpleAlgebra& g, const Weight& lambda);

}  // namespace liesq
