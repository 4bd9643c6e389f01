#include "liesq/reptype.hpp"

#include "liesq/decomp.hpp"

#include <stdexcept>

namespace liesq {

const char* to_string(RepClass c) {
  switch (c) {
    case RepClass::orthogonal: return "orthogonal";
    case RepClass::symplectic: return "symplectic";
    case RepClass::unitary: return "unitary";
  }
  return "?";
}

RepClass malcev_class(const SimpleType& t, const Weight& x) {
  check_dominant_weight(t, x);
  const int l = t.rank;
  switch (t.family) {
    case Family::A: {
      for (int a = 0; a < l / 2; ++a)
        if (x[a] != x[l - 1 - a]) return RepClass::unitary;
      if (l % 4 == 1 && x[(l - 1) / 2] % 2 == 1) return RepClass::symplectic;
      return RepClass::orthogonal;
    }
    case Family::B: {
      if ((l % 4 == 1 || l % 4 == 2) && x[l - 1] % 2 == 1)
        return RepClass::symplectic;
      return RepClass::orthogonal;
    }
    case Family::C: {
      int s = 0;
      for (int a = 0; a < l; a += 2) s += x[a];  // labels x_1, x_3, ...
      return s % 2 == 1 ? RepClass::symplectic : RepClass::orthogonal;
    }
    case Family::D: {
      if (l % 2 == 1 && x[l - 2] != x[l - 1]) return RepClass::unitary;
      if (l % 4 == 2 && (x[l - 2] + x[l - 1]) % 2 == 1) return RepClass::symplectic;
      return RepClass::orthogonal;
    }
    case Family::E6: {
      if (x[0] == x[5] && x[2] == x[4]) return RepClass::orthogonal;
      return RepClass::unitary;
    }
    case Family::E7: {
      return (x[1] + x[4] + x[6]) % 2 == 1 ? RepClass::symplectic
                                           : RepClass::orthogonal;
    }
    case Family::E8:
    case Family::F4:
    case Family::G2:
      return RepClass::orthogonal;
  }
  throw std::logic_error("unreachable");
}

RepClass malcev_class(const SemisimpleAlgebra& g, const Weight& lambda) {
  auto parts = g.split(lambda);
  bool self_dual = true;
  int symplectic_factors = 0;
  for (size_t i = 0; i < g.factors.size(); ++i) {
    RepClass c = malcev_class(g.factors[i], parts[i]);
    if (c == RepClass::unitary) self_dual = false;
    if (c == RepClass::symplectic) ++symplectic_factors;
  }
  // An outer product is complex as soon as one factor is; otherwise the
  // invariant forms multiply, so an odd number of symplectic factors
  // makes the product symplectic.
  if (!self_dual) return RepClass::unitary;
  return symplectic_factors % 2 == 1 ? RepClass::symplectic : RepClass::orthogonal;
}

RepClass fs_oracle(const SemisimpleAlgebra& g, const Weight& lambda) {
  check_dominant_weight(g, lambda);
  if (!is_self_dual(g, lambda)) return RepClass::unitary;
  auto adams = adams_square(g, lambda);
  Weight zero(g.rank(), 0);
  auto it = adams.terms.find(zero);
  Int ind = it == adams.terms.end() ? Int(0) : it->second;
  if (ind == 1) return RepClass::orthogonal;
  if (ind == -1) return RepClass::symplectic;
  throw std::logic_error("self-dual irrep with indicator " + ind.str());
}

RepClass fs_oracle(const SimpleType& t, const Weight& lambda) {
  return fs_oracle(SemisimpleAlgebra{{t}}, lambda);
}

}  // namespace liesq
