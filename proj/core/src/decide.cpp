#include "liesq/decide.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace liesq {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::full: return "full";
    case Verdict::proper: return "proper";
    default: return "indeterminate";
  }
}

int DecisionReport::exit_code() const {
  switch (verdict) {
    case Verdict::full: return 0;
    case Verdict::proper: return 1;
    default: return 2;
  }
}

std::string DecisionReport::to_json() const {
  nlohmann::json j;
  j["procedure"] = procedure;
  j["verdict"] = to_string(verdict);
  j["computed_dim"] = computed_dim;
  j["expected_dim"] = expected_dim;
  j["backend"] = backend == Backend::exact ? "exact" : "float";
  j["seed"] = seed;
  if (backend == Backend::floating) {
    j["tolerance"] = tolerance;
    j["spectral_gap"] = spectral_gap;
  }
  if (!note.empty()) j["note"] = note;
  if (center_dim >= 0) {
    j["center_dim"] = center_dim;
    j["semisimple_certified"] = semisimple_certified;
  }
  if (closure_dim >= 0) {
    j["closure_dim"] = closure_dim;
    if (parent_closure_dim >= 0) j["parent_closure_dim"] = parent_closure_dim;
  }
  return j.dump();
}

std::string DecisionReport::to_text() const {
  std::ostringstream os;
  os << procedure << ": " << to_string(verdict);
  if (computed_dim >= 0) os << " (commutant dim " << computed_dim;
  if (expected_dim >= 0) os << ", full would be " << expected_dim;
  if (computed_dim >= 0) os << ")";
  os << " [backend " << (backend == Backend::exact ? "exact" : "float") << ", seed "
     << seed;
  if (backend == Backend::floating)
    os << ", tolerance " << tolerance << ", gap " << spectral_gap;
  os << "]";
  if (center_dim >= 0)
    os << " center dim " << center_dim
       << (semisimple_certified ? " (semisimple certified)" : "");
  if (closure_dim >= 0) {
    os << " closure dim " << closure_dim;
    if (parent_closure_dim >= 0) os << "/" << parent_closure_dim;
  }
  if (!note.empty()) os << " -- " << note;
  return os.str();
}

namespace {

void check_shape(const MatrixRep& r, int n, const char* what) {
  if (r.dim != n) throw std::invalid_argument(std::string(what) + ": dim mismatch");
  if (r.generator_count() == 0)
    throw std::invalid_argument(std::string(what) + ": no generators");
  for (const auto& g : r.exact)
    if (g.rows != n || g.cols != n)
      throw std::invalid_argument(std::string(what) + ": generator shape mismatch");
  for (const auto& g : r.flt)
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument(std::string(what) + ": generator shape mismatch");
}

bool skew_f(const Eigen::MatrixXcd& g, double tol) {
  return (g + g.adjoint()).norm() <= tol * std::max(1.0, g.norm());
}

// Verdict from the tensor-square commutant dimension against the
// full-algebra constant.
DecisionReport full_test(const MatrixRep& r, int expected, std::string name,
                         const DecideOptions& opt, int full_closure_dim) {
  DecisionReport rep;
  rep.procedure = std::move(name);
  rep.expected_dim = expected;
  rep.backend = opt.backend;
  rep.tolerance = opt.tolerance;
  rep.seed = opt.seed;

  CommutantResult cr = commutant(tensor_square(r), opt.backend, opt.tolerance, opt.seed);
  rep.spectral_gap = cr.spectral_gap;
  if (cr.indeterminate) {
    rep.verdict = Verdict::indeterminate;
    rep.note = "float rank decision not certified (spectral gap too small)";
    return rep;
  }
  rep.computed_dim = cr.dim;
  rep.verdict = cr.dim == expected ? Verdict::full : Verdict::proper;

  if (opt.cross_check_closure) {
    rep.closure_dim = lie_closure(r, opt.tolerance).dim;
    rep.parent_closure_dim = full_closure_dim;
  }
  return rep;
}

}  // namespace

DecisionReport is_full_su(const MatrixRep& r, int n, const DecideOptions& opt) {
  if (n < 2) throw std::invalid_argument("is_full_su needs n >= 2");
  check_shape(r, n, "is_full_su");
  for (const auto& g : r.exact)
    if (!is_skew_hermitian(g) || !is_traceless(g))
      throw std::invalid_argument("is_full_su: generators must be traceless skew-Hermitian");
  for (const auto& g : r.flt)
    if (!skew_f(g, opt.tolerance) ||
        std::abs(g.trace()) > opt.tolerance * std::max(1.0, g.norm()))
      throw std::invalid_argument("is_full_su: generators must be traceless skew-Hermitian");
  return full_test(r, 2, "is_full_su(" + std::to_string(n) + ")", opt, n * n - 1);
}

DecisionReport is_full_so(const MatrixRep& r, int k, const DecideOptions& opt) {
  if (k < 5) throw std::invalid_argument("is_full_so needs k >= 5 (so(4) is not simple)");
  check_shape(r, k, "is_full_so");
  for (const auto& g : r.exact)
    if (!is_real_antisymmetric(g))
      throw std::invalid_argument("is_full_so: generators must be real antisymmetric");
  for (const auto& g : r.flt)
    if ((g + g.transpose()).norm() > opt.tolerance * std::max(1.0, g.norm()) ||
        g.imag().norm() > opt.tolerance * std::max(1.0, g.norm()))
      throw std::invalid_argument("is_full_so: generators must be real antisymmetric");
  return full_test(r, 3, "is_full_so(" + std::to_string(k) + ")", opt, k * (k - 1) / 2);
}

DecisionReport is_full_sp(const MatrixRep& r, int l, const DecideOptions& opt) {
  if (l < 2) throw std::invalid_argument("is_full_sp needs l >= 2");
  const int n = 2 * l;
  check_shape(r, n, "is_full_sp");
  // J = [[0, I], [-I, 0]]; require X^T J + J X = 0 and skew-Hermiticity.
  GQMatrix J(n, n);
  for (int i = 0; i < l; ++i) {
    J(i, l + i) = GQ(1);
    J(l + i, i) = GQ(-1);
  }
  for (const auto& g : r.exact)
    if (!is_skew_hermitian(g) || !(g.transpose() * J + J * g).is_zero())
      throw std::invalid_argument(
          "is_full_sp: generators must be skew-Hermitian and preserve the symplectic form");
  Eigen::MatrixXcd Jf = J.to_eigen();
  for (const auto& g : r.flt)
    if (!skew_f(g, opt.tolerance) ||
        (g.transpose() * Jf + Jf * g).norm() > opt.tolerance * std::max(1.0, g.norm()))
      throw std::invalid_argument(
          "is_full_sp: generators must be skew-Hermitian and preserve the symplectic form");
  return full_test(r, 3, "is_full_sp(" + std::to_string(l) + ")", opt, l * (2 * l + 1));
}

DecisionReport equals_parent(const MatrixRep& r_h, const MatrixRep& r_g,
                             const DecideOptions& opt) {
  if (r_h.dim != r_g.dim)
    throw std::invalid_argument("equals_parent: representations act on different spaces");
  DecisionReport rep;
  rep.procedure = "equals_parent";
  rep.backend = opt.backend;
  rep.tolerance = opt.tolerance;
  rep.seed = opt.seed;

  // Containment and semisimplicity of the parent.
  if (r_g.is_exact() && r_h.is_exact()) {
    ClosureResult cl = lie_closure(r_g);
    rep.parent_closure_dim = cl.dim;
    for (const auto& h : r_h.exact)
      if (!in_real_span(cl.basis, h))
        throw std::invalid_argument(
            "equals_parent: a generator of the candidate lies outside the parent algebra");
    ReductiveSplit split = split_reductive(cl.basis);
    rep.center_dim = static_cast<int>(split.center.size());
    rep.semisimple_certified = split.center.empty();
    if (opt.cross_check_closure) rep.closure_dim = lie_closure(r_h).dim;
  } else {
    // Float inputs: containment within tolerance; semisimplicity is not
    // certified and the report says so.
    MatrixRep gf;
    gf.dim = r_g.dim;
    gf.flt = r_g.to_float();
    ClosureResult cl = lie_closure(gf, opt.tolerance);
    rep.parent_closure_dim = cl.dim;
    std::vector<Eigen::VectorXd> ortho;
    auto realv = [](const Eigen::MatrixXcd& m) {
      Eigen::VectorXd v(2 * m.size());
      const std::complex<double>* p = m.data();
      for (Eigen::Index i = 0; i < m.size(); ++i) {
        v(2 * i) = p[i].real();
        v(2 * i + 1) = p[i].imag();
      }
      return v;
    };
    for (const auto& b : cl.float_basis) {
      Eigen::VectorXd v = realv(b);
      for (const auto& u : ortho) v -= u.dot(v) * u;
      if (v.norm() > opt.tolerance) ortho.push_back(v.normalized());
    }
    for (const auto& h : r_h.to_float()) {
      Eigen::VectorXd v = realv(h);
      double scale = std::max(1.0, v.norm());
      for (const auto& u : ortho) v -= u.dot(v) * u;
      if (v.norm() > 1e-6 * scale)
        throw std::invalid_argument(
            "equals_parent: a generator of the candidate lies outside the parent algebra");
    }
    rep.note = "parent semisimplicity asserted, not certified (float input)";
    rep.semisimple_certified = false;
    if (opt.cross_check_closure) {
      MatrixRep hf;
      hf.dim = r_h.dim;
      hf.flt = r_h.to_float();
      rep.closure_dim = lie_closure(hf, opt.tolerance).dim;
    }
  }

  CommutantResult ch = commutant(tensor_square(r_h), opt.backend, opt.tolerance, opt.seed);
  CommutantResult cg = commutant(tensor_square(r_g), opt.backend, opt.tolerance, opt.seed);
  rep.spectral_gap = std::min(ch.spectral_gap, cg.spectral_gap);
  if (ch.indeterminate || cg.indeterminate) {
    rep.verdict = Verdict::indeterminate;
    rep.note = "float rank decision not certified (spectral gap too small)";
    return rep;
  }
  rep.computed_dim = ch.dim;
  rep.expected_dim = cg.dim;

  if (ch.dim != cg.dim) {
    rep.verdict = Verdict::proper;
    return rep;
  }
  if (rep.center_dim > 0) {
    // Equal dimensions only identify the semisimple parts.
    rep.verdict = Verdict::indeterminate;
    rep.note = "semisimple parts equal; center comparison unresolved (parent not semisimple)";
    return rep;
  }
  rep.verdict = Verdict::full;
  return rep;
}

bool gap_bound_check(const SimpleType& t, const Weight& lambda) {
  check_dominant_weight(t, lambda);
  SemisimpleAlgebra g{{t}};
  if (!is_self_dual(g, lambda))
    throw std::invalid_argument("gap_bound_check requires a self-dual highest weight");
  int b = 0;
  for (int x : lambda)
    if (x != 0) ++b;
  Decomposition sq = tensor_decompose(g, lambda, lambda);
  return sq.mult(adjoint_weight(t)) == b;
}

}  // namespace liesq
