#include "liesq/matrixrep.hpp"

#include "liesq/modkernel.hpp"

#include <random>
#include <stdexcept>

namespace liesq {

namespace {

Eigen::MatrixXcd kron_f(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  Eigen::MatrixXcd m(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      m.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return m;
}

}  // namespace

std::vector<Eigen::MatrixXcd> MatrixRep::to_float() const {
  if (!is_exact()) return flt;
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(exact.size());
  for (const auto& g : exact) out.push_back(g.to_eigen());
  return out;
}

MatrixRep standard_generators(ClassicalFamily f, int size) {
  MatrixRep r;
  auto E = [](int n, int i, int j, GQ v) {
    GQMatrix m(n, n);
    m(i, j) = std::move(v);
    return m;
  };
  switch (f) {
    case ClassicalFamily::su: {
      int n = size;
      if (n < 2) throw std::invalid_argument("su(n) needs n >= 2");
      r.dim = n;
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          GQMatrix a(n, n);
          a(j, k) = GQ(1);
          a(k, j) = GQ(-1);
          r.exact.push_back(a);
          GQMatrix b(n, n);
          b(j, k) = GQ(0, 1);
          b(k, j) = GQ(0, 1);
          r.exact.push_back(b);
        }
      for (int j = 0; j + 1 < n; ++j) {
        GQMatrix c(n, n);
        c(j, j) = GQ(0, 1);
        c(j + 1, j + 1) = GQ(0, -1);
        r.exact.push_back(c);
      }
      break;
    }
    case ClassicalFamily::so: {
      int k = size;
      if (k < 2) throw std::invalid_argument("so(k) needs k >= 2");
      r.dim = k;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          r.exact.push_back(E(k, i, j, GQ(1)) - E(k, j, i, GQ(1)));
      break;
    }
    case ClassicalFamily::sp: {
      int l = size;
      if (l < 1) throw std::invalid_argument("sp(l) needs l >= 1");
      int n = 2 * l;
      r.dim = n;
      // X = [[A, B], [-B^dagger, -A^T]], A skew-Hermitian, B symmetric.
      auto emit = [&](const GQMatrix& A, const GQMatrix& B) {
        GQMatrix x(n, n);
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < l; ++j) {
            x(i, j) = A(i, j);
            x(i, l + j) = B(i, j);
            x(l + i, j) = -B(j, i).conj();
            x(l + i, l + j) = -A(j, i);
          }
        r.exact.push_back(x);
      };
      GQMatrix Z(l, l);
      for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) {
          if (i != j) {
            emit(E(l, i, j, GQ(1)) - E(l, j, i, GQ(1)), Z);
            emit(E(l, i, j, GQ(0, 1)) + E(l, j, i, GQ(0, 1)), Z);
            emit(Z, E(l, i, j, GQ(1)) + E(l, j, i, GQ(1)));
            emit(Z, E(l, i, j, GQ(0, 1)) + E(l, j, i, GQ(0, 1)));
          } else {
            emit(E(l, i, i, GQ(0, 1)), Z);
            emit(Z, E(l, i, i, GQ(1)));
            emit(Z, E(l, i, i, GQ(0, 1)));
          }
        }
      break;
    }
  }
  return r;
}

MatrixRep tensor_square(const MatrixRep& r) {
  MatrixRep out;
  out.dim = r.dim * r.dim;
  if (r.is_exact()) {
    GQMatrix id = GQMatrix::identity(r.dim);
    for (const auto& g : r.exact)
      out.exact.push_back(GQMatrix::kron(g, id) + GQMatrix::kron(id, g));
  } else {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(r.dim, r.dim);
    for (const auto& g : r.flt) out.flt.push_back(kron_f(g, id) + kron_f(id, g));
  }
  return out;
}

MatrixRep dual_rep(const MatrixRep& r) {
  MatrixRep out;
  out.dim = r.dim;
  if (r.is_exact()) {
    for (const auto& g : r.exact) out.exact.push_back(GQMatrix::zero(r.dim, r.dim) - g.transpose());
  } else {
    for (const auto& g : r.flt) out.flt.push_back(-g.transpose());
  }
  return out;
}

MatrixRep tensor_with_dual_rep(const MatrixRep& r) {
  MatrixRep out;
  out.dim = r.dim * r.dim;
  if (r.is_exact()) {
    GQMatrix id = GQMatrix::identity(r.dim);
    for (const auto& g : r.exact)
      out.exact.push_back(GQMatrix::kron(g, id) - GQMatrix::kron(id, g.transpose()));
  } else {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(r.dim, r.dim);
    for (const auto& g : r.flt)
      out.flt.push_back(kron_f(g, id) - kron_f(id, g.transpose()));
  }
  return out;
}

namespace {

// Float nullspace of the stacked Sylvester operators, by kernel
// refinement: eigen-decomposition of S^dagger S for a random generator
// combination, then per-generator restriction SVDs.  Tracks the worst
// singular-value gap at any rank cut.
CommutantResult commutant_float_impl(const std::vector<Eigen::MatrixXcd>& gens, int k,
                                     double tol, std::uint64_t seed) {
  CommutantResult res;
  res.backend = Backend::floating;
  res.tolerance = tol;
  const int n = k * k;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(k, k);
  for (const auto& g : gens) C += std::complex<double>(gauss(rng), gauss(rng)) * g;

  auto sylvester = [&](const Eigen::MatrixXcd& M) {
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(k, k);
    return (kron_f(M, id) - kron_f(id, M.transpose())).eval();
  };

  double worst_gap = std::numeric_limits<double>::infinity();
  auto record_gap = [&](double below_max, double above_min, bool have_below,
                        bool have_above) {
    double gap;
    if (have_below && have_above)
      gap = above_min / std::max(below_max, 1e-300);
    else if (have_above)
      gap = above_min / tol;
    else if (have_below)
      gap = tol / std::max(below_max, 1e-300);
    else
      return;
    worst_gap = std::min(worst_gap, gap);
  };

  // Step 0: kernel of the combined operator.  A rank-revealing complete
  // orthogonal decomposition gives the loose kernel candidate with
  // backward-stable (eps-level) accuracy; an accurate small SVD of S
  // restricted to that candidate then makes the actual cut at `tol`.
  Eigen::MatrixXcd S = sylvester(C);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(S);
  cod.setThreshold(1e-5);
  const int cand = n - static_cast<int>(cod.rank());
  const double smax = std::max(1.0, std::abs(cod.maxPivot()));
  const double thr = tol * smax;
  Eigen::MatrixXcd K;
  if (cand == 0) {
    // No candidate kernel at all; take the smallest Sylvester singular
    // value as the "above" side of the cut (loose but honest).
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd0(S);
    record_gap(0.0, svd0.singularValues()(n - 1) / smax, false, true);
    K.resize(n, 0);
  } else {
    Eigen::MatrixXcd K0 =
        cod.colsPermutation() * cod.matrixZ().adjoint().rightCols(cand);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd0(S * K0, Eigen::ComputeFullV);
    const auto& s = svd0.singularValues();  // descending, size = cand
    int keep0 = 0;
    while (keep0 < cand && s(keep0) >= thr) ++keep0;
    // The value just above the cut is either the smallest kept candidate
    // or (if none was kept) the loose-rank bound itself.
    double above = keep0 > 0 ? s(keep0 - 1) / smax : 1e-5;
    record_gap(keep0 < cand ? s(keep0) / smax : 0.0, above, keep0 < cand, true);
    K = (K0 * svd0.matrixV().rightCols(cand - keep0)).eval();
  }

  // Refinement by each generator.
  for (const auto& M : gens) {
    if (K.cols() == 0) break;
    Eigen::MatrixXcd SM = sylvester(M);
    Eigen::MatrixXcd T = SM * K;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();  // descending, size = cols(K)
    int m = static_cast<int>(K.cols());
    double scale = std::max(1.0, M.norm());
    double thr_m = tol * scale;
    int keep_from = 0;
    while (keep_from < m && s(keep_from) >= thr_m) ++keep_from;
    // s(keep_from..m-1) are the kernel directions
    record_gap(keep_from < m ? s(keep_from) / scale : 0.0,
               keep_from > 0 ? s(keep_from - 1) / scale : 0.0, keep_from < m,
               keep_from > 0);
    K = (K * svd.matrixV().rightCols(m - keep_from)).eval();
  }

  res.spectral_gap = worst_gap;
  if (worst_gap < 1e3) {
    res.indeterminate = true;
    res.dim = -1;
    return res;
  }
  res.dim = static_cast<int>(K.cols());
  res.float_basis.reserve(K.cols());
  for (int j = 0; j < K.cols(); ++j) res.float_basis.push_back(K.col(j));
  return res;
}

}  // namespace

CommutantResult commutant(const MatrixRep& r, Backend backend, double tolerance,
                          std::uint64_t seed) {
  if (r.generator_count() == 0) throw std::invalid_argument("no generators");
  if (backend == Backend::exact) {
    if (!r.is_exact())
      throw std::invalid_argument("exact backend requires exact-scalar input");
    CommutantResult res;
    res.backend = Backend::exact;
    res.basis = commutant_basis_exact(r.exact, seed);
    res.dim = static_cast<int>(res.basis.size());
    return res;
  }
  return commutant_float_impl(r.to_float(), r.dim, tolerance, seed);
}

int commutant_dimension(const MatrixRep& r, Backend backend, double tolerance) {
  CommutantResult res = commutant(r, backend, tolerance);
  if (res.indeterminate)
    throw std::runtime_error("float commutant indeterminate: spectral gap " +
                             std::to_string(res.spectral_gap));
  return res.dim;
}

int commutant_dimension_group(const std::vector<GQMatrix>& unitaries, Backend backend,
                              double tolerance) {
  if (unitaries.empty()) throw std::invalid_argument("no unitaries");
  int d = unitaries[0].rows;
  MatrixRep squares;
  squares.dim = d * d;
  for (const auto& u : unitaries) {
    if (u.rows != d || u.cols != d)
      throw std::invalid_argument("unitaries must be square and of equal size");
    if (!is_unitary(u)) throw std::invalid_argument("input matrix is not unitary");
    squares.exact.push_back(GQMatrix::kron(u, u));
  }
  return commutant_dimension(squares, backend, tolerance);
}

bool partial_transpose_check(const MatrixRep& rphi, const MatrixRep& rpsi) {
  if (rphi.generator_count() != rpsi.generator_count())
    throw std::invalid_argument("generator lists must pair up");
  if (!rphi.is_exact() || !rpsi.is_exact())
    throw std::invalid_argument("partial_transpose_check requires exact inputs");
  const int da = rphi.dim, db = rpsi.dim;

  MatrixRep prod, prod_dual;
  prod.dim = prod_dual.dim = da * db;
  GQMatrix ia = GQMatrix::identity(da), ib = GQMatrix::identity(db);
  for (size_t g = 0; g < rphi.exact.size(); ++g) {
    prod.exact.push_back(GQMatrix::kron(rphi.exact[g], ib) +
                         GQMatrix::kron(ia, rpsi.exact[g]));
    prod_dual.exact.push_back(GQMatrix::kron(rphi.exact[g], ib) -
                              GQMatrix::kron(ia, rpsi.exact[g].transpose()));
  }
  auto ca = commutant_basis_exact(prod.exact);
  auto cb = commutant_basis_exact(prod_dual.exact);
  if (ca.size() != cb.size()) return false;

  // Partial transpose on the second factor: X[(i,j),(k,l)] -> X[(i,l),(k,j)].
  auto tau = [&](const GQMatrix& x) {
    GQMatrix y(x.rows, x.cols);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j)
        for (int k = 0; k < da; ++k)
          for (int l = 0; l < db; ++l)
            y(i * db + l, k * db + j) = x(i * db + j, k * db + l);
    return y;
  };

  std::vector<std::vector<GQ>> rows;
  auto push = [&](const GQMatrix& m) { rows.push_back(m.a); };
  for (const auto& m : ca) push(m);
  int rank_a = gq_rank(rows);
  for (const auto& m : cb) push(tau(m));
  int rank_union = gq_rank(rows);
  return rank_a == static_cast<int>(ca.size()) && rank_union == rank_a;
}

}  // namespace liesq
