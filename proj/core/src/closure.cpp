#include "liesq/matrixrep.hpp"

#include <deque>
#include <stdexcept>

namespace liesq {

namespace {

// Incremental reduced row echelon form over the rationals, used to track
// the real span of realified matrices.
class RatSpan {
 public:
  // Reduce v against the current rows; returns the residual.
  std::vector<Rat> reduce(std::vector<Rat> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rat& c = v[pivots_[r]];
      if (c == 0) continue;
      Rat f = c;  // rows are pivot-normalized
      for (size_t j = 0; j < v.size(); ++j)
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
  }

  // Insert if independent; returns true when the span grew.
  bool insert(const std::vector<Rat>& v) {
    auto r = reduce(v);
    size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) return false;
    Rat inv = Rat(1) / r[p];
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(static_cast<int>(p));
    return true;
  }

  size_t dim() const { return rows_.size(); }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

std::vector<Rat> realify(const GQMatrix& m) {
  std::vector<Rat> v;
  v.reserve(m.a.size() * 2);
  for (const auto& x : m.a) {
    v.push_back(x.re);
    v.push_back(x.im);
  }
  return v;
}

Eigen::VectorXd realify_f(const Eigen::MatrixXcd& m) {
  Eigen::VectorXd v(2 * m.size());
  const std::complex<double>* p = m.data();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    v(2 * i) = p[i].real();
    v(2 * i + 1) = p[i].imag();
  }
  return v;
}

}  // namespace

ClosureResult lie_closure(const MatrixRep& r, double tolerance) {
  ClosureResult out;
  if (r.generator_count() == 0) return out;

  if (r.is_exact()) {
    RatSpan span;
    std::vector<GQMatrix> basis;
    std::deque<std::pair<size_t, size_t>> todo;
    auto add = [&](const GQMatrix& m) {
      if (!span.insert(realify(m))) return;
      for (size_t i = 0; i < basis.size(); ++i) todo.emplace_back(i, basis.size());
      basis.push_back(m);
    };
    for (const auto& g : r.exact) add(g);
    while (!todo.empty()) {
      auto [i, j] = todo.front();
      todo.pop_front();
      add(bracket(basis[i], basis[j]));
    }
    out.basis = std::move(basis);
    out.dim = static_cast<int>(span.dim());
    return out;
  }

  // Float variant: Gram-Schmidt with a tolerance-based rank decision.
  std::vector<Eigen::VectorXd> ortho;
  std::vector<Eigen::MatrixXcd> basis;
  std::deque<std::pair<size_t, size_t>> todo;
  auto add = [&](const Eigen::MatrixXcd& m) {
    Eigen::VectorXd v = realify_f(m);
    double scale = std::max(1.0, v.norm());
    for (const auto& u : ortho) v -= u.dot(v) * u;
    if (v.norm() <= tolerance * scale) return;
    ortho.push_back(v.normalized());
    for (size_t i = 0; i < basis.size(); ++i) todo.emplace_back(i, basis.size());
    basis.push_back(m);
  };
  for (const auto& g : r.flt) add(g);
  while (!todo.empty()) {
    auto [i, j] = todo.front();
    todo.pop_front();
    add(basis[i] * basis[j] - basis[j] * basis[i]);
  }
  out.float_basis = std::move(basis);
  out.dim = static_cast<int>(ortho.size());
  return out;
}

bool in_real_span(const std::vector<GQMatrix>& basis, const GQMatrix& m) {
  RatSpan span;
  for (const auto& b : basis) span.insert(realify(b));
  return span.contains(realify(m));
}

ReductiveSplit split_reductive(const std::vector<GQMatrix>& closure_basis) {
  const size_t n = closure_basis.size();
  if (n == 0) return {};

  // Reduced echelon rows of the basis plus the bookkeeping needed to
  // express arbitrary elements in basis coordinates.
  const size_t len = closure_basis[0].a.size() * 2;
  std::vector<std::vector<Rat>> rows;   // echelon rows
  std::vector<std::vector<Rat>> coeff;  // same row as combination of basis
  std::vector<int> pivots;
  auto express = [&](const GQMatrix& m, std::vector<Rat>* coords) -> bool {
    std::vector<Rat> v = realify(m);
    std::vector<Rat> c(n, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat f = v[pivots[r]];
      if (f == 0) continue;
      for (size_t j = 0; j < len; ++j)
        if (rows[r][j] != 0) v[j] -= f * rows[r][j];
      for (size_t j = 0; j < n; ++j)
        if (coeff[r][j] != 0) c[j] += f * coeff[r][j];
    }
    if (!std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; }))
      return false;
    if (coords) *coords = std::move(c);
    return true;
  };
  for (size_t b = 0; b < n; ++b) {
    std::vector<Rat> v = realify(closure_basis[b]);
    std::vector<Rat> c(n, 0);
    c[b] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat f = v[pivots[r]];
      if (f == 0) continue;
      for (size_t j = 0; j < len; ++j)
        if (rows[r][j] != 0) v[j] -= f * rows[r][j];
      for (size_t j = 0; j < n; ++j)
        if (coeff[r][j] != 0) c[j] -= f * coeff[r][j];
    }
    size_t p = 0;
    while (p < len && v[p] == 0) ++p;
    if (p == len) throw std::invalid_argument("closure basis is linearly dependent");
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& x : c) x *= inv;
    rows.push_back(std::move(v));
    coeff.push_back(std::move(c));
    pivots.push_back(static_cast<int>(p));
  }

  // Structure constants: [X_i, X_j] = sum_k s(i,j,k) X_k; also verifies
  // bracket closure.
  std::vector<std::vector<std::vector<Rat>>> s(n, std::vector<std::vector<Rat>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<Rat> c;
      if (!express(bracket(closure_basis[i], closure_basis[j]), &c))
        throw std::invalid_argument("input basis is not closed under brackets");
      s[i][j] = std::move(c);
    }

  // Center: coefficient vectors x with sum_i x_i [X_i, X_j] = 0 for all j.
  // Constraint matrix has one row per (j, k).
  std::vector<std::vector<Rat>> cons;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      std::vector<Rat> row(n);
      bool nonzero = false;
      for (size_t i = 0; i < n; ++i) {
        row[i] = s[i][j][k];
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) cons.push_back(std::move(row));
    }
  // Kernel of cons via echelon form.
  std::vector<int> cpiv;
  {
    size_t pr = 0;
    for (size_t col = 0; col < n && pr < cons.size(); ++col) {
      size_t sel = pr;
      while (sel < cons.size() && cons[sel][col] == 0) ++sel;
      if (sel == cons.size()) continue;
      std::swap(cons[pr], cons[sel]);
      Rat inv = Rat(1) / cons[pr][col];
      for (auto& x : cons[pr]) x *= inv;
      for (size_t r2 = 0; r2 < cons.size(); ++r2) {
        if (r2 == pr || cons[r2][col] == 0) continue;
        Rat f = cons[r2][col];
        for (size_t j = 0; j < n; ++j) cons[r2][j] -= f * cons[pr][j];
      }
      cpiv.push_back(static_cast<int>(col));
      ++pr;
    }
    cons.resize(pr);
  }

  ReductiveSplit out;
  std::vector<char> is_pivot(n, 0);
  for (int c : cpiv) is_pivot[c] = 1;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    // kernel vector for free column f
    std::vector<Rat> x(n, 0);
    x[f] = 1;
    for (size_t r = 0; r < cons.size(); ++r) x[cpiv[r]] -= cons[r][f];
    GQMatrix z(closure_basis[0].rows, closure_basis[0].cols);
    for (size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      GQ fc{x[i], Rat(0)};
      for (size_t e = 0; e < z.a.size(); ++e) z.a[e] += fc * closure_basis[i].a[e];
    }
    out.center.push_back(std::move(z));
  }

  // Semisimple part: independent brackets.
  RatSpan bspan;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      GQMatrix b = bracket(closure_basis[i], closure_basis[j]);
      if (b.is_zero()) continue;
      if (bspan.insert(realify(b))) out.semisimple.push_back(std::move(b));
    }

  if (out.center.size() + out.semisimple.size() != n)
    throw std::runtime_error(
        "center and bracket span do not decompose the algebra (input not reductive?)");
  return out;
}

}  // namespace liesq
