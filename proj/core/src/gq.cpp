#include "liesq/gq.hpp"

#include <stdexcept>

namespace liesq {

GQ GQ::inv() const {
  Rat n = re * re + im * im;
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re / n, -im / n};
}

GQMatrix GQMatrix::identity(int n) {
  GQMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GQ(1);
  return m;
}

bool GQMatrix::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

GQMatrix GQMatrix::transpose() const {
  GQMatrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
  return m;
}

GQMatrix GQMatrix::conj_transpose() const {
  GQMatrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

GQMatrix operator+(const GQMatrix& x, const GQMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix shape mismatch");
  GQMatrix m = x;
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
  return m;
}

GQMatrix operator-(const GQMatrix& x, const GQMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix shape mismatch");
  GQMatrix m = x;
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] -= y.a[i];
  return m;
}

GQMatrix operator*(const GQMatrix& x, const GQMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  GQMatrix m(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const GQ& f = x(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const GQ& g = y(k, j);
        if (!g.is_zero()) m(i, j) += f * g;
      }
    }
  }
  return m;
}

GQMatrix GQMatrix::kron(const GQMatrix& x, const GQMatrix& y) {
  GQMatrix m(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x(i, j).is_zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          if (!y(k, l).is_zero())
            m(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
    }
  return m;
}

Eigen::MatrixXcd GQMatrix::to_eigen() const {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

GQMatrix bracket(const GQMatrix& x, const GQMatrix& y) { return x * y - y * x; }

bool is_skew_hermitian(const GQMatrix& x) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = i; j < x.cols; ++j)
      if (!(x(i, j) + x(j, i).conj()).is_zero()) return false;
  return true;
}

bool is_traceless(const GQMatrix& x) {
  GQ t;
  for (int i = 0; i < x.rows; ++i) t += x(i, i);
  return t.is_zero();
}

bool is_real_antisymmetric(const GQMatrix& x) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x(i, j).im != 0) return false;
      if (x(i, j).re != -x(j, i).re) return false;
    }
  return true;
}

bool is_unitary(const GQMatrix& x) {
  if (x.rows != x.cols) return false;
  return x * x.conj_transpose() == GQMatrix::identity(x.rows);
}

}  // namespace liesq
