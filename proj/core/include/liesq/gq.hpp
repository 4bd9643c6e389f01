#pragma once

#include "liesq/rootsys.hpp"  // Int, Rat

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace liesq {

/// Exact complex scalar: a Gaussian rational re + im*i.
struct GQ {
  Rat re, im;

  GQ() : re(0), im(0) {}
  GQ(Rat r) : re(std::move(r)), im(0) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GQ(int r) : re(r), im(0) {}
  GQ(int r, int i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GQ conj() const { return {re, -im}; }

  friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GQ operator-(const GQ& a) { return {-a.re, -a.im}; }
  friend GQ operator*(const GQ& a, const GQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GQ& operator+=(const GQ& b) { re += b.re; im += b.im; return *this; }
  GQ& operator-=(const GQ& b) { re -= b.re; im -= b.im; return *this; }
  friend bool operator==(const GQ& a, const GQ& b) = default;

  GQ inv() const;
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/// Dense matrix of Gaussian rationals (row-major).
struct GQMatrix {
  int rows = 0, cols = 0;
  std::vector<GQ> a;

  GQMatrix() = default;
  GQMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  GQ& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const GQ& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static GQMatrix identity(int n);
  static GQMatrix zero(int r, int c) { return GQMatrix(r, c); }

  bool is_zero() const;
  GQMatrix transpose() const;
  GQMatrix conj_transpose() const;
  friend GQMatrix operator+(const GQMatrix& x, const GQMatrix& y);
  friend GQMatrix operator-(const GQMatrix& x, const GQMatrix& y);
  friend GQMatrix operator*(const GQMatrix& x, const GQMatrix& y);
  friend bool operator==(const GQMatrix& x, const GQMatrix& y) = default;

  /// Kronecker product.
  static GQMatrix kron(const GQMatrix& x, const GQMatrix& y);

  Eigen::MatrixXcd to_eigen() const;
};

/// [X, Y] = XY - YX.
GQMatrix bracket(const GQMatrix& x, const GQMatrix& y);

bool is_skew_hermitian(const GQMatrix& x);
bool is_traceless(const GQMatrix& x);
bool is_real_antisymmetric(const GQMatrix& x);
bool is_unitary(const GQMatrix& x);

}  // namespace liesq
