#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hal/bigint.hpp"
#include "hal/fp.hpp"
#include "hal/rational.hpp"

namespace hal {

// Dense matrix over an exact scalar type (int64, Rat, Fp, BigInt).
template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!(x == T(0))) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat: shape mismatch in *");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& v = x(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < y.cols; ++j) {
          if (y(k, j) == T(0)) continue;
          r(i, j) += v * y(k, j);
        }
      }
    return r;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("Mat: shape mismatch in +");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("Mat: shape mismatch in -");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a) x = -x;
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  static Mat hstack(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("Mat: hstack rows");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
      for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
      for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
    }
    return r;
  }
  static Mat vstack(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) throw std::invalid_argument("Mat: vstack cols");
    Mat r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (int i = 0; i < y.rows; ++i)
      for (int j = 0; j < x.cols; ++j) r(x.rows + i, j) = y(i, j);
    return r;
  }

  Mat block(int r0, int c0, int r, int c) const {
    Mat out(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
};

using IMat = Mat<std::int64_t>;
using QMat = Mat<Rat>;
using FMat = Mat<Fp>;
using ZMat = Mat<BigInt>;

QMat to_q(const IMat& m);
ZMat to_z(const IMat& m);
FMat to_f(const IMat& m, std::uint64_t p);
FMat q_to_f(const QMat& m, std::uint64_t p);  // throws if a denominator vanishes mod p
IMat q_to_i(const QMat& m);                   // requires integer entries that fit

// In-place reduced row echelon form over a field (Rat or Fp).
// Returns rank; pivot columns appended to `pivots` if non-null.
template <class F>
int rref(Mat<F>& m, std::vector<int>* pivots = nullptr);

// Basis of the right kernel, returned as columns.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m);

// Solve A * X = B over a field; nullopt if inconsistent.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& A, const Mat<F>& B);

template <class F>
int rank_of(const Mat<F>& m) {
  Mat<F> c = m;
  return rref(c);
}

// Exact rank of an integer matrix. A full-rank result modulo a large prime is
// a valid certificate (rank_p <= rank_Q <= min(rows, cols)); otherwise falls
// back to exact rational elimination.
int rank_exact(const IMat& m);

// Exact rank of a rational matrix with the same mod-p fast path.
int rank_exact_q(const QMat& m);

constexpr std::uint64_t kCertPrime = 2147483629ull;  // large prime for certificates

// Limit of a finite strictly commuting diagram of vector spaces: objects
// 0..dims.size()-1, arrows (src, tgt, matrix). Returns a basis of the limit
// inside the product plus the cone maps onto each object.
struct PosetLimit {
  int dim = 0;
  QMat basis;                  // (sum dims) x dim
  std::vector<QMat> cone;      // cone[i]: limit -> object i
};
struct DiagramArrow {
  int src = 0, tgt = 0;
  QMat map;
};
PosetLimit poset_limit(const std::vector<int>& dims, const std::vector<DiagramArrow>& arrows);

}  // namespace hal
