#include "hal/snf.hpp"

#include <stdexcept>

namespace hal {

namespace {

// Size heuristic for pivot selection: prefer +-1, then small magnitudes.
int weight(const BigInt& x) {
  if (x.is_zero()) return 1 << 30;
  BigInt a = x.abs();
  if (a.is_one()) return 0;
  if (a.fits_i64()) {
    std::int64_t v = a.to_i64();
    int w = 1;
    while (v > 16) {
      v >>= 4;
      ++w;
    }
    return w;
  }
  return 20;
}

}  // namespace

SmithForm smith_normal_form(const ZMat& A) {
  SmithForm out;
  ZMat D = A;
  ZMat U = ZMat::identity(A.rows);
  ZMat V = ZMat::identity(A.cols);

  auto row_op = [&](ZMat& M, int dst, int src, const BigInt& q) {
    for (int j = 0; j < M.cols; ++j)
      if (!M(src, j).is_zero()) M(dst, j) = M(dst, j) - q * M(src, j);
  };
  auto col_op = [&](ZMat& M, int dst, int src, const BigInt& q) {
    for (int i = 0; i < M.rows; ++i)
      if (!M(i, src).is_zero()) M(i, dst) = M(i, dst) - q * M(i, src);
  };
  auto swap_rows = [&](ZMat& M, int i, int j) {
    for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
  };
  auto swap_cols = [&](ZMat& M, int i, int j) {
    for (int r = 0; r < M.rows; ++r) std::swap(M(r, i), M(r, j));
  };

  int t = 0;
  const int tmax = std::min(D.rows, D.cols);
  while (t < tmax) {
    // Locate the cheapest nonzero pivot in the trailing block.
    int pi = -1, pj = -1, bw = 1 << 30;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j) {
        int w = weight(D(i, j));
        if (w < bw) {
          bw = w;
          pi = i;
          pj = j;
          if (w == 0) goto found;
        }
      }
  found:
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) {
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
    }
    if (pj != t) {
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);
    }
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < D.rows; ++i) {
        if (D(i, t).is_zero()) continue;
        BigInt q = D(i, t) / D(t, t);
        row_op(D, i, t, q);
        row_op(U, i, t, q);
        if (!D(i, t).is_zero()) {
          // Remainder is smaller than the pivot: swap it up and restart.
          swap_rows(D, t, i);
          swap_rows(U, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < D.cols; ++j) {
        if (D(t, j).is_zero()) continue;
        BigInt q = D(t, j) / D(t, t);
        col_op(D, j, t, q);
        col_op(V, j, t, q);
        if (!D(t, j).is_zero()) {
          swap_cols(D, t, j);
          swap_cols(V, t, j);
          clean = false;
        }
      }
    }
    // Enforce divisibility of the trailing block by the pivot.
    bool again = false;
    for (int i = t + 1; i < D.rows && !again; ++i)
      for (int j = t + 1; j < D.cols; ++j) {
        if ((D(i, j) % D(t, t)).is_zero()) continue;
        // Add row i to row t, then restart elimination at t.
        for (int c = 0; c < D.cols; ++c) D(t, c) = D(t, c) + D(i, c);
        for (int c = 0; c < U.cols; ++c) U(t, c) = U(t, c) + U(i, c);
        again = true;
        break;
      }
    if (again) continue;
    if (D(t, t).is_neg()) {
      for (int c = 0; c < D.cols; ++c) D(t, c) = -D(t, c);
      for (int c = 0; c < U.cols; ++c) U(t, c) = -U(t, c);
    }
    ++t;
  }
  out.rank = t;
  for (int i = 0; i < t; ++i) out.factors.push_back(D(i, i));
  out.U = std::move(U);
  out.V = std::move(V);
  out.D = std::move(D);
  return out;
}

}  // namespace hal
