#include "hal/matrix.hpp"

namespace hal {

QMat to_q(const IMat& m) {
  QMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

ZMat to_z(const IMat& m) {
  ZMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = BigInt(m.a[i]);
  return r;
}

FMat to_f(const IMat& m, std::uint64_t p) {
  FMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    std::int64_t v = m.a[i] % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    r.a[i] = Fp(static_cast<std::uint64_t>(v), p);
  }
  return r;
}

FMat q_to_f(const QMat& m, std::uint64_t p) {
  FMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    std::uint64_t den = m.a[i].den().mod_u64(p);
    if (den == 0) throw std::domain_error("q_to_f: denominator divisible by p");
    std::uint64_t num = m.a[i].num().mod_u64(p);
    r.a[i] = Fp(num, p) / Fp(den, p);
  }
  return r;
}

IMat q_to_i(const QMat& m) {
  IMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (!m.a[i].is_integer() || !m.a[i].num().fits_i64())
      throw std::domain_error("q_to_i: non-integer entry");
    r.a[i] = m.a[i].num().to_i64();
  }
  return r;
}

namespace {

// Pivot preference: cheap entries first to limit coefficient growth.
int entry_weight(const Rat& x) {
  if (x.is_zero()) return 1 << 30;
  if (x.num().is_one() || (-x.num()).is_one()) {
    if (x.den().is_one()) return 0;
    return 1;
  }
  return x.is_integer() ? 2 : 3;
}
int entry_weight(const Fp& x) { return x.is_zero() ? (1 << 30) : 0; }

}  // namespace

template <class F>
int rref(Mat<F>& m, std::vector<int>* pivots) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int best = -1, bw = 1 << 30;
    for (int i = rank; i < m.rows; ++i) {
      if (m(i, col) == F(0)) continue;
      int w = entry_weight(m(i, col));
      if (w < bw) {
        bw = w;
        best = i;
        if (w == 0) break;
      }
    }
    if (best < 0) continue;
    if (best != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(best, j));
    F inv = m(rank, col).inv();
    for (int j = col; j < m.cols; ++j) m(rank, j) = m(rank, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      F f = m(i, col);
      if (f == F(0)) continue;
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

template int rref<Rat>(Mat<Rat>&, std::vector<int>*);
template int rref<Fp>(Mat<Fp>&, std::vector<int>*);

template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  Mat<F> r = m;
  std::vector<int> piv;
  int rank = rref(r, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  Mat<F> k(m.cols, m.cols - rank);
  int kc = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    k(c, kc) = F(1);
    for (int i = 0; i < rank; ++i) k(piv[i], kc) = -r(i, c);
    ++kc;
  }
  return k;
}

template Mat<Rat> kernel_basis<Rat>(const Mat<Rat>&);
template Mat<Fp> kernel_basis<Fp>(const Mat<Fp>&);

template <class F>
std::optional<Mat<F>> solve(const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows) throw std::invalid_argument("solve: shape mismatch");
  Mat<F> aug = Mat<F>::hstack(A, B);
  std::vector<int> piv;
  // Restrict pivoting to the A-part by running rref on the full augmented
  // matrix but rejecting pivots in the B-columns afterwards.
  Mat<F> r = aug;
  int rank = 0;
  for (int col = 0; col < A.cols && rank < r.rows; ++col) {
    int best = -1, bw = 1 << 30;
    for (int i = rank; i < r.rows; ++i) {
      if (r(i, col) == F(0)) continue;
      int w = entry_weight(r(i, col));
      if (w < bw) {
        bw = w;
        best = i;
        if (w == 0) break;
      }
    }
    if (best < 0) continue;
    if (best != rank)
      for (int j = 0; j < r.cols; ++j) std::swap(r(rank, j), r(best, j));
    F inv = r(rank, col).inv();
    for (int j = col; j < r.cols; ++j) r(rank, j) = r(rank, j) * inv;
    for (int i = 0; i < r.rows; ++i) {
      if (i == rank) continue;
      F f = r(i, col);
      if (f == F(0)) continue;
      for (int j = col; j < r.cols; ++j) r(i, j) -= f * r(rank, j);
    }
    piv.push_back(col);
    ++rank;
  }
  // Inconsistent if any remaining row has zero A-part and nonzero B-part.
  for (int i = rank; i < r.rows; ++i)
    for (int j = A.cols; j < r.cols; ++j)
      if (!(r(i, j) == F(0))) return std::nullopt;
  Mat<F> X(A.cols, B.cols);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < B.cols; ++j) X(piv[i], j) = r(i, A.cols + j);
  return X;
}

template std::optional<Mat<Rat>> solve<Rat>(const Mat<Rat>&, const Mat<Rat>&);
template std::optional<Mat<Fp>> solve<Fp>(const Mat<Fp>&, const Mat<Fp>&);

int rank_exact(const IMat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  FMat f = to_f(m, kCertPrime);
  int rp = rank_of(f);
  if (rp == std::min(m.rows, m.cols)) return rp;  // certified full rank
  QMat q = to_q(m);
  return rank_of(q);
}

PosetLimit poset_limit(const std::vector<int>& dims, const std::vector<DiagramArrow>& arrows) {
  int total = 0;
  std::vector<int> off(dims.size(), 0);
  for (size_t i = 0; i < dims.size(); ++i) {
    off[i] = total;
    total += dims[i];
  }
  int rows = 0;
  for (const auto& a : arrows) rows += a.map.rows;
  QMat g(rows, total);
  int r0 = 0;
  for (const auto& a : arrows) {
    if (a.map.cols != dims[a.src] || a.map.rows != dims[a.tgt])
      throw std::invalid_argument("poset_limit: arrow shape mismatch");
    for (int i = 0; i < a.map.rows; ++i) {
      for (int j = 0; j < a.map.cols; ++j) g(r0 + i, off[a.src] + j) = a.map(i, j);
      g(r0 + i, off[a.tgt] + i) -= Rat(1);
    }
    r0 += a.map.rows;
  }
  PosetLimit out;
  out.basis = kernel_basis(g);
  out.dim = out.basis.cols;
  for (size_t i = 0; i < dims.size(); ++i)
    out.cone.push_back(out.basis.block(off[i], 0, dims[i], out.dim));
  return out;
}

int rank_exact_q(const QMat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  try {
    FMat f = q_to_f(m, kCertPrime);
    int rp = rank_of(f);
    if (rp == std::min(m.rows, m.cols)) return rp;
  } catch (const std::domain_error&) {
    // fall through to exact elimination
  }
  return rank_of(m);
}

}  // namespace hal
