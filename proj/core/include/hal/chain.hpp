#pragma once

#include <vector>

#include "hal/matrix.hpp"

namespace hal {

// Bounded chain complex of finite-dimensional vector spaces over Q, homological
// grading: d_k : C_k -> C_{k-1}.
class ChainComplex {
 public:
  ChainComplex() = default;
  // dims[i] is the dimension in degree lo + i; diff[i] : C_{lo+i} -> C_{lo+i-1}
  // for i >= 1 (diff[0] is ignored and may be empty).
  ChainComplex(int lo, std::vector<int> dims, std::vector<QMat> diff);

  static ChainComplex zero() { return ChainComplex(); }
  // Single space of dimension d concentrated in the given degree.
  static ChainComplex concentrated(int degree, int d);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool empty() const { return dims_.empty(); }
  int dim(int k) const {
    if (k < lo_ || k > hi()) return 0;
    return dims_[k - lo_];
  }
  int total_dim() const;
  // d_k : C_k -> C_{k-1}; zero-sized matrix outside the support.
  QMat d(int k) const;

  ChainComplex shifted(int s) const;  // (Sigma^s C)_k = C_{k-s}, d -> (-1)^s d
  friend ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

  bool valid() const;          // d^2 == 0 and shapes consistent
  int homology_dim(int k) const;
  std::vector<int> homology_dims() const;  // aligned to [lo, hi]
  bool acyclic() const;

  // Drop zero-dimensional fringe degrees.
  void normalize();

 private:
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<QMat> d_;
};

// Degreewise chain map f : X -> Y (no shift).
struct ChainMap {
  const ChainComplex* src = nullptr;
  const ChainComplex* tgt = nullptr;
  // parts[k] : X_k -> Y_k, stored for k in [lo, hi] of the union support.
  int lo = 0;
  std::vector<QMat> parts;

  QMat at(int k) const;
  bool valid() const;  // commutes with differentials
};

ChainMap zero_map(const ChainComplex& x, const ChainComplex& y);
ChainMap identity_map(const ChainComplex& x);

// Mapping cone: cone(f)_k = X_{k-1} (+) Y_k, d(x,y) = (-d x, f x + d y).
ChainComplex cone(const ChainMap& f);
// fib(f) = Sigma^{-1} cone(f).
ChainComplex fib(const ChainMap& f);

// f is a quasi-isomorphism iff cone(f) is acyclic.
bool quasi_iso(const ChainMap& f);

}  // namespace hal
