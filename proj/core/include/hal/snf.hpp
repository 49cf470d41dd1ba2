#pragma once

#include <vector>

#include "hal/matrix.hpp"

namespace hal {

// Smith normal form of an integer matrix: U * A * V = D with U, V unimodular
// and D diagonal with d1 | d2 | ... | dr (all positive), zeros elsewhere.
struct SmithForm {
  std::vector<BigInt> factors;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;
  ZMat U, V, D;
};

SmithForm smith_normal_form(const ZMat& A);

inline SmithForm smith_normal_form(const IMat& A) { return smith_normal_form(to_z(A)); }

}  // namespace hal
