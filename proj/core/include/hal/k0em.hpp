#pragma once

#include <vector>

#include "hal/homalg.hpp"
#include "hal/matrix.hpp"
#include "hal/simplex.hpp"
#include "hal/snf.hpp"

namespace hal {

// Finite abelian group as a product of cyclic groups Z/k.
struct FinAbGroup {
  std::vector<std::int64_t> cyclic;  // each >= 2
  BigInt order() const {
    BigInt o(1);
    for (auto k : cyclic) o = o * BigInt(k);
    return o;
  }
};

// Rows: one indicator row per degenerate m-simplex, plus one row per
// non-degenerate (m+1)-simplex tau with entries at tau . d^i. The signed
// variant places (-1)^i there, the unsigned variant (the literal formula) +1.
IMat relation_matrix(int m, int n, bool with_signs);

struct K0Presentation {
  int m = 0, n = 0;
  SimplexPoset generators;      // Delta(m, n), lexicographic
  IMat relations;               // signed relation matrix
  std::vector<BigInt> factors;  // invariant factors of the relation matrix
  int rank = 0;                 // rank of the free cokernel
  bool free_cokernel = false;
  // e(sigma) = class of eps(sigma): the dimension-vector matrix, one column
  // per generator, rows indexed by Delta(m-1, n-1)^sharp.
  IMat e_matrix;
};

K0Presentation k0_presentation(int m, int n);

// An n-simplex of K(B, m): a B-valued function on Delta(m, n) vanishing on
// degenerates whose signed boundary sums vanish.
struct EMSimplex {
  FinAbGroup B;
  int m = 0, n = 0;
  // values[g][f]: residue of generator g (poset order) in cyclic factor f
  std::vector<std::vector<std::int64_t>> values;
};

// Membership test directly from the defining conditions.
bool em_is_member(const EMSimplex& f, bool with_signs);

// Number of n-simplices of K(B, m) (signed or unsigned relation set), via the
// Smith normal form of the relation matrix, one cyclic factor at a time.
BigInt em_count(const FinAbGroup& B, int m, int n, bool with_signs);

// All solutions; throws if the count exceeds the budget.
std::vector<EMSimplex> em_enumerate(const FinAbGroup& B, int m, int n, bool with_signs,
                                    std::int64_t budget = 1 << 20);

// Pullback along a monotone map alpha : [n'] -> [n] (as a value vector).
EMSimplex em_simplicial_action(const Simplex& alpha, const EMSimplex& f);

}  // namespace hal
