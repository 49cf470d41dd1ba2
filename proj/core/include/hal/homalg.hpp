#pragma once

#include <string>
#include <vector>

#include "hal/chain.hpp"
#include "hal/matrix.hpp"
#include "hal/paracyclic.hpp"
#include "hal/simplex.hpp"

namespace hal {

// Hom dimensions of the category obtained from K Delta(m, n) by killing every
// morphism that factors through a degenerate simplex. All hom spaces have
// dimension 0 or 1: hom(sigma, tau) = 1 iff sigma <= tau, both non-degenerate,
// and the interval [sigma, tau] contains no degenerate simplex (equivalently
// tau_i < sigma_{i+1} for all i).
class HomTable {
 public:
  HomTable(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Simplex>& vertices() const { return nd_; }  // sorted
  int index_of(const Simplex& s) const;

  int hom(const Simplex& a, const Simplex& b) const;
  int hom(int ia, int ib) const { return table_[static_cast<size_t>(ia) * nd_.size() + ib]; }

  std::int64_t total_dim() const;  // sum of all hom dimensions

 private:
  int m_, n_;
  std::vector<Simplex> nd_;
  std::vector<std::uint8_t> table_;
};

// Closed-form criterion and the independent brute-force oracle (scans the
// interval for a degenerate element); tests require them to agree.
int hom_dim(const Simplex& a, const Simplex& b);
int hom_dim_oracle(const Simplex& a, const Simplex& b);

// Paracyclic variant on windows.
int hom_dim_para(const ParaSimplex& a, const ParaSimplex& b);

// Quiver with relations presenting End of the reduced category.
struct AlgebraPresentation {
  int m = 0, n = 0;
  std::vector<Simplex> vertices;               // Delta(m, n)^sharp, sorted
  std::vector<std::pair<int, int>> arrows;     // Hasse covers with hom = 1
  // Length-2 path relations; a relation lists the two arrow paths when it is a
  // commutativity relation, or one path when it is a zero relation.
  struct Relation {
    bool zero = false;
    std::vector<std::pair<int, int>> paths;  // entries are (first arrow, second arrow)
  };
  std::vector<Relation> relations;
  std::int64_t total_dim = 0;  // = sum of hom dims

  int num_zero_relations() const;
  int num_commutativity_relations() const;
};

AlgebraPresentation algebra_presentation(int m, int n);

// Dimension of the path algebra modulo the two-sided ideal generated by the
// presentation's relations, computed directly on path spaces. Exponential in
// the quiver size; intended for small (m, n) validation.
std::int64_t path_algebra_dim(const AlgebraPresentation& p);

// Module over the reduced category of Delta(m-1, n-1), stored contravariantly:
// for each quiver arrow a -> b the structure matrix maps the fiber at b to the
// fiber at a.
struct ModuleRep {
  const HomTable* base = nullptr;  // hom table of Delta(m-1, n-1)
  std::vector<int> dims;           // per vertex of base
  // maps[k] corresponds to arrow k of hasse_hom_arrows(base)
  std::vector<QMat> maps;

  bool valid() const;  // relations hold (parallel paths agree, others vanish)
  int total_dim() const;
};

// Hasse covers of the non-degenerate subposet with hom = 1 (the Gabriel
// arrows), as index pairs into table.vertices().
std::vector<std::pair<int, int>> hasse_hom_arrows(const HomTable& table);

// The module epsilon(sigma) for sigma in Delta(m, n): fiber at rho is
// hom([0]*rho, sigma), structure maps the canonical generators.
ModuleRep epsilon_module(const HomTable& target, const HomTable& base, const Simplex& sigma);

// A complex of modules ... -> terms[i] -> terms[i-1] -> ... with per-vertex
// matrices; exactness holds iff the complex of fibers at every vertex is
// exact (including at both ends).
struct ModuleComplex {
  const HomTable* base = nullptr;
  int lo = 0;
  std::vector<ModuleRep> terms;
  std::vector<std::vector<QMat>> maps;  // maps[i][v] : terms[i] -> terms[i-1] fiber at v

  bool exact() const;
  ChainComplex fiber_complex(int vertex) const;
};

// 0 -> eps(tau d^{m+1}) -> ... -> eps(tau d^0) -> 0 for a non-degenerate
// (m+1)-simplex tau in Delta(m+1, n); the canonical maps carry alternating
// signs.
ModuleComplex boundary_complex(const HomTable& target, const HomTable& base, const Simplex& tau);

// Koszul-signed totalization of eps over a rectilinear cube in Delta(m, n).
ModuleComplex cube_complex(const HomTable& target, const HomTable& base,
                           const RectilinearCube& q);

// dim Ext^i(M, N) over the reduced category, via an explicit projective
// resolution of M (iterated projective covers; throws when the resolution
// exceeds the step budget).
int ext_dim(const ModuleRep& M, const ModuleRep& N, int i, int budget = 64);

}  // namespace hal
