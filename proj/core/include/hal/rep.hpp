#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hal/chain.hpp"
#include "hal/cube.hpp"
#include "hal/homalg.hpp"
#include "hal/paracyclic.hpp"
#include "hal/slice.hpp"

namespace hal {

// Representation of a finite subposet of Lambda(m, n) valued in bounded chain
// complexes: values per vertex (zero at degenerate vertices when reduced) and
// strictly commuting chain maps along covering relations.
struct PosetRep {
  int m = 0, n = 0;
  std::vector<ParaSimplex> vertices;           // sorted
  std::vector<ChainComplex> values;
  std::vector<std::pair<int, int>> covers;     // Hasse edges of the subposet
  std::vector<ComplexCube::Edge> maps;         // one per cover

  int index_of(const ParaSimplex& v) const;
  QMat map_at(int cover_idx, int degree) const;
  // Composite along any monotone path from vertex a to vertex b.
  QMat path_at(int a, int b, int degree) const;

  bool validate(std::string* witness = nullptr) const;  // chain maps + squares
  bool reduced() const;                                 // zero at degenerates
};

// Cellular model: a complex of reduced projective functors over the ambient
// paracyclic combinatorics. Cell c contributes hom(object_c, tau) . K in its
// degree; differential entries are scalars carried by canonical morphisms.
struct CellRep {
  int m = 0, n = 0;
  bool kill_first_face = false;  // support [tau_0 = 0] . hom(., tau)
  struct Cell {
    ParaSimplex object;
    int deg = 0;
  };
  std::vector<Cell> cells;
  // differential entries (src cell, tgt cell, scalar), tgt.deg = src.deg - 1,
  // hom(tgt.object, src.object) = 1 required
  std::vector<std::tuple<int, int, Rat>> diff;

  int support(int cell, const ParaSimplex& tau) const;
  ChainComplex value_at(const ParaSimplex& tau) const;
  CellRep coxeter_translate(int power) const;
};

// Materialize a cell model over an explicit list of vertices.
PosetRep materialize(const CellRep& c, const std::vector<ParaSimplex>& verts, int m, int n);

// Exactness: every unit rectilinear (m+1)-cube whose vertices all belong to
// the rep's poset is biCartesian.
bool is_exact(const PosetRep& r, int m);

// A representation together with its generating cell model.
struct TrackedRep {
  PosetRep rep;
  CellRep model;
  // comparison maps model-value -> original value at the source vertices
  std::vector<std::pair<ParaSimplex, ComplexCube::Edge>> augmentations;
};

// Bar-resolution cell model of a reduced representation over the reduced
// incidence combinatorics of its own poset, rebased along the join embedding
// gamma = [0] * - : the exact reduced extension to Delta(m, n).
TrackedRep extend_projective(const PosetRep& y);

// Restriction of a cell model to the closure of a slice.
TrackedRep restrict_slice(const CellRep& model, const Slice& s);

// Right/left mutation. Reps carrying a cell model are re-restricted along the
// mutated slice; bare reps are filled cube-wise (supported for m = 1).
TrackedRep mutate_rep(const TrackedRep& y, const Slice& s, const ParaSimplex& sigma,
                      bool right);
PosetRep mutate_rep_fill(const PosetRep& y, const Slice& s, const ParaSimplex& sigma,
                         bool right);

// S-construction objects: reduced and exact reps on Delta(m, n) with
// degree-zero vector-space values.
bool s_object_validate(const PosetRep& r, int m);
// Reindexing along a monotone alpha : [n'] -> [n].
PosetRep s_structure_map(const Simplex& alpha, const PosetRep& r);
// The paracyclic twist via the Coxeter symmetry of the cell model.
TrackedRep s_paracyclic_twist(const TrackedRep& r);

// ker d_0 correspondence between S-objects on Delta(m, n) and exact reps on
// Delta(m+1, n+1) vanishing over the 0-th face.
PosetRep ker_d0_forward(const PosetRep& r_big, int m, int n);   // restriction along gamma
TrackedRep ker_d0_backward(const PosetRep& x, int m, int n);    // killed extension

// ---------------------------------------------------------------------------
// Beilinson combinatorics: objects are integers, morphisms are monomials in
// x_0..x_m of degree j - i.

struct BeilinsonRep {
  int m = 0;
  int lo = 0, hi = 0;
  std::vector<ChainComplex> values;          // index i - lo
  // actions[k][i - lo]: x_k edge maps value(i) -> value(i+1), degreewise
  std::vector<std::vector<ComplexCube::Edge>> actions;

  bool validate(std::string* witness = nullptr) const;  // commuting chain maps
};

// Monomial space helpers.
int monomial_dim(int m, int deg);
std::vector<std::vector<int>> monomials(int m, int deg);
QMat multiply_by_variable(int m, int deg, int var);  // deg -> deg + 1

struct BeilinsonCellRep {
  int m = 0;
  struct Cell {
    int object;  // the representing integer of P_i
    int deg;
  };
  std::vector<Cell> cells;
  // differential entries: (src, tgt, polynomial of degree src.object - tgt.object)
  // given by coefficients over monomials(m, src.object - tgt.object)
  std::vector<std::tuple<int, int, std::vector<Rat>>> diff;

  ChainComplex value_at(int j) const;
};

BeilinsonRep beilinson_materialize(const BeilinsonCellRep& c, int lo, int hi);

struct TrackedBeilinson {
  BeilinsonRep rep;
  BeilinsonCellRep model;
};

// Bar model of a window representation and its extension to [lo, hi].
TrackedBeilinson beilinson_extend(const BeilinsonRep& r, int lo, int hi);
// Shift autoequivalence i -> i + 1.
BeilinsonRep beilinson_twist(const BeilinsonRep& r);

// Every minimal rectilinear cube inside the window is biCartesian.
bool beilinson_exact(const BeilinsonRep& r);

}  // namespace hal
