#pragma once

#include <string>
#include <vector>

#include "hal/util.hpp"

namespace hal {

// A monotone map [m] -> [n], i.e. an m-simplex of the standard n-simplex,
// stored as its value vector. Monotone maps [n] -> [n'] used for functoriality
// are the same data with m := n.
struct Simplex {
  std::vector<int> values;  // size m+1, weakly increasing, within [0, ambient_n]
  int ambient_n = 0;

  int m() const { return static_cast<int>(values.size()) - 1; }
  int operator[](int i) const { return values[i]; }
  bool valid() const;
  bool degenerate() const;

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.ambient_n == b.ambient_n && a.values == b.values;
  }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    return a.values < b.values;  // lexicographic; callers keep (m, n) fixed
  }
  std::string str() const { return join_ints(values, ','); }
};

// Componentwise order; requires matching shape.
bool simplex_leq(const Simplex& a, const Simplex& b);

// The poset Delta(m, n) of all monotone maps [m] -> [n], lexicographically
// sorted. Cardinality C(n+m+1, m+1); the strictly monotone part has C(n+1, m+1)
// elements.
struct SimplexPoset {
  int m = 0, n = 0;
  std::vector<Simplex> elements;

  int index_of(const Simplex& s) const;  // -1 if absent
};

SimplexPoset enumerate_delta(int m, int n);
std::vector<Simplex> nondegenerate(const SimplexPoset& p);

// Covering relations sigma < tau with nothing strictly between, computed
// within the given collection (as a subposet of Delta(m, n)).
std::vector<std::pair<int, int>> hasse_quiver(const std::vector<Simplex>& elems);

// Join endofunctors: [0] * sigma and sigma * [0]; both land in Delta(m+1, n+1).
Simplex join_left(const Simplex& s);
Simplex join_right(const Simplex& s);

// The order-reversing involution sigma*_i = n - sigma_{m-i}.
Simplex dual(const Simplex& s);

// Postcompose with a monotone map alpha : [n] -> [n'] (alpha given as a
// Simplex with ambient alpha.ambient_n = n', m = n).
Simplex act(const Simplex& alpha, const Simplex& s);
// Precompose with a monotone map beta : [k] -> [m].
Simplex precompose(const Simplex& s, const Simplex& beta);

// Coface d^i : [m] -> [m+1] (strictly monotone, skips i) and codegeneracy
// s^i : [m+1] -> [m] (repeats i), as value vectors.
Simplex coface(int i, int m);
Simplex codegeneracy(int i, int m);

// Axis-aligned cube of simplices: vertex v maps to base + v . diagonal
// (Hadamard product). All 2^(m+1) vertices must be valid simplices.
struct RectilinearCube {
  Simplex base;
  std::vector<int> diagonal;  // size m+1, entries >= 0

  int dim() const { return static_cast<int>(diagonal.size()); }
  Simplex vertex(unsigned mask) const;
  bool valid() const;
};

// All rectilinear (m+1)-cubes with diagonal (1, ..., 1) whose vertices lie in
// Delta(m, n).
std::vector<RectilinearCube> unit_rectilinear_cubes(int m, int n);

}  // namespace hal
