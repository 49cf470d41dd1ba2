#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hal/paracyclic.hpp"

namespace hal {

// A slice: one non-degenerate paracyclic simplex per Coxeter orbit,
// interval-closed inside the non-degenerate part.
struct Slice {
  int m = 0, n = 0;
  std::vector<ParaSimplex> elements;  // sorted

  bool contains(const ParaSimplex& s) const;
  std::string str() const;
};

struct SliceCheck {
  bool ok = false;
  std::string reason;  // names the violated axiom and a witness when !ok
};

SliceCheck is_slice(const std::vector<ParaSimplex>& elems, int m, int n);

Slice projective_slice(int m, int n);
Slice injective_slice(int m, int n);

std::vector<ParaSimplex> minimal_elements(const Slice& s);
std::vector<ParaSimplex> maximal_elements(const Slice& s);

// Right mutation at a minimal element (left at a maximal element). Throws if
// the element is not minimal (resp. maximal) in the slice.
Slice mutate_right(const Slice& s, const ParaSimplex& sigma);
Slice mutate_left(const Slice& s, const ParaSimplex& sigma);

// The unit cube sigma + I^{m+1} in Lambda coordinates; every non-degenerate
// vertex lies in S united with the Coxeter-shifted element.
struct ParaCube {
  ParaSimplex base;
  std::vector<ParaSimplex> vertices;  // 2^(m+1), mask order
};
ParaCube mutation_cube(const Slice& s, const ParaSimplex& sigma_minimal);

// S diamond S' = S with the mutated element adjoined; requires S' to be the
// right mutation of S at some minimal element.
std::vector<ParaSimplex> diamond(const Slice& s, const Slice& sp);

// Interval closure {rho : exists sigma <= rho <= tau in J}.
struct SliceClosure {
  std::vector<ParaSimplex> all;       // J plus everything sandwiched, sorted
  std::vector<ParaSimplex> added;     // the sandwiched elements not in J
};
SliceClosure closure(const std::vector<ParaSimplex>& j, int m, int n);

// All slices contained in the Delta(m, n) window (the canonical translate of
// every translation class), enumerated by constraint-propagating backtracking
// over orbit representatives. Throws if the node budget is exceeded.
std::vector<Slice> enumerate_slices(int m, int n, long long budget = 5'000'000);

struct MutationGraph {
  std::vector<Slice> nodes;
  std::vector<std::pair<int, int>> edges;  // right mutations, translated back
  bool connected = false;
};
MutationGraph mutation_graph(int m, int n, long long budget = 5'000'000);

// Translate a slice so it lies in the Delta window; nullopt if no translate
// does.
std::optional<Slice> normalize_slice(const Slice& s);

}  // namespace hal
