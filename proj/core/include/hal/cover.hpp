#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hal/slice.hpp"
#include "hal/util.hpp"

namespace hal {

// A cover of the ground set (a finite subset of Z, usually [n] = {0..n}):
// a family of subsets whose union is the ground set, kept in canonical
// antichain form (no member contained in another, members sorted).
struct Cover {
  std::vector<int> ground;                // sorted
  std::vector<std::vector<int>> family;   // canonical form

  int n() const { return static_cast<int>(ground.size()) - 1; }
  bool degenerate() const;                // the ground set is a member
  std::string str() const;
};

Cover make_cover_raw(std::vector<int> ground, std::vector<std::vector<int>> family);
Cover trivial_cover(int n);

bool refines(const Cover& fine, const Cover& coarse);

// All nonempty intersections of nonempty subfamilies, ordered by inclusion.
std::vector<std::vector<int>> meet_poset(const Cover& f);

// Restriction {f' cap f} of a cover to a subset f (new ground set f).
Cover restrict_cover(const Cover& c, const std::vector<int>& f);
// Adjoin a subset: {f} plus the members not contained in f.
Cover adjoin(const Cover& c, const std::vector<int>& f);

enum class CoverClass {
  LeftHorn,
  RightHorn,
  InnerHorn,
  AlmostLeft,
  AlmostRight,
  ProjSlice,
  InjSlice,
  AllSlices,
  LowerSegal,
  UpperSegal,
  KLeft,
  KRight,
};

std::optional<CoverClass> cover_class_from_string(const std::string& s);
std::string cover_class_name(CoverClass c);

// Instances of a class at [n]. The parameter is the dimension bound m for
// horn/slice classes and the Segal dimension k for the Segal classes. Classes
// that form a predicate rather than a family (KLeft / KRight) cannot be
// materialized and throw.
std::vector<Cover> make_cover(CoverClass cls, int param, int n);

// Parity of |{j in I : j > i}| for i not in I.
bool gap_is_even(int i, const std::vector<int>& I);

// Lower k-Segal cover (all gaps even) or upper (all gaps odd) of [n].
// Throws if the resulting family does not cover [n] (the odd upper case).
Cover segal_cover(int n, int k, bool lower);

enum class SegalVariant { LowerOdd, LowerEven, UpperEven };

// Explicit adjacency descriptions: lower (2m-1)-Segal covers are disjoint
// unions of m adjacent pairs; the even variants adjoin 0 resp. n.
Cover segal_explicit(int n, int m, SegalVariant v);

// Membership in the left/right K-classes.
bool in_k_class(const Cover& f, int m, bool left);

struct SaturationReport {
  bool condition1 = true;   // refinements split through a member
  bool condition2 = true;   // sampled class is connected via refinements
  int covers_sampled = 0;
  int refinements_checked = 0;
  std::string witness;      // first failure, if any
};

// Sampled check of the saturated-class conditions for KLeft(m) / KRight(m)
// at all 0 <= n <= N.
SaturationReport is_saturated_sample(CoverClass cls, int m, int N, std::uint64_t seed = 1);

}  // namespace hal
