#include "hal/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hal {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool Cover::degenerate() const {
  for (const auto& f : family)
    if (f == ground) return true;
  return false;
}

std::string Cover::str() const {
  std::string s;
  for (size_t i = 0; i < family.size(); ++i) {
    if (i) s += " ";
    s += "{" + join_ints(family[i], ',') + "}";
  }
  return s;
}

Cover make_cover_raw(std::vector<int> ground, std::vector<std::vector<int>> family) {
  Cover c;
  c.ground = sorted_unique(std::move(ground));
  std::vector<std::vector<int>> fam;
  for (auto& f : family) {
    auto s = sorted_unique(std::move(f));
    if (s.empty()) throw std::invalid_argument("cover: empty member");
    if (!subset_of(s, c.ground)) throw std::invalid_argument("cover: member outside ground");
    fam.push_back(std::move(s));
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  // antichain form: drop members contained in another member
  std::vector<std::vector<int>> keep;
  for (size_t i = 0; i < fam.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < fam.size() && !dominated; ++j)
      if (i != j && subset_of(fam[i], fam[j]) && fam[i] != fam[j]) dominated = true;
    if (!dominated) keep.push_back(fam[i]);
  }
  // union must be the ground set
  std::vector<int> uni;
  for (const auto& f : keep)
    uni.insert(uni.end(), f.begin(), f.end());
  if (sorted_unique(uni) != c.ground) throw std::invalid_argument("cover: union misses ground");
  c.family = std::move(keep);
  return c;
}

Cover trivial_cover(int n) {
  std::vector<int> g(n + 1);
  for (int i = 0; i <= n; ++i) g[i] = i;
  return make_cover_raw(g, {g});
}

bool refines(const Cover& fine, const Cover& coarse) {
  if (fine.ground != coarse.ground) throw std::invalid_argument("refines: ground mismatch");
  for (const auto& f : fine.family) {
    bool ok = false;
    for (const auto& g : coarse.family)
      if (subset_of(f, g)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

std::vector<std::vector<int>> meet_poset(const Cover& f) {
  std::set<std::vector<int>> out(f.family.begin(), f.family.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(out.begin(), out.end());
    for (const auto& a : cur)
      for (const auto& b : f.family) {
        auto c = intersect(a, b);
        if (!c.empty() && !out.count(c)) {
          out.insert(c);
          grew = true;
        }
      }
  }
  return std::vector<std::vector<int>>(out.begin(), out.end());
}

Cover restrict_cover(const Cover& c, const std::vector<int>& f) {
  if (f.empty()) throw std::invalid_argument("restrict_cover: empty subset");
  std::vector<std::vector<int>> fam;
  for (const auto& g : c.family) {
    auto s = intersect(g, f);
    if (!s.empty()) fam.push_back(std::move(s));
  }
  return make_cover_raw(f, std::move(fam));
}

Cover adjoin(const Cover& c, const std::vector<int>& f) {
  std::vector<std::vector<int>> fam{f};
  for (const auto& g : c.family)
    if (!subset_of(g, f)) fam.push_back(g);
  return make_cover_raw(c.ground, std::move(fam));
}

std::optional<CoverClass> cover_class_from_string(const std::string& s) {
  if (s == "left-horn") return CoverClass::LeftHorn;
  if (s == "right-horn") return CoverClass::RightHorn;
  if (s == "inner-horn") return CoverClass::InnerHorn;
  if (s == "almost-left") return CoverClass::AlmostLeft;
  if (s == "almost-right") return CoverClass::AlmostRight;
  if (s == "proj-slice") return CoverClass::ProjSlice;
  if (s == "inj-slice") return CoverClass::InjSlice;
  if (s == "all-slices") return CoverClass::AllSlices;
  if (s == "lower-segal") return CoverClass::LowerSegal;
  if (s == "upper-segal") return CoverClass::UpperSegal;
  if (s == "kleft") return CoverClass::KLeft;
  if (s == "kright") return CoverClass::KRight;
  return std::nullopt;
}

std::string cover_class_name(CoverClass c) {
  switch (c) {
    case CoverClass::LeftHorn: return "left-horn";
    case CoverClass::RightHorn: return "right-horn";
    case CoverClass::InnerHorn: return "inner-horn";
    case CoverClass::AlmostLeft: return "almost-left";
    case CoverClass::AlmostRight: return "almost-right";
    case CoverClass::ProjSlice: return "proj-slice";
    case CoverClass::InjSlice: return "inj-slice";
    case CoverClass::AllSlices: return "all-slices";
    case CoverClass::LowerSegal: return "lower-segal";
    case CoverClass::UpperSegal: return "upper-segal";
    case CoverClass::KLeft: return "kleft";
    case CoverClass::KRight: return "kright";
  }
  return "?";
}

namespace {

Cover horn(int n, int omit_center) {
  std::vector<std::vector<int>> fam;
  for (int j = 0; j <= n; ++j) {
    if (j == omit_center) continue;
    std::vector<int> f;
    for (int i = 0; i <= n; ++i)
      if (i != j) f.push_back(i);
    fam.push_back(std::move(f));
  }
  std::vector<int> g(n + 1);
  for (int i = 0; i <= n; ++i) g[i] = i;
  return make_cover_raw(g, fam);
}

std::vector<std::vector<int>> subsets_of_size(int n, int k, int forced, bool force) {
  // k-subsets of [n], optionally forced to contain a given element
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      if (!force || std::binary_search(cur.begin(), cur.end(), forced))
        out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<Cover> make_cover(CoverClass cls, int param, int n) {
  std::vector<int> g(n + 1);
  for (int i = 0; i <= n; ++i) g[i] = i;
  switch (cls) {
    case CoverClass::LeftHorn:
      if (n <= param) throw std::invalid_argument("left-horn: need n > m");
      return {horn(n, 0)};
    case CoverClass::RightHorn:
      if (n <= param) throw std::invalid_argument("right-horn: need n > m");
      return {horn(n, n)};
    case CoverClass::AlmostLeft:
      if (n <= param || n < 1) throw std::invalid_argument("almost-left: need n > m >= 1");
      return {horn(n, 1)};
    case CoverClass::AlmostRight:
      if (n <= param || n < 1) throw std::invalid_argument("almost-right: need n > m");
      return {horn(n, n - 1)};
    case CoverClass::InnerHorn: {
      if (n <= param) throw std::invalid_argument("inner-horn: need n > m");
      std::vector<Cover> out;
      for (int i = 1; i < n; ++i) out.push_back(horn(n, i));
      return out;
    }
    case CoverClass::ProjSlice: {
      if (n <= param) throw std::invalid_argument("proj-slice: need n > m");
      std::vector<std::vector<int>> fam = subsets_of_size(n, param + 1, 0, true);
      return {make_cover_raw(g, fam)};
    }
    case CoverClass::InjSlice: {
      if (n <= param) throw std::invalid_argument("inj-slice: need n > m");
      std::vector<std::vector<int>> fam = subsets_of_size(n, param + 1, n, true);
      return {make_cover_raw(g, fam)};
    }
    case CoverClass::AllSlices: {
      std::vector<Cover> out;
      for (const auto& s : enumerate_slices(param, n)) {
        std::vector<std::vector<int>> fam;
        for (const auto& e : s.elements) fam.push_back(e.window);
        out.push_back(make_cover_raw(g, fam));
      }
      return out;
    }
    case CoverClass::LowerSegal:
      return {segal_cover(n, param, true)};
    case CoverClass::UpperSegal:
      return {segal_cover(n, param, false)};
    case CoverClass::KLeft:
    case CoverClass::KRight:
      throw std::invalid_argument("make_cover: K-classes are predicates; use in_k_class");
  }
  throw std::invalid_argument("make_cover: unknown class");
}

bool gap_is_even(int i, const std::vector<int>& I) {
  if (std::binary_search(I.begin(), I.end(), i))
    throw std::invalid_argument("gap parity: index belongs to the subset");
  int count = 0;
  for (int j : I)
    if (j > i) ++count;
  return count % 2 == 0;
}

Cover segal_cover(int n, int k, bool lower) {
  if (k < 1 || n < k) throw std::invalid_argument("segal_cover: need n >= k >= 1");
  std::vector<int> g(n + 1);
  for (int i = 0; i <= n; ++i) g[i] = i;
  std::vector<std::vector<int>> fam;
  for (auto& I : subsets_of_size(n, k + 1, 0, false)) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) {
      if (std::binary_search(I.begin(), I.end(), i)) continue;
      if (gap_is_even(i, I) != lower) ok = false;
    }
    if (ok) fam.push_back(I);
  }
  return make_cover_raw(g, std::move(fam));  // throws when not a genuine cover
}

Cover segal_explicit(int n, int m, SegalVariant v) {
  std::vector<int> g(n + 1);
  for (int i = 0; i <= n; ++i) g[i] = i;
  auto lower_odd_on = [&](int lo, int hi) {
    // unions of m disjoint adjacent pairs {i, i+1} within [lo, hi]
    std::vector<std::vector<int>> fam;
    std::vector<int> starts;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(starts.size()) == m) {
        std::vector<int> I;
        for (int s : starts) {
          I.push_back(s);
          I.push_back(s + 1);
        }
        fam.push_back(std::move(I));
        return;
      }
      for (int s = start; s + 1 <= hi; ++s) {
        starts.push_back(s);
        self(self, s + 2);
        starts.pop_back();
      }
    };
    rec(rec, lo);
    return fam;
  };
  switch (v) {
    case SegalVariant::LowerOdd: {
      if (n < 2 * m - 1) throw std::invalid_argument("segal_explicit: need n >= 2m-1");
      return make_cover_raw(g, lower_odd_on(0, n));
    }
    case SegalVariant::LowerEven: {
      if (n < 2 * m) throw std::invalid_argument("segal_explicit: need n >= 2m");
      std::vector<std::vector<int>> fam;
      for (auto I : lower_odd_on(1, n)) {
        I.insert(I.begin(), 0);
        fam.push_back(std::move(I));
      }
      return make_cover_raw(g, std::move(fam));
    }
    case SegalVariant::UpperEven: {
      if (n < 2 * m) throw std::invalid_argument("segal_explicit: need n >= 2m");
      std::vector<std::vector<int>> fam;
      for (auto I : lower_odd_on(0, n - 1)) {
        I.push_back(n);
        fam.push_back(std::move(I));
      }
      return make_cover_raw(g, std::move(fam));
    }
  }
  throw std::invalid_argument("segal_explicit: unknown variant");
}

bool in_k_class(const Cover& f, int m, bool left) {
  if (f.degenerate()) return false;
  const int n = f.n();
  int pivot = left ? 0 : n;
  for (const auto& g : f.family)
    if (!std::binary_search(g.begin(), g.end(), pivot)) return false;
  for (auto& I : subsets_of_size(n, m, 0, false)) {
    bool inside = false;
    for (const auto& g : f.family)
      if (std::includes(g.begin(), g.end(), I.begin(), I.end())) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

SaturationReport is_saturated_sample(CoverClass cls, int m, int N, std::uint64_t seed) {
  if (cls != CoverClass::KLeft && cls != CoverClass::KRight)
    throw std::invalid_argument("is_saturated_sample: only the K-classes are supported");
  const bool left = cls == CoverClass::KLeft;
  SaturationReport rep;
  Rng rng(seed);
  for (int n = m + 1; n <= N; ++n) {
    // Sample: named members of the class plus random adjoin-perturbations.
    std::vector<Cover> sample;
    Cover h = horn(n, left ? 0 : n);
    sample.push_back(h);
    sample.push_back(make_cover(left ? CoverClass::ProjSlice : CoverClass::InjSlice, m, n)[0]);
    if (n > 2 * m) sample.push_back(segal_cover(n, 2 * m, left));
    for (int t = 0; t < 10; ++t) {
      Cover c = sample[rng.below(sample.size())];
      // adjoin a random subset containing the pivot
      std::vector<int> f{left ? 0 : n};
      for (int i = 0; i <= n; ++i)
        if (i != f[0] && rng.below(2)) f.push_back(i);
      if (static_cast<int>(f.size()) > n) continue;  // skip the degenerate adjoin
      Cover c2 = adjoin(c, f);
      if (in_k_class(c2, m, left)) sample.push_back(c2);
    }
    // drop duplicates
    std::sort(sample.begin(), sample.end(),
              [](const Cover& a, const Cover& b) { return a.family < b.family; });
    sample.erase(std::unique(sample.begin(), sample.end(),
                             [](const Cover& a, const Cover& b) {
                               return a.family == b.family;
                             }),
                 sample.end());
    rep.covers_sampled += static_cast<int>(sample.size());
    // Condition (2): every sampled cover refines the horn (terminal object),
    // so the sampled category is connected through it.
    for (const auto& c : sample)
      if (!refines(c, h)) {
        rep.condition2 = false;
        if (rep.witness.empty()) rep.witness = "not connected via horn: " + c.str();
      }
    // Condition (1): for each sampled non-degenerate refinement F' < F, some
    // member f of F splits it.
    for (const auto& fine : sample)
      for (const auto& coarse : sample) {
        if (fine.family == coarse.family) continue;
        if (!refines(fine, coarse) || refines(coarse, fine)) continue;
        ++rep.refinements_checked;
        bool split = false;
        for (const auto& f : coarse.family) {
          Cover adj = adjoin(fine, f);
          if (!in_k_class(adj, m, left)) continue;
          Cover res = restrict_cover(fine, f);
          // re-index the restriction to a standard ordinal and test the class
          std::vector<int> order = f;
          std::vector<std::vector<int>> fam2;
          for (const auto& memb : res.family) {
            std::vector<int> r2;
            for (int x : memb)
              r2.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), x) -
                                            order.begin()));
            fam2.push_back(std::move(r2));
          }
          std::vector<int> g2(order.size());
          for (size_t i = 0; i < order.size(); ++i) g2[i] = static_cast<int>(i);
          Cover res2 = make_cover_raw(g2, fam2);
          bool restr_ok = res2.degenerate() || in_k_class(res2, m, left);
          if (restr_ok) {
            split = true;
            break;
          }
        }
        if (!split) {
          rep.condition1 = false;
          if (rep.witness.empty())
            rep.witness = "no splitting member for " + fine.str() + " < " + coarse.str();
        }
      }
  }
  return rep;
}

}  // namespace hal
