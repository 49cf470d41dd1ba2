#include "hal/slice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hal {

namespace {

// Non-degenerate elements of the closed interval [a, b] in Lambda(m, n).
std::vector<ParaSimplex> interval_nondeg(const ParaSimplex& a, const ParaSimplex& b) {
  std::vector<ParaSimplex> out;
  if (!para_leq(a, b)) return out;
  const int m = a.m();
  std::vector<int> w(m + 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > m) {
      ParaSimplex p{w, a.period_n};
      if (p.valid() && !p.degenerate()) out.push_back(p);
      return;
    }
    int lo = std::max(a.window[pos], pos > 0 ? w[pos - 1] : a.window[pos]);
    for (int v = lo; v <= b.window[pos]; ++v) {
      w[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

bool Slice::contains(const ParaSimplex& s) const {
  return std::binary_search(elements.begin(), elements.end(), s);
}

std::string Slice::str() const {
  std::string r;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) r += " ";
    r += elements[i].str();
  }
  return r;
}

SliceCheck is_slice(const std::vector<ParaSimplex>& elems, int m, int n) {
  SliceCheck c;
  for (const auto& e : elems) {
    if (e.m() != m || e.period_n != n) {
      c.reason = "mixed parameters at " + e.str();
      return c;
    }
    if (!e.valid() || e.degenerate()) {
      c.reason = "degenerate or invalid element " + e.str();
      return c;
    }
  }
  // Axiom 1: exactly one element per Coxeter orbit, covering all orbits.
  std::map<std::vector<int>, const ParaSimplex*> seen;
  for (const auto& e : elems) {
    auto key = phi_orbit_key(e);
    auto it = seen.find(key);
    if (it != seen.end()) {
      c.reason = "orbit hit twice: " + it->second->str() + " and " + e.str();
      return c;
    }
    seen[key] = &e;
  }
  if (static_cast<std::int64_t>(elems.size()) != binomial(n, m)) {
    c.reason = "orbit system incomplete: " + std::to_string(elems.size()) +
               " of " + std::to_string(binomial(n, m)) + " orbits";
    return c;
  }
  // Axiom 2: interval closure inside the non-degenerate part.
  std::set<std::vector<int>> windows;
  for (const auto& e : elems) windows.insert(e.window);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (!para_leq(a, b)) continue;
      for (const auto& rho : interval_nondeg(a, b)) {
        if (!windows.count(rho.window)) {
          c.reason = "interval [" + a.str() + ", " + b.str() +
                     "] leaks through " + rho.str();
          return c;
        }
      }
    }
  c.ok = true;
  return c;
}

Slice projective_slice(int m, int n) {
  if (!(n >= m && m >= 1)) throw std::invalid_argument("projective_slice: need n >= m >= 1");
  Slice s;
  s.m = m;
  s.n = n;
  for (const auto& r : nondegenerate(enumerate_delta(m - 1, n - 1)))
    s.elements.push_back(embed_delta(join_left(r)));
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

Slice injective_slice(int m, int n) {
  if (!(n >= m && m >= 1)) throw std::invalid_argument("injective_slice: need n >= m >= 1");
  Slice s;
  s.m = m;
  s.n = n;
  for (const auto& r : nondegenerate(enumerate_delta(m - 1, n - 1)))
    s.elements.push_back(embed_delta(join_right(r)));
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

std::vector<ParaSimplex> minimal_elements(const Slice& s) {
  std::vector<ParaSimplex> out;
  for (const auto& a : s.elements) {
    bool minimal = true;
    for (const auto& b : s.elements)
      if (!(b == a) && para_leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<ParaSimplex> maximal_elements(const Slice& s) {
  std::vector<ParaSimplex> out;
  for (const auto& a : s.elements) {
    bool maximal = true;
    for (const auto& b : s.elements)
      if (!(b == a) && para_leq(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

Slice mutate_right(const Slice& s, const ParaSimplex& sigma) {
  if (!s.contains(sigma)) throw std::invalid_argument("mutate_right: element not in slice");
  auto mins = minimal_elements(s);
  if (std::find(mins.begin(), mins.end(), sigma) == mins.end())
    throw std::invalid_argument("mutate_right: element not minimal");
  Slice r = s;
  r.elements.erase(std::find(r.elements.begin(), r.elements.end(), sigma));
  r.elements.push_back(coxeter(sigma, -1));
  std::sort(r.elements.begin(), r.elements.end());
  return r;
}

Slice mutate_left(const Slice& s, const ParaSimplex& sigma) {
  if (!s.contains(sigma)) throw std::invalid_argument("mutate_left: element not in slice");
  auto maxs = maximal_elements(s);
  if (std::find(maxs.begin(), maxs.end(), sigma) == maxs.end())
    throw std::invalid_argument("mutate_left: element not maximal");
  Slice r = s;
  r.elements.erase(std::find(r.elements.begin(), r.elements.end(), sigma));
  r.elements.push_back(coxeter(sigma, 1));
  std::sort(r.elements.begin(), r.elements.end());
  return r;
}

ParaCube mutation_cube(const Slice& s, const ParaSimplex& sigma) {
  auto mins = minimal_elements(s);
  if (std::find(mins.begin(), mins.end(), sigma) == mins.end())
    throw std::invalid_argument("mutation_cube: element not minimal");
  ParaCube c;
  c.base = sigma;
  const int k = sigma.m() + 1;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    ParaSimplex v = sigma;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) ++v.window[i];
    c.vertices.push_back(v);
  }
  return c;
}

std::vector<ParaSimplex> diamond(const Slice& s, const Slice& sp) {
  // sp must be a right mutation of s: they differ by one element.
  std::vector<ParaSimplex> only_s;
  for (const auto& e : s.elements)
    if (!sp.contains(e)) only_s.push_back(e);
  if (only_s.size() != 1)
    throw std::invalid_argument("diamond: slices do not differ by one mutation");
  const ParaSimplex& sigma = only_s[0];
  ParaSimplex shifted = coxeter(sigma, -1);
  if (!sp.contains(shifted))
    throw std::invalid_argument("diamond: not a right mutation");
  std::vector<ParaSimplex> d = s.elements;
  d.push_back(shifted);
  std::sort(d.begin(), d.end());
  return d;
}

SliceClosure closure(const std::vector<ParaSimplex>& j, int m, int n) {
  SliceClosure out;
  std::set<std::vector<int>> base, all;
  for (const auto& e : j) base.insert(e.window);
  all = base;
  for (const auto& a : j)
    for (const auto& b : j) {
      if (!para_leq(a, b)) continue;
      // every element (degenerate or not) sandwiched between a and b
      std::vector<int> w(m + 1);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos > m) {
          ParaSimplex p{w, n};
          if (p.valid()) all.insert(w);
          return;
        }
        int lo = std::max(a.window[pos], pos > 0 ? w[pos - 1] : a.window[pos]);
        for (int v = lo; v <= b.window[pos]; ++v) {
          w[pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    }
  for (const auto& w : all) {
    out.all.push_back(ParaSimplex{w, n});
    if (!base.count(w)) out.added.push_back(ParaSimplex{w, n});
  }
  return out;
}

std::optional<Slice> normalize_slice(const Slice& s) {
  // Find the translate Phi^c with every window inside [0, n].
  int lo = INT32_MIN, hi = INT32_MAX;
  for (const auto& e : s.elements) {
    lo = std::max(lo, e.window.back() - s.n);  // c >= wm - n
    hi = std::min(hi, e.window.front());       // c <= w0
  }
  if (lo > hi) return std::nullopt;
  // Long orbits pin the translate; assert uniqueness.
  Slice r = s;
  for (auto& e : r.elements) e = coxeter(e, lo);
  std::sort(r.elements.begin(), r.elements.end());
  return r;
}

std::vector<Slice> enumerate_slices(int m, int n, long long budget) {
  if (!(n >= m && m >= 1)) throw std::invalid_argument("enumerate_slices: need n >= m >= 1");
  auto reps = phi_orbit_representatives(m, n);
  const int k = static_cast<int>(reps.size());
  // Candidates per orbit: translates inside the Delta window.
  std::vector<std::vector<ParaSimplex>> cand(k);
  std::map<std::vector<int>, int> orbit_of;  // orbit key -> index
  for (int i = 0; i < k; ++i) orbit_of[phi_orbit_key(reps[i])] = i;
  for (int i = 0; i < k; ++i) {
    int span = reps[i].window.back();  // key has first entry 0
    for (int c = 0; c + span <= n; ++c) {
      ParaSimplex e = coxeter(reps[i], -c);
      cand[i].push_back(e);
    }
  }
  // For each ordered comparable candidate pair, the forced choices implied by
  // interval closure: every non-degenerate element of [a, b] must be chosen by
  // its orbit.
  std::vector<int> chosen(k, -1);
  std::vector<Slice> out;
  long long nodes = 0;
  auto window_index = [&](int orbit, const std::vector<int>& w) {
    for (size_t t = 0; t < cand[orbit].size(); ++t)
      if (cand[orbit][t].window == w) return static_cast<int>(t);
    return -1;
  };
  // Propagate the constraints of the pair (a, b); returns false on conflict.
  auto propagate_pair = [&](const ParaSimplex& a, const ParaSimplex& b,
                            std::vector<int>& state, std::vector<int>& trail) {
    if (!para_leq(a, b)) return true;
    for (const auto& rho : interval_nondeg(a, b)) {
      int orb = orbit_of.at(phi_orbit_key(rho));
      int idx = window_index(orb, rho.window);
      if (idx < 0) return false;  // forced element outside the window
      if (state[orb] == -1) {
        state[orb] = idx;
        trail.push_back(orb);
      } else if (state[orb] != idx) {
        return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (++nodes > budget) throw std::runtime_error("enumerate_slices: budget exceeded");
    if (pos == k) {
      Slice s;
      s.m = m;
      s.n = n;
      for (int i = 0; i < k; ++i) s.elements.push_back(cand[i][chosen[i]]);
      std::sort(s.elements.begin(), s.elements.end());
      out.push_back(std::move(s));
      return;
    }
    if (chosen[pos] != -1) {  // already forced
      self(self, pos + 1);
      return;
    }
    for (size_t t = 0; t < cand[pos].size(); ++t) {
      std::vector<int> trail;
      chosen[pos] = static_cast<int>(t);
      trail.push_back(pos);
      bool ok = true;
      // check and propagate against all decided orbits
      for (int q = 0; q < k && ok; ++q) {
        if (chosen[q] == -1 || q == pos) continue;
        const auto& x = cand[pos][chosen[pos]];
        const auto& y = cand[q][chosen[q]];
        ok = propagate_pair(x, y, chosen, trail) && propagate_pair(y, x, chosen, trail);
      }
      if (ok) self(self, pos + 1);
      for (int orb : trail) chosen[orb] = -1;
    }
  };
  rec(rec, 0);
  // The propagation may force elements later revisited; filter duplicates and
  // verify each candidate with the reference checker.
  std::sort(out.begin(), out.end(), [](const Slice& a, const Slice& b) {
    return a.elements < b.elements;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Slice& a, const Slice& b) {
                          return a.elements == b.elements;
                        }),
            out.end());
  std::vector<Slice> checked;
  for (auto& s : out)
    if (is_slice(s.elements, m, n).ok) checked.push_back(std::move(s));
  return checked;
}

MutationGraph mutation_graph(int m, int n, long long budget) {
  MutationGraph g;
  g.nodes = enumerate_slices(m, n, budget);
  std::map<std::vector<std::vector<int>>, int> index;
  auto key_of = [](const Slice& s) {
    std::vector<std::vector<int>> key;
    for (const auto& e : s.elements) key.push_back(e.window);
    return key;
  };
  for (size_t i = 0; i < g.nodes.size(); ++i) index[key_of(g.nodes[i])] = static_cast<int>(i);
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& sigma : minimal_elements(g.nodes[i])) {
      Slice s2 = mutate_right(g.nodes[i], sigma);
      auto norm = normalize_slice(s2);
      if (!norm) continue;
      auto it = index.find(key_of(*norm));
      if (it != index.end()) g.edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  // Connectivity over the undirected support.
  if (!g.nodes.empty()) {
    std::vector<std::vector<int>> adj(g.nodes.size());
    for (auto [a, b] : g.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<bool> vis(g.nodes.size(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!vis[w]) {
          vis[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    g.connected = count == g.nodes.size();
  }
  return g;
}

}  // namespace hal
