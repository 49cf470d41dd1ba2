#pragma once

#include <string>
#include <vector>

#include "hal/simplex.hpp"

namespace hal {

// A paracyclic m-simplex of period n: a monotone map f : Z -> Z with
// f(i + m + 1) = f(i) + n + 1, stored by its window (f(0), ..., f(m)).
struct ParaSimplex {
  std::vector<int> window;  // size m+1
  int period_n = 0;

  int m() const { return static_cast<int>(window.size()) - 1; }
  bool valid() const;
  long long eval(long long i) const;
  bool degenerate() const;  // some f(i) = f(i+1), equivalently within one period

  friend bool operator==(const ParaSimplex& a, const ParaSimplex& b) {
    return a.period_n == b.period_n && a.window == b.window;
  }
  friend bool operator<(const ParaSimplex& a, const ParaSimplex& b) {
    return a.window < b.window;
  }
  std::string str() const { return join_ints(window, ','); }
};

bool para_leq(const ParaSimplex& a, const ParaSimplex& b);

// Poset automorphisms: Heller (index shift), Coxeter (value shift by -1), and
// Nakayama = Coxeter . Heller. Powers accept arbitrary integers.
ParaSimplex heller(const ParaSimplex& s, int power = 1);
ParaSimplex coxeter(const ParaSimplex& s, int power = 1);
ParaSimplex nakayama(const ParaSimplex& s, int power = 1);

// Delta(m, n) sits inside Lambda(m, n) as the maps with 0 <= f(0) and
// f(m) <= n.
ParaSimplex embed_delta(const Simplex& s);
bool in_delta_window(const ParaSimplex& s);
Simplex to_delta(const ParaSimplex& s);  // requires in_delta_window

// All paracyclic simplices with lo <= window[0] <= hi.
std::vector<ParaSimplex> window_elements(int m, int n, int lo, int hi);

// One non-degenerate representative per Coxeter orbit, normalized so that the
// representative lies in the Delta window with window[0] minimal (equivalently
// window[0] = 0 after translating). Orbit count is C(n, m).
std::vector<ParaSimplex> phi_orbit_representatives(int m, int n);

// Canonical orbit key: the translate of the window with first entry 0.
std::vector<int> phi_orbit_key(const ParaSimplex& s);

}  // namespace hal
