#include "hal/paracyclic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hal {

bool ParaSimplex::valid() const {
  if (window.empty()) return false;
  for (size_t i = 0; i + 1 < window.size(); ++i)
    if (window[i] > window[i + 1]) return false;
  // Monotonicity across the period boundary: f(m+1) = f(0) + n + 1.
  return window.back() <= window.front() + period_n + 1;
}

long long ParaSimplex::eval(long long i) const {
  const int p = m() + 1;
  long long q = i >= 0 ? i / p : -((-i + p - 1) / p);
  long long r = i - q * p;
  return window[static_cast<size_t>(r)] + q * (period_n + 1);
}

bool ParaSimplex::degenerate() const {
  for (size_t i = 0; i + 1 < window.size(); ++i)
    if (window[i] == window[i + 1]) return true;
  return window.back() == window.front() + period_n + 1;
}

bool para_leq(const ParaSimplex& a, const ParaSimplex& b) {
  if (a.m() != b.m() || a.period_n != b.period_n)
    throw std::invalid_argument("para_leq: shape mismatch");
  for (int i = 0; i <= a.m(); ++i)
    if (a.window[i] > b.window[i]) return false;
  return true;
}

ParaSimplex heller(const ParaSimplex& s, int power) {
  ParaSimplex r = s;
  for (int i = 0; i <= s.m(); ++i)
    r.window[i] = static_cast<int>(s.eval(i + power));
  return r;
}

ParaSimplex coxeter(const ParaSimplex& s, int power) {
  ParaSimplex r = s;
  for (auto& v : r.window) v -= power;
  return r;
}

ParaSimplex nakayama(const ParaSimplex& s, int power) {
  return coxeter(heller(s, power), power);
}

ParaSimplex embed_delta(const Simplex& s) {
  return ParaSimplex{s.values, s.ambient_n};
}

bool in_delta_window(const ParaSimplex& s) {
  return s.window.front() >= 0 && s.window.back() <= s.period_n;
}

Simplex to_delta(const ParaSimplex& s) {
  if (!in_delta_window(s)) throw std::domain_error("to_delta: outside Delta window");
  return Simplex{s.window, s.period_n};
}

std::vector<ParaSimplex> window_elements(int m, int n, int lo, int hi) {
  std::vector<ParaSimplex> out;
  // Windows with lo <= w0 <= hi and w0 <= w1 <= ... <= wm <= w0 + n + 1.
  std::vector<int> w(m + 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > m) {
      out.push_back(ParaSimplex{w, n});
      return;
    }
    for (int v = w[pos - 1]; v <= w[0] + n + 1; ++v) {
      w[pos] = v;
      self(self, pos + 1);
    }
  };
  for (int w0 = lo; w0 <= hi; ++w0) {
    w[0] = w0;
    rec(rec, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> phi_orbit_key(const ParaSimplex& s) {
  std::vector<int> k = s.window;
  int base = k.front();
  for (auto& v : k) v -= base;
  return k;
}

std::vector<ParaSimplex> phi_orbit_representatives(int m, int n) {
  if (!(n >= m && m >= 1))
    throw std::invalid_argument("phi_orbit_representatives: need n >= m >= 1");
  std::vector<ParaSimplex> out;
  // Non-degenerate orbits have a unique translate (0, a1, ..., am) with
  // 0 < a1 < ... < am <= n.
  std::vector<int> a(m + 1, 0);
  std::vector<int> choose(m);
  // enumerate strictly increasing m-subsets of {1..n}
  for (int i = 0; i < m; ++i) choose[i] = i + 1;
  while (true) {
    std::vector<int> w(m + 1, 0);
    for (int i = 0; i < m; ++i) w[i + 1] = choose[i];
    out.push_back(ParaSimplex{w, n});
    int i = m - 1;
    while (i >= 0 && choose[i] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++choose[i];
    for (int j = i + 1; j < m; ++j) choose[j] = choose[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hal
