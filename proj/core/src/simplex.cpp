#include "hal/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hal {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    __int128 t = static_cast<__int128>(r) * (n - k + i);
    t /= i;
    if (t > INT64_MAX) throw std::overflow_error("binomial overflow");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(sep);
    s += std::to_string(v[i]);
  }
  return s;
}

bool Simplex::valid() const {
  if (values.empty()) return false;
  int prev = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > ambient_n) return false;
    if (i && values[i] < prev) return false;
    prev = values[i];
  }
  return true;
}

bool Simplex::degenerate() const {
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] == values[i + 1]) return true;
  return false;
}

bool simplex_leq(const Simplex& a, const Simplex& b) {
  if (a.m() != b.m() || a.ambient_n != b.ambient_n)
    throw std::invalid_argument("simplex_leq: shape mismatch");
  for (int i = 0; i <= a.m(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

SimplexPoset enumerate_delta(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("enumerate_delta: negative parameter");
  SimplexPoset p;
  p.m = m;
  p.n = n;
  std::vector<int> cur(m + 1, 0);
  while (true) {
    p.elements.push_back(Simplex{cur, n});
    int i = m;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j <= m; ++j) cur[j] = cur[i];
  }
  // The successor loop emits values in lexicographic order already.
  return p;
}

int SimplexPoset::index_of(const Simplex& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s);
  if (it == elements.end() || !(*it == s)) return -1;
  return static_cast<int>(it - elements.begin());
}

std::vector<Simplex> nondegenerate(const SimplexPoset& p) {
  std::vector<Simplex> out;
  for (const auto& s : p.elements)
    if (!s.degenerate()) out.push_back(s);
  return out;
}

std::vector<std::pair<int, int>> hasse_quiver(const std::vector<Simplex>& elems) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(elems.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!simplex_leq(elems[i], elems[j]) || elems[i] == elems[j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (simplex_leq(elems[i], elems[k]) && simplex_leq(elems[k], elems[j]) &&
            !(elems[k] == elems[i]) && !(elems[k] == elems[j]))
          covered = false;
      }
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

Simplex join_left(const Simplex& s) {
  Simplex r;
  r.ambient_n = s.ambient_n + 1;
  r.values.push_back(0);
  for (int v : s.values) r.values.push_back(v + 1);
  return r;
}

Simplex join_right(const Simplex& s) {
  Simplex r = s;
  r.ambient_n = s.ambient_n + 1;
  r.values.push_back(s.ambient_n + 1);
  return r;
}

Simplex dual(const Simplex& s) {
  Simplex r;
  r.ambient_n = s.ambient_n;
  const int m = s.m();
  r.values.resize(m + 1);
  for (int i = 0; i <= m; ++i) r.values[i] = s.ambient_n - s.values[m - i];
  return r;
}

Simplex act(const Simplex& alpha, const Simplex& s) {
  if (alpha.m() != s.ambient_n)
    throw std::invalid_argument("act: map domain does not match ambient");
  Simplex r;
  r.ambient_n = alpha.ambient_n;
  r.values.reserve(s.values.size());
  for (int v : s.values) r.values.push_back(alpha.values[v]);
  return r;
}

Simplex precompose(const Simplex& s, const Simplex& beta) {
  if (beta.ambient_n != s.m())
    throw std::invalid_argument("precompose: map codomain does not match degree");
  Simplex r;
  r.ambient_n = s.ambient_n;
  r.values.reserve(beta.values.size());
  for (int v : beta.values) r.values.push_back(s.values[v]);
  return r;
}

Simplex coface(int i, int m) {
  // d^i : [m] -> [m+1]
  Simplex r;
  r.ambient_n = m + 1;
  for (int j = 0; j <= m; ++j) r.values.push_back(j < i ? j : j + 1);
  return r;
}

Simplex codegeneracy(int i, int m) {
  // s^i : [m+1] -> [m]
  Simplex r;
  r.ambient_n = m;
  for (int j = 0; j <= m + 1; ++j) r.values.push_back(j <= i ? j : j - 1);
  return r;
}

Simplex RectilinearCube::vertex(unsigned mask) const {
  Simplex v = base;
  for (int i = 0; i < dim(); ++i)
    if (mask & (1u << i)) v.values[i] += diagonal[i];
  return v;
}

bool RectilinearCube::valid() const {
  if (static_cast<int>(diagonal.size()) != base.m() + 1) return false;
  for (int d : diagonal)
    if (d < 0) return false;
  for (unsigned mask = 0; mask < (1u << dim()); ++mask)
    if (!vertex(mask).valid()) return false;
  return true;
}

std::vector<RectilinearCube> unit_rectilinear_cubes(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("unit_rectilinear_cubes: negative parameter");
  std::vector<RectilinearCube> out;
  SimplexPoset p = enumerate_delta(m, n);
  std::vector<int> ones(m + 1, 1);
  for (const auto& s : p.elements) {
    RectilinearCube c{s, ones};
    if (c.valid()) out.push_back(c);
  }
  return out;
}

}  // namespace hal
