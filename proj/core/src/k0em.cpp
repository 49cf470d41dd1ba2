#include "hal/k0em.hpp"

#include <numeric>
#include <stdexcept>

namespace hal {

IMat relation_matrix(int m, int n, bool with_signs) {
  SimplexPoset p = enumerate_delta(m, n);
  const int cols = static_cast<int>(p.elements.size());
  std::vector<int> deg_rows;
  for (int i = 0; i < cols; ++i)
    if (p.elements[i].degenerate()) deg_rows.push_back(i);
  auto taus = nondegenerate(enumerate_delta(m + 1, n));
  IMat r(static_cast<int>(deg_rows.size() + taus.size()), cols);
  int row = 0;
  for (int i : deg_rows) r(row++, i) = 1;
  for (const auto& tau : taus) {
    for (int i = 0; i <= m + 1; ++i) {
      Simplex face = precompose(tau, coface(i, m));
      int idx = p.index_of(face);
      r(row, idx) += (with_signs && (i % 2)) ? -1 : 1;
    }
    ++row;
  }
  return r;
}

K0Presentation k0_presentation(int m, int n) {
  if (!(n >= m && m >= 1)) throw std::invalid_argument("k0_presentation: need n >= m >= 1");
  K0Presentation out;
  out.m = m;
  out.n = n;
  out.generators = enumerate_delta(m, n);
  out.relations = relation_matrix(m, n, true);
  auto s = smith_normal_form(out.relations);
  out.factors = s.factors;
  out.rank = static_cast<int>(out.generators.elements.size()) - s.rank;
  out.free_cokernel = true;
  for (const auto& f : s.factors)
    if (!f.is_one()) out.free_cokernel = false;
  HomTable target(m, n), base(m - 1, n - 1);
  const auto& verts = base.vertices();
  out.e_matrix = IMat(static_cast<int>(verts.size()),
                      static_cast<int>(out.generators.elements.size()));
  for (size_t j = 0; j < out.generators.elements.size(); ++j) {
    const Simplex& sigma = out.generators.elements[j];
    int si = target.index_of(sigma);
    if (si < 0) continue;  // degenerate: eps vanishes
    for (size_t i = 0; i < verts.size(); ++i) {
      int gi = target.index_of(join_left(verts[i]));
      out.e_matrix(static_cast<int>(i), static_cast<int>(j)) = target.hom(gi, si);
    }
  }
  return out;
}

bool em_is_member(const EMSimplex& f, bool with_signs) {
  SimplexPoset p = enumerate_delta(f.m, f.n);
  const size_t nf = f.B.cyclic.size();
  if (f.values.size() != p.elements.size()) return false;
  for (size_t g = 0; g < p.elements.size(); ++g) {
    if (f.values[g].size() != nf) return false;
    if (p.elements[g].degenerate())
      for (size_t c = 0; c < nf; ++c)
        if (f.values[g][c] % f.B.cyclic[c] != 0) return false;
  }
  for (const auto& tau : nondegenerate(enumerate_delta(f.m + 1, f.n))) {
    std::vector<std::int64_t> acc(nf, 0);
    for (int i = 0; i <= f.m + 1; ++i) {
      Simplex face = precompose(tau, coface(i, f.m));
      int idx = p.index_of(face);
      for (size_t c = 0; c < nf; ++c)
        acc[c] += ((with_signs && (i % 2)) ? -1 : 1) * f.values[idx][c];
    }
    for (size_t c = 0; c < nf; ++c)
      if (((acc[c] % f.B.cyclic[c]) + f.B.cyclic[c]) % f.B.cyclic[c] != 0) return false;
  }
  return true;
}

BigInt em_count(const FinAbGroup& B, int m, int n, bool with_signs) {
  IMat r = relation_matrix(m, n, with_signs);
  auto s = smith_normal_form(r);
  BigInt total(1);
  for (auto k : B.cyclic) {
    BigInt c(1);
    for (int i = 0; i < r.cols; ++i) {
      if (i < static_cast<int>(s.factors.size())) {
        std::int64_t d = static_cast<std::int64_t>(
            s.factors[i].mod_u64(static_cast<std::uint64_t>(k)));
        c = c * BigInt(std::gcd(d, k));
      } else {
        c = c * BigInt(k);
      }
    }
    total = total * c;
  }
  return total;
}

std::vector<EMSimplex> em_enumerate(const FinAbGroup& B, int m, int n, bool with_signs,
                                    std::int64_t budget) {
  IMat r = relation_matrix(m, n, with_signs);
  auto s = smith_normal_form(r);
  BigInt cnt = em_count(B, m, n, with_signs);
  if (!cnt.fits_i64() || cnt.to_i64() > budget)
    throw std::runtime_error("em_enumerate: budget exceeded");
  const int cols = r.cols;
  std::vector<std::vector<std::vector<std::int64_t>>> per_factor;
  for (auto k : B.cyclic) {
    std::vector<std::vector<std::int64_t>> sols;
    std::vector<std::int64_t> step(cols);
    for (int i = 0; i < cols; ++i) {
      if (i < static_cast<int>(s.factors.size())) {
        std::int64_t d = static_cast<std::int64_t>(
            s.factors[i].mod_u64(static_cast<std::uint64_t>(k)));
        step[i] = k / std::gcd(d, k);
      } else {
        step[i] = 1;
      }
    }
    std::vector<std::int64_t> g(cols, 0);
    auto emit = [&]() {
      std::vector<std::int64_t> f(cols, 0);
      for (int row2 = 0; row2 < cols; ++row2) {
        __int128 acc = 0;
        for (int c2 = 0; c2 < cols; ++c2) {
          if (g[c2] == 0) continue;
          std::int64_t vv = static_cast<std::int64_t>(
              s.V(row2, c2).mod_u64(static_cast<std::uint64_t>(k)));
          acc += static_cast<__int128>(vv) * g[c2];
        }
        f[row2] = static_cast<std::int64_t>(((acc % k) + k) % k);
      }
      sols.push_back(std::move(f));
    };
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == cols) {
        emit();
        return;
      }
      for (std::int64_t v = 0; v < k; v += step[pos]) {
        g[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    per_factor.push_back(std::move(sols));
  }
  std::vector<EMSimplex> out;
  std::vector<size_t> pick(B.cyclic.size(), 0);
  while (true) {
    EMSimplex f;
    f.B = B;
    f.m = m;
    f.n = n;
    f.values.assign(cols, std::vector<std::int64_t>(B.cyclic.size(), 0));
    for (size_t fac = 0; fac < B.cyclic.size(); ++fac)
      for (int gidx = 0; gidx < cols; ++gidx)
        f.values[gidx][fac] = per_factor[fac][pick[fac]][gidx];
    out.push_back(std::move(f));
    size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] < per_factor[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  return out;
}

EMSimplex em_simplicial_action(const Simplex& alpha, const EMSimplex& f) {
  if (alpha.ambient_n != f.n)
    throw std::invalid_argument("em_simplicial_action: shape mismatch");
  EMSimplex out;
  out.B = f.B;
  out.m = f.m;
  out.n = alpha.m();
  SimplexPoset src = enumerate_delta(f.m, out.n);
  SimplexPoset tgt = enumerate_delta(f.m, f.n);
  out.values.resize(src.elements.size());
  for (size_t g = 0; g < src.elements.size(); ++g) {
    Simplex composed = act(alpha, src.elements[g]);
    out.values[g] = f.values[tgt.index_of(composed)];
  }
  return out;
}

}  // namespace hal
