#include <doctest.h>

#include <set>

#include "hal/paracyclic.hpp"
#include "hal/util.hpp"

using namespace hal;

namespace {

ParaSimplex random_para(Rng& rng, int m, int n) {
  std::vector<int> w(m + 1);
  w[0] = static_cast<int>(rng.range(-5, 5));
  for (int i = 1; i <= m; ++i)
    w[i] = std::min(w[0] + n + 1,
                    w[i - 1] + static_cast<int>(rng.below(3)));
  return ParaSimplex{w, n};
}

}  // namespace

TEST_CASE("eval implements the equivariance condition") {
  ParaSimplex s{{0, 1}, 3};
  CHECK(s.eval(2) == 4);
  CHECK(s.eval(0) == 0);
  CHECK(s.eval(-1) == 1 - 4);
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    ParaSimplex x = random_para(rng, 1 + static_cast<int>(rng.below(3)), 3);
    long long i = rng.range(-10, 10);
    long long k = rng.range(-4, 4);
    CHECK(x.eval(i + k * (x.m() + 1)) == x.eval(i) + k * (x.period_n + 1));
  }
}

TEST_CASE("eval is monotone on a window of integers") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    ParaSimplex x = random_para(rng, 2, 4);
    if (!x.valid()) continue;
    for (long long i = -20; i < 20; ++i) CHECK(x.eval(i) <= x.eval(i + 1));
  }
}

TEST_CASE("paracyclic degeneracy includes the wrap-around equality") {
  CHECK(ParaSimplex{{0, 4}, 3}.degenerate());   // sigma_1 = sigma_0 + 4
  CHECK(!ParaSimplex{{0, 1}, 3}.degenerate());
  CHECK(ParaSimplex{{1, 1}, 3}.degenerate());
}

TEST_CASE("the three automorphisms") {
  SUBCASE("Coxeter subtracts one") {
    ParaSimplex s{{1, 3}, 3};
    CHECK(coxeter(s).window == std::vector<int>{0, 2});
  }
  SUBCASE("Heller shifts the window") {
    ParaSimplex s{{0, 2}, 3};
    CHECK(heller(s).window == std::vector<int>{2, 4});
  }
  SUBCASE("S^{n+1} = Sigma^{n-m} on random elements") {
    Rng rng(9);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}}) {
      for (int t = 0; t < 200; ++t) {
        ParaSimplex x = random_para(rng, m, n);
        if (!x.valid()) continue;
        ParaSimplex lhs = nakayama(x, 1);
        for (int k = 1; k < n + 1; ++k) lhs = nakayama(lhs, 1);
        CHECK(lhs == heller(x, n - m));
      }
    }
  }
  SUBCASE("Sigma^{m+1} = Phi^{-(n+1)}") {
    Rng rng(10);
    for (int t = 0; t < 100; ++t) {
      ParaSimplex x = random_para(rng, 2, 5);
      if (!x.valid()) continue;
      CHECK(heller(x, x.m() + 1) == coxeter(x, -(x.period_n + 1)));
    }
  }
  SUBCASE("automorphisms commute pairwise and preserve order (bounded window)") {
    for (int m = 1; m <= 2; ++m)
      for (int n = m; n <= 4; ++n) {
        auto elems = window_elements(m, n, -2, 2);
        for (const auto& x : elems) {
          CHECK(heller(coxeter(x)) == coxeter(heller(x)));
          CHECK(nakayama(x) == coxeter(heller(x)));
        }
        for (const auto& x : elems)
          for (const auto& y : elems) {
            if (!x.valid() || !y.valid()) continue;
            if (para_leq(x, y)) {
              CHECK(para_leq(heller(x), heller(y)));
              CHECK(para_leq(coxeter(x), coxeter(y)));
              CHECK(para_leq(nakayama(x), nakayama(y)));
            }
          }
      }
  }
  SUBCASE("automorphisms preserve non-degeneracy") {
    for (const auto& x : window_elements(2, 4, -3, 3)) {
      if (!x.valid()) continue;
      CHECK(heller(x).degenerate() == x.degenerate());
      CHECK(coxeter(x).degenerate() == x.degenerate());
      CHECK(nakayama(x).degenerate() == x.degenerate());
    }
  }
}

TEST_CASE("orbit representatives") {
  SUBCASE("counts are C(n, m)") {
    CHECK(phi_orbit_representatives(1, 3).size() == 3);
    CHECK(phi_orbit_representatives(2, 4).size() == 6);
    CHECK(phi_orbit_representatives(3, 7).size() == 35);
  }
  SUBCASE("representatives are non-degenerate with first entry 0") {
    for (const auto& r : phi_orbit_representatives(2, 5)) {
      CHECK(r.valid());
      CHECK(!r.degenerate());
      CHECK(r.window[0] == 0);
    }
  }
  SUBCASE("orbit keys separate orbits and are translation invariant") {
    auto reps = phi_orbit_representatives(2, 4);
    std::set<std::vector<int>> keys;
    for (const auto& r : reps) {
      keys.insert(phi_orbit_key(r));
      CHECK(phi_orbit_key(coxeter(r, 3)) == phi_orbit_key(r));
    }
    CHECK(keys.size() == reps.size());
  }
}

TEST_CASE("embedding of Delta into Lambda") {
  SUBCASE("injective and order preserving on Delta(1,3)") {
    auto p = enumerate_delta(1, 3);
    for (const auto& x : p.elements)
      for (const auto& y : p.elements) {
        CHECK((embed_delta(x) == embed_delta(y)) == (x == y));
        CHECK(para_leq(embed_delta(x), embed_delta(y)) == simplex_leq(x, y));
      }
  }
  SUBCASE("image is exactly the Delta window (exhaustive, (1,3))") {
    auto p = enumerate_delta(1, 3);
    std::set<std::vector<int>> image;
    for (const auto& x : p.elements) image.insert(embed_delta(x).window);
    for (const auto& e : window_elements(1, 3, -5, 5)) {
      if (!e.valid()) continue;
      CHECK(in_delta_window(e) == (image.count(e.window) > 0));
    }
  }
  SUBCASE("Coxeter moves parts of the image outside it") {
    ParaSimplex x = embed_delta(Simplex{{0, 2}, 3});
    CHECK(!in_delta_window(coxeter(x)));
  }
}
