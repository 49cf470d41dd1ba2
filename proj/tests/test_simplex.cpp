#include <doctest.h>

#include <set>

#include "hal/simplex.hpp"
#include "hal/util.hpp"

using namespace hal;

namespace {

// Stars-and-bars oracle for |Delta(m, n)|: monotone maps [m] -> [n].
std::int64_t count_monotone_oracle(int m, int n) {
  // weakly increasing sequences of length m+1 in {0..n}
  std::vector<std::vector<std::int64_t>> dp(m + 2, std::vector<std::int64_t>(n + 2, 0));
  for (int v = 0; v <= n + 1; ++v) dp[0][v] = 1;
  for (int len = 1; len <= m + 1; ++len) {
    for (int v = n; v >= 0; --v) dp[len][v] = dp[len][v + 1] + dp[len - 1][v];
    dp[len][n + 1] = 0;
  }
  return dp[m + 1][0];
}

}  // namespace

TEST_CASE("enumerate_delta counts match the binomial formulas") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      auto p = enumerate_delta(m, n);
      CHECK(static_cast<std::int64_t>(p.elements.size()) == binomial(n + m + 1, m + 1));
      CHECK(static_cast<std::int64_t>(p.elements.size()) == count_monotone_oracle(m, n));
      auto nd = nondegenerate(p);
      CHECK(static_cast<std::int64_t>(nd.size()) == binomial(n + 1, m + 1));
    }
}

TEST_CASE("enumerate_delta: specific counts") {
  auto p13 = enumerate_delta(1, 3);
  CHECK(p13.elements.size() == 10);
  CHECK(nondegenerate(p13).size() == 6);
  auto p0n = enumerate_delta(0, 5);
  CHECK(p0n.elements.size() == 6);
  CHECK(nondegenerate(p0n).size() == 6);
  // the ten summands highlighted in the ambient poset Delta(2, 4)
  auto p24 = enumerate_delta(2, 4);
  CHECK(p24.elements.size() == 35);
  CHECK(nondegenerate(p24).size() == 10);
}

TEST_CASE("enumerate_delta is sorted, duplicate-free, and errors on bad input") {
  auto p = enumerate_delta(2, 3);
  for (size_t i = 0; i + 1 < p.elements.size(); ++i)
    CHECK(p.elements[i].values < p.elements[i + 1].values);
  CHECK_THROWS(enumerate_delta(-1, 2));
  CHECK_THROWS(enumerate_delta(2, -1));
}

TEST_CASE("componentwise order") {
  Simplex a{{0, 1}, 3}, b{{1, 2}, 3}, c{{0, 3}, 3};
  CHECK(simplex_leq(a, b));
  CHECK(!simplex_leq(c, b));
  CHECK(simplex_leq(a, a));
  CHECK_THROWS(simplex_leq(a, Simplex{{0, 1, 2}, 3}));
}

TEST_CASE("degenerate detection and counts") {
  CHECK(Simplex{{0, 0}, 2}.degenerate());
  CHECK(!Simplex{{0, 2}, 2}.degenerate());
  int deg = 0;
  for (const auto& s : enumerate_delta(1, 3).elements) deg += s.degenerate();
  CHECK(deg == 4);  // 10 - 6
}

TEST_CASE("hasse quiver shapes") {
  SUBCASE("Delta(0,2) is a path 0 -> 1 -> 2") {
    auto p = enumerate_delta(0, 2);
    auto e = hasse_quiver(p.elements);
    CHECK(e.size() == 2);
  }
  SUBCASE("Delta(0,0) has no edges") {
    auto p = enumerate_delta(0, 0);
    CHECK(hasse_quiver(p.elements).empty());
  }
  SUBCASE("Delta(1,3)^sharp has 6 vertices; edge count checked by direct enumeration") {
    auto nd = nondegenerate(enumerate_delta(1, 3));
    REQUIRE(nd.size() == 6);
    auto e = hasse_quiver(nd);
    // Direct enumeration of covers of the 6-element subposet (01 02 03 12 13 23):
    // 01->02, 02->03, 02->12, 03->13, 12->13, 13->23.
    CHECK(e.size() == 6);
    std::set<std::pair<std::string, std::string>> got;
    for (auto [i, j] : e) got.insert({nd[i].str(), nd[j].str()});
    std::set<std::pair<std::string, std::string>> want = {
        {"0,1", "0,2"}, {"0,2", "0,3"}, {"0,2", "1,2"},
        {"0,3", "1,3"}, {"1,2", "1,3"}, {"1,3", "2,3"}};
    CHECK(got == want);
  }
}

TEST_CASE("join endofunctors") {
  Simplex s{{0, 2}, 3};
  CHECK(join_left(s).values == std::vector<int>{0, 1, 3});
  CHECK(join_left(s).ambient_n == 4);
  CHECK(join_right(s).values == std::vector<int>{0, 2, 4});
  // degeneracy is preserved and reflected across all of Delta(1, 3)
  for (const auto& x : enumerate_delta(1, 3).elements) {
    CHECK(join_left(x).degenerate() == x.degenerate());
    CHECK(join_right(x).degenerate() == x.degenerate());
  }
}

TEST_CASE("dual is an order-reversing involution") {
  Simplex s{{0, 1}, 3};
  CHECK(dual(s).values == std::vector<int>{2, 3});
  for (const auto& x : enumerate_delta(2, 4).elements) {
    CHECK(dual(dual(x)) == x);
    CHECK(dual(x).degenerate() == x.degenerate());
  }
  auto p = enumerate_delta(1, 3);
  for (const auto& x : p.elements)
    for (const auto& y : p.elements)
      CHECK(simplex_leq(x, y) == simplex_leq(dual(y), dual(x)));
}

TEST_CASE("simplicial action: faces, degeneracies, functoriality") {
  SUBCASE("precompose with d^1 omits index 1") {
    Simplex s{{0, 1, 2}, 4};
    CHECK(precompose(s, coface(1, 1)).values == std::vector<int>{0, 2});
  }
  SUBCASE("postcompose with s^0 collapses 0,1") {
    Simplex alpha = codegeneracy(0, 2);  // [3] -> [2]
    Simplex s{{0, 1}, 3};
    Simplex r = act(alpha, s);
    CHECK(r.ambient_n == 2);
    CHECK(r.values == std::vector<int>{0, 0});
  }
  SUBCASE("functoriality on random composable pairs") {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
      // alpha : [n] -> [n'], beta : [n'] -> [n''], sigma in Delta(m, n)
      int m = static_cast<int>(rng.below(3));
      int n = 1 + static_cast<int>(rng.below(4));
      int n1 = 1 + static_cast<int>(rng.below(4));
      int n2 = 1 + static_cast<int>(rng.below(4));
      auto random_monotone = [&](int dom, int cod) {
        std::vector<int> v(dom + 1);
        int cur = static_cast<int>(rng.below(cod + 1));
        for (int i = 0; i <= dom; ++i) {
          v[i] = cur;
          cur = std::min(cod, cur + static_cast<int>(rng.below(2)));
        }
        return Simplex{v, cod};
      };
      Simplex alpha = random_monotone(n, n1);
      Simplex beta = random_monotone(n1, n2);
      Simplex sigma = random_monotone(m, n);
      CHECK(act(beta, act(alpha, sigma)) == act(act(beta, alpha), sigma));
      // identity acts trivially
      Simplex idn = random_monotone(n, n);
      for (int i = 0; i <= n; ++i) idn.values[i] = i;
      CHECK(act(idn, sigma) == sigma);
    }
  }
  SUBCASE("act preserves order in each variable (exhaustive small)") {
    auto p = enumerate_delta(1, 2);
    auto maps = enumerate_delta(2, 3);  // monotone maps [2] -> [3]
    for (const auto& al : maps.elements)
      for (const auto& x : p.elements)
        for (const auto& y : p.elements)
          if (simplex_leq(x, y)) CHECK(simplex_leq(act(al, x), act(al, y)));
  }
}

TEST_CASE("unit rectilinear cubes") {
  SUBCASE("m=1, n=2: single unit square at base (0,1)") {
    auto cubes = unit_rectilinear_cubes(1, 2);
    REQUIRE(cubes.size() == 1);
    CHECK(cubes[0].base.values == std::vector<int>{0, 1});
  }
  SUBCASE("m=0: unit edges i -> i+1") {
    auto cubes = unit_rectilinear_cubes(0, 4);
    CHECK(cubes.size() == 4);
  }
  SUBCASE("faces of a unit cube are rectilinear") {
    for (const auto& c : unit_rectilinear_cubes(2, 4)) {
      for (int dir = 0; dir < c.dim(); ++dir) {
        RectilinearCube face;
        face.base = c.base;
        face.diagonal = c.diagonal;
        face.diagonal[dir] = 0;
        CHECK(face.valid());
      }
    }
  }
  SUBCASE("a cube with a zero diagonal entry has identical opposite faces") {
    RectilinearCube c{Simplex{{0, 1}, 3}, {0, 1}};
    REQUIRE(c.valid());
    CHECK(c.vertex(0b00) == c.vertex(0b01));
    CHECK(c.vertex(0b10) == c.vertex(0b11));
  }
}
