#include <doctest.h>

#include "hal/rep.hpp"
#include "hal/util.hpp"

using namespace hal;

namespace {

// Random reduced strict rep on the full Delta(m, n) poset, built from a random
// cell model over its own reduced hom combinatorics (pair and singleton cells).
PosetRep random_reduced_rep(Rng& rng, int m, int n, int pieces, bool slice_objects = false) {
  std::vector<ParaSimplex> nd;
  for (const auto& s : nondegenerate(enumerate_delta(m, n))) {
    if (slice_objects && s.values.front() != 0) continue;
    nd.push_back(embed_delta(s));
  }
  CellRep model;
  model.m = m;
  model.n = n;
  for (int t = 0; t < pieces; ++t) {
    int a = static_cast<int>(rng.below(nd.size()));
    int d = static_cast<int>(rng.below(2));
    if (rng.below(2)) {
      model.cells.push_back({nd[a], d});
    } else {
      // pair with hom(target, source) = 1
      std::vector<int> candidates;
      for (size_t b = 0; b < nd.size(); ++b)
        if (hom_dim_para(nd[b], nd[a])) candidates.push_back(static_cast<int>(b));
      int b = candidates[rng.below(candidates.size())];
      int s = static_cast<int>(model.cells.size());
      model.cells.push_back({nd[a], d});
      model.cells.push_back({nd[b], d - 1});
      model.diff.emplace_back(s, s + 1, Rat(1 + static_cast<std::int64_t>(rng.below(3))));
    }
  }
  if (model.cells.empty()) model.cells.push_back({nd[0], 0});
  std::vector<ParaSimplex> verts;
  for (const auto& s : enumerate_delta(m, n).elements) verts.push_back(embed_delta(s));
  return materialize(model, verts, m, n);
}

PosetRep projective_cell_rep(int m, int n, const ParaSimplex& obj) {
  CellRep model;
  model.m = m;
  model.n = n;
  model.cells.push_back({obj, 0});
  std::vector<ParaSimplex> verts;
  for (const auto& s : enumerate_delta(m, n).elements) verts.push_back(embed_delta(s));
  return materialize(model, verts, m, n);
}

}  // namespace

TEST_CASE("materialized cell reps are valid and reduced") {
  Rng rng(3);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}}) {
    for (int t = 0; t < 6; ++t) {
      PosetRep r = random_reduced_rep(rng, m, n, 5);
      std::string w;
      REQUIRE_MESSAGE(r.validate(&w), w);
      CHECK(r.reduced());
    }
  }
}

TEST_CASE("projectives at the slice are exact, those below it are not") {
  // hom(s, -) is exact on the window cubes exactly when the one failing cube
  // (the unit cube directly below s) lies outside the window, i.e. s_0 = 0.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}) {
    auto nd = nondegenerate(enumerate_delta(m, n));
    for (const auto& s : nd) {
      PosetRep r = projective_cell_rep(m, n, embed_delta(s));
      bool in_slice = s.values.front() == 0;
      bool below_cube_inside = [&] {
        // the cube [s-1, s] has all vertices valid iff s - 1 is a valid window
        ParaSimplex low = coxeter(embed_delta(s), 1);
        return low.window.front() >= 0;
      }();
      if (in_slice) CHECK(is_exact(r, m));
      if (below_cube_inside) CHECK(!is_exact(r, m));
    }
  }
}

TEST_CASE("zero rep is exact and extends to zero") {
  PosetRep zero;
  zero.m = 0;
  zero.n = 2;
  for (const auto& s : enumerate_delta(0, 2).elements) {
    zero.vertices.push_back(embed_delta(s));
    zero.values.push_back(ChainComplex());
  }
  std::sort(zero.vertices.begin(), zero.vertices.end());
  zero.covers = {{0, 1}, {1, 2}};
  zero.maps.resize(2);
  CHECK(is_exact(zero, 0));
  TrackedRep ext = extend_projective(zero);
  for (const auto& v : ext.rep.values) CHECK(v.total_dim() == 0);
}

TEST_CASE("the SES rep on Delta(1,2) is exact, a perturbed one is not") {
  // K -> K^2 -> K on the non-degenerate part, zeros on degenerates
  std::vector<ParaSimplex> verts;
  for (const auto& s : enumerate_delta(1, 2).elements) verts.push_back(embed_delta(s));
  PosetRep r;
  r.m = 1;
  r.n = 2;
  r.vertices = verts;
  std::sort(r.vertices.begin(), r.vertices.end());
  auto val = [&](const ParaSimplex& v) -> ChainComplex {
    if (v.degenerate()) return ChainComplex();
    if (v.window == std::vector<int>{0, 1}) return ChainComplex::concentrated(0, 1);
    if (v.window == std::vector<int>{0, 2}) return ChainComplex::concentrated(0, 2);
    return ChainComplex::concentrated(0, 1);  // (1,2)
  };
  for (const auto& v : r.vertices) r.values.push_back(val(v));
  const size_t nv = r.vertices.size();
  for (size_t a = 0; a < nv; ++a)
    for (size_t b = 0; b < nv; ++b) {
      if (a == b || !para_leq(r.vertices[a], r.vertices[b])) continue;
      bool cov = true;
      for (size_t t = 0; t < nv && cov; ++t) {
        if (t == a || t == b) continue;
        if (para_leq(r.vertices[a], r.vertices[t]) && para_leq(r.vertices[t], r.vertices[b]))
          cov = false;
      }
      if (cov) r.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  for (auto [a, b] : r.covers) {
    ComplexCube::Edge e;
    e.lo = 0;
    QMat m(r.values[b].dim(0), r.values[a].dim(0));
    if (r.vertices[a].window == std::vector<int>{0, 1} &&
        r.vertices[b].window == std::vector<int>{0, 2})
      m(0, 0) = Rat(1);  // K -> K^2 first coordinate
    if (r.vertices[a].window == std::vector<int>{0, 2} &&
        r.vertices[b].window == std::vector<int>{1, 2})
      m(0, 1) = Rat(1);  // K^2 -> K second coordinate
    e.parts.push_back(std::move(m));
    r.maps.push_back(std::move(e));
  }
  REQUIRE(r.validate());
  CHECK(is_exact(r, 1));
  // perturb: zero out the inclusion; the square still commutes strictly but
  // the middle exactness fails
  for (size_t c = 0; c < r.covers.size(); ++c)
    if (r.vertices[r.covers[c].first].window == std::vector<int>{0, 1} &&
        r.vertices[r.covers[c].second].window == std::vector<int>{0, 2})
      r.maps[c].parts[0](0, 0) = Rat(0);
  REQUIRE(r.validate());
  CHECK(!is_exact(r, 1));
}

TEST_CASE("extension homology matches the epsilon dimension vectors") {
  // For every rho, extending the reduced projective at gamma(rho) yields the
  // rep tau -> hom(gamma rho, tau): the coordinate of every eps dim vector.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}}) {
    HomTable target(m, n), base(m - 1, n - 1);
    for (const auto& rho : base.vertices()) {
      // y = hom(rho, -) over the source combinatorics
      CellRep src_model;
      src_model.m = m - 1;
      src_model.n = n - 1;
      src_model.cells.push_back({embed_delta(rho), 0});
      std::vector<ParaSimplex> verts;
      for (const auto& s : enumerate_delta(m - 1, n - 1).elements)
        verts.push_back(embed_delta(s));
      PosetRep y = materialize(src_model, verts, m - 1, n - 1);
      TrackedRep ext = extend_projective(y);
      REQUIRE(ext.rep.validate());
      CHECK(ext.rep.reduced());
      CHECK(is_exact(ext.rep, m));
      Simplex grho = join_left(rho);
      for (size_t i = 0; i < ext.rep.vertices.size(); ++i) {
        const ParaSimplex& tau = ext.rep.vertices[i];
        int expect = tau.degenerate() ? 0 : target.hom(grho, to_delta(tau));
        int total_h = 0;
        for (int d = -6; d <= 8; ++d) total_h += ext.rep.values[i].homology_dim(d);
        CHECK(total_h == expect);
        if (expect) CHECK(ext.rep.values[i].homology_dim(0) == 1);
      }
    }
  }
}

TEST_CASE("extensions of random reduced reps are exact and restrict back") {
  Rng rng(17);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}}) {
    for (int t = 0; t < 4; ++t) {
      PosetRep y = random_reduced_rep(rng, m - 1, n - 1, 3);
      TrackedRep ext = extend_projective(y);
      std::string w;
      REQUIRE_MESSAGE(ext.rep.validate(&w), w);
      CHECK(ext.rep.reduced());
      CHECK(is_exact(ext.rep, m));
      // round trip: the augmentation at each image vertex is a quasi-iso
      for (const auto& [gv, aug] : ext.augmentations) {
        int yi = y.index_of(coxeter(heller(gv, 1), 1));  // undo [0]*: shift window
        // reconstruct rho from gamma(rho): drop the leading zero
        ParaSimplex rho;
        rho.period_n = y.n;
        for (size_t i = 1; i < gv.window.size(); ++i) rho.window.push_back(gv.window[i] - 1);
        yi = y.index_of(rho);
        REQUIRE(yi >= 0);
        ChainComplex model_val = ext.model.value_at(gv);
        ChainMap cmp;
        cmp.src = &model_val;
        cmp.tgt = &y.values[yi];
        cmp.lo = aug.lo;
        cmp.parts = aug.parts;
        REQUIRE(cmp.valid());
        CHECK(quasi_iso(cmp));
      }
    }
  }
}

TEST_CASE("slice restriction and mutation round trips") {
  Rng rng(23);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}) {
    for (int t = 0; t < (m == 1 ? 12 : 6); ++t) {
      PosetRep y = random_reduced_rep(rng, m - 1, n - 1, 3);
      CellRep model = extend_projective(y).model;
      Slice sp = projective_slice(m, n);
      TrackedRep on_slice = restrict_slice(model, sp);
      REQUIRE(on_slice.rep.validate());
      CHECK(on_slice.rep.reduced());
      // mutate right at a minimal element, then left back
      auto mins = minimal_elements(sp);
      const ParaSimplex& sigma = mins[rng.below(mins.size())];
      TrackedRep mut = mutate_rep(on_slice, sp, sigma, true);
      REQUIRE(mut.rep.validate());
      Slice s2 = mutate_right(sp, sigma);
      TrackedRep back = mutate_rep(mut, s2, coxeter(sigma, -1), false);
      // round trip: exactly the original restriction
      REQUIRE(back.rep.vertices.size() == on_slice.rep.vertices.size());
      for (size_t i = 0; i < back.rep.vertices.size(); ++i) {
        CHECK(back.rep.vertices[i] == on_slice.rep.vertices[i]);
        for (int d = -6; d <= 8; ++d)
          CHECK(back.rep.values[i].homology_dim(d) ==
                on_slice.rep.values[i].homology_dim(d));
      }
    }
  }
}

TEST_CASE("m = 1 cube-filling mutation agrees with the cell-model route") {
  Rng rng(29);
  const int m = 1, n = 3;
  for (int t = 0; t < 10; ++t) {
    PosetRep y = random_reduced_rep(rng, 0, 2, 3);
    CellRep model = extend_projective(y).model;
    Slice sp = projective_slice(m, n);
    TrackedRep on_slice = restrict_slice(model, sp);
    auto mins = minimal_elements(sp);
    const ParaSimplex& sigma = mins[rng.below(mins.size())];
    TrackedRep via_model = mutate_rep(on_slice, sp, sigma, true);
    PosetRep via_fill = mutate_rep_fill(on_slice.rep, sp, sigma, true);
    std::string w;
    REQUIRE_MESSAGE(via_fill.validate(&w), w);
    REQUIRE(via_fill.vertices.size() == via_model.rep.vertices.size());
    for (size_t i = 0; i < via_fill.vertices.size(); ++i) {
      CHECK(via_fill.vertices[i] == via_model.rep.vertices[i]);
      for (int d = -6; d <= 8; ++d)
        CHECK(via_fill.values[i].homology_dim(d) ==
              via_model.rep.values[i].homology_dim(d));
    }
    // fill-route round trip: right then left returns the original homology
    Slice s2 = mutate_right(sp, sigma);
    PosetRep back = mutate_rep_fill(via_fill, s2, coxeter(sigma, -1), false);
    REQUIRE(back.validate());
    for (size_t i = 0; i < back.vertices.size(); ++i) {
      int oi = on_slice.rep.index_of(back.vertices[i]);
      REQUIRE(oi >= 0);
      for (int d = -6; d <= 8; ++d)
        CHECK(back.values[i].homology_dim(d) == on_slice.rep.values[oi].homology_dim(d));
    }
  }
}

TEST_CASE("classical reflection behaviour of the m = 1 mutation") {
  // the projective rep at gamma(rho) restricted to S_P and mutated at (0,1):
  // homology dims follow the reflection pattern computed by hand via cones
  const int m = 1, n = 3;
  HomTable target(1, 3), base(0, 2);
  Slice sp = projective_slice(m, n);
  ParaSimplex sigma{{0, 1}, 3};
  for (const auto& rho : base.vertices()) {
    CellRep src_model;
    src_model.m = 0;
    src_model.n = 2;
    src_model.cells.push_back({embed_delta(rho), 0});
    std::vector<ParaSimplex> verts;
    for (const auto& s : enumerate_delta(0, 2).elements) verts.push_back(embed_delta(s));
    PosetRep y = materialize(src_model, verts, 0, 2);
    TrackedRep ext = extend_projective(y);
    TrackedRep on_slice = restrict_slice(ext.model, sp);
    PosetRep mut = mutate_rep_fill(on_slice.rep, sp, sigma, true);
    // the new value at (1,2) is the cone of hom(gamma rho, (0,1)) -> hom(.., (0,2)+(1,1))
    int i12 = mut.index_of(ParaSimplex{{1, 2}, 3});
    REQUIRE(i12 >= 0);
    int h0 = mut.values[i12].homology_dim(0);
    int h1 = mut.values[i12].homology_dim(1);
    int a = target.hom(join_left(rho), Simplex{{0, 1}, 3});
    int b = target.hom(join_left(rho), Simplex{{0, 2}, 3});
    // cone of K^a -> K^b along the canonical map (injective when a <= b here)
    CHECK(h0 == b - std::min(a, b));
    CHECK(h1 == a - std::min(a, b));
  }
}

TEST_CASE("S-construction: structure maps and simplicial identities") {
  Rng rng(31);
  const int m = 1, n = 2;
  for (int t = 0; t < 6; ++t) {
    PosetRep r = random_reduced_rep(rng, m, n, 3, /*slice objects*/ true);
    REQUIRE(s_object_validate(r, m));
    // s_i then d_i is the identity on objects
    for (int i = 0; i <= n; ++i) {
      PosetRep up = s_structure_map(codegeneracy(i, n), r);
      REQUIRE(up.validate());
      PosetRep back = s_structure_map(coface(i, n), up);
      REQUIRE(back.vertices.size() == r.vertices.size());
      for (size_t v = 0; v < r.vertices.size(); ++v) {
        CHECK(back.values[v].total_dim() == r.values[v].total_dim());
        for (int d = -4; d <= 6; ++d)
          CHECK(back.values[v].homology_dim(d) == r.values[v].homology_dim(d));
      }
    }
    // functoriality on random composable pairs
    auto random_monotone = [&](int dom, int cod) {
      std::vector<int> v(dom + 1);
      int cur = static_cast<int>(rng.below(2));
      for (int i = 0; i <= dom; ++i) {
        v[i] = std::min(cur, cod);
        cur += static_cast<int>(rng.below(2));
      }
      return Simplex{v, cod};
    };
    Simplex alpha = random_monotone(2, 2);  // [2] -> [2]
    Simplex beta = random_monotone(2, 2);
    PosetRep lhs = s_structure_map(beta, s_structure_map(alpha, r));
    PosetRep rhs = s_structure_map(act(alpha, beta), r);
    REQUIRE(lhs.vertices.size() == rhs.vertices.size());
    for (size_t v = 0; v < lhs.vertices.size(); ++v)
      CHECK(lhs.values[v].total_dim() == rhs.values[v].total_dim());
  }
}

TEST_CASE("S2 objects of an abelian model are short exact sequences") {
  // m=1, n=2: exactness at the unit square is the SES condition; the face d_1
  // extracts sub and quotient data with matching dimensions
  Rng rng(37);
  for (int t = 0; t < 6; ++t) {
    PosetRep r = random_reduced_rep(rng, 1, 2, 4, /*slice objects*/ true);
    // Euler characteristics: chi(X01) - chi(X02) + chi(X12) = 0
    auto chi = [&](const ParaSimplex& v) {
      int i = r.index_of(v);
      long long c = 0;
      for (int d = -4; d <= 6; ++d)
        c += (d % 2 ? -1 : 1) * r.values[i].homology_dim(d);
      return c;
    };
    CHECK(chi(ParaSimplex{{0, 1}, 2}) - chi(ParaSimplex{{0, 2}, 2}) +
              chi(ParaSimplex{{1, 2}, 2}) ==
          0);
  }
}

TEST_CASE("paracyclic twist of S-objects") {
  Rng rng(41);
  const int m = 1, n = 3;
  for (int t = 0; t < 4; ++t) {
    PosetRep y = random_reduced_rep(rng, 0, 2, 3);
    TrackedRep ext = extend_projective(y);
    TrackedRep tw = s_paracyclic_twist(ext);
    REQUIRE(tw.rep.validate());
    CHECK(tw.rep.reduced());
    // exact on the translated window, and the window moved with the model
    CHECK(is_exact(tw.rep, m));
    CHECK(tw.rep.vertices.front() == coxeter(ext.rep.vertices.front(), 1));
    // twisting n+1 times translates the cell model by n+1, which acts as the
    // identity on Delta-window values up to the global shift: verify the
    // model objects are translated consistently
    TrackedRep tw2 = s_paracyclic_twist(tw);
    for (size_t c = 0; c < tw2.model.cells.size(); ++c)
      CHECK(tw2.model.cells[c].object.window ==
            coxeter(ext.model.cells[c].object, 2).window);
  }
}

TEST_CASE("ker d0 correspondence") {
  Rng rng(43);
  const int m = 1, n = 2;
  for (int t = 0; t < 6; ++t) {
    PosetRep x = random_reduced_rep(rng, m, n, 3, /*slice objects*/ true);
    REQUIRE(s_object_validate(x, m));
    TrackedRep big = ker_d0_backward(x, m, n);
    REQUIRE(big.rep.validate());
    CHECK(big.rep.reduced());
    CHECK(is_exact(big.rep, m + 1));
    // vanishing over the 0-th face: values vanish at simplices missing 0
    for (size_t i = 0; i < big.rep.vertices.size(); ++i)
      if (big.rep.vertices[i].window.front() >= 1)
        CHECK(big.rep.values[i].total_dim() == 0);
    // round trip: restriction along gamma recovers x up to quasi-iso
    PosetRep back = ker_d0_forward(big.rep, m, n);
    REQUIRE(back.validate());
    for (size_t i = 0; i < back.vertices.size(); ++i) {
      int xi = x.index_of(back.vertices[i]);
      REQUIRE(xi >= 0);
      for (int d = -6; d <= 8; ++d)
        CHECK(back.values[i].homology_dim(d) == x.values[xi].homology_dim(d));
    }
    // dimension data is bijective: homology over the gamma image determines
    // the big rep's homology (spot: zero object maps to zero object)
  }
  // zero to zero
  PosetRep zero;
  zero.m = m;
  zero.n = n;
  for (const auto& s : enumerate_delta(m, n).elements) {
    zero.vertices.push_back(embed_delta(s));
    zero.values.push_back(ChainComplex());
  }
  std::sort(zero.vertices.begin(), zero.vertices.end());
  TrackedRep big = ker_d0_backward(zero, m, n);
  for (const auto& v : big.rep.values) CHECK(v.total_dim() == 0);
}

TEST_CASE("hand instance of ker d0 at (1,2)") {
  // the projective cell rep at (0,1) in Delta(1,2) extends to an exact rep on
  // Delta(2,3) vanishing over the 0-th face
  PosetRep x = projective_cell_rep(1, 2, ParaSimplex{{0, 1}, 2});
  TrackedRep big = ker_d0_backward(x, 1, 2);
  REQUIRE(big.rep.validate());
  CHECK(is_exact(big.rep, 2));
  int nonzero = 0;
  for (size_t i = 0; i < big.rep.vertices.size(); ++i) {
    if (big.rep.values[i].total_dim()) {
      CHECK(big.rep.vertices[i].window.front() == 0);
      ++nonzero;
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("beilinson: monomial helpers") {
  CHECK(monomial_dim(2, 0) == 1);
  CHECK(monomial_dim(2, 1) == 3);
  CHECK(monomial_dim(2, 2) == 6);
  CHECK(monomial_dim(1, 3) == 4);
  QMat x0 = multiply_by_variable(1, 1, 0);
  CHECK(x0.rows == 3);
  CHECK(x0.cols == 2);
}

TEST_CASE("beilinson: m = 0 extension forces quasi-isos") {
  // a window rep on [0, 0] extends so that every x_0 step is a quasi-iso
  BeilinsonRep r;
  r.m = 0;
  r.lo = 0;
  r.hi = 0;
  r.values.push_back(ChainComplex::concentrated(0, 2));
  r.actions.resize(1);
  REQUIRE(r.validate());
  TrackedBeilinson ext = beilinson_extend(r, 0, 3);
  REQUIRE(ext.rep.validate());
  CHECK(beilinson_exact(ext.rep));
  for (int i = 0; i < 3; ++i) {
    ChainMap f;
    f.src = &ext.rep.values[i];
    f.tgt = &ext.rep.values[i + 1];
    f.lo = ext.rep.actions[0][i].lo;
    f.parts = ext.rep.actions[0][i].parts;
    REQUIRE(f.valid());
    CHECK(quasi_iso(f));
  }
}

TEST_CASE("beilinson: window reps extend exactly (m = 1, 2)") {
  Rng rng(47);
  for (int m = 1; m <= 2; ++m) {
    // generic window rep on [0, m]: free cells at every index
    BeilinsonCellRep gen;
    gen.m = m;
    gen.cells.push_back({0, 0});
    gen.cells.push_back({m, 0});
    if (m == 2) gen.cells.push_back({1, 1});
    BeilinsonRep r = beilinson_materialize(gen, 0, m);
    REQUIRE(r.validate());
    int hi = 3 * (m + 1) - 1;
    TrackedBeilinson ext = beilinson_extend(r, 0, hi);
    std::string w;
    REQUIRE_MESSAGE(ext.rep.validate(&w), w);
    CHECK(beilinson_exact(ext.rep));
    // restriction to the original window is quasi-isomorphic to the input
    // (the bar augmentation is implicit; compare homology dims)
    for (int i = 0; i <= m; ++i)
      for (int d = -4; d <= 6; ++d)
        CHECK(ext.rep.values[i].homology_dim(d) == r.values[i].homology_dim(d));
  }
}

TEST_CASE("beilinson: two-sided extension and restrict/re-extend round trip") {
  const int m = 1;
  BeilinsonCellRep gen;
  gen.m = m;
  gen.cells.push_back({0, 0});
  BeilinsonRep r = beilinson_materialize(gen, 0, m);
  TrackedBeilinson ext = beilinson_extend(r, -1, 2);
  std::string w;
  REQUIRE_MESSAGE(ext.rep.validate(&w), w);
  CHECK(ext.rep.lo == -1);
  CHECK(ext.rep.hi == 2);
  CHECK(beilinson_exact(ext.rep));
  // restrict to [1, 2] and re-extend upward: homology dims agree
  BeilinsonRep window;
  window.m = m;
  window.lo = 1;
  window.hi = 2;
  window.values = {ext.rep.values[1 - ext.rep.lo], ext.rep.values[2 - ext.rep.lo]};
  window.actions.resize(m + 1);
  for (int k = 0; k <= m; ++k) window.actions[k].push_back(ext.rep.actions[k][1 - ext.rep.lo]);
  REQUIRE(window.validate());
  TrackedBeilinson again = beilinson_extend(window, 1, 3);
  for (int i = 1; i <= 2; ++i)
    for (int d = -6; d <= 6; ++d)
      CHECK(again.rep.values[i - 1].homology_dim(d) ==
            ext.rep.values[i - ext.rep.lo].homology_dim(d));
  CHECK(beilinson_exact(again.rep));
}

TEST_CASE("beilinson twist shifts indices") {
  BeilinsonCellRep gen;
  gen.m = 1;
  gen.cells.push_back({0, 0});
  BeilinsonRep r = beilinson_materialize(gen, 0, 2);
  BeilinsonRep t = beilinson_twist(r);
  CHECK(t.lo == 1);
  CHECK(t.hi == 3);
  CHECK(t.values[0].total_dim() == r.values[0].total_dim());
}
