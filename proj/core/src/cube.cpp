#include "hal/cube.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hal {

QMat ComplexCube::edge_at(unsigned mask, int j, int degree) const {
  const ChainComplex& src = verts[mask];
  const ChainComplex& tgt = verts[mask | (1u << j)];
  const Edge& e = edges[mask * static_cast<unsigned>(k) + static_cast<unsigned>(j)];
  int idx = degree - e.lo;
  if (idx < 0 || idx >= static_cast<int>(e.parts.size()))
    return QMat(tgt.dim(degree), src.dim(degree));
  return e.parts[idx];
}

QMat ComplexCube::path_at(unsigned from, unsigned to, int degree) const {
  if ((from & to) != from) throw std::invalid_argument("path_at: not a subpath");
  QMat acc = QMat::identity(verts[from].dim(degree));
  unsigned cur = from;
  for (int j = 0; j < k; ++j) {
    if ((to & (1u << j)) && !(cur & (1u << j))) {
      acc = edge_at(cur, j, degree) * acc;
      cur |= 1u << j;
    }
  }
  return acc;
}

bool ComplexCube::validate() const {
  if (static_cast<int>(verts.size()) != (1 << k)) return false;
  for (unsigned mask = 0; mask < verts.size(); ++mask) {
    if (!verts[mask].valid()) return false;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) continue;
      const ChainComplex& src = verts[mask];
      const ChainComplex& tgt = verts[mask | (1u << j)];
      for (int d = std::min(src.lo(), tgt.lo()); d <= std::max(src.hi(), tgt.hi()) + 1; ++d) {
        QMat lhs = tgt.d(d) * edge_at(mask, j, d);
        QMat rhs = edge_at(mask, j, d - 1) * src.d(d);
        if (!(lhs == rhs)) return false;
      }
      for (int l = j + 1; l < k; ++l) {
        if (mask & (1u << l)) continue;
        for (int d = src.lo(); d <= src.hi(); ++d) {
          QMat a = edge_at(mask | (1u << j), l, d) * edge_at(mask, j, d);
          QMat b = edge_at(mask | (1u << l), j, d) * edge_at(mask, l, d);
          if (!(a == b)) return false;
        }
      }
    }
  }
  return true;
}

ChainMap cube_edge_map(const ComplexCube& c, unsigned mask, int j) {
  ChainMap f;
  f.src = &c.verts[mask];
  f.tgt = &c.verts[mask | (1u << j)];
  f.lo = f.src->lo();
  for (int d = f.src->lo(); d <= f.src->hi(); ++d) f.parts.push_back(c.edge_at(mask, j, d));
  return f;
}

ComplexCube ComplexCube::face(int dir, int side) const {
  ComplexCube f;
  f.k = k - 1;
  f.verts.resize(1u << f.k);
  f.edges.resize((1u << f.k) * static_cast<unsigned>(f.k));
  auto expand = [&](unsigned small) {
    unsigned lowmask = (1u << dir) - 1;
    unsigned lo = small & lowmask;
    unsigned hi = (small & ~lowmask) << 1;
    return lo | hi | (side ? (1u << dir) : 0u);
  };
  for (unsigned sm = 0; sm < (1u << f.k); ++sm) {
    f.verts[sm] = verts[expand(sm)];
    for (int j = 0; j < f.k; ++j) {
      if (sm & (1u << j)) continue;
      int bigj = j < dir ? j : j + 1;
      f.edges[sm * static_cast<unsigned>(f.k) + static_cast<unsigned>(j)] =
          edges[expand(sm) * static_cast<unsigned>(k) + static_cast<unsigned>(bigj)];
    }
  }
  return f;
}

ComplexCube cofib_cube(const ComplexCube& c, int dir) {
  ComplexCube out;
  out.k = c.k - 1;
  out.verts.resize(1u << out.k);
  out.edges.resize((1u << out.k) * static_cast<unsigned>(out.k));
  auto expand = [&](unsigned small) {
    unsigned lowmask = (1u << dir) - 1;
    return (small & lowmask) | ((small & ~lowmask) << 1);
  };
  // vertices: cones of the dir-edges
  std::vector<ChainComplex> srcs(1u << out.k), tgts(1u << out.k);
  for (unsigned sm = 0; sm < (1u << out.k); ++sm) {
    unsigned big = expand(sm);
    ChainMap f = cube_edge_map(c, big, dir);
    out.verts[sm] = cone(f);
  }
  for (unsigned sm = 0; sm < (1u << out.k); ++sm) {
    unsigned big = expand(sm);
    for (int j = 0; j < out.k; ++j) {
      if (sm & (1u << j)) continue;
      int bigj = j < dir ? j : j + 1;
      unsigned sm2 = sm | (1u << j);
      const ChainComplex& A0 = c.verts[big];
      const ChainComplex& B0 = c.verts[big | (1u << dir)];
      ComplexCube::Edge e;
      const ChainComplex& src_cone = out.verts[sm];
      e.lo = src_cone.lo();
      for (int d = src_cone.lo(); d <= src_cone.hi(); ++d) {
        // cone(f)_d = A_{d-1} (+) B_d ; induced map = diag(a_{d-1}, b_d)
        const ChainComplex& A1 = c.verts[expand(sm2)];
        const ChainComplex& B1 = c.verts[expand(sm2) | (1u << dir)];
        QMat a = c.edge_at(big, bigj, d - 1);
        QMat b = c.edge_at(big | (1u << dir), bigj, d);
        QMat m(A1.dim(d - 1) + B1.dim(d), A0.dim(d - 1) + B0.dim(d));
        for (int i = 0; i < a.rows; ++i)
          for (int jj = 0; jj < a.cols; ++jj) m(i, jj) = a(i, jj);
        for (int i = 0; i < b.rows; ++i)
          for (int jj = 0; jj < b.cols; ++jj) m(a.rows + i, a.cols + jj) = b(i, jj);
        e.parts.push_back(std::move(m));
      }
      out.edges[sm * static_cast<unsigned>(out.k) + static_cast<unsigned>(j)] = std::move(e);
    }
  }
  return out;
}

ChainComplex iterated_cofib(const ComplexCube& c) {
  ComplexCube cur = c;
  while (cur.k > 0) cur = cofib_cube(cur, cur.k - 1);
  return cur.verts[0];
}

namespace {

// Koszul-signed totalization; vertex u contributes with homological shift
// shift(u), where shift(u) - shift(u + e_j) = 1.
ChainComplex tot_generic(const ComplexCube& c, const std::vector<int>& shift,
                         const std::vector<char>& present) {
  int lo = INT32_MAX, hi = INT32_MIN;
  for (unsigned u = 0; u < c.verts.size(); ++u) {
    if (!present[u] || c.verts[u].empty()) continue;
    lo = std::min(lo, c.verts[u].lo() + shift[u]);
    hi = std::max(hi, c.verts[u].hi() + shift[u]);
  }
  if (lo > hi) return ChainComplex();
  const int width = hi - lo + 1;
  // offsets[d - lo][u]
  std::vector<std::vector<int>> offset(width, std::vector<int>(c.verts.size(), 0));
  std::vector<int> dims(width, 0);
  for (int d = lo; d <= hi; ++d) {
    int acc = 0;
    for (unsigned u = 0; u < c.verts.size(); ++u) {
      offset[d - lo][u] = acc;
      if (present[u]) acc += c.verts[u].dim(d - shift[u]);
    }
    dims[d - lo] = acc;
  }
  std::vector<QMat> diff(width);
  for (int d = lo; d <= hi; ++d) {
    QMat m(d - 1 >= lo ? dims[d - 1 - lo] : 0, dims[d - lo]);
    if (d - 1 < lo) {
      diff[d - lo] = QMat(0, dims[d - lo]);
      continue;
    }
    for (unsigned u = 0; u < c.verts.size(); ++u) {
      if (!present[u]) continue;
      int e = d - shift[u];
      int cdim = c.verts[u].dim(e);
      if (!cdim) continue;
      int coff = offset[d - lo][u];
      // internal differential with sign (-1)^{|u|}
      QMat din = c.verts[u].d(e);
      int sgn_int = __builtin_popcount(u) % 2 ? -1 : 1;
      int roff = offset[d - 1 - lo][u];
      for (int i = 0; i < din.rows; ++i)
        for (int j = 0; j < din.cols; ++j)
          if (!din(i, j).is_zero()) m(roff + i, coff + j) = din(i, j) * Rat(sgn_int);
      // edges with Koszul signs
      for (int j = 0; j < c.k; ++j) {
        if (u & (1u << j)) continue;
        unsigned w = u | (1u << j);
        if (!present[w]) continue;
        QMat f = c.edge_at(u, j, e);
        int sgn = __builtin_popcount(u & ((1u << j) - 1)) % 2 ? -1 : 1;
        int roff2 = offset[d - 1 - lo][w];
        for (int i = 0; i < f.rows; ++i)
          for (int jj = 0; jj < f.cols; ++jj)
            if (!f(i, jj).is_zero()) m(roff2 + i, coff + jj) = f(i, jj) * Rat(sgn);
      }
    }
    diff[d - lo] = std::move(m);
  }
  return ChainComplex(lo, std::move(dims), std::move(diff));
}

}  // namespace

ChainComplex tcofib(const ComplexCube& c) {
  std::vector<int> shift(c.verts.size());
  for (unsigned u = 0; u < c.verts.size(); ++u)
    shift[u] = c.k - __builtin_popcount(u);
  return tot_generic(c, shift, std::vector<char>(c.verts.size(), 1));
}

ChainComplex tfib(const ComplexCube& c) {
  std::vector<int> shift(c.verts.size());
  for (unsigned u = 0; u < c.verts.size(); ++u) shift[u] = -__builtin_popcount(u);
  return tot_generic(c, shift, std::vector<char>(c.verts.size(), 1));
}

bool is_bicartesian(const ComplexCube& c) {
  bool a = tcofib(c).acyclic();
  bool b = tfib(c).acyclic();
  if (a != b) throw std::logic_error("is_bicartesian: routes disagree");
  return a;
}

TcofibSequence tcofib_cofibre_sequence(const ComplexCube& c, int dir) {
  TcofibSequence s;
  ComplexCube f0 = c.face(dir, 0), f1 = c.face(dir, 1);
  s.src = tcofib(f0);
  s.tgt = tcofib(f1);
  s.total = tcofib(c);
  // assemble the induced map: component at sub-vertex u is the dir-edge with
  // sign (-1)^{number of set bits of u above dir}
  ChainMap phi;
  phi.src = &s.src;
  phi.tgt = &s.tgt;
  phi.lo = s.src.lo();
  auto expand = [&](unsigned small) {
    unsigned lowmask = (1u << dir) - 1;
    return (small & lowmask) | ((small & ~lowmask) << 1);
  };
  const int fk = c.k - 1;
  for (int d = s.src.lo(); d <= s.src.hi(); ++d) {
    QMat m(s.tgt.dim(d), s.src.dim(d));
    int coff = 0;
    for (unsigned u = 0; u < (1u << fk); ++u) {
      int shift = fk - __builtin_popcount(u);
      int e = d - shift;
      int cdim = f0.verts[u].dim(e);
      if (cdim) {
        // row offset of u inside tcofib(f1) at degree d
        int roff = 0;
        for (unsigned w = 0; w < u; ++w) roff += f1.verts[w].dim(d - (fk - __builtin_popcount(w)));
        unsigned big = expand(u);
        QMat g = c.edge_at(big, dir, e);
        for (int i = 0; i < g.rows; ++i)
          for (int j = 0; j < g.cols; ++j)
            if (!g(i, j).is_zero()) m(roff + i, coff + j) = g(i, j);
      }
      coff += cdim;
    }
    phi.parts.push_back(std::move(m));
  }
  if (!phi.valid()) throw std::logic_error("tcofib_cofibre_sequence: induced map not a chain map");
  s.cone_complex = cone(phi);
  return s;
}

// ---------------------------------------------------------------------------
// Punctured-cube completion via poset chains.

namespace {

struct BarModel {
  // chains of the punctured poset, each a strictly increasing mask sequence
  std::vector<std::vector<unsigned>> chains;
  // cell = (chain index, internal degree, basis index); bases ordered by
  // (chain, internal basis)
};

std::vector<std::vector<unsigned>> enumerate_chains(int k, unsigned top) {
  std::vector<unsigned> elems;
  for (unsigned u = 0; u < (1u << k); ++u)
    if (u != top) elems.push_back(u);
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (size_t i = start; i < elems.size(); ++i) {
      if (!cur.empty()) {
        unsigned last = cur.back();
        if ((last & elems[i]) != last || last == elems[i]) continue;
      }
      cur.push_back(elems[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

CompletedCube complete_cube_terminal(const ComplexCube& punctured) {
  const int k = punctured.k;
  const unsigned top = (1u << k) - 1;
  auto chains = enumerate_chains(k, top);
  // per target vertex w: the cells are the chains with max element <= w
  // (w = top admits every chain of the punctured poset)
  auto chain_allowed = [&](const std::vector<unsigned>& c, unsigned w) {
    unsigned last = c.back();
    return (last & w) == last;
  };
  // Build the bar complex for a vertex.
  struct CellKey {
    int chain;
    int e;  // internal degree
  };
  auto build = [&](unsigned w) {
    ChainComplex out;
    // collect degree range
    int lo = INT32_MAX, hi = INT32_MIN;
    for (size_t ci = 0; ci < chains.size(); ++ci) {
      if (!chain_allowed(chains[ci], w)) continue;
      const ChainComplex& base = punctured.verts[chains[ci][0]];
      if (base.empty()) continue;
      int p = static_cast<int>(chains[ci].size()) - 1;
      lo = std::min(lo, base.lo() + p);
      hi = std::max(hi, base.hi() + p);
    }
    if (lo > hi) return std::make_pair(ChainComplex(), std::vector<std::vector<int>>{});
    int width = hi - lo + 1;
    std::vector<int> dims(width, 0);
    // offsets[d - lo][chain index] = column offset (-1 when absent)
    std::vector<std::vector<int>> offs(width, std::vector<int>(chains.size(), -1));
    for (int d = lo; d <= hi; ++d) {
      int acc = 0;
      for (size_t ci = 0; ci < chains.size(); ++ci) {
        if (!chain_allowed(chains[ci], w)) continue;
        int p = static_cast<int>(chains[ci].size()) - 1;
        int dim = punctured.verts[chains[ci][0]].dim(d - p);
        if (dim) offs[d - lo][ci] = acc;
        acc += dim;
      }
      dims[d - lo] = acc;
    }
    std::vector<QMat> diff(width);
    // chain lookup for face targets
    std::map<std::vector<unsigned>, int> index_of;
    for (size_t ci = 0; ci < chains.size(); ++ci) index_of[chains[ci]] = static_cast<int>(ci);
    for (int d = lo; d <= hi; ++d) {
      QMat m(d - 1 >= lo ? dims[d - 1 - lo] : 0, dims[d - lo]);
      if (d - 1 < lo) {
        diff[d - lo] = QMat(0, dims[d - lo]);
        continue;
      }
      for (size_t ci = 0; ci < chains.size(); ++ci) {
        int coff = offs[d - lo][ci];
        if (coff < 0) continue;
        const auto& ch = chains[ci];
        int p = static_cast<int>(ch.size()) - 1;
        int e = d - p;
        const ChainComplex& base = punctured.verts[ch[0]];
        int cdim = base.dim(e);
        // internal differential, sign (-1)^p
        {
          QMat din = base.d(e);
          // target cell: same chain, internal degree e-1
          int roff = offs[d - 1 - lo][ci];
          if (roff >= 0 || din.rows == 0) {
            int sgn = p % 2 ? -1 : 1;
            for (int i = 0; i < din.rows && roff >= 0; ++i)
              for (int j = 0; j < din.cols; ++j)
                if (!din(i, j).is_zero()) m(roff + i, coff + j) = din(i, j) * Rat(sgn);
          }
        }
        // faces
        for (int fi = 0; fi <= p && p >= 1; ++fi) {
          std::vector<unsigned> sub;
          for (int t = 0; t <= p; ++t)
            if (t != fi) sub.push_back(ch[t]);
          auto it = index_of.find(sub);
          if (it == index_of.end()) continue;
          int tci = it->second;
          int roff = offs[d - 1 - lo][tci];
          int sgn = fi % 2 ? -1 : 1;
          if (fi == 0) {
            // apply the edge map X(ch[0]) -> X(ch[1])
            QMat g = punctured.path_at(ch[0], ch[1], e);
            if (roff >= 0)
              for (int i = 0; i < g.rows; ++i)
                for (int j = 0; j < g.cols; ++j)
                  if (!g(i, j).is_zero()) m(roff + i, coff + j) = g(i, j) * Rat(sgn);
          } else {
            if (roff >= 0)
              for (int i = 0; i < cdim; ++i) m(roff + i, coff + i) += Rat(sgn);
          }
        }
      }
      diff[d - lo] = std::move(m);
    }
    std::vector<std::vector<int>> offsets_out = offs;
    return std::make_pair(ChainComplex(lo, std::move(dims), std::move(diff)),
                          std::move(offsets_out));
  };
  CompletedCube out;
  out.cube.k = k;
  out.cube.verts.resize(1u << k);
  out.cube.edges.resize((1u << k) * static_cast<unsigned>(k));
  std::vector<std::vector<std::vector<int>>> all_offs(1u << k);
  std::vector<int> lo_of(1u << k, 0);
  for (unsigned w = 0; w <= top; ++w) {
    auto [cx, offs] = build(w);
    lo_of[w] = cx.lo();
    out.cube.verts[w] = std::move(cx);
    all_offs[w] = std::move(offs);
  }
  // edges: cell-subset inclusions
  for (unsigned w = 0; w <= top; ++w) {
    for (int j = 0; j < k; ++j) {
      if (w & (1u << j)) continue;
      unsigned w2 = w | (1u << j);
      ComplexCube::Edge e;
      const ChainComplex& src = out.cube.verts[w];
      e.lo = src.lo();
      for (int d = src.lo(); d <= src.hi(); ++d) {
        QMat m(out.cube.verts[w2].dim(d), src.dim(d));
        for (size_t ci = 0; ci < chains.size(); ++ci) {
          int c1 = d - lo_of[w] >= 0 &&
                           d - lo_of[w] < static_cast<int>(all_offs[w].size())
                       ? all_offs[w][d - lo_of[w]][ci]
                       : -1;
          int c2 = d - lo_of[w2] >= 0 &&
                           d - lo_of[w2] < static_cast<int>(all_offs[w2].size())
                       ? all_offs[w2][d - lo_of[w2]][ci]
                       : -1;
          if (c1 < 0 || c2 < 0) continue;
          int p = static_cast<int>(chains[ci].size()) - 1;
          int cdim = punctured.verts[chains[ci][0]].dim(d - p);
          for (int i = 0; i < cdim; ++i) m(c2 + i, c1 + i) = Rat(1);
        }
        e.parts.push_back(std::move(m));
      }
      out.cube.edges[w * static_cast<unsigned>(k) + static_cast<unsigned>(j)] = std::move(e);
    }
  }
  // comparison maps: augmentation onto the original values
  out.comparison.resize(1u << k);
  for (unsigned w = 0; w < top; ++w) {
    ComplexCube::Edge cmp;
    const ChainComplex& model = out.cube.verts[w];
    cmp.lo = model.lo();
    for (int d = model.lo(); d <= model.hi(); ++d) {
      QMat m(punctured.verts[w].dim(d), model.dim(d));
      for (size_t ci = 0; ci < chains.size(); ++ci) {
        if (chains[ci].size() != 1) continue;
        int coff = d - lo_of[w] >= 0 && d - lo_of[w] < static_cast<int>(all_offs[w].size())
                       ? all_offs[w][d - lo_of[w]][ci]
                       : -1;
        if (coff < 0) continue;
        QMat g = punctured.path_at(chains[ci][0], w, d);
        for (int i = 0; i < g.rows; ++i)
          for (int j = 0; j < g.cols; ++j)
            if (!g(i, j).is_zero()) m(i, coff + j) = g(i, j);
      }
      cmp.parts.push_back(std::move(m));
    }
    out.comparison[w] = std::move(cmp);
  }
  return out;
}

ChainComplex dualize(const ChainComplex& c) {
  if (c.empty()) return c;
  int lo = -c.hi(), hi = -c.lo();
  std::vector<int> dims;
  std::vector<QMat> diff;
  for (int d = lo; d <= hi; ++d) dims.push_back(c.dim(-d));
  for (int d = lo; d <= hi; ++d) {
    // d*_d : (C_{-d})* -> (C_{-d-1})* is the transpose of d_{-d+1}?? no:
    // dual differential at degree d is the transpose of c.d(-d + 1 - 1 + 1)
    QMat t = c.d(-d + 1).transpose();
    diff.push_back(t);
  }
  return ChainComplex(lo, std::move(dims), std::move(diff));
}

ComplexCube dualize(const ComplexCube& c) {
  ComplexCube out;
  out.k = c.k;
  const unsigned full = (1u << c.k) - 1;
  out.verts.resize(1u << c.k);
  out.edges.resize((1u << c.k) * static_cast<unsigned>(c.k));
  for (unsigned u = 0; u <= full; ++u) out.verts[u] = dualize(c.verts[full & ~u]);
  for (unsigned u = 0; u <= full; ++u)
    for (int j = 0; j < c.k; ++j) {
      if (u & (1u << j)) continue;
      unsigned cu = full & ~(u | (1u << j));  // source of the original edge
      ComplexCube::Edge e;
      const ChainComplex& src = out.verts[u];
      e.lo = src.lo();
      for (int d = src.lo(); d <= src.hi(); ++d)
        e.parts.push_back(c.edge_at(cu, j, -d).transpose());
      out.edges[u * static_cast<unsigned>(c.k) + static_cast<unsigned>(j)] = std::move(e);
    }
  return out;
}

CompletedCube complete_cube_initial(const ComplexCube& punctured) {
  CompletedCube dual_done = complete_cube_terminal(dualize(punctured));
  CompletedCube out;
  out.cube = dualize(dual_done.cube);
  // comparisons dualize to maps original -> model at the mirrored vertex
  const unsigned full = (1u << punctured.k) - 1;
  out.comparison.resize(1u << punctured.k);
  for (unsigned u = 0; u <= full; ++u) {
    unsigned du = full & ~u;
    if (du == full) continue;  // the filled (initial) vertex
    const auto& cmp = dual_done.comparison[du];
    ComplexCube::Edge e;
    const ChainComplex& src = punctured.verts[u];
    e.lo = src.lo();
    for (int d = src.lo(); d <= src.hi(); ++d) {
      int idx = -d - cmp.lo;
      if (idx < 0 || idx >= static_cast<int>(cmp.parts.size()))
        e.parts.push_back(QMat(out.cube.verts[u].dim(d), src.dim(d)));
      else
        e.parts.push_back(cmp.parts[idx].transpose());
    }
    out.comparison[u] = std::move(e);
  }
  return out;
}

}  // namespace hal
