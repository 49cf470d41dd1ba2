// hal: exact-arithmetic toolkit for simplex and paracyclic posets, slice
// mutation, higher Auslander hom combinatorics, K0 / Eilenberg-MacLane
// counting, cover descent, and chain-level cube calculus.
//
// Exit codes: 0 success, 1 check/descent failure (witness on stdout), 2 usage
// or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "hal/cover.hpp"
#include "hal/cube.hpp"
#include "hal/homalg.hpp"
#include "hal/k0em.hpp"
#include "hal/rep.hpp"
#include "hal/simpvs.hpp"
#include "hal/slice.hpp"
#include "hal/snf.hpp"

using json = nlohmann::ordered_json;
using namespace hal;

namespace {

constexpr int kSchema = 1;

json rat_to_json(const Rat& r) {
  if (r.is_integer() && r.num().fits_i64()) return r.num().to_i64();
  return r.str();
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt::from_string(s));
  return Rat(BigInt::from_string(s.substr(0, slash)),
             BigInt::from_string(s.substr(slash + 1)));
}

json mat_to_json(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(rat_to_json(m(i, j2)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

QMat mat_from_json(const json& j) {
  QMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& rows = j.at("entries");
  for (int i = 0; i < m.rows; ++i)
    for (int c = 0; c < m.cols; ++c) m(i, c) = rat_from_json(rows.at(i).at(c));
  return m;
}

json complex_to_json(const ChainComplex& c) {
  json diffs = json::array();
  for (int k = c.lo(); k <= c.hi(); ++k) diffs.push_back(mat_to_json(c.d(k)));
  json dims = json::array();
  for (int k = c.lo(); k <= c.hi(); ++k) dims.push_back(c.dim(k));
  return json{{"lo", c.lo()}, {"dims", dims}, {"d", diffs}};
}

ChainComplex complex_from_json(const json& j) {
  if (j.is_null() || (j.contains("dims") && j.at("dims").empty())) return ChainComplex();
  int lo = j.at("lo").get<int>();
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  std::vector<QMat> d;
  for (const auto& dj : j.at("d")) d.push_back(mat_from_json(dj));
  return ChainComplex(lo, dims, d);
}

ChainComplex complex_from_dims_string(const std::string& s) {
  // "d0,d1,d2" builds the complex with zero differentials
  std::vector<int> dims;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) dims.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  std::vector<QMat> d;
  for (size_t i = 0; i < dims.size(); ++i)
    d.push_back(QMat(i == 0 ? 0 : dims[i - 1], dims[i]));
  return ChainComplex(0, dims, d);
}

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + std::string(1, sep)) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_delta_enum(int m, int n, bool nondeg_only, bool as_dot) {
  SimplexPoset p = enumerate_delta(m, n);
  std::vector<Simplex> elems = nondeg_only ? nondegenerate(p) : p.elements;
  if (as_dot) {
    auto edges = hasse_quiver(elems);
    std::cout << "digraph delta {\n";
    for (const auto& s : elems) std::cout << "  \"" << s.str() << "\";\n";
    for (auto [a, b] : edges)
      std::cout << "  \"" << elems[a].str() << "\" -> \"" << elems[b].str() << "\";\n";
    std::cout << "}\n";
    return 0;
  }
  json out{{"schema", kSchema}, {"m", m}, {"n", n}, {"count", elems.size()}};
  json list = json::array();
  for (const auto& s : elems) list.push_back(s.values);
  out["elements"] = list;
  out["nondegenerate_count"] = nondegenerate(p).size();
  emit(out);
  return 0;
}

int cmd_lambda_enum(int m, int n, const std::string& window) {
  auto parts = parse_ints(window, ':');
  if (parts.size() != 2) throw CLI::ValidationError("--window", "expected LO:HI");
  auto elems = window_elements(m, n, parts[0], parts[1]);
  json out{{"schema", kSchema}, {"m", m}, {"n", n}, {"window", {parts[0], parts[1]}}};
  json list = json::array();
  for (const auto& e : elems)
    if (e.valid()) list.push_back(e.window);
  out["count"] = list.size();
  out["elements"] = list;
  emit(out);
  return 0;
}

int cmd_lambda_orbit(int m, int n) {
  auto reps = phi_orbit_representatives(m, n);
  json out{{"schema", kSchema}, {"m", m}, {"n", n}, {"orbit_count", reps.size()}};
  json list = json::array();
  for (const auto& r : reps) list.push_back(r.window);
  out["representatives"] = list;
  emit(out);
  return 0;
}

json slice_to_json(const Slice& s) {
  json arr = json::array();
  for (const auto& e : s.elements) arr.push_back(e.window);
  return arr;
}

int cmd_slices(const std::string& sub, int m, int n, bool as_dot,
               const std::string& slice_arg, const std::string& at_arg) {
  if (sub == "enum") {
    auto all = enumerate_slices(m, n);
    json out{{"schema", kSchema}, {"m", m}, {"n", n}, {"count", all.size()}};
    json list = json::array();
    for (const auto& s : all) list.push_back(slice_to_json(s));
    out["slices"] = list;
    emit(out);
    return 0;
  }
  if (sub == "graph") {
    auto g = mutation_graph(m, n);
    if (as_dot) {
      std::cout << "digraph slices {\n";
      for (const auto& s : g.nodes) std::cout << "  \"" << s.str() << "\";\n";
      for (auto [a, b] : g.edges)
        std::cout << "  \"" << g.nodes[a].str() << "\" -> \"" << g.nodes[b].str() << "\";\n";
      std::cout << "}\n";
      return 0;
    }
    json out{{"schema", kSchema}, {"m", m},       {"n", n},
             {"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"connected", g.connected}};
    emit(out);
    return g.connected ? 0 : 1;
  }
  if (sub == "mutate") {
    // slice as "a,b c,d ..." and the minimal element as "a,b"
    Slice s;
    s.m = m;
    s.n = n;
    std::string cur;
    for (char ch : slice_arg + " ") {
      if (ch == ' ') {
        if (!cur.empty()) s.elements.push_back(ParaSimplex{parse_ints(cur, ','), n});
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    std::sort(s.elements.begin(), s.elements.end());
    auto chk = is_slice(s.elements, m, n);
    if (!chk.ok) {
      emit(json{{"error", chk.reason}});
      return 1;
    }
    ParaSimplex sigma{parse_ints(at_arg, ','), n};
    Slice r = mutate_right(s, sigma);
    json out{{"schema", kSchema}, {"result", slice_to_json(r)}};
    emit(out);
    return 0;
  }
  throw CLI::ValidationError("slices", "unknown subcommand " + sub);
}

int cmd_algebra_quiver(int m, int n, bool as_dot) {
  auto p = algebra_presentation(m, n);
  if (as_dot) {
    std::cout << "digraph algebra {\n  node [shape=record];\n";
    for (const auto& v : p.vertices) std::cout << "  \"" << v.str() << "\";\n";
    for (auto [a, b] : p.arrows)
      std::cout << "  \"" << p.vertices[a].str() << "\" -> \"" << p.vertices[b].str()
                << "\";\n";
    std::cout << "}\n";
    return 0;
  }
  json out{{"schema", kSchema},
           {"m", m},
           {"n", n},
           {"vertices", p.vertices.size()},
           {"arrows", p.arrows.size()},
           {"zero_relations", p.num_zero_relations()},
           {"commutativity_relations", p.num_commutativity_relations()},
           {"total_dim", p.total_dim}};
  emit(out);
  return 0;
}

int cmd_algebra_dims(int m, int n) {
  HomTable t(m, n);
  json out{{"schema", kSchema}, {"m", m}, {"n", n}, {"total_dim", t.total_dim()}};
  json rows = json::array();
  for (const auto& a : t.vertices()) {
    json row = json::array();
    for (const auto& b : t.vertices()) row.push_back(t.hom(a, b));
    rows.push_back(row);
  }
  out["hom"] = rows;
  emit(out);
  return 0;
}

int cmd_algebra_ext(int m, int n, const std::string& from, const std::string& to, int i) {
  HomTable target(m, n), base(m - 1, n - 1);
  Simplex f{parse_ints(from, ','), n}, t{parse_ints(to, ','), n};
  ModuleRep M = epsilon_module(target, base, f);
  ModuleRep N = epsilon_module(target, base, t);
  int d = ext_dim(M, N, i);
  emit(json{{"schema", kSchema}, {"from", f.values}, {"to", t.values}, {"i", i}, {"ext_dim", d}});
  return 0;
}

int cmd_k0_present(int m, int n) {
  auto k = k0_presentation(m, n);
  json factors = json::array();
  for (const auto& f : k.factors) factors.push_back(f.str());
  json out{{"schema", kSchema},
           {"m", m},
           {"n", n},
           {"generators", k.generators.elements.size()},
           {"relation_rows", k.relations.rows},
           {"invariant_factors", factors},
           {"rank", k.rank},
           {"free", k.free_cokernel}};
  emit(out);
  return 0;
}

int cmd_em_count(int m, int n, const std::string& group, bool unsigned_variant) {
  FinAbGroup B;
  for (int k : parse_ints(group, ',')) B.cyclic.push_back(k);
  BigInt c = em_count(B, m, n, !unsigned_variant);
  BigInt expect(1);
  for (std::int64_t i = 0; i < binomial(n, m); ++i) expect = expect * B.order();
  json out{{"schema", kSchema}, {"m", m},
           {"n", n},           {"group", group},
           {"signed", !unsigned_variant}, {"count", c.str()},
           {"expected", expect.str()},    {"matches", c == expect}};
  emit(out);
  return c == expect ? 0 : 1;
}

int cmd_covers_make(const std::string& cls_name, int param, int n, bool as_json) {
  auto cls = cover_class_from_string(cls_name);
  if (!cls) throw CLI::ValidationError("--class", "unknown class " + cls_name);
  auto covers = make_cover(*cls, param, n);
  json out{{"schema", kSchema}, {"class", cls_name}, {"param", param}, {"n", n}};
  json list = json::array();
  for (const auto& c : covers) {
    json fam = json::array();
    for (const auto& f : c.family) fam.push_back(f);
    list.push_back(fam);
  }
  out["covers"] = list;
  if (as_json) emit(out);
  else
    for (const auto& c : covers) std::cout << c.str() << "\n";
  return 0;
}

int cmd_covers_saturated(const std::string& cls_name, int m, int N) {
  auto cls = cover_class_from_string(cls_name);
  if (!cls) throw CLI::ValidationError("--class", "unknown class " + cls_name);
  auto rep = is_saturated_sample(*cls, m, N);
  json out{{"schema", kSchema},
           {"class", cls_name},
           {"m", m},
           {"N", N},
           {"condition1", rep.condition1},
           {"condition2", rep.condition2},
           {"covers_sampled", rep.covers_sampled},
           {"refinements_checked", rep.refinements_checked}};
  if (!rep.witness.empty()) out["witness"] = rep.witness;
  emit(out);
  return rep.condition1 && rep.condition2 ? 0 : 1;
}

ComplexCube cube_from_json(const json& j) {
  ComplexCube c;
  c.k = j.at("k").get<int>();
  c.verts.resize(1u << c.k);
  c.edges.resize((1u << c.k) * static_cast<unsigned>(c.k));
  for (unsigned mask = 0; mask < c.verts.size(); ++mask)
    c.verts[mask] = complex_from_json(j.at("vertices").at(mask));
  for (const auto& ej : j.at("edges")) {
    unsigned mask = ej.at("from").get<unsigned>();
    int dir = ej.at("dir").get<int>();
    ComplexCube::Edge e;
    e.lo = ej.at("lo").get<int>();
    for (const auto& pj : ej.at("parts")) e.parts.push_back(mat_from_json(pj));
    c.edges[mask * static_cast<unsigned>(c.k) + static_cast<unsigned>(dir)] = std::move(e);
  }
  return c;
}

int cmd_cube_tcofib(const std::string& input) {
  ComplexCube c = cube_from_json(load_json(input));
  if (!c.validate()) {
    emit(json{{"error", "cube does not validate (chain maps / commutativity)"}});
    return 1;
  }
  ChainComplex t = tcofib(c), f = tfib(c);
  json out{{"schema", kSchema}, {"k", c.k}};
  json th = json::array(), fh = json::array();
  for (int d = t.lo(); d <= t.hi(); ++d) th.push_back(json{{"degree", d}, {"h", t.homology_dim(d)}});
  for (int d = f.lo(); d <= f.hi(); ++d) fh.push_back(json{{"degree", d}, {"h", f.homology_dim(d)}});
  out["tcofib_homology"] = th;
  out["tfib_homology"] = fh;
  out["bicartesian"] = is_bicartesian(c);
  emit(out);
  return 0;
}

TruncatedSimplicialVS simplicial_from_json(const json& j) {
  TruncatedSimplicialVS x;
  x.N = j.at("N").get<int>();
  x.dims = j.at("dims").get<std::vector<int>>();
  x.face.resize(x.N + 1);
  x.degen.resize(std::max(0, x.N));
  for (int n = 1; n <= x.N; ++n)
    for (int i = 0; i <= n; ++i) x.face[n].push_back(mat_from_json(j.at("face").at(n - 1).at(i)));
  for (int n = 0; n < x.N; ++n)
    for (int i = 0; i <= n; ++i) x.degen[n].push_back(mat_from_json(j.at("degen").at(n).at(i)));
  return x;
}

json simplicial_to_json(const TruncatedSimplicialVS& x) {
  json out{{"schema", kSchema}, {"N", x.N}, {"dims", x.dims}};
  json faces = json::array();
  for (int n = 1; n <= x.N; ++n) {
    json level = json::array();
    for (int i = 0; i <= n; ++i) level.push_back(mat_to_json(x.face[n][i]));
    faces.push_back(level);
  }
  json degs = json::array();
  for (int n = 0; n < x.N; ++n) {
    json level = json::array();
    for (int i = 0; i <= n; ++i) level.push_back(mat_to_json(x.degen[n][i]));
    degs.push_back(level);
  }
  out["face"] = faces;
  out["degen"] = degs;
  return out;
}

int cmd_dk_nerve(const std::string& complex_dims, int N, bool full) {
  ChainComplex b = complex_from_dims_string(complex_dims);
  TruncatedSimplicialVS x = nerve(b, N);
  if (full) {
    emit(simplicial_to_json(x));
    return 0;
  }
  json out{{"schema", kSchema}, {"N", N}, {"dims", x.dims}};
  emit(out);
  return 0;
}

int cmd_dk_classify(const std::string& complex_dims, const std::string& input, int m, int N) {
  TruncatedSimplicialVS x = input.empty()
                                ? nerve(complex_from_dims_string(complex_dims), N)
                                : simplicial_from_json(load_json(input));
  ClassifyVerdict v = classify(x, m);
  json out{{"schema", kSchema},
           {"m", m},
           {"N", x.N},
           {"outer_kan", v.outer_kan},
           {"segal_2m", v.segal},
           {"moore_truncated", v.truncated},
           {"consistent", v.consistent},
           {"conclusive", v.conclusive}};
  if (!v.witness.empty()) out["witness"] = v.witness;
  emit(out);
  if (!v.consistent) return 1;
  return v.outer_kan ? 0 : 1;
}

int cmd_descent_check(const std::string& input, const std::string& complex_dims,
                      const std::string& cls_name, int param, int N) {
  TruncatedSimplicialVS x = input.empty()
                                ? nerve(complex_from_dims_string(complex_dims), N)
                                : simplicial_from_json(load_json(input));
  auto cls = cover_class_from_string(cls_name);
  if (!cls) throw CLI::ValidationError("--class", "unknown class " + cls_name);
  DescentReport rep = descent_report(x, *cls, param, x.N);
  json out{{"schema", kSchema}, {"class", cls_name}, {"param", param}, {"N", x.N}};
  json lines = json::array();
  for (auto& [name, ok] : rep.lines) {
    lines.push_back(json{{"cover", name}, {"local", ok}});
    if (!ok) out["witness"] = name;
  }
  out["checks"] = lines;
  out["all_local"] = rep.all;
  emit(out);
  return rep.all ? 0 : 1;
}

PosetRep rep_from_json(const json& j) {
  PosetRep r;
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  for (const auto& vj : j.at("vertices"))
    r.vertices.push_back(ParaSimplex{vj.get<std::vector<int>>(), r.n});
  for (const auto& vj : j.at("values")) r.values.push_back(complex_from_json(vj));
  for (const auto& cj : j.at("covers"))
    r.covers.emplace_back(cj.at(0).get<int>(), cj.at(1).get<int>());
  for (const auto& mj : j.at("maps")) {
    ComplexCube::Edge e;
    e.lo = mj.at("lo").get<int>();
    for (const auto& pj : mj.at("parts")) e.parts.push_back(mat_from_json(pj));
    r.maps.push_back(std::move(e));
  }
  return r;
}

json rep_to_json(const PosetRep& r) {
  json out{{"schema", kSchema}, {"m", r.m}, {"n", r.n}};
  json verts = json::array(), values = json::array(), covers = json::array(),
       maps = json::array();
  for (const auto& v : r.vertices) verts.push_back(v.window);
  for (const auto& v : r.values) values.push_back(complex_to_json(v));
  for (auto [a, b] : r.covers) covers.push_back(json::array({a, b}));
  for (const auto& e : r.maps) {
    json parts = json::array();
    for (const auto& p : e.parts) parts.push_back(mat_to_json(p));
    maps.push_back(json{{"lo", e.lo}, {"parts", parts}});
  }
  out["vertices"] = verts;
  out["values"] = values;
  out["covers"] = covers;
  out["maps"] = maps;
  return out;
}

int cmd_rep(const std::string& sub, const std::string& input, const std::string& at_arg) {
  PosetRep r = rep_from_json(load_json(input));
  std::string w;
  if (!r.validate(&w)) {
    emit(json{{"error", "representation does not validate: " + w}});
    return 1;
  }
  if (sub == "validate") {
    bool exact = is_exact(r, r.m);
    emit(json{{"schema", kSchema},
              {"valid", true},
              {"reduced", r.reduced()},
              {"exact", exact}});
    return exact && r.reduced() ? 0 : 1;
  }
  if (sub == "extend") {
    TrackedRep ext = extend_projective(r);
    emit(rep_to_json(ext.rep));
    return 0;
  }
  if (sub == "mutate") {
    // m = 1 cube-filling mutation of a slice-shaped input at a minimal element
    if (r.m != 1) {
      emit(json{{"error", "cube-filling mutation is supported for m = 1 input"}});
      return 2;
    }
    std::vector<ParaSimplex> nd;
    for (const auto& v : r.vertices)
      if (!v.degenerate()) nd.push_back(v);
    auto chk = is_slice(nd, r.m, r.n);
    if (!chk.ok) {
      emit(json{{"error", "input vertices are not a slice closure: " + chk.reason}});
      return 1;
    }
    Slice s;
    s.m = r.m;
    s.n = r.n;
    s.elements = nd;
    ParaSimplex sigma{parse_ints(at_arg, ','), r.n};
    PosetRep out = mutate_rep_fill(r, s, sigma, true);
    emit(rep_to_json(out));
    return 0;
  }
  throw CLI::ValidationError("rep", "unknown subcommand " + sub);
}

// ---------------------------------------------------------------------------
// Goldens

json compute_goldens() {
  json g;
  g["schema"] = kSchema;
  // counting
  json counts = json::array();
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      SimplexPoset p = enumerate_delta(m, n);
      counts.push_back(json{{"m", m},
                            {"n", n},
                            {"total", p.elements.size()},
                            {"nondegenerate", nondegenerate(p).size()}});
    }
  g["delta_counts"] = counts;
  // algebra presentations
  json algs = json::array();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 4}}) {
    auto p = algebra_presentation(m, n);
    algs.push_back(json{{"m", m},
                        {"n", n},
                        {"vertices", p.vertices.size()},
                        {"arrows", p.arrows.size()},
                        {"zero_relations", p.num_zero_relations()},
                        {"commutativity_relations", p.num_commutativity_relations()},
                        {"total_dim", p.total_dim}});
  }
  g["algebra"] = algs;
  // K0 ranks
  json k0s = json::array();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 4}, {2, 5}}) {
    auto k = k0_presentation(m, n);
    k0s.push_back(json{{"m", m}, {"n", n}, {"rank", k.rank}, {"free", k.free_cokernel}});
  }
  g["k0"] = k0s;
  // slice graphs
  json graphs = json::array();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 4}, {2, 5}}) {
    auto gr = mutation_graph(m, n);
    graphs.push_back(json{{"m", m},
                          {"n", n},
                          {"nodes", gr.nodes.size()},
                          {"edges", gr.edges.size()},
                          {"connected", gr.connected}});
  }
  g["slice_graphs"] = graphs;
  // classification verdicts on fixed nerves
  json cls = json::array();
  for (int m = 1; m <= 2; ++m) {
    TruncatedSimplicialVS x = nerve(ChainComplex::concentrated(m, 1), 2 * m + 2);
    ClassifyVerdict v = classify(x, m);
    cls.push_back(json{{"m", m},
                       {"outer_kan", v.outer_kan},
                       {"segal", v.segal},
                       {"truncated", v.truncated},
                       {"consistent", v.consistent}});
  }
  g["classification"] = cls;
  // EM counts
  json ems = json::array();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}})
    ems.push_back(json{{"m", m},
                       {"n", n},
                       {"z2", em_count(FinAbGroup{{2}}, m, n, true).str()},
                       {"z3", em_count(FinAbGroup{{3}}, m, n, true).str()}});
  g["em_counts"] = ems;
  return g;
}

int cmd_golden(const std::string& action, const std::string& dir) {
  std::string path = dir + "/goldens.json";
  if (action == "regen") {
    std::ofstream out(path);
    out << compute_goldens().dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
  }
  if (action == "run") {
    json want = load_json(path);
    json got = compute_goldens();
    if (want == got) {
      std::cout << "golden suite: OK (" << path << ")\n";
      return 0;
    }
    json diffkeys = json::array();
    for (auto& [key, val] : want.items())
      if (!got.contains(key) || got.at(key) != val) diffkeys.push_back(key);
    for (auto& [key, val] : got.items())
      if (!want.contains(key)) diffkeys.push_back(key);
    emit(json{{"error", "golden mismatch"}, {"keys", diffkeys}});
    return 1;
  }
  throw CLI::ValidationError("golden", "unknown action " + action);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hal: exact simplicial combinatorics and descent toolkit"};
  app.require_subcommand(1);

  int m = 1, n = 3, N = 5, param = 1, ext_i = 0;
  bool nondeg = false, as_dot = false, as_json = false, unsigned_variant = false, full = false;
  std::string window = "-4:4", slice_arg, at_arg, from_arg, to_arg, group = "2";
  std::string cls_name = "lower-segal", input, complex_dims = "1", golden_dir = "goldens";

  auto* delta = app.add_subcommand("delta", "simplex posets");
  auto* delta_enum = delta->add_subcommand("enum", "enumerate Delta(m, n)");
  delta_enum->add_option("-m", m)->required();
  delta_enum->add_option("-n", n)->required();
  delta_enum->add_flag("--nondegenerate", nondeg);
  delta_enum->add_flag("--dot", as_dot);
  delta_enum->add_flag("--json", as_json);

  auto* lambda = app.add_subcommand("lambda", "paracyclic posets");
  auto* lambda_enum = lambda->add_subcommand("enum", "enumerate a window of Lambda(m, n)");
  lambda_enum->add_option("-m", m)->required();
  lambda_enum->add_option("-n", n)->required();
  lambda_enum->add_option("--window", window, "first-entry range LO:HI");
  auto* lambda_orbit = lambda->add_subcommand("orbit", "Coxeter orbit representatives");
  lambda_orbit->add_option("-m", m)->required();
  lambda_orbit->add_option("-n", n)->required();

  auto* slices = app.add_subcommand("slices", "slices and mutation");
  auto* slices_enum = slices->add_subcommand("enum", "enumerate slices");
  slices_enum->add_option("-m", m)->required();
  slices_enum->add_option("-n", n)->required();
  auto* slices_graph = slices->add_subcommand("graph", "mutation graph");
  slices_graph->add_option("-m", m)->required();
  slices_graph->add_option("-n", n)->required();
  slices_graph->add_flag("--dot", as_dot);
  auto* slices_mutate = slices->add_subcommand("mutate", "right mutation at a minimal element");
  slices_mutate->add_option("-m", m)->required();
  slices_mutate->add_option("-n", n)->required();
  slices_mutate->add_option("--slice", slice_arg, "windows, e.g. \"0,1 0,2 0,3\"")->required();
  slices_mutate->add_option("--at", at_arg, "minimal element, e.g. \"0,1\"")->required();

  auto* algebra = app.add_subcommand("algebra", "reduced hom combinatorics");
  auto* alg_quiver = algebra->add_subcommand("quiver", "quiver with relations");
  alg_quiver->add_option("-m", m)->required();
  alg_quiver->add_option("-n", n)->required();
  alg_quiver->add_flag("--dot", as_dot);
  auto* alg_dims = algebra->add_subcommand("dims", "hom dimension table");
  alg_dims->add_option("-m", m)->required();
  alg_dims->add_option("-n", n)->required();
  auto* alg_ext = algebra->add_subcommand("ext", "Ext dimension between eps modules");
  alg_ext->add_option("-m", m)->required();
  alg_ext->add_option("-n", n)->required();
  alg_ext->add_option("--from", from_arg)->required();
  alg_ext->add_option("--to", to_arg)->required();
  alg_ext->add_option("--i", ext_i)->required();

  auto* k0 = app.add_subcommand("k0", "Grothendieck group presentations");
  auto* k0_present = k0->add_subcommand("present", "SNF of the signed relation matrix");
  k0_present->add_option("-m", m)->required();
  k0_present->add_option("-n", n)->required();

  auto* em = app.add_subcommand("em", "Eilenberg-MacLane simplex counting");
  auto* em_count_cmd = em->add_subcommand("count", "count K(B, m)_n");
  em_count_cmd->add_option("-m", m)->required();
  em_count_cmd->add_option("-n", n)->required();
  em_count_cmd->add_option("--group", group, "cyclic orders, e.g. 2,4");
  em_count_cmd->add_flag("--unsigned", unsigned_variant);

  auto* covers = app.add_subcommand("covers", "cover classes");
  auto* covers_make = covers->add_subcommand("make", "materialize a class instance");
  covers_make->add_option("--class", cls_name)->required();
  covers_make->add_option("--k,--param", param, "dimension bound m or Segal k");
  covers_make->add_option("-n", n)->required();
  covers_make->add_flag("--json", as_json);
  auto* covers_sat = covers->add_subcommand("check-saturated", "sampled saturation report");
  covers_sat->add_option("--class", cls_name)->required();
  covers_sat->add_option("-m", m)->required();
  covers_sat->add_option("-N", N)->required();

  auto* cube = app.add_subcommand("cube", "chain-level cube calculus");
  auto* cube_tcofib_cmd = cube->add_subcommand("tcofib", "totalizations of a cube");
  cube_tcofib_cmd->add_option("--input", input)->required();

  auto* dk = app.add_subcommand("dk", "Dold-Kan and classification");
  auto* dk_nerve = dk->add_subcommand("nerve", "nerve of a connective complex");
  dk_nerve->add_option("--complex", complex_dims, "dims, e.g. 0,0,1");
  dk_nerve->add_option("-N", N);
  dk_nerve->add_flag("--full", full, "emit all operator matrices");
  auto* dk_classify = dk->add_subcommand("classify", "outer-Kan / Segal / truncation verdicts");
  dk_classify->add_option("--complex", complex_dims);
  dk_classify->add_option("--input", input, "simplicial object JSON");
  dk_classify->add_option("-m", m)->required();
  dk_classify->add_option("-N", N);

  auto* descent = app.add_subcommand("descent", "descent checks");
  auto* descent_check = descent->add_subcommand("check", "run a cover class against X");
  descent_check->add_option("--input", input, "simplicial object JSON");
  descent_check->add_option("--complex", complex_dims, "or a nerve of these dims");
  descent_check->add_option("--class", cls_name)->required();
  descent_check->add_option("--k,--param", param);
  descent_check->add_option("-N", N);

  auto* rep = app.add_subcommand("rep", "poset representations");
  auto* rep_validate = rep->add_subcommand("validate", "validate + exactness");
  rep_validate->add_option("--input", input)->required();
  auto* rep_extend = rep->add_subcommand("extend", "exact reduced extension along [0]*-");
  rep_extend->add_option("--input", input)->required();
  auto* rep_mutate = rep->add_subcommand("mutate", "right mutation (m = 1 cube filling)");
  rep_mutate->add_option("--input", input)->required();
  rep_mutate->add_option("--at", at_arg)->required();

  auto* golden = app.add_subcommand("golden", "frozen scenario suite");
  auto* golden_run = golden->add_subcommand("run", "compare against stored goldens");
  golden_run->add_option("--dir", golden_dir);
  auto* golden_regen = golden->add_subcommand("regen", "regenerate the stored goldens");
  golden_regen->add_option("--dir", golden_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (delta_enum->parsed()) return cmd_delta_enum(m, n, nondeg, as_dot);
    if (lambda_enum->parsed()) return cmd_lambda_enum(m, n, window);
    if (lambda_orbit->parsed()) return cmd_lambda_orbit(m, n);
    if (slices_enum->parsed()) return cmd_slices("enum", m, n, as_dot, slice_arg, at_arg);
    if (slices_graph->parsed()) return cmd_slices("graph", m, n, as_dot, slice_arg, at_arg);
    if (slices_mutate->parsed()) return cmd_slices("mutate", m, n, as_dot, slice_arg, at_arg);
    if (alg_quiver->parsed()) return cmd_algebra_quiver(m, n, as_dot);
    if (alg_dims->parsed()) return cmd_algebra_dims(m, n);
    if (alg_ext->parsed()) return cmd_algebra_ext(m, n, from_arg, to_arg, ext_i);
    if (k0_present->parsed()) return cmd_k0_present(m, n);
    if (em_count_cmd->parsed()) return cmd_em_count(m, n, group, unsigned_variant);
    if (covers_make->parsed()) return cmd_covers_make(cls_name, param, n, as_json);
    if (covers_sat->parsed()) return cmd_covers_saturated(cls_name, m, N);
    if (cube_tcofib_cmd->parsed()) return cmd_cube_tcofib(input);
    if (dk_nerve->parsed()) return cmd_dk_nerve(complex_dims, N, full);
    if (dk_classify->parsed()) return cmd_dk_classify(complex_dims, input, m, N);
    if (descent_check->parsed())
      return cmd_descent_check(input, complex_dims, cls_name, param, N);
    if (rep_validate->parsed()) return cmd_rep("validate", input, at_arg);
    if (rep_extend->parsed()) return cmd_rep("extend", input, at_arg);
    if (rep_mutate->parsed()) return cmd_rep("mutate", input, at_arg);
    if (golden_run->parsed()) return cmd_golden("run", golden_dir);
    if (golden_regen->parsed()) return cmd_golden("regen", golden_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
