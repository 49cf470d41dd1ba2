#pragma once

#include <string>
#include <vector>

#include "hal/chain.hpp"
#include "hal/cover.hpp"
#include "hal/cube.hpp"
#include "hal/matrix.hpp"
#include "hal/simplex.hpp"

namespace hal {

// A simplicial vector space truncated at level N: dimensions X_0..X_N with
// face maps d_i : X_n -> X_{n-1} and degeneracies s_i : X_n -> X_{n+1}
// (the latter defined for n < N).
struct TruncatedSimplicialVS {
  int N = 0;
  std::vector<int> dims;                // size N+1
  std::vector<std::vector<QMat>> face;  // face[n][i], n = 1..N, i = 0..n
  std::vector<std::vector<QMat>> degen; // degen[n][i], n = 0..N-1, i = 0..n

  bool validate(std::string* witness = nullptr) const;

  const QMat& d(int n, int i) const { return face[n][i]; }
  const QMat& s(int n, int i) const { return degen[n][i]; }

  // Operator action X(theta) : X_n -> X_m for a monotone theta : [m] -> [n]
  // within the truncation, via epi-mono factorization.
  QMat op_matrix(const Simplex& theta) const;
};

// Normalized Moore complex with remembered bases.
struct MooreComplex {
  ChainComplex complex;       // degrees 0..N
  std::vector<QMat> basis;    // basis[n]: X_n x dim(Xbar_n)
};

MooreComplex moore(const TruncatedSimplicialVS& x);       // cap ker d_i (i>=1), d0
MooreComplex moore_alt(const TruncatedSimplicialVS& x);   // cap ker d_i (i<n), d_n

// Dold-Kan nerve of a connective chain complex, truncated at N.
TruncatedSimplicialVS nerve(const ChainComplex& b, int N);

// Membrane object of a cover: the limit of X over the meet poset, with the
// comparison map X_n -> X_F.
struct Membrane {
  PosetLimit limit;
  QMat comparison;  // X_n -> limit coordinates (in the limit basis)
  QMat into_product; // X_n -> product over members (for rank certificates)
  std::vector<std::vector<int>> members;  // the poset objects used
  int n = 0;
};
Membrane membrane(const TruncatedSimplicialVS& x, const Cover& f);

// Exact descent verdict for one cover.
bool is_local(const TruncatedSimplicialVS& x, const Cover& f);

struct DescentReport {
  std::vector<std::pair<std::string, bool>> lines;  // per cover instance
  bool all = true;
  void add(const std::string& name, bool ok) {
    lines.emplace_back(name, ok);
    all = all && ok;
  }
};
// Runs a whole cover class against X up to level N (outer m-Kan pairs the two
// horn classes, 2m-Segal pairs the two Segal covers).
DescentReport descent_report(const TruncatedSimplicialVS& x, CoverClass cls, int param,
                             int maxn);

// Section of the Segal map X_n -> X_{horn} for the 0-th or n-th horn, built by
// the degeneracy recursion; dd[i] * f = p_i holds exactly for i != side, and
// (Segal map) * f = id.
struct HornSplitting {
  QMat section;             // X_horn -> X_n
  std::vector<QMat> proj;   // p_i : X_horn -> X_{n-1}, index i (p_side empty)
  QMat segal;               // X_n -> X_horn
};
HornSplitting horn_splitting(const TruncatedSimplicialVS& x, int n, int side);

// The cube-totalized splitting; equals horn_splitting(x, n, 0).section as a
// matrix.
QMat iota_splitting(const TruncatedSimplicialVS& x, int n);
QMat iota_component(const TruncatedSimplicialVS& x, int n, int i);  // iota_i

// Filtered object B_0 -> B_1 -> ... -> B_N from punctured-cube colimits.
struct FilteredObject {
  std::vector<ChainComplex> b;
  std::vector<ChainMap> f;  // f[n] : b[n-1] -> b[n]
  std::vector<ChainComplex> storage;  // owners for the chain map endpoints
};
FilteredObject lurie_filtered(const TruncatedSimplicialVS& x);

struct ClassifyVerdict {
  bool outer_kan = false;
  bool segal = false;
  bool truncated = false;
  bool consistent = false;
  bool conclusive = true;
  std::string witness;
};
// The three characterizations computed independently up to level N.
ClassifyVerdict classify(const TruncatedSimplicialVS& x, int m);

struct ImplicationReport {
  std::vector<std::pair<std::string, bool>> lines;
  bool all = true;
};
ImplicationReport implication_suite(const TruncatedSimplicialVS& x, int m);

// Deterministic random connective complex with dims <= maxdim supported in
// degrees [0, maxdeg].
ChainComplex random_connective_complex(Rng& rng, int maxdeg, int maxdim);

}  // namespace hal
