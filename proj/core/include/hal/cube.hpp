#pragma once

#include <vector>

#include "hal/chain.hpp"

namespace hal {

// A k-cube of bounded chain complexes with strictly commuting edge maps.
// Vertices are indexed by bitmasks; the edge in direction j leaves a vertex
// whose j-th bit is clear.
struct ComplexCube {
  int k = 0;
  std::vector<ChainComplex> verts;  // size 2^k
  // edges[mask * k + j]: degreewise matrices verts[mask] -> verts[mask | 1<<j],
  // stored on [lo, hi] of the source support.
  struct Edge {
    int lo = 0;
    std::vector<QMat> parts;
  };
  std::vector<Edge> edges;

  QMat edge_at(unsigned mask, int j, int degree) const;
  // Composite edge map along any monotone path from `from` to `to`.
  QMat path_at(unsigned from, unsigned to, int degree) const;

  bool validate() const;  // chain maps + strict square commutativity

  ComplexCube face(int dir, int side) const;  // (k-1)-cube at coordinate side
};

ChainMap cube_edge_map(const ComplexCube& c, unsigned mask, int j);

// Pointwise mapping cone along the given direction.
ComplexCube cofib_cube(const ComplexCube& c, int dir);
// Iterated cofibre: fold all directions.
ChainComplex iterated_cofib(const ComplexCube& c);

// Koszul-signed total complex with the terminal vertex in degree 0
// (vertex u contributes with homological shift k - |u|).
ChainComplex tcofib(const ComplexCube& c);
// Dual normalization: the initial vertex sits in degree 0 (shift -|u|).
ChainComplex tfib(const ComplexCube& c);

// True iff tcofib is acyclic; the tfib route is computed as well and the two
// verdicts are required to agree.
bool is_bicartesian(const ComplexCube& c);

// The map tcofib(face dir=0) -> tcofib(face dir=1) induced by the edges; its
// cone is quasi-isomorphic to tcofib of the whole cube.
struct TcofibSequence {
  ChainComplex src, tgt, cone_complex, total;
};
TcofibSequence tcofib_cofibre_sequence(const ComplexCube& c, int dir);

// Completion of a punctured cube. The input carries the full index space but
// the entry at the punctured vertex (terminal resp. initial) is ignored; the
// output is a strictly commuting biCartesian cube whose other vertices are
// replaced by quasi-isomorphic models, together with comparison maps.
struct CompletedCube {
  ComplexCube cube;
  // comparison[mask]: chain map model -> original value (empty at the filled
  // vertex); each is a quasi-isomorphism.
  std::vector<ComplexCube::Edge> comparison;
};
CompletedCube complete_cube_terminal(const ComplexCube& punctured);
CompletedCube complete_cube_initial(const ComplexCube& punctured);

// Linear dual complex: (C*)_d = (C_{-d})^* with transposed differentials.
ChainComplex dualize(const ChainComplex& c);
ComplexCube dualize(const ComplexCube& c);

}  // namespace hal
