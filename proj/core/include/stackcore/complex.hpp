#pragma once
#include <string>
#include <utility>
#include <vector>

#include "stackcore/groupoid.hpp"

namespace stk::cx {

using grpd::Id;
using grpd::kNone;
using grpd::StructuralError;

// Oriented edge a -> b.
struct Edge {
  Id a = kNone, b = kNone;
};

// Square-like 2-cell: a signed boundary chain whose node boundary cancels,
// plus the ordered pair of boundary edges used by commutator wedge products
// (the two forward edges at the base corner of the cell).
struct Face {
  std::vector<std::pair<Id, int>> boundary;  // (edge, ±1)
  Id wedge_a = kNone, wedge_b = kNone;
};

// Finite cell complex of dimension at most two.
struct Complex {
  int nodes = 0;
  std::vector<Edge> edge;
  std::vector<Face> face;

  int cells(int p) const;
  std::string validate() const;
};

// Grid builders shared by instances and tests.
Complex pointComplex();
Complex pathComplex(int n_edges);                  // n_edges+1 nodes in a row
Complex rectComplex(int nx, int ny);               // (nx+1)*(ny+1) node grid with faces

// Cellular map. Every edge lands on an edge (with an orientation sign) or
// collapses onto a node; every face lands on a face or collapses. Collapsed
// cells pull cochains back to zero. Maps are plain tables; the complexes
// they connect are passed to the operations that need them.
struct Map {
  std::vector<Id> node;
  std::vector<Id> edge;        // image edge, kNone when collapsed
  std::vector<int> edge_sign;  // ±1 where the edge survives, 0 otherwise
  std::vector<Id> edge_node;   // collapse target where edge == kNone
  std::vector<Id> face;        // image face, kNone when collapsed
  std::vector<int> face_sign;

  std::string validate(const Complex& S, const Complex& D) const;
};

Map identityMap(const Complex& C);
Map composeMaps(const Map& g, const Map& f);  // g∘f
bool sameMap(const Map& a, const Map& b);

// Product complex V × U with block-ordered cells. Vertical cells (all legs
// along V) come first in every degree, so a vertical cochain is a prefix of
// a full one:
//   edges:  [V-edge × U-node | V-node × U-edge]
//   faces:  [V-face × U-node | V-edge × U-edge | V-node × U-face]
// Mixed faces carry the boundary signs that make the cochain differential
// split as d(α⊗β) = dα⊗β + (−1)^p α⊗dβ.
struct Product {
  Complex cx;
  int vn = 0, ve = 0, vf = 0, un = 0, ue = 0, uf = 0;

  Id node(Id v, Id u) const { return v * un + u; }
  Id edgeV(Id e, Id u) const { return e * un + u; }
  Id edgeU(Id v, Id e) const { return ve * un + v * ue + e; }
  Id faceV(Id f, Id u) const { return f * un + u; }
  Id faceM(Id e, Id eu) const { return vf * un + e * ue + eu; }
  Id faceU(Id v, Id f) const { return vf * un + ve * ue + v * uf + f; }
  int vertCells(int p) const;  // vertical block size per degree
};

Product productComplex(const Complex& V, const Complex& U);

// The product of two cellular maps, acting block-wise; a collapsed factor
// collapses the mixed cells it touches.
Map productMap(const Product& S, const Product& D, const Map& f, const Map& g);

// Z_q cochains, stored as values 0..q-1 per cell in id order.
using Cochain = std::vector<int>;

int modq(long long v, int q);
Cochain zeroCochain(const Complex& C, int p);
Cochain addC(const Cochain& a, const Cochain& b, int q);
Cochain subC(const Cochain& a, const Cochain& b, int q);
Cochain negC(const Cochain& a, int q);
Cochain d0(const Complex& C, const Cochain& a, int q);  // nodes -> edges
Cochain d1(const Complex& C, const Cochain& a, int q);  // edges -> faces
Cochain pull0(const Map& m, const Cochain& a, int q);
Cochain pull1(const Map& m, const Cochain& a, int q);
Cochain pull2(const Map& m, const Cochain& a, int q);

// Vertical calculus on a product: inputs and outputs live on the vertical
// blocks (0-cochains are vertical by definition and use all nodes).
Cochain dVert0(const Product& P, const Cochain& g, int q);  // nodes -> vertical edges
Cochain dVert1(const Product& P, const Cochain& A, int q);  // vertical edges -> vertical faces
Cochain vertPart(const Product& P, int p, const Cochain& full);

// Pullback of vertical cochains along f × g without materializing the
// product map; f maps the V factors, g the U factors.
Cochain pullVert1(const Product& S, const Product& D, const Map& f, const Map& g,
                  const Cochain& A, int q);
Cochain pullVert2(const Product& S, const Product& D, const Map& f, const Map& g,
                  const Cochain& A, int q);

// Connected components of the node set under edges.
std::vector<Id> componentOf(const Complex& C);

}  // namespace stk::cx
