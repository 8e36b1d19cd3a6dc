#pragma once
#include <functional>
#include <string>
#include <vector>

#include "stackcore/complex.hpp"
#include "stackcore/presheaf.hpp"
#include "stackcore/site.hpp"

namespace stk::gauge {

using grpd::Id;
using grpd::kNone;
using grpd::StructuralError;

// A discrete gauge calculus. Lattice flavor: the gauge group on a domain is
// Z_q per node and p-forms are Z_q per p-cell, acted on by A ↦ A + dg.
// Finite flavor: locally constant maps into a finite group G (one G value
// per connected component) with trivial form content.
struct Calc {
  int q = 0;  // > 0 selects the lattice flavor
  grpd::FinGroup G;

  bool lattice() const { return q > 0; }
  std::string name() const;
};
Calc latticeCalc(int q);
Calc finiteCalc(grpd::FinGroup G);

// Digit codecs for elements stored as dense ids (little-endian digits).
std::vector<int> digitsOf(long long code, int k, int b);
long long codeOf(const std::vector<int>& digits, int b);

// Gauge group and form modules of a calculus over one product domain V × U,
// with every element encoded as a dense id.
struct Dom {
  Calc calc;
  cx::Product prod;
  std::vector<Id> comp_of;   // node -> component (finite flavor)
  std::vector<Id> comp_rep;  // component -> representative node
  int n_comp = 0;

  int gaugeDigits() const;
  long long nGauge() const;
  Id gUnit() const;
  Id gMul(Id a, Id b) const;  // pointwise product in diagram order
  Id gInv(Id a) const;

  long long nForm(int p, bool vert) const;
  Id fAdd(int p, bool vert, Id a, Id b) const;
  Id fSub(int p, bool vert, Id a, Id b) const;

  // Right action of gauge transformations on connections, A ◁ g = A + dg
  // (vertical variant uses the vertical differential); identity for the
  // finite flavor, whose connection sets are single points.
  Id actConn(Id A, Id g, bool vert) const;
  // Adjoint action on p-forms; trivial for both shipped flavors.
  Id actAd(Id w, Id g) const;
  // Vertical curvature d^vert A + A ∧ A of an encoded vertical 1-form; the
  // wedge term vanishes for abelian coefficients.
  Id curvVert(Id A) const;
};
Dom makeDom(const Calc& c, const cx::Complex& V, const cx::Complex& U);

// The realized maps connecting two domains of the same calculus.
struct DomMap {
  cx::Map v, u, prod;
};
DomMap domMap(const Dom& S, const Dom& D, const cx::Map& v, const cx::Map& u);

Id gPull(const Dom& S, const Dom& D, const DomMap& m, Id g);
Id fPull(const Dom& S, const Dom& D, const DomMap& m, int p, bool vert, Id w);

// A finite atlas: charts with declared pairwise (and triple) overlaps given
// by explicit cell complexes and embeddings.
struct Overlap {
  bool empty = true;
  cx::Complex cpx;
  cx::Map into_a, into_b;  // into chart i and chart j, i < j
};
struct TripleOverlap {
  bool empty = true;
  cx::Complex cpx;
  cx::Map to_ab, to_ac, to_bc;  // into the pairwise overlap complexes
};
struct Atlas {
  std::string name;
  std::vector<cx::Complex> chart;
  std::vector<Overlap> pair;          // upper triangle i < j
  std::vector<TripleOverlap> triple;  // i < j < k
  std::vector<bool> causally_convex;  // per chart; instance metadata

  int charts() const { return static_cast<int>(chart.size()); }
  int pairIndex(int i, int j) const;
  int tripleIndex(int i, int j, int k) const;
  std::string validate() const;
};

Atlas lineOneChartAtlas();    // one path chart with a single edge
Atlas lineTwoChartAtlas();    // two 2-edge paths glued along a shared edge
Atlas circleThreeArcAtlas();  // three arcs, single-node overlaps, empty triple
Atlas squareOneChartAtlas();  // one square chart carrying a face

// An embedding of one atlas into another: a chart assignment with cellular
// embeddings commuting with the overlap structure. Used for the chart
// functoriality of the gauge constructions.
struct AtlasEmbedding {
  const Atlas* from = nullptr;
  const Atlas* to = nullptr;
  std::vector<int> chart_to;       // chart index assignment
  std::vector<cx::Map> chart_map;  // per source chart
  std::vector<cx::Map> pair_map;   // per nonempty source pair, into target pair

  std::string validate() const;
};

// A parameter site together with its grid realization: every site object
// carries a grid complex and every site morphism a cellular map. The
// distinguished object D has one grid node but two site points, so codiscrete
// stages see strictly more data than grid stages; T3 is covered by two copies
// of T overlapping at the point object.
struct ParamModel {
  site::Site site;
  std::vector<cx::Complex> grid;
  std::vector<cx::Map> gridmap;
};
// levels: 2 = {pt, D}, 3 = {pt, D, T}, 4 = {pt, D, T, T3 with its cover}.
ParamModel paramSite(int level);

// Action groupoid of a right gauge action: objects are encoded forms,
// morphisms (x, g) : x → x ◁ g with (x,g) then (x◁g,g′) composing to
// (x, g·g′); morphism ids are x·n_gauge + g.
grpd::GroupoidPtr actionGroupoid(long long n_obj, long long n_gauge, Id unit,
                                 const std::function<Id(Id, Id)>& act,
                                 const std::function<Id(Id, Id)>& mul,
                                 const std::function<Id(Id)>& inv);

enum class Flavor { bundle, connection, adjoint };

// Classifying presheaves on a parameter site: stage U is one object with
// gauge automorphisms composed by the opposite pointwise product (bundle),
// the action groupoid of connections (connection), or of adjoint p-forms
// (adjoint), all over the grid of U.
psh::Psh classifyingPsh(const ParamModel& pm, const Calc& c, Flavor f, int p = 1);

}  // namespace stk::gauge
