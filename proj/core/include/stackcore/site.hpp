#pragma once
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stackcore/groupoid.hpp"

namespace stk::site {

using grpd::Id;
using grpd::kNone;
using grpd::Mor;
using grpd::StructuralError;

// A finite category presented by explicit tables.
class Category {
 public:
  static Category make(int n_obj, std::vector<Mor> mors, std::vector<Id> idents,
                       std::vector<std::array<Id, 3>> comp_triples,
                       std::vector<std::string> obj_labels = {},
                       std::vector<std::string> mor_labels = {});

  int objects() const { return n_obj_; }
  Id morphisms() const { return static_cast<Id>(mors_.size()); }
  Id src(Id m) const { return mors_[static_cast<size_t>(m)].src; }
  Id dst(Id m) const { return mors_[static_cast<size_t>(m)].dst; }
  Id identity(Id x) const { return ident_[static_cast<size_t>(x)]; }
  bool isIdentity(Id m) const { return ident_[static_cast<size_t>(src(m))] == m; }
  Id compose(Id g, Id f) const;  // g after f
  const std::vector<Id>& out(Id x) const { return out_[static_cast<size_t>(x)]; }
  const std::vector<Id>& in(Id x) const { return in_[static_cast<size_t>(x)]; }
  std::vector<Id> hom(Id x, Id y) const;
  const std::string& objLabel(Id x) const { return obj_label_[static_cast<size_t>(x)]; }
  const std::string& morLabel(Id m) const { return mor_label_[static_cast<size_t>(m)]; }

  std::string validate() const;

 private:
  int n_obj_ = 0;
  std::vector<Mor> mors_;
  std::vector<Id> ident_;
  std::unordered_map<std::uint64_t, Id> comp_;
  std::vector<std::vector<Id>> out_, in_;
  std::vector<std::string> obj_label_, mor_label_;
};

// One covering family with 2-truncated Cech data. Pair and triple cells are
// stored for strictly increasing index tuples; degenerate tuples reuse lower
// cells (the intersection of a member with itself is the member). An absent
// cell (kNone) marks an empty intersection.
struct PairCell {
  Id obj = kNone;
  Id to_first = kNone, to_second = kNone;  // U_ij -> U_i, U_ij -> U_j
};
struct TripleCell {
  Id obj = kNone;
  Id to_ij = kNone, to_ik = kNone, to_jk = kNone;  // into the pairwise cells
};
struct Cover {
  Id base = kNone;
  std::vector<Id> member_obj;
  std::vector<Id> member_mor;  // legs l_i : U_i -> base
  std::vector<PairCell> pair;     // index: upper triangle i<j
  std::vector<TripleCell> triple; // index: i<j<k combinations

  int members() const { return static_cast<int>(member_obj.size()); }
  int pairIndex(int i, int j) const;    // requires i < j
  int tripleIndex(int i, int j, int k) const;  // requires i < j < k
};

// Resolved Cech slot for a (multi-)index: the intersection object together
// with the site morphisms realizing the face inclusions.
struct PairSlot {
  Id obj;             // kNone when empty
  Id to_i, to_j;      // inclusions into U_i, U_j (identities on the diagonal)
};
struct TripleSlot {
  Id obj;
  Id to_ij, to_ik, to_jk;  // inclusions into the pair objects
};

struct Site {
  Category cat;
  Id pt = kNone;
  std::vector<std::vector<Cover>> covers_of;            // per object
  std::vector<std::vector<std::pair<int, int>>> refines_of;  // (finer, coarser) per object

  std::string validate() const;

  PairSlot pairSlot(const Cover& c, int i, int j) const;        // i <= j
  TripleSlot tripleSlot(const Cover& c, int i, int j, int k) const;  // i <= j <= k
  bool refinesDeclared(Id obj, int finer, int coarser) const;
};

// For each member of the finer cover: the coarser member it lands in and the
// connecting site morphism.
struct Transport {
  std::vector<int> member;
  std::vector<Id> via;
};
std::optional<Transport> findTransport(const Site& s, const Cover& fine, const Cover& coarse);

// The over-site C/U: objects are site morphisms g : V -> U, morphisms are
// commuting triangles, covers are inherited from C member-wise.
struct OverSite {
  Site site;
  std::vector<Id> leg;        // over-object -> site morphism into U
  std::vector<Id> back_mor;   // over-morphism -> underlying site morphism
  Id objOf(Id site_mor) const;

  std::unordered_map<Id, Id> obj_of_leg;
};
OverSite overSite(const Site& s, Id U);

// Sample sites used across tests and shipped instances.
Site intervalTwoChartSite();  // interval, two overlapping charts
Site circleThreeArcSite();    // circle, three arcs, empty triple overlap
Site lineThreeChartSite();    // three charts in a row, disjoint outer pair
Site discretePointSite(int k);  // pt plus one k-point object covered by its points

}  // namespace stk::site
