#pragma once
#include <memory>
#include <string>
#include <vector>

#include "stackcore/groupoid.hpp"
#include "stackcore/products.hpp"
#include "stackcore/site.hpp"

namespace stk::psh {

using grpd::Functor;
using grpd::Groupoid;
using grpd::GroupoidPtr;
using grpd::Id;
using grpd::kNone;
using grpd::StructuralError;
using site::Site;

// Groupoid-valued presheaf on a finite site. Stages are owned; the
// restriction along a site morphism m : V -> U is a functor X(U) -> X(V)
// whose endpoint pointers are the stage groupoids.
struct Psh {
  const Site* on = nullptr;
  std::vector<GroupoidPtr> stage;        // per site object
  std::vector<Functor> restriction;      // per site morphism

  const Site& s() const { return *on; }
  const Groupoid& at(Id u) const { return *stage[static_cast<size_t>(u)]; }
  const Functor& res(Id m) const { return restriction[static_cast<size_t>(m)]; }
  std::string validate() const;
};

// Stage-wise functor, natural in the site object.
struct PshMor {
  const Psh* X = nullptr;
  const Psh* Y = nullptr;
  std::vector<Functor> comp;             // per site object

  std::string validate() const;
};

PshMor identityPshMor(const Psh& X);
PshMor composePshMor(const PshMor& second, const PshMor& first);

Psh constantPsh(const Site& s, const Groupoid& G);
Psh terminalPsh(const Site& s);
Psh emptyPsh(const Site& s);
PshMor terminalMor(const Psh& X, const Psh& term);

// Stage at V lists Hom(V, U) in hom order as a discrete groupoid;
// obj_of_mor maps a site morphism with destination U to its stage object.
struct Representable {
  Psh psh;
  Id rep_obj = kNone;
  std::vector<Id> obj_of_mor;
};
Representable representablePsh(const Site& s, Id U);

// The morphism rep(U) -> X picking x in X(U).
PshMor yonedaMor(const Representable& r, const Psh& X, Id x);

struct ProductPsh {
  Psh psh;
  std::vector<grpd::ProductGroupoid> prod;  // per site object
};
ProductPsh productPsh(const Psh& X, const Psh& Y, std::size_t cap = 50'000'000);
PshMor productPshProj(const ProductPsh& p, const Psh& X, const Psh& Y, int which);

// The same presheaf read along the projection from the slice C/U.
Psh overRestrict(const Psh& X, const site::OverSite& o);
PshMor overRestrict(const PshMor& f, const site::OverSite& o, const Psh& ox, const Psh& oy);

// Set-valued presheaves carry pi0 and feed sheafification.
struct SetPsh {
  const Site* on = nullptr;
  std::vector<int> size;                 // per object
  std::vector<std::vector<Id>> map;      // per morphism: table size[dst] -> size[src]

  std::string validate() const;
};
struct SetPshMor {
  const SetPsh* X = nullptr;
  const SetPsh* Y = nullptr;
  std::vector<std::vector<Id>> comp;     // per object

  std::string validate() const;
};

SetPsh pi0Psh(const Psh& X);
SetPshMor pi0Mor(const PshMor& f, const SetPsh& px, const SetPsh& py);

// Automorphism groups of X at a basepoint x in X(U), assembled over the
// slice C/U. Elements are stage morphisms; map tables are contravariant
// like SetPsh.
struct AutPsh {
  std::shared_ptr<site::OverSite> over;
  std::vector<std::vector<Id>> elem;     // per over-object
  std::vector<grpd::FinGroup> group;     // per over-object
  std::vector<std::vector<Id>> map;      // per over-morphism

  SetPsh underlyingSet() const;
  std::string validate() const;
};
AutPsh pi1Psh(const Psh& X, Id U, Id x);
AutPsh pi1Psh(const Psh& X, const std::shared_ptr<site::OverSite>& over, Id x);
// Induced element maps per over-object; endpoints must share `over`.
std::vector<std::vector<Id>> pi1MorComp(const PshMor& f, const AutPsh& a, const AutPsh& b);

// Constant companion at the point stage, with the counit into X.
Psh flatPsh(const Psh& X);
PshMor flatCounit(const Psh& flat, const Psh& X);
PshMor flatMap(const PshMor& f, const Psh& fx, const Psh& fy);

// Codiscrete companion: stage at U is the product of X(pt) over Hom(pt, U).
struct SharpPsh {
  Psh psh;
  std::vector<grpd::ProductGroupoid> prod;   // per object
  std::vector<std::vector<Id>> point;        // per object: Hom(pt, U) in slot order
};
SharpPsh sharpPsh(const Psh& X, std::size_t cap = 50'000'000);
PshMor zetaMor(const Psh& X, const SharpPsh& sh);
PshMor sharpMap(const PshMor& f, const SharpPsh& sx, const SharpPsh& sy);

}  // namespace stk::psh
