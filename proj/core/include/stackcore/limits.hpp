#pragma once
#include <array>
#include <map>

#include "stackcore/model.hpp"

namespace stk::grpd {

// A cosimplicial groupoid truncated at level 2: everything the descent
// construction reads.
struct CosimplicialGroupoid2 {
  GroupoidPtr g0, g1, g2;
  Functor d0_01, d1_01;         // G0 -> G1
  Functor d0_12, d1_12, d2_12;  // G1 -> G2
  Functor s0_10;                // G1 -> G0

  // Verifies s0∘d0 = s0∘d1 = id and the coface identities
  // d1d0 = d0d0, d2d0 = d0d1, d2d1 = d1d1.
  std::string validate() const;
};

CosimplicialGroupoid2 constantCosimplicial(const Groupoid& G);

// The descent groupoid of a 2-truncated cosimplicial groupoid: objects are
// pairs (x, h) with h : d1(x) -> d0(x), s0(h) = id_x and
// d0(h)∘d2(h) = d1(h); a morphism (x,h) -> (x',h') is g : x -> x' with
// h'∘d1(g) = d0(g)∘h.
struct Descent {
  GroupoidPtr grpd;
  GroupoidPtr g0, g1;
  std::vector<std::pair<Id, Id>> obj_data;  // (x, h)
  std::vector<std::pair<Id, Id>> mor_data;  // (source descent object, g)

  Id objIndex(Id x, Id h) const;           // kNone when absent
  Id morIndex(Id src_obj, Id g) const;     // kNone when absent

  std::shared_ptr<std::map<std::pair<Id, Id>, Id>> obj_index, mor_index;
};
Descent holimDescent(const CosimplicialGroupoid2& D);

// The canonical functor G -> holim induced by an augmentation aug : G -> G0
// with d0∘aug = d1∘aug; sends y to (aug(y), identity cocycle).
Functor descentComparison(const Descent& H, const CosimplicialGroupoid2& D, const Functor& aug);

// Homotopy fiber product of f1 : X -> Z <- Y : f2. Objects are triples
// (x, y, k : f1(x) -> f2(y)); morphisms are pairs (g, h) with
// k'∘f1(g) = f2(h)∘k.
struct HomotopyFiberProduct {
  GroupoidPtr grpd;
  GroupoidPtr x, y, z;
  std::vector<std::array<Id, 3>> obj_data;  // (x, y, k)
  std::vector<std::array<Id, 3>> mor_data;  // (source object, g, h)
  Functor proj1, proj2;                     // to X and Y

  Id objIndex(Id x, Id y, Id k) const;
  Id morIndex(Id src_obj, Id g, Id h) const;

  std::shared_ptr<std::map<std::array<Id, 3>, Id>> obj_index, mor_index;
};
HomotopyFiberProduct homotopyFiberProduct(const Functor& f1, const Functor& f2);

// Strict fiber product (equality instead of a connecting isomorphism),
// with the canonical comparison functor into the homotopy fiber product.
struct StrictFiberProduct {
  GroupoidPtr grpd;
  std::vector<std::pair<Id, Id>> obj_data;  // (x, y)
  std::vector<std::pair<Id, Id>> mor_data;  // (g, h)
};
StrictFiberProduct strictFiberProduct(const Functor& f1, const Functor& f2);
Functor strictToHomotopyComparison(const StrictFiberProduct& S, const HomotopyFiberProduct& P);

// Pushout H ⊔_G G' of a cofibration F : G -> H along F' : G -> G'.
// Computed by congruence-closure saturation over formal composites; presheaf
// pushouts of groupoids can be infinite, in which case the element count
// passes `cap` and EnumerationOverflow is thrown.
struct PushoutGroupoid {
  GroupoidPtr grpd;
  GroupoidPtr h, g2;  // stable copies of the feet
  Functor inj_h;      // H  -> P
  Functor inj_g2;     // G' -> P

  // Provenance of saturation elements, for evaluating cocones:
  // tag 0: seed from H (payload = H morphism), tag 1: seed from G'
  // (payload = G' morphism), tag 2: composite (payload = two elements).
  std::vector<std::array<Id, 3>> element_prov;
  std::vector<Id> mor_of_element;
  std::vector<Id> rep_element_of_mor;
  std::vector<Id> obj_side;  // final object -> 0 (from H) / 1 (from G')
  std::vector<Id> obj_orig;  // final object -> original object id
};
PushoutGroupoid pushoutAlongCofibration(const Functor& F, const Functor& Fp,
                                        std::size_t cap = 4000);

// The functor P -> T induced by a commuting cocone (c1 : H -> T,
// c2 : G' -> T with c1∘F = c2∘F'); throws when the cocone does not commute.
Functor mediatingFunctor(const PushoutGroupoid& P, const Functor& c1, const Functor& c2);

// Pushout product F □ F' : (H×G') ⊔_{G×G'} (G×H') -> H×H' of cofibrations.
struct PushoutProduct {
  GroupoidPtr gxgp, hxgp, gxhp, hxhp;
  PushoutGroupoid pushout;
  Functor box;  // pushout.grpd -> hxhp
};
PushoutProduct pushoutProduct(const Functor& F, const Functor& Fp, std::size_t cap = 4000);

// The interval inclusion {∗} -> Δ¹ at 0, the generating acyclic cofibration.
struct IntervalInclusion {
  GroupoidPtr pt, delta1;
  Functor j;
};
IntervalInclusion makeJ();

// Explicit finite model of P(F, J) and of F □ J: objects are Ob(G) ⊔ Ob(H)
// and Hom(a, b) = Hom_H(π(a), π(b)) with π = F on the G side. Stays finite
// for every cofibration F, unlike the general saturation route.
struct JPushoutProduct {
  GroupoidPtr p;      // P(F, J)
  GroupoidPtr hxd1;   // H × Δ¹
  GroupoidPtr h, delta1;
  Functor box;        // P(F, J) -> H × Δ¹
};
JPushoutProduct jPushoutProduct(const Functor& F);

// Object classes of P(F,F') and the object map of F □ F', computed without
// morphisms; enough to decide whether F □ F' is a cofibration.
struct BoxObjects {
  int classes = 0;
  std::vector<Id> class_of_hxgp, class_of_gxhp;  // row-major object pairs
  std::vector<Id> image;                         // per class, object of H×H'
  bool injective = false;
};
BoxObjects pushoutProductObjects(const Functor& F, const Functor& Fp);

}  // namespace stk::grpd
