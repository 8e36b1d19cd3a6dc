#pragma once
#include <map>

#include "stackcore/presheaf.hpp"

namespace stk::psh {

// All presheaf morphisms X -> Y. Backtracks over stages in site object
// order, pruning each partial assignment by naturality along every site
// morphism whose endpoints are already fixed. Throws EnumerationOverflow
// when a stage pool or the search itself passes `cap` nodes.
std::vector<PshMor> enumeratePshMor(const Psh& X, const Psh& Y,
                                    std::size_t cap = 1'000'000);

// Homotopies f => g between parallel presheaf morphisms: one natural
// transformation component table per stage, compatible with restriction.
// Entry [u][x] is the Y(u)-morphism at the object x of X(u).
std::vector<std::vector<std::vector<grpd::Id>>> enumerateModifications(
    const PshMor& f, const PshMor& g, std::size_t cap = 1'000'000);

// The groupoid of presheaf morphisms X -> Y and their homotopies.
struct MappingGroupoid {
  grpd::GroupoidPtr grpd;
  std::vector<PshMor> objs;
  std::vector<std::pair<grpd::Id, grpd::Id>> mor_ends;
  std::vector<std::vector<std::vector<grpd::Id>>> mor_comp;

  // Lookup by component tables; endpoints pointers are not compared.
  grpd::Id objIndex(const PshMor& f) const;
  grpd::Id morIndex(grpd::Id src_obj, grpd::Id dst_obj,
                    const std::vector<std::vector<grpd::Id>>& comp) const;

  std::shared_ptr<std::map<std::vector<grpd::Id>, grpd::Id>> obj_index;
  std::shared_ptr<std::map<std::vector<grpd::Id>, grpd::Id>> mor_index;
};
MappingGroupoid mappingGroupoid(const Psh& X, const Psh& Y,
                                std::size_t cap = 1'000'000);

// One stage of the internal hom: morphisms rep(U) x X -> Y and their
// homotopies. The domain is kept alive here because the enumerated
// morphisms point into it.
struct HomStage {
  std::shared_ptr<Representable> rep;
  std::shared_ptr<ProductPsh> dom;
  MappingGroupoid map;
};
struct InternalHom {
  std::shared_ptr<Psh> psh;
  std::vector<HomStage> stage;  // one per site object
};
// Stage U = mapping groupoid of rep(U) x X -> Y; restriction along
// m : V -> U pre-composes the representable coordinate with m.
InternalHom internalHom(const Psh& X, const Psh& Y, std::size_t cap = 1'000'000);

// One generalized element of X: the chart object V and a point of X(V),
// standing for the morphism rep(V) -> X it induces.
struct CechChart {
  grpd::Id obj = grpd::kNone;
  grpd::Id point = grpd::kNone;
};

// The presheaf of Cech groupoids of a family of charts. Stage U objects are
// pairs (chart alpha, nu : U -> V_alpha); there is a unique morphism
// (alpha, nu) -> (beta, nu') exactly when both evaluate to the same object
// of X(U); q sends (alpha, nu) to that object.
struct CechReplacement {
  std::shared_ptr<Psh> psh;
  std::vector<CechChart> charts;
  std::vector<std::vector<std::pair<int, grpd::Id>>> objs;  // per stage: (chart, nu)
  PshMor q;
};
CechReplacement cechReplacement(const Psh& X, const std::vector<CechChart>& charts);

// Lifts psi : V -> B through a stage-wise acyclic fibration p : E -> B,
// where V is a Cech replacement: strict preimages are chosen over each
// (alpha, id) and propagated by restriction; morphisms lift uniquely by
// full faithfulness. Throws StructuralError when p fails the needed
// surjectivity or fullness on some stage.
PshMor cechLift(const CechReplacement& c, const PshMor& p, const PshMor& psi);

}  // namespace stk::psh
