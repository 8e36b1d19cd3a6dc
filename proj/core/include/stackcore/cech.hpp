#pragma once
#include <array>

#include "stackcore/limits.hpp"
#include "stackcore/presheaf.hpp"

namespace stk::psh {

// 2-truncated Cech cosimplicial groupoid of X along a cover. Levels are slot
// products over the nonempty multi-intersections: level 1 over {i<=j}, level
// 2 over {i<=j<=k}; a coface drops one index of the multiset and restricts
// along the matching inclusion, the codegeneracy reads the diagonal.
struct CechDiagram {
  grpd::CosimplicialGroupoid2 d;
  Functor aug;                                  // X(base) -> level 0
  grpd::ProductGroupoid level0, level1, level2;
  Id base = kNone;
  int cover_idx = -1;
  std::vector<std::array<int, 2>> pair_slot;
  std::vector<std::array<int, 3>> triple_slot;
};
CechDiagram cechDiagram(const Psh& X, Id base, int cover_idx, std::size_t cap = 50'000'000);

// Stage-wise image of a Cech diagram under a presheaf morphism.
struct CechMap {
  Functor l0, l1, l2;
};
CechMap cechMap(const PshMor& f, const CechDiagram& dx, const CechDiagram& dy);

// The functor holim(X-diagram) -> holim(Y-diagram) induced by a Cech map.
grpd::Functor inducedDescentFunctor(const grpd::Descent& hx, const grpd::Descent& hy,
                                    const CechMap& m);

}  // namespace stk::psh
