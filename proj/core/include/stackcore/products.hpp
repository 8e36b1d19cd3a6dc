#pragma once
// Finite products of groupoids with mixed-radix object/morphism encodings,
// plus the functor builders used to wire products into diagrams. Iterating
// the binary product would nest composition closures one level per factor;
// these stay flat, which matters for Cech levels with many slots.
#include <vector>

#include "stackcore/groupoid.hpp"

namespace stk::grpd {

// Encodes tuples with the first factor most significant. The empty product
// is the terminal groupoid.
struct ProductGroupoid {
  GroupoidPtr grpd;
  std::vector<GroupoidPtr> factor;
  std::vector<Id> obj_place, mor_place;  // place value per slot

  int slots() const { return static_cast<int>(factor.size()); }
  Id objSlot(Id obj, int t) const;
  Id morSlot(Id mor, int t) const;
  Id encodeObj(const std::vector<Id>& digits) const;
  Id encodeMor(const std::vector<Id>& digits) const;
};

ProductGroupoid productOfGroupoids(std::vector<GroupoidPtr> factors,
                                   std::size_t cap = 50'000'000);

// Functor A -> B between products: output slot t reads input slot gather[t]
// through the stage functor slot[t] : A.factor[gather[t]] -> B.factor[t].
Functor gatherProductFunctor(const ProductGroupoid& A, const ProductGroupoid& B,
                             const std::vector<int>& gather,
                             const std::vector<const Functor*>& slot);

// Functor X -> B with components legs[t] : X -> B.factor[t].
Functor tupleFunctor(const Groupoid& X, const ProductGroupoid& B,
                     const std::vector<const Functor*>& legs);

Functor projectionFunctor(const ProductGroupoid& P, int t);

}  // namespace stk::grpd
