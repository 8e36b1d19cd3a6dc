#pragma once
#include <optional>

#include "stackcore/groupoid.hpp"

namespace stk::grpd {

// Outcome of a structural predicate; `detail` explains the first failure
// found (empty when the predicate holds).
struct Check {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// Fully faithful: bijective on every hom-set Hom(x,y) -> Hom(Fx,Fy).
Check checkFullyFaithful(const Functor& F);
// Essentially surjective: every target object is isomorphic to some image.
Check checkEssentiallySurjective(const Functor& F);
Check checkWeakEquivalence(const Functor& F);
// Every h : F(x) -> y in the target lifts to g : x -> x' with F(g) = h.
Check checkFibration(const Functor& F);
// Injective on objects.
Check checkCofibration(const Functor& F);
// Bijective on objects and morphisms.
Check checkIsomorphism(const Functor& F);

bool isWeakEquivalence(const Functor& F);
bool isFibration(const Functor& F);
bool isCofibration(const Functor& F);

// Enumerates all functors A -> B (backtracking over a spanning structure of
// A); throws EnumerationOverflow past `cap` results.
std::vector<Functor> enumerateFunctors(const Groupoid& A, const Groupoid& B, std::size_t cap);

// Enumerates component tables of natural transformations F => G.
std::vector<std::vector<Id>> enumerateNatTrans(const Functor& F, const Functor& G,
                                               std::size_t cap);

// The internal hom-groupoid: objects are functors A -> B, morphisms are
// natural transformations, composed componentwise.
struct FunctorGroupoid {
  GroupoidPtr grpd;
  GroupoidPtr dom, cod;  // stable copies the stored functors point into
  std::vector<Functor> functor_of_obj;
  std::vector<std::pair<Id, std::vector<Id>>> nt_of_mor;  // (source functor, components)
};
FunctorGroupoid functorGroupoid(const Groupoid& A, const Groupoid& B,
                                std::size_t cap = 1'000'000);

// Searches for a diagonal filler h : B -> X with h∘i = f and p∘h = g, where
// the square p∘f = g∘i is assumed to commute.
std::optional<Functor> findLift(const Functor& i, const Functor& p, const Functor& f,
                                const Functor& g, std::size_t cap = 10'000'000);

// One-object-per-isomorphism-class family of groupoids with at most
// `max_objects` objects and vertex groups of order at most `max_group`;
// includes the empty groupoid. Components are connectedGroupoid(k, g).
std::vector<GroupoidPtr> smallGroupoidFamily(int max_objects, int max_group);

}  // namespace stk::grpd
