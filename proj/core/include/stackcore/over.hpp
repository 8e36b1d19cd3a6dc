#pragma once
#include <memory>
#include <string>
#include <vector>

#include "stackcore/presheaf.hpp"
#include "stackcore/stackcheck.hpp"

namespace stk::psh {

// A presheaf morphism f : X -> K regarded as an object of the slice over K.
struct OverObject {
  const Psh* total = nullptr;
  const Psh* base = nullptr;
  PshMor map;

  std::string validate() const;
};
OverObject overObject(const PshMor& f);

// Full sub-presheaf of an ambient presheaf on per-stage object subsets.
// Stages are full subgroupoids and restrictions are induced, so the subsets
// must be closed under the ambient restriction functors.
struct SubPsh {
  std::shared_ptr<Psh> psh;
  const Psh* ambient = nullptr;
  std::vector<std::vector<Id>> obj_of_sub;  // per stage: sub -> ambient object
  std::vector<std::vector<Id>> sub_of_obj;  // per stage: ambient -> sub or kNone
  std::vector<std::vector<Id>> sub_of_mor;  // per stage: ambient -> sub or kNone
  PshMor incl;

  OverObject over() const;  // the inclusion as a slice object
};
SubPsh fullSubPsh(const Psh& K, std::vector<std::vector<Id>> objs);

// The morphism between sub-presheaves induced by g between their ambient
// presheaves; every g-image of a kept object must again be kept.
PshMor inducedSubMor(const SubPsh& a, const SubPsh& b, const PshMor& g);

// Factorization f = incl . to_im through a full sub-presheaf of the base.
struct ImageFactor {
  SubPsh im;
  PshMor to_im;
};

// Stage objects are the literal f-images; morphisms all base morphisms
// between them.
ImageFactor fullImage(const OverObject& o);

// Stage objects are the base objects that restrict into the essential image
// of f along some declared cover (the trivial cover always counts); the
// subsets are then saturated under restriction and isomorphism so that they
// assemble into a presheaf on any finite site.
ImageFactor oneImage(const OverObject& o);

struct LocalityReport {
  bool ok = false;
  std::string detail;
  explicit operator bool() const { return ok; }
};
// Fibrant in the (-1)-truncated slice: a local fibration that is stage-wise
// fully faithful.
LocalityReport isSMinusOneLocal(const OverObject& o, std::size_t cap = 50'000'000);

// Epimorphism of sheafified path components; certifies an equivalence in
// the (-1)-truncated slice. A false return is inconclusive.
bool pi0Epi(const PshMor& f, std::size_t cap = 2'000'000);

// Local weak equivalence check of the canonical morphism from the full
// image to the one-image.
LocalReport imVsOneImageWeq(const OverObject& o, std::size_t cap = 50'000'000);

// Base change along a local weak equivalence g out of the base: checks the
// induced Im(f) -> Im(g.f) and Im1(f) -> Im1(g.f).
struct BaseChangeReport {
  bool ok = false;
  LocalReport im, im1;
  explicit operator bool() const { return ok; }
};
BaseChangeReport baseChangeWeq(const OverObject& o, const PshMor& g,
                               std::size_t cap = 50'000'000);

// The mapping groupoid of the slice: morphisms of totals strictly over the
// base, homotopies whose whisker into the base is the identity.
struct SliceMapping {
  struct Homotopy {
    Id src = kNone, dst = kNone;
    std::vector<std::vector<Id>> comp;  // per stage, per total object
  };
  const Psh* target = nullptr;
  std::vector<PshMor> objs;
  std::vector<Homotopy> mors;

  bool emptyOrPoint() const;
};
SliceMapping sliceMapping(const OverObject& a, const OverObject& b,
                          std::size_t cap = 1'000'000);

}  // namespace stk::psh
