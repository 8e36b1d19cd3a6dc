#pragma once
#include "stackcore/cech.hpp"
#include "stackcore/sheaves.hpp"

namespace stk::psh {

// Identifies one declared cover of one site object.
struct CoverRef {
  Id obj = grpd::kNone;
  int cover = -1;
};

struct StackReport {
  bool ok = true;
  CoverRef witness;   // first failing cover when !ok
  std::string detail;
  explicit operator bool() const { return ok; }
};

// True iff for every declared cover the comparison functor from X(U) into
// the descent groupoid of the cover's cosimplicial diagram is a weak
// equivalence.
StackReport isStack(const Psh& X, std::size_t cap = 50'000'000);

struct StageReport {
  bool ok = true;
  Id witness_obj = grpd::kNone;  // first failing site object when !ok
  std::string detail;
  explicit operator bool() const { return ok; }
};

// Stage-wise fibration / weak equivalence of the groupoid model structure.
StageReport isGlobalFibration(const PshMor& f);
StageReport isGlobalWeq(const PshMor& f);

struct LocalReport {
  bool ok = true;
  Id witness_obj = grpd::kNone;
  CoverRef witness_cover;  // set when a cover-level test fails
  std::string detail;
  explicit operator bool() const { return ok; }
};

// Local fibration: stage-wise fibration, and for every declared cover of U
// the canonical functor from X(U) to the homotopy fiber product of
// Y(U) -> holim Y(U_*) <- holim X(U_*) is a weak equivalence.
LocalReport isLocalFibration(const PshMor& f, std::size_t cap = 50'000'000);

// Local weak equivalence. When both endpoints satisfy the stack condition
// this is equivalent to a stage-wise weak equivalence; otherwise it is
// decided on sheaves of connected components and automorphism groups: the
// sheafification of pi0(f) must be bijective on every site object, and for
// every stage object x the sheafified map of automorphism presheaves on the
// slice site must be bijective.
LocalReport isLocalWeq(const PshMor& f, std::size_t cap = 50'000'000);

// Stage-wise homotopy fiber product of f1 : X -> Z <- Y : f2, assembled
// back into a presheaf with the induced restrictions.
struct HofibPsh {
  std::shared_ptr<Psh> psh;
  std::vector<grpd::HomotopyFiberProduct> stage;  // one per site object
  PshMor proj1, proj2;                            // to X and to Y
};
HofibPsh hofibPresheaf(const PshMor& f1, const PshMor& f2);

}  // namespace stk::psh
