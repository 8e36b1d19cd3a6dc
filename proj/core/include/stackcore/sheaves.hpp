#pragma once
#include <map>
#include <utility>

#include "stackcore/presheaf.hpp"

namespace stk::psh {

// One plus-construction pass on a set-valued presheaf: classes at U are
// matching families over the covers of U, glued along the declared
// refinement transports. Applying it twice sheafifies.
struct PlusPsh {
  SetPsh psh;
  // per object: the first-seen (cover index, family) representing each class
  std::vector<std::vector<std::pair<int, std::vector<Id>>>> rep;
  // per object: class of every enumerated (cover index, family)
  std::vector<std::map<std::pair<int, std::vector<Id>>, Id>> cls;
  // per object: class of the trivial singleton family, indexed by element
  std::vector<std::vector<Id>> unit;
};
PlusPsh plusConstruction(const SetPsh& F, std::size_t cap = 2'000'000);

// Component tables of the induced map between plus stages.
std::vector<std::vector<Id>> plusMap(const SetPsh& F, const SetPsh& G, const PlusPsh& pf,
                                     const PlusPsh& pg, const std::vector<std::vector<Id>>& comp);

struct Sheafified {
  PlusPsh p1, p2;
  std::vector<std::vector<Id>> unit;  // F(U) -> sheafified classes

  const SetPsh& psh() const { return p2.psh; }
};
Sheafified sheafify(const SetPsh& F, std::size_t cap = 2'000'000);

// Component tables of the sheafified map induced by comp : F -> G.
std::vector<std::vector<Id>> sheafifyMap(const SetPsh& F, const SetPsh& G, const Sheafified& sf,
                                         const Sheafified& sg,
                                         const std::vector<std::vector<Id>>& comp);

bool isSetSheaf(const SetPsh& F, std::size_t cap = 2'000'000);

bool bijective(const std::vector<Id>& table, int codomain);

}  // namespace stk::psh
