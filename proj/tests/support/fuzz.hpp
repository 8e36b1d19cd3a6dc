#pragma once
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "stackcore/internal_hom.hpp"
#include "stackcore/over.hpp"
#include "stackcore/presheaf.hpp"
#include "stackcore/site.hpp"

// Deterministic generators for small slice instances. mt19937 output is
// fully specified, so seeded runs reproduce bit-for-bit on every platform;
// keep reductions to plain modulo for the same reason.
namespace testsupport {

inline std::size_t pick(std::mt19937& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline stk::grpd::Groupoid shapeGroupoid(std::size_t kind) {
  using namespace stk::grpd;
  switch (kind % 8) {
    case 0: return terminalGroupoid();
    case 1: return discreteGroupoid(2);
    case 2: return discreteGroupoid(3);
    case 3: return deloopOpposite(FinGroup::cyclic(2));
    case 4: return deloopOpposite(FinGroup::cyclic(3));
    case 5: return indiscreteGroupoid(2);
    case 6: return coproductGroupoid(terminalGroupoid(), deloopOpposite(FinGroup::cyclic(2)));
    default: return coproductGroupoid(discreteGroupoid(1), indiscreteGroupoid(2));
  }
}

// One presheaf drawn from the menu: a constant presheaf or a representable.
inline std::shared_ptr<stk::psh::Psh> randomShape(const stk::site::Site& s, std::mt19937& rng) {
  if (pick(rng, 4) == 0) {
    auto r = std::make_shared<stk::psh::Representable>(
        stk::psh::representablePsh(s, static_cast<stk::grpd::Id>(pick(rng, static_cast<std::size_t>(s.cat.objects())))));
    return std::shared_ptr<stk::psh::Psh>(r, &r->psh);
  }
  return std::make_shared<stk::psh::Psh>(stk::psh::constantPsh(s, shapeGroupoid(pick(rng, 8))));
}

struct SliceInstance {
  const stk::site::Site* s = nullptr;
  std::shared_ptr<stk::psh::Psh> K, X, Z;
  stk::psh::PshMor f, g;  // f : X -> K, g : Z -> K
};

// Draws base and totals from the shape menu and picks random morphisms into
// the base from the full enumeration; empty hom-sets yield nullopt so
// callers can redraw.
inline std::optional<SliceInstance> randomSliceInstance(const stk::site::Site& s,
                                                        std::mt19937& rng,
                                                        std::size_t cap = 200'000) {
  SliceInstance inst;
  inst.s = &s;
  inst.K = randomShape(s, rng);
  inst.X = randomShape(s, rng);
  inst.Z = randomShape(s, rng);
  auto fs = stk::psh::enumeratePshMor(*inst.X, *inst.K, cap);
  if (fs.empty()) return std::nullopt;
  auto gs = stk::psh::enumeratePshMor(*inst.Z, *inst.K, cap);
  if (gs.empty()) return std::nullopt;
  inst.f = fs[pick(rng, fs.size())];
  inst.g = gs[pick(rng, gs.size())];
  return inst;
}

}  // namespace testsupport
