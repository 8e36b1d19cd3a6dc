#pragma once
// Hand-rolled cosimplicial diagram of the classifying presheaf over a circle
// covered by three arcs with empty triple overlap. Built directly from index
// gathers on tuple groups, independent of the site/presheaf machinery, so it
// can serve as a cross-check for the generic construction.
#include <memory>
#include <vector>

#include "stackcore/limits.hpp"

namespace oracle {

using stk::grpd::CosimplicialGroupoid2;
using stk::grpd::FinGroup;
using stk::grpd::Functor;
using stk::grpd::Groupoid;
using stk::grpd::GroupoidPtr;
using stk::grpd::Id;
using stk::grpd::Mor;

// One-object groupoid on k-tuples of group elements, composed slot-wise with
// the opposite product g'∘g = g·g'. Tuples are encoded base-n, leftmost slot
// most significant. Avoids materializing tuple multiplication tables.
inline Groupoid tupleDeloop(const FinGroup& g, int k) {
  const int n = g.n;
  Id count = 1;
  for (int i = 0; i < k; ++i) count *= n;
  std::vector<Mor> mors(static_cast<size_t>(count), Mor{0, 0});
  std::vector<Id> inv(static_cast<size_t>(count));
  auto grp = std::make_shared<FinGroup>(g);
  for (Id m = 0; m < count; ++m) {
    Id rest = m, out = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      out += grp->inv[static_cast<size_t>(rest % n)] * place;
      place *= n;
      rest /= n;
    }
    inv[static_cast<size_t>(m)] = out;
  }
  return Groupoid::make(
      1, std::move(mors), {0}, std::move(inv),
      [grp, n, k](Id m2, Id m1) {
        Id out = 0, place = 1;
        for (int i = 0; i < k; ++i) {
          out += grp->times(m1 % n, m2 % n) * place;
          place *= n;
          m1 /= n;
          m2 /= n;
        }
        return out;
      });
}

// Morphisms of a one-object tuple groupoid are base-n digit strings with the
// leftmost factor most significant; gather[i] names the source digit feeding
// output slot i.
inline Functor gatherFunctor(const Groupoid& a, const Groupoid& b, int n,
                             const std::vector<int>& gather, int in_len) {
  Functor f;
  f.A = &a;
  f.B = &b;
  f.on_obj = {0};
  for (Id m = 0; m < a.morphisms(); ++m) {
    std::vector<Id> digit(static_cast<size_t>(in_len));
    Id rest = m;
    for (int i = in_len - 1; i >= 0; --i) {
      digit[static_cast<size_t>(i)] = rest % n;
      rest /= n;
    }
    Id out = 0;
    for (int slot : gather) out = out * n + digit[static_cast<size_t>(slot)];
    f.on_mor.push_back(out);
  }
  return f;
}

struct CircleDiagram {
  CosimplicialGroupoid2 d;
  GroupoidPtr bg;  // one stage of the classifying presheaf
  Functor aug;     // diagonal augmentation bg -> level 0
};

// Level 0 indexes the arcs 1,2,3; level 1 the multisets
// 11,12,13,22,23,33; level 2 the multisets over {1,2,3} minus the empty
// 123 overlap: 111,112,113,122,133,222,223,233,333.
inline CircleDiagram circleDiagram(const FinGroup& g) {
  const int n = g.n;
  CircleDiagram out;
  CosimplicialGroupoid2& d = out.d;
  d.g0 = std::make_shared<Groupoid>(tupleDeloop(g, 3));
  d.g1 = std::make_shared<Groupoid>(tupleDeloop(g, 6));
  d.g2 = std::make_shared<Groupoid>(tupleDeloop(g, 9));
  // pair slots: 11 12 13 22 23 33  (digit = arc index - 1)
  d.d0_01 = gatherFunctor(*d.g0, *d.g1, n, {0, 1, 2, 1, 2, 2}, 3);  // second member
  d.d1_01 = gatherFunctor(*d.g0, *d.g1, n, {0, 0, 0, 1, 1, 2}, 3);  // first member
  d.s0_10 = gatherFunctor(*d.g1, *d.g0, n, {0, 3, 5}, 6);           // diagonal slots
  // triple slots: 111 112 113 122 133 222 223 233 333
  // d0 drops the first member, d1 the middle, d2 the last.
  d.d0_12 = gatherFunctor(*d.g1, *d.g2, n, {0, 1, 2, 3, 5, 3, 4, 5, 5}, 6);
  d.d1_12 = gatherFunctor(*d.g1, *d.g2, n, {0, 1, 2, 1, 2, 3, 4, 4, 5}, 6);
  d.d2_12 = gatherFunctor(*d.g1, *d.g2, n, {0, 0, 0, 1, 2, 3, 3, 4, 5}, 6);
  out.bg = std::make_shared<Groupoid>(tupleDeloop(g, 1));
  out.aug = gatherFunctor(*out.bg, *d.g0, n, {0, 0, 0}, 1);
  return out;
}

}  // namespace oracle
