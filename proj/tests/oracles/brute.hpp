#pragma once
// Brute-force reference computations, kept deliberately naive and independent
// of the library's enumeration strategies.
#include <vector>

#include "stackcore/groupoid.hpp"

namespace oracle {

using stk::grpd::FinGroup;
using stk::grpd::Groupoid;
using stk::grpd::Id;

// Counts functors A -> B by trying every object map and every morphism map.
// Exponential; use only on tiny groupoids.
inline int bruteFunctorCount(const Groupoid& A, const Groupoid& B) {
  const int na = A.objects(), ma = A.morphisms();
  const int nb = B.objects(), mb = B.morphisms();
  if (na == 0) return 1;
  if (nb == 0) return 0;
  std::vector<Id> on_obj(static_cast<size_t>(na)), on_mor(static_cast<size_t>(ma));
  int count = 0;
  std::function<void(int)> morRec = [&](int m) {
    if (m == ma) {
      stk::grpd::Functor F{&A, &B, on_obj, on_mor};
      if (F.validate().empty()) ++count;
      return;
    }
    for (Id v = 0; v < mb; ++v) {
      if (B.src(v) != on_obj[static_cast<size_t>(A.src(m))] ||
          B.dst(v) != on_obj[static_cast<size_t>(A.dst(m))])
        continue;
      on_mor[static_cast<size_t>(m)] = v;
      morRec(m + 1);
    }
  };
  std::function<void(int)> objRec = [&](int x) {
    if (x == na) {
      morRec(0);
      return;
    }
    for (Id v = 0; v < nb; ++v) {
      on_obj[static_cast<size_t>(x)] = v;
      objRec(x + 1);
    }
  };
  objRec(0);
  return count;
}

// Counts natural transformations F => G by trying every component table.
inline int bruteNatTransCount(const stk::grpd::Functor& F, const stk::grpd::Functor& G) {
  const Groupoid& A = *F.A;
  const Groupoid& B = *F.B;
  const int na = A.objects();
  std::vector<Id> comp(static_cast<size_t>(na));
  int count = 0;
  std::function<void(int)> rec = [&](int x) {
    if (x == na) {
      stk::grpd::NatTrans t{&F, &G, comp};
      if (t.validate().empty()) ++count;
      return;
    }
    for (Id v = 0; v < B.morphisms(); ++v) {
      comp[static_cast<size_t>(x)] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return count;
}

// Orbit count of normalized transition triples (g12, g23, g13) under
// g'12 = k1⁻¹ g12 k2, g'23 = k2⁻¹ g23 k3, g'13 = k1⁻¹ g13 k3, computed by
// explicit union-find over all states and all group triples.
inline int circleCocycleOrbits(const FinGroup& g) {
  const int n = g.n;
  const int states = n * n * n;
  std::vector<int> parent(static_cast<size_t>(states));
  for (int i = 0; i < states; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  };
  for (Id g12 = 0; g12 < n; ++g12)
    for (Id g23 = 0; g23 < n; ++g23)
      for (Id g13 = 0; g13 < n; ++g13) {
        int s = (g12 * n + g23) * n + g13;
        for (Id k1 = 0; k1 < n; ++k1)
          for (Id k2 = 0; k2 < n; ++k2)
            for (Id k3 = 0; k3 < n; ++k3) {
              Id a = g.times(g.inv[static_cast<size_t>(k1)], g.times(g12, k2));
              Id b = g.times(g.inv[static_cast<size_t>(k2)], g.times(g23, k3));
              Id c = g.times(g.inv[static_cast<size_t>(k1)], g.times(g13, k3));
              unite(s, (a * n + b) * n + c);
            }
      }
  int count = 0;
  for (int i = 0; i < states; ++i)
    if (find(i) == i) ++count;
  return count;
}

inline int conjugacyClassCount(const FinGroup& g) {
  std::vector<char> seen(static_cast<size_t>(g.n), 0);
  int count = 0;
  for (Id a = 0; a < g.n; ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    ++count;
    for (Id k = 0; k < g.n; ++k)
      seen[static_cast<size_t>(g.times(g.inv[static_cast<size_t>(k)], g.times(a, k)))] = 1;
  }
  return count;
}

}  // namespace oracle
