#include "stackcore/cech.hpp"

#include <map>

namespace stk::psh {

CechDiagram cechDiagram(const Psh& X, Id base, int cover_idx, std::size_t cap) {
  const Site& s = X.s();
  if (base < 0 || base >= s.cat.objects()) throw StructuralError("cech: base out of range");
  const auto& covers = s.covers_of[static_cast<size_t>(base)];
  if (cover_idx < 0 || cover_idx >= static_cast<int>(covers.size()))
    throw StructuralError("cech: cover index out of range");
  const site::Cover& c = covers[static_cast<size_t>(cover_idx)];
  int m = c.members();

  CechDiagram cd;
  cd.base = base;
  cd.cover_idx = cover_idx;
  std::vector<GroupoidPtr> f0;
  for (int i = 0; i < m; ++i) f0.push_back(X.stage[static_cast<size_t>(c.member_obj[static_cast<size_t>(i)])]);
  cd.level0 = grpd::productOfGroupoids(f0, cap);

  std::map<std::pair<int, int>, int> pair_pos;
  std::vector<GroupoidPtr> f1;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      site::PairSlot ps = s.pairSlot(c, i, j);
      if (ps.obj == kNone) continue;
      pair_pos[{i, j}] = static_cast<int>(cd.pair_slot.size());
      cd.pair_slot.push_back({i, j});
      f1.push_back(X.stage[static_cast<size_t>(ps.obj)]);
    }
  cd.level1 = grpd::productOfGroupoids(f1, cap);

  std::vector<GroupoidPtr> f2;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) {
        site::TripleSlot ts = s.tripleSlot(c, i, j, k);
        if (ts.obj == kNone) continue;
        cd.triple_slot.push_back({i, j, k});
        f2.push_back(X.stage[static_cast<size_t>(ts.obj)]);
      }
  cd.level2 = grpd::productOfGroupoids(f2, cap);

  cd.d.g0 = cd.level0.grpd;
  cd.d.g1 = cd.level1.grpd;
  cd.d.g2 = cd.level2.grpd;

  {
    std::vector<int> g_d0, g_d1;
    std::vector<const Functor*> s_d0, s_d1;
    for (const auto& [i, j] : cd.pair_slot) {
      site::PairSlot ps = s.pairSlot(c, i, j);
      g_d0.push_back(j);
      s_d0.push_back(&X.res(ps.to_j));
      g_d1.push_back(i);
      s_d1.push_back(&X.res(ps.to_i));
    }
    cd.d.d0_01 = grpd::gatherProductFunctor(cd.level0, cd.level1, g_d0, s_d0);
    cd.d.d1_01 = grpd::gatherProductFunctor(cd.level0, cd.level1, g_d1, s_d1);
  }
  {
    std::vector<int> g_s0;
    std::vector<const Functor*> s_s0;
    for (int i = 0; i < m; ++i) {
      g_s0.push_back(pair_pos.at({i, i}));
      s_s0.push_back(&X.res(s.cat.identity(c.member_obj[static_cast<size_t>(i)])));
    }
    cd.d.s0_10 = grpd::gatherProductFunctor(cd.level1, cd.level0, g_s0, s_s0);
  }
  {
    std::vector<int> g_d0, g_d1, g_d2;
    std::vector<const Functor*> s_d0, s_d1, s_d2;
    for (const auto& [i, j, k] : cd.triple_slot) {
      site::TripleSlot ts = s.tripleSlot(c, i, j, k);
      g_d0.push_back(pair_pos.at({j, k}));
      s_d0.push_back(&X.res(ts.to_jk));
      g_d1.push_back(pair_pos.at({i, k}));
      s_d1.push_back(&X.res(ts.to_ik));
      g_d2.push_back(pair_pos.at({i, j}));
      s_d2.push_back(&X.res(ts.to_ij));
    }
    cd.d.d0_12 = grpd::gatherProductFunctor(cd.level1, cd.level2, g_d0, s_d0);
    cd.d.d1_12 = grpd::gatherProductFunctor(cd.level1, cd.level2, g_d1, s_d1);
    cd.d.d2_12 = grpd::gatherProductFunctor(cd.level1, cd.level2, g_d2, s_d2);
  }
  {
    std::vector<const Functor*> legs;
    for (int i = 0; i < m; ++i) legs.push_back(&X.res(c.member_mor[static_cast<size_t>(i)]));
    cd.aug = grpd::tupleFunctor(X.at(base), cd.level0, legs);
  }
  if (auto err = cd.d.validate(); !err.empty()) throw StructuralError("cech: " + err);
  return cd;
}

CechMap cechMap(const PshMor& f, const CechDiagram& dx, const CechDiagram& dy) {
  if (dx.base != dy.base || dx.cover_idx != dy.cover_idx || dx.pair_slot != dy.pair_slot ||
      dx.triple_slot != dy.triple_slot)
    throw StructuralError("cech map: diagrams come from different covers");
  const Site& s = f.X->s();
  const site::Cover& c = s.covers_of[static_cast<size_t>(dx.base)][static_cast<size_t>(dx.cover_idx)];
  auto level = [&](const grpd::ProductGroupoid& a, const grpd::ProductGroupoid& b,
                   const std::vector<Id>& slot_obj) {
    std::vector<int> gather(static_cast<size_t>(a.slots()));
    std::vector<const Functor*> slots(static_cast<size_t>(a.slots()));
    for (int t = 0; t < a.slots(); ++t) {
      gather[static_cast<size_t>(t)] = t;
      slots[static_cast<size_t>(t)] = &f.comp[static_cast<size_t>(slot_obj[static_cast<size_t>(t)])];
    }
    return grpd::gatherProductFunctor(a, b, gather, slots);
  };
  std::vector<Id> obj0 = c.member_obj;
  std::vector<Id> obj1, obj2;
  for (const auto& [i, j] : dx.pair_slot) obj1.push_back(s.pairSlot(c, i, j).obj);
  for (const auto& [i, j, k] : dx.triple_slot) obj2.push_back(s.tripleSlot(c, i, j, k).obj);
  CechMap m;
  m.l0 = level(dx.level0, dy.level0, obj0);
  m.l1 = level(dx.level1, dy.level1, obj1);
  m.l2 = level(dx.level2, dy.level2, obj2);
  return m;
}

grpd::Functor inducedDescentFunctor(const grpd::Descent& hx, const grpd::Descent& hy,
                                    const CechMap& m) {
  Functor f;
  f.A = hx.grpd.get();
  f.B = hy.grpd.get();
  for (const auto& [x, h] : hx.obj_data) {
    Id img = hy.objIndex(m.l0.obj(x), m.l1.mor(h));
    if (img == kNone) throw StructuralError("descent map: image object is not descent data");
    f.on_obj.push_back(img);
  }
  for (const auto& [src_obj, g] : hx.mor_data) {
    Id img = hy.morIndex(f.on_obj[static_cast<size_t>(src_obj)], m.l0.mor(g));
    if (img == kNone) throw StructuralError("descent map: image morphism violates the cocycle condition");
    f.on_mor.push_back(img);
  }
  if (auto err = f.validate(); !err.empty()) throw StructuralError("descent map: " + err);
  return f;
}

}  // namespace stk::psh
