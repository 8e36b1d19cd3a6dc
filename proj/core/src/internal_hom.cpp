#include "stackcore/internal_hom.hpp"

#include <map>

#include "stackcore/model.hpp"
#include "stackcore/products.hpp"

namespace stk::psh {

using grpd::EnumerationOverflow;
using grpd::Functor;
using grpd::Groupoid;
using grpd::Id;
using grpd::kNone;
using grpd::Mor;
using grpd::StructuralError;

namespace {

// Site morphisms with both endpoints below the backtracking frontier.
std::vector<std::vector<Id>> morsFixedAt(const site::Site& s) {
  std::vector<std::vector<Id>> at(static_cast<size_t>(s.cat.objects()));
  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id hi = std::max(s.cat.src(m), s.cat.dst(m));
    at[static_cast<size_t>(hi)].push_back(m);
  }
  return at;
}

}  // namespace

std::vector<PshMor> enumeratePshMor(const Psh& X, const Psh& Y, std::size_t cap) {
  const site::Site& s = X.s();
  if (Y.on != &s) throw StructuralError("enumeratePshMor: sites differ");
  int n = s.cat.objects();
  std::vector<std::vector<Functor>> pool(static_cast<size_t>(n));
  for (Id u = 0; u < n; ++u)
    pool[static_cast<size_t>(u)] = grpd::enumerateFunctors(X.at(u), Y.at(u), cap);
  std::vector<std::vector<Id>> check_at = morsFixedAt(s);

  std::vector<PshMor> out;
  std::vector<const Functor*> chosen(static_cast<size_t>(n), nullptr);
  std::size_t nodes = 0;
  auto natural = [&](Id m) {
    const Functor& cu = *chosen[static_cast<size_t>(s.cat.dst(m))];
    const Functor& cv = *chosen[static_cast<size_t>(s.cat.src(m))];
    return composeFunctors(cv, X.res(m)) == composeFunctors(Y.res(m), cu);
  };
  auto rec = [&](auto&& self, Id u) -> void {
    if (u == n) {
      PshMor f;
      f.X = &X;
      f.Y = &Y;
      for (Id v = 0; v < n; ++v) f.comp.push_back(*chosen[static_cast<size_t>(v)]);
      out.push_back(std::move(f));
      return;
    }
    for (const Functor& cand : pool[static_cast<size_t>(u)]) {
      if (++nodes > cap) throw EnumerationOverflow("enumeratePshMor: cap exceeded");
      chosen[static_cast<size_t>(u)] = &cand;
      bool ok = true;
      for (Id m : check_at[static_cast<size_t>(u)])
        if (!natural(m)) {
          ok = false;
          break;
        }
      if (ok) self(self, u + 1);
    }
    chosen[static_cast<size_t>(u)] = nullptr;
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<std::vector<Id>>> enumerateModifications(const PshMor& f,
                                                                 const PshMor& g,
                                                                 std::size_t cap) {
  if (f.X != g.X || f.Y != g.Y) throw StructuralError("enumerateModifications: endpoints differ");
  const Psh& X = *f.X;
  const Psh& Y = *f.Y;
  const site::Site& s = X.s();
  int n = s.cat.objects();
  std::vector<std::vector<std::vector<Id>>> pool(static_cast<size_t>(n));
  for (Id u = 0; u < n; ++u)
    pool[static_cast<size_t>(u)] =
        grpd::enumerateNatTrans(f.comp[static_cast<size_t>(u)], g.comp[static_cast<size_t>(u)], cap);
  std::vector<std::vector<Id>> check_at = morsFixedAt(s);

  std::vector<std::vector<std::vector<Id>>> out;
  std::vector<const std::vector<Id>*> chosen(static_cast<size_t>(n), nullptr);
  std::size_t nodes = 0;
  auto compatible = [&](Id m) {
    Id u = s.cat.dst(m), v = s.cat.src(m);
    const std::vector<Id>& eu = *chosen[static_cast<size_t>(u)];
    const std::vector<Id>& ev = *chosen[static_cast<size_t>(v)];
    const Functor& rx = X.res(m);
    const Functor& ry = Y.res(m);
    for (Id x = 0; x < X.at(u).objects(); ++x)
      if (ev[static_cast<size_t>(rx.obj(x))] != ry.mor(eu[static_cast<size_t>(x)])) return false;
    return true;
  };
  auto rec = [&](auto&& self, Id u) -> void {
    if (u == n) {
      std::vector<std::vector<Id>> eta;
      for (Id v = 0; v < n; ++v) eta.push_back(*chosen[static_cast<size_t>(v)]);
      out.push_back(std::move(eta));
      return;
    }
    for (const auto& cand : pool[static_cast<size_t>(u)]) {
      if (++nodes > cap) throw EnumerationOverflow("enumerateModifications: cap exceeded");
      chosen[static_cast<size_t>(u)] = &cand;
      bool ok = true;
      for (Id m : check_at[static_cast<size_t>(u)])
        if (!compatible(m)) {
          ok = false;
          break;
        }
      if (ok) self(self, u + 1);
    }
    chosen[static_cast<size_t>(u)] = nullptr;
  };
  rec(rec, 0);
  return out;
}

namespace {

std::vector<Id> morKey(const PshMor& f) {
  std::vector<Id> key;
  for (const Functor& c : f.comp) {
    key.insert(key.end(), c.on_obj.begin(), c.on_obj.end());
    key.insert(key.end(), c.on_mor.begin(), c.on_mor.end());
  }
  return key;
}

std::vector<Id> modKey(Id src, Id dst, const std::vector<std::vector<Id>>& comp) {
  std::vector<Id> key{src, dst};
  for (const auto& c : comp) key.insert(key.end(), c.begin(), c.end());
  return key;
}

}  // namespace

Id MappingGroupoid::objIndex(const PshMor& f) const {
  auto it = obj_index->find(morKey(f));
  return it == obj_index->end() ? kNone : it->second;
}

Id MappingGroupoid::morIndex(Id src_obj, Id dst_obj,
                             const std::vector<std::vector<Id>>& comp) const {
  auto it = mor_index->find(modKey(src_obj, dst_obj, comp));
  return it == mor_index->end() ? kNone : it->second;
}

MappingGroupoid mappingGroupoid(const Psh& X, const Psh& Y, std::size_t cap) {
  MappingGroupoid M;
  M.obj_index = std::make_shared<std::map<std::vector<Id>, Id>>();
  M.mor_index = std::make_shared<std::map<std::vector<Id>, Id>>();
  M.objs = enumeratePshMor(X, Y, cap);
  int n = static_cast<int>(M.objs.size());
  for (Id i = 0; i < n; ++i) (*M.obj_index)[morKey(M.objs[static_cast<size_t>(i)])] = i;

  std::vector<Mor> mors;
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j)
      for (auto& eta : enumerateModifications(M.objs[static_cast<size_t>(i)],
                                              M.objs[static_cast<size_t>(j)], cap)) {
        Id id = static_cast<Id>(M.mor_ends.size());
        (*M.mor_index)[modKey(i, j, eta)] = id;
        M.mor_ends.emplace_back(i, j);
        M.mor_comp.push_back(std::move(eta));
        mors.push_back({i, j});
        if (M.mor_ends.size() > cap)
          throw EnumerationOverflow("mappingGroupoid: morphism cap exceeded");
      }

  const site::Site& s = X.s();
  std::vector<Id> idents(static_cast<size_t>(n));
  for (Id i = 0; i < n; ++i) {
    std::vector<std::vector<Id>> eta;
    for (Id u = 0; u < s.cat.objects(); ++u) {
      std::vector<Id> c;
      const Functor& fu = M.objs[static_cast<size_t>(i)].comp[static_cast<size_t>(u)];
      for (Id x = 0; x < X.at(u).objects(); ++x) c.push_back(Y.at(u).identity(fu.obj(x)));
      eta.push_back(std::move(c));
    }
    idents[static_cast<size_t>(i)] = M.morIndex(i, i, eta);
    if (idents[static_cast<size_t>(i)] == kNone)
      throw StructuralError("mappingGroupoid: identity homotopy missing");
  }
  std::vector<Id> invs(M.mor_ends.size());
  for (size_t m = 0; m < M.mor_ends.size(); ++m) {
    std::vector<std::vector<Id>> eta;
    for (Id u = 0; u < s.cat.objects(); ++u) {
      std::vector<Id> c;
      for (Id e : M.mor_comp[m][static_cast<size_t>(u)]) c.push_back(Y.at(u).inverse(e));
      eta.push_back(std::move(c));
    }
    invs[m] = M.morIndex(M.mor_ends[m].second, M.mor_ends[m].first, eta);
    if (invs[m] == kNone) throw StructuralError("mappingGroupoid: inverse homotopy missing");
  }

  struct CompData {
    std::vector<std::pair<Id, Id>> ends;
    std::vector<std::vector<std::vector<Id>>> comp;
    std::shared_ptr<std::map<std::vector<Id>, Id>> index;
    std::vector<grpd::GroupoidPtr> ystage;
  };
  auto data = std::make_shared<CompData>();
  data->ends = M.mor_ends;
  data->comp = M.mor_comp;
  data->index = M.mor_index;
  data->ystage = Y.stage;
  auto comp_fn = [data](Id g, Id f) -> Id {
    const auto& cf = data->comp[static_cast<size_t>(f)];
    const auto& cg = data->comp[static_cast<size_t>(g)];
    std::vector<std::vector<Id>> eta(cf.size());
    for (size_t u = 0; u < cf.size(); ++u) {
      eta[u].reserve(cf[u].size());
      for (size_t x = 0; x < cf[u].size(); ++x)
        eta[u].push_back(data->ystage[u]->compose(cg[u][x], cf[u][x]));
    }
    auto it = data->index->find(
        modKey(data->ends[static_cast<size_t>(f)].first, data->ends[static_cast<size_t>(g)].second, eta));
    if (it == data->index->end())
      throw StructuralError("mappingGroupoid: composite homotopy missing");
    return it->second;
  };

  std::vector<std::string> obj_labels, mor_labels;
  for (Id i = 0; i < n; ++i) obj_labels.push_back("f" + std::to_string(i));
  for (size_t m = 0; m < mors.size(); ++m) mor_labels.push_back("h" + std::to_string(m));
  M.grpd = std::make_shared<Groupoid>(Groupoid::make(
      n, std::move(mors), std::move(idents), std::move(invs), comp_fn,
      std::move(obj_labels), std::move(mor_labels)));
  return M;
}

InternalHom internalHom(const Psh& X, const Psh& Y, std::size_t cap) {
  const site::Site& s = X.s();
  if (Y.on != &s) throw StructuralError("internalHom: sites differ");
  int n = s.cat.objects();

  InternalHom H;
  H.psh = std::make_shared<Psh>();
  H.psh->on = &s;
  H.stage.reserve(static_cast<size_t>(n));
  for (Id u = 0; u < n; ++u) {
    HomStage st;
    st.rep = std::make_shared<Representable>(representablePsh(s, u));
    st.dom = std::make_shared<ProductPsh>(productPsh(st.rep->psh, X, cap));
    st.map = mappingGroupoid(st.dom->psh, Y, cap);
    H.psh->stage.push_back(st.map.grpd);
    H.stage.push_back(std::move(st));
  }

  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id u = s.cat.dst(m);
    Id v = s.cat.src(m);
    const HomStage& SU = H.stage[static_cast<size_t>(u)];
    const HomStage& SV = H.stage[static_cast<size_t>(v)];

    // Stage-wise transport dom(V) -> dom(U): pre-compose the representable
    // coordinate with m, keep the X coordinate.
    std::vector<std::vector<Id>> tab_obj(static_cast<size_t>(n)), tab_mor(static_cast<size_t>(n));
    for (Id w = 0; w < n; ++w) {
      const grpd::ProductGroupoid& PV = SV.dom->prod[static_cast<size_t>(w)];
      const grpd::ProductGroupoid& PU = SU.dom->prod[static_cast<size_t>(w)];
      std::vector<Id> hom_v = s.cat.hom(w, v);
      const Groupoid& g = *PV.grpd;
      for (Id o = 0; o < g.objects(); ++o) {
        Id nu = hom_v[static_cast<size_t>(PV.objSlot(o, 0))];
        Id target = SU.rep->obj_of_mor[static_cast<size_t>(s.cat.compose(m, nu))];
        tab_obj[static_cast<size_t>(w)].push_back(PU.encodeObj({target, PV.objSlot(o, 1)}));
      }
      for (Id mm = 0; mm < g.morphisms(); ++mm) {
        Id nu = hom_v[static_cast<size_t>(PV.morSlot(mm, 0))];
        Id target = SU.rep->obj_of_mor[static_cast<size_t>(s.cat.compose(m, nu))];
        tab_mor[static_cast<size_t>(w)].push_back(PU.encodeMor({target, PV.morSlot(mm, 1)}));
      }
    }

    Functor r;
    r.A = SU.map.grpd.get();
    r.B = SV.map.grpd.get();
    for (const PshMor& phi : SU.map.objs) {
      PshMor t;
      t.X = &SV.dom->psh;
      t.Y = phi.Y;
      for (Id w = 0; w < n; ++w) {
        Functor c;
        c.A = SV.dom->psh.stage[static_cast<size_t>(w)].get();
        c.B = phi.comp[static_cast<size_t>(w)].B;
        for (Id o : tab_obj[static_cast<size_t>(w)])
          c.on_obj.push_back(phi.comp[static_cast<size_t>(w)].obj(o));
        for (Id mm : tab_mor[static_cast<size_t>(w)])
          c.on_mor.push_back(phi.comp[static_cast<size_t>(w)].mor(mm));
        t.comp.push_back(std::move(c));
      }
      Id j = SV.map.objIndex(t);
      if (j == kNone) throw StructuralError("internalHom: restricted morphism missing");
      r.on_obj.push_back(j);
    }
    for (size_t mm = 0; mm < SU.map.mor_ends.size(); ++mm) {
      std::vector<std::vector<Id>> eta(static_cast<size_t>(n));
      for (Id w = 0; w < n; ++w)
        for (Id o : tab_obj[static_cast<size_t>(w)])
          eta[static_cast<size_t>(w)].push_back(SU.map.mor_comp[mm][static_cast<size_t>(w)][static_cast<size_t>(o)]);
      Id j = SV.map.morIndex(r.on_obj[static_cast<size_t>(SU.map.mor_ends[mm].first)],
                             r.on_obj[static_cast<size_t>(SU.map.mor_ends[mm].second)], eta);
      if (j == kNone) throw StructuralError("internalHom: restricted homotopy missing");
      r.on_mor.push_back(j);
    }
    H.psh->restriction.push_back(std::move(r));
  }

  std::string err = H.psh->validate();
  if (!err.empty()) throw StructuralError("internalHom: " + err);
  return H;
}

CechReplacement cechReplacement(const Psh& X, const std::vector<CechChart>& charts) {
  const site::Site& s = X.s();
  for (const CechChart& ch : charts) {
    if (ch.obj < 0 || ch.obj >= s.cat.objects())
      throw StructuralError("cechReplacement: chart object out of range");
    if (ch.point < 0 || ch.point >= X.at(ch.obj).objects())
      throw StructuralError("cechReplacement: chart point out of range");
  }
  int n = s.cat.objects();

  CechReplacement c;
  c.psh = std::make_shared<Psh>();
  c.psh->on = &s;
  c.charts = charts;
  c.objs.resize(static_cast<size_t>(n));
  std::vector<std::vector<Id>> image(static_cast<size_t>(n));
  std::vector<std::map<std::pair<int, Id>, Id>> index(static_cast<size_t>(n));
  std::vector<std::shared_ptr<std::map<std::pair<Id, Id>, Id>>> mor_of(static_cast<size_t>(n));
  std::vector<std::vector<std::pair<Id, Id>>> mor_data(static_cast<size_t>(n));

  for (Id u = 0; u < n; ++u) {
    auto& objs = c.objs[static_cast<size_t>(u)];
    for (int a = 0; a < static_cast<int>(charts.size()); ++a)
      for (Id nu : s.cat.hom(u, charts[static_cast<size_t>(a)].obj)) {
        index[static_cast<size_t>(u)][{a, nu}] = static_cast<Id>(objs.size());
        objs.emplace_back(a, nu);
        image[static_cast<size_t>(u)].push_back(
            X.res(nu).obj(charts[static_cast<size_t>(a)].point));
      }
    int cnt = static_cast<int>(objs.size());
    std::vector<Mor> mors;
    std::vector<Id> idents(static_cast<size_t>(cnt), kNone);
    std::vector<Id> invs;
    mor_of[static_cast<size_t>(u)] = std::make_shared<std::map<std::pair<Id, Id>, Id>>();
    auto& mo = *mor_of[static_cast<size_t>(u)];
    for (Id i = 0; i < cnt; ++i)
      for (Id j = 0; j < cnt; ++j)
        if (image[static_cast<size_t>(u)][static_cast<size_t>(i)] ==
            image[static_cast<size_t>(u)][static_cast<size_t>(j)]) {
          Id id = static_cast<Id>(mors.size());
          mo[{i, j}] = id;
          mors.push_back({i, j});
          mor_data[static_cast<size_t>(u)].emplace_back(i, j);
          if (i == j) idents[static_cast<size_t>(i)] = id;
        }
    for (const Mor& mr : mors) invs.push_back(mo.at({mr.dst, mr.src}));
    auto mof = mor_of[static_cast<size_t>(u)];
    auto md = std::make_shared<std::vector<std::pair<Id, Id>>>(mor_data[static_cast<size_t>(u)]);
    auto comp_fn = [mof, md](Id g, Id f) -> Id {
      return mof->at({(*md)[static_cast<size_t>(f)].first, (*md)[static_cast<size_t>(g)].second});
    };
    std::vector<std::string> labels;
    for (const auto& [a, nu] : objs)
      labels.push_back("(" + std::to_string(a) + "," + s.cat.morLabel(nu) + ")");
    c.psh->stage.push_back(std::make_shared<Groupoid>(Groupoid::make(
        cnt, std::move(mors), std::move(idents), std::move(invs), comp_fn, std::move(labels))));
  }

  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id u = s.cat.dst(m);
    Id v = s.cat.src(m);
    Functor r;
    r.A = c.psh->stage[static_cast<size_t>(u)].get();
    r.B = c.psh->stage[static_cast<size_t>(v)].get();
    for (const auto& [a, nu] : c.objs[static_cast<size_t>(u)])
      r.on_obj.push_back(index[static_cast<size_t>(v)].at({a, s.cat.compose(nu, m)}));
    for (const auto& [i, j] : mor_data[static_cast<size_t>(u)])
      r.on_mor.push_back(mor_of[static_cast<size_t>(v)]->at(
          {r.on_obj[static_cast<size_t>(i)], r.on_obj[static_cast<size_t>(j)]}));
    c.psh->restriction.push_back(std::move(r));
  }
  std::string err = c.psh->validate();
  if (!err.empty()) throw StructuralError("cechReplacement: " + err);

  c.q.X = c.psh.get();
  c.q.Y = &X;
  for (Id u = 0; u < n; ++u) {
    Functor f;
    f.A = c.psh->stage[static_cast<size_t>(u)].get();
    f.B = X.stage[static_cast<size_t>(u)].get();
    f.on_obj = image[static_cast<size_t>(u)];
    for (const auto& [i, j] : mor_data[static_cast<size_t>(u)])
      f.on_mor.push_back(X.at(u).identity(image[static_cast<size_t>(u)][static_cast<size_t>(i)]));
    c.q.comp.push_back(std::move(f));
  }
  err = c.q.validate();
  if (!err.empty()) throw StructuralError("cechReplacement projection: " + err);
  return c;
}

PshMor cechLift(const CechReplacement& c, const PshMor& p, const PshMor& psi) {
  if (psi.X != c.psh.get()) throw StructuralError("cechLift: psi does not start at the replacement");
  if (psi.Y != p.Y) throw StructuralError("cechLift: square targets differ");
  const Psh& E = *p.X;
  const Psh& B = *p.Y;
  const site::Site& s = E.s();

  // Strict preimage over psi(alpha, id), via iso lifting when needed.
  auto preimage = [&](Id v, Id b) -> Id {
    const Functor& pv = p.comp[static_cast<size_t>(v)];
    const Groupoid& ev = E.at(v);
    const Groupoid& bv = B.at(v);
    for (Id e = 0; e < ev.objects(); ++e)
      if (pv.obj(e) == b) return e;
    for (Id e = 0; e < ev.objects(); ++e)
      for (Id k : bv.hom(pv.obj(e), b))
        for (Id g : ev.out(e))
          if (pv.mor(g) == k) return ev.dst(g);
    throw StructuralError("cechLift: no preimage at stage " + s.cat.objLabel(v) +
                          "; p is not an acyclic fibration there");
  };

  std::vector<Id> chart_lift;  // e_alpha per chart
  for (int a = 0; a < static_cast<int>(c.charts.size()); ++a) {
    Id va = c.charts[static_cast<size_t>(a)].obj;
    Id idx = kNone;
    const auto& objs = c.objs[static_cast<size_t>(va)];
    for (size_t i = 0; i < objs.size(); ++i)
      if (objs[i].first == a && objs[i].second == s.cat.identity(va)) idx = static_cast<Id>(i);
    if (idx == kNone) throw StructuralError("cechLift: chart identity object missing");
    chart_lift.push_back(preimage(va, psi.comp[static_cast<size_t>(va)].obj(idx)));
  }

  PshMor L;
  L.X = c.psh.get();
  L.Y = &E;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    const Groupoid& cu = *c.psh->stage[static_cast<size_t>(u)];
    const Functor& pu = p.comp[static_cast<size_t>(u)];
    Functor f;
    f.A = &cu;
    f.B = E.stage[static_cast<size_t>(u)].get();
    for (const auto& [a, nu] : c.objs[static_cast<size_t>(u)]) {
      Id e = E.res(nu).obj(chart_lift[static_cast<size_t>(a)]);
      if (pu.obj(e) != psi.comp[static_cast<size_t>(u)].obj(static_cast<Id>(f.on_obj.size())))
        throw StructuralError("cechLift: object lift does not cover psi");
      f.on_obj.push_back(e);
    }
    for (Id m = 0; m < cu.morphisms(); ++m) {
      Id src = f.on_obj[static_cast<size_t>(cu.src(m))];
      Id dst = f.on_obj[static_cast<size_t>(cu.dst(m))];
      Id want = psi.comp[static_cast<size_t>(u)].mor(m);
      Id found = kNone;
      for (Id g : E.at(u).hom(src, dst))
        if (pu.mor(g) == want) {
          if (found != kNone)
            throw StructuralError("cechLift: p is not faithful where the lift needs it");
          found = g;
        }
      if (found == kNone)
        throw StructuralError("cechLift: p is not full where the lift needs it");
      f.on_mor.push_back(found);
    }
    L.comp.push_back(std::move(f));
  }
  std::string err = L.validate();
  if (!err.empty()) throw StructuralError("cechLift: " + err);
  return L;
}

}  // namespace stk::psh
