#include "stackcore/presheaf.hpp"

#include <algorithm>

namespace stk::psh {

namespace {

std::vector<Id> homIndexOf(const site::Category& cat, Id x, Id y) {
  std::vector<Id> idx(static_cast<size_t>(cat.morphisms()), kNone);
  Id k = 0;
  for (Id m : cat.hom(x, y)) idx[static_cast<size_t>(m)] = k++;
  return idx;
}

bool sameTables(const Functor& a, const Functor& b) {
  return a.on_obj == b.on_obj && a.on_mor == b.on_mor;
}

}  // namespace

std::string Psh::validate() const {
  if (!on) return "presheaf has no site";
  const site::Category& cat = on->cat;
  if (static_cast<int>(stage.size()) != cat.objects()) return "stage count mismatch";
  for (const auto& g : stage)
    if (!g) return "missing stage";
  if (static_cast<Id>(restriction.size()) != cat.morphisms()) return "restriction count mismatch";
  for (Id m = 0; m < cat.morphisms(); ++m) {
    const Functor& f = res(m);
    if (f.A != stage[static_cast<size_t>(cat.dst(m))].get() ||
        f.B != stage[static_cast<size_t>(cat.src(m))].get())
      return "restriction along " + cat.morLabel(m) + " has wrong endpoints";
    if (auto err = f.validate(); !err.empty())
      return "restriction along " + cat.morLabel(m) + ": " + err;
  }
  for (Id x = 0; x < cat.objects(); ++x)
    if (!sameTables(res(cat.identity(x)), grpd::identityFunctor(at(x))))
      return "restriction along id_" + cat.objLabel(x) + " is not the identity";
  for (Id f = 0; f < cat.morphisms(); ++f)
    for (Id g = 0; g < cat.morphisms(); ++g) {
      if (cat.dst(f) != cat.src(g)) continue;
      Functor lhs = grpd::composeFunctors(res(f), res(g));
      if (!sameTables(lhs, res(cat.compose(g, f))))
        return "restrictions violate functoriality at " + cat.morLabel(g) + " after " + cat.morLabel(f);
    }
  return {};
}

std::string PshMor::validate() const {
  if (!X || !Y) return "presheaf morphism has loose ends";
  if (X->on != Y->on) return "presheaf morphism crosses sites";
  const site::Category& cat = X->s().cat;
  if (static_cast<int>(comp.size()) != cat.objects()) return "component count mismatch";
  for (Id u = 0; u < cat.objects(); ++u) {
    const Functor& f = comp[static_cast<size_t>(u)];
    if (f.A != X->stage[static_cast<size_t>(u)].get() || f.B != Y->stage[static_cast<size_t>(u)].get())
      return "component at " + cat.objLabel(u) + " has wrong endpoints";
    if (auto err = f.validate(); !err.empty())
      return "component at " + cat.objLabel(u) + ": " + err;
  }
  for (Id m = 0; m < cat.morphisms(); ++m) {
    Functor lhs = grpd::composeFunctors(comp[static_cast<size_t>(cat.src(m))], X->res(m));
    Functor rhs = grpd::composeFunctors(Y->res(m), comp[static_cast<size_t>(cat.dst(m))]);
    if (!sameTables(lhs, rhs)) return "naturality fails along " + cat.morLabel(m);
  }
  return {};
}

PshMor identityPshMor(const Psh& X) {
  PshMor f;
  f.X = &X;
  f.Y = &X;
  for (Id u = 0; u < X.s().cat.objects(); ++u) f.comp.push_back(grpd::identityFunctor(X.at(u)));
  return f;
}

PshMor composePshMor(const PshMor& second, const PshMor& first) {
  if (first.Y != second.X) throw StructuralError("presheaf morphisms not composable");
  PshMor f;
  f.X = first.X;
  f.Y = second.Y;
  for (size_t u = 0; u < first.comp.size(); ++u)
    f.comp.push_back(grpd::composeFunctors(second.comp[u], first.comp[u]));
  return f;
}

Psh constantPsh(const Site& s, const Groupoid& G) {
  Psh X;
  X.on = &s;
  auto g = std::make_shared<Groupoid>(G);
  X.stage.assign(static_cast<size_t>(s.cat.objects()), g);
  X.restriction.assign(static_cast<size_t>(s.cat.morphisms()), grpd::identityFunctor(*g));
  return X;
}

Psh terminalPsh(const Site& s) { return constantPsh(s, grpd::terminalGroupoid()); }
Psh emptyPsh(const Site& s) { return constantPsh(s, grpd::emptyGroupoid()); }

PshMor terminalMor(const Psh& X, const Psh& term) {
  PshMor f;
  f.X = &X;
  f.Y = &term;
  for (Id u = 0; u < X.s().cat.objects(); ++u) {
    Functor c;
    c.A = X.stage[static_cast<size_t>(u)].get();
    c.B = term.stage[static_cast<size_t>(u)].get();
    c.on_obj.assign(static_cast<size_t>(X.at(u).objects()), 0);
    c.on_mor.assign(static_cast<size_t>(X.at(u).morphisms()), 0);
    f.comp.push_back(std::move(c));
  }
  return f;
}

Representable representablePsh(const Site& s, Id U) {
  if (U < 0 || U >= s.cat.objects()) throw StructuralError("representable: object out of range");
  Representable r;
  r.rep_obj = U;
  r.psh.on = &s;
  r.obj_of_mor.assign(static_cast<size_t>(s.cat.morphisms()), kNone);
  std::vector<std::vector<Id>> hom_of(static_cast<size_t>(s.cat.objects()));
  for (Id v = 0; v < s.cat.objects(); ++v) {
    hom_of[static_cast<size_t>(v)] = s.cat.hom(v, U);
    Id k = 0;
    for (Id m : hom_of[static_cast<size_t>(v)]) r.obj_of_mor[static_cast<size_t>(m)] = k++;
    r.psh.stage.push_back(std::make_shared<Groupoid>(
        grpd::discreteGroupoid(static_cast<int>(hom_of[static_cast<size_t>(v)].size()))));
  }
  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id v = s.cat.dst(m), w = s.cat.src(m);
    Functor f;
    f.A = r.psh.stage[static_cast<size_t>(v)].get();
    f.B = r.psh.stage[static_cast<size_t>(w)].get();
    for (Id nu : hom_of[static_cast<size_t>(v)])
      f.on_obj.push_back(r.obj_of_mor[static_cast<size_t>(s.cat.compose(nu, m))]);
    f.on_mor = f.on_obj;
    r.psh.restriction.push_back(std::move(f));
  }
  return r;
}

PshMor yonedaMor(const Representable& r, const Psh& X, Id x) {
  const Site& s = X.s();
  if (r.psh.on != &s) throw StructuralError("yoneda: representable lives on another site");
  if (x < 0 || x >= X.at(r.rep_obj).objects()) throw StructuralError("yoneda: basepoint out of range");
  PshMor f;
  f.X = &r.psh;
  f.Y = &X;
  for (Id v = 0; v < s.cat.objects(); ++v) {
    Functor c;
    c.A = r.psh.stage[static_cast<size_t>(v)].get();
    c.B = X.stage[static_cast<size_t>(v)].get();
    for (Id nu : s.cat.hom(v, r.rep_obj)) c.on_obj.push_back(X.res(nu).obj(x));
    for (Id o : c.on_obj) c.on_mor.push_back(X.at(v).identity(o));
    f.comp.push_back(std::move(c));
  }
  return f;
}

ProductPsh productPsh(const Psh& X, const Psh& Y, std::size_t cap) {
  if (X.on != Y.on) throw StructuralError("product presheaf: factors live on different sites");
  ProductPsh p;
  p.psh.on = X.on;
  const site::Category& cat = X.s().cat;
  for (Id u = 0; u < cat.objects(); ++u) {
    p.prod.push_back(grpd::productOfGroupoids(
        {X.stage[static_cast<size_t>(u)], Y.stage[static_cast<size_t>(u)]}, cap));
    p.psh.stage.push_back(p.prod.back().grpd);
  }
  for (Id m = 0; m < cat.morphisms(); ++m) {
    p.psh.restriction.push_back(grpd::gatherProductFunctor(
        p.prod[static_cast<size_t>(cat.dst(m))], p.prod[static_cast<size_t>(cat.src(m))], {0, 1},
        {&X.res(m), &Y.res(m)}));
  }
  return p;
}

PshMor productPshProj(const ProductPsh& p, const Psh& X, const Psh& Y, int which) {
  PshMor f;
  f.X = &p.psh;
  f.Y = which == 0 ? &X : &Y;
  for (size_t u = 0; u < p.prod.size(); ++u)
    f.comp.push_back(grpd::projectionFunctor(p.prod[u], which));
  return f;
}

Psh overRestrict(const Psh& X, const site::OverSite& o) {
  Psh r;
  r.on = &o.site;
  for (Id a = 0; a < o.site.cat.objects(); ++a) {
    Id v = X.s().cat.src(o.leg[static_cast<size_t>(a)]);
    r.stage.push_back(X.stage[static_cast<size_t>(v)]);
  }
  for (Id m = 0; m < o.site.cat.morphisms(); ++m)
    r.restriction.push_back(X.res(o.back_mor[static_cast<size_t>(m)]));
  return r;
}

PshMor overRestrict(const PshMor& f, const site::OverSite& o, const Psh& ox, const Psh& oy) {
  PshMor r;
  r.X = &ox;
  r.Y = &oy;
  for (Id a = 0; a < o.site.cat.objects(); ++a) {
    Id v = f.X->s().cat.src(o.leg[static_cast<size_t>(a)]);
    r.comp.push_back(f.comp[static_cast<size_t>(v)]);
  }
  return r;
}

std::string SetPsh::validate() const {
  if (!on) return "set presheaf has no site";
  const site::Category& cat = on->cat;
  if (static_cast<int>(size.size()) != cat.objects()) return "stage count mismatch";
  if (static_cast<Id>(map.size()) != cat.morphisms()) return "map count mismatch";
  for (Id m = 0; m < cat.morphisms(); ++m) {
    const auto& t = map[static_cast<size_t>(m)];
    if (static_cast<int>(t.size()) != size[static_cast<size_t>(cat.dst(m))])
      return "map along " + cat.morLabel(m) + " has wrong domain";
    for (Id v : t)
      if (v < 0 || v >= size[static_cast<size_t>(cat.src(m))])
        return "map along " + cat.morLabel(m) + " lands out of range";
  }
  for (Id x = 0; x < cat.objects(); ++x) {
    const auto& t = map[static_cast<size_t>(cat.identity(x))];
    for (Id i = 0; i < static_cast<Id>(t.size()); ++i)
      if (t[static_cast<size_t>(i)] != i) return "identity map at " + cat.objLabel(x) + " moves elements";
  }
  for (Id f = 0; f < cat.morphisms(); ++f)
    for (Id g = 0; g < cat.morphisms(); ++g) {
      if (cat.dst(f) != cat.src(g)) continue;
      const auto& tf = map[static_cast<size_t>(f)];
      const auto& tg = map[static_cast<size_t>(g)];
      const auto& tgf = map[static_cast<size_t>(cat.compose(g, f))];
      for (size_t i = 0; i < tgf.size(); ++i)
        if (tgf[i] != tf[static_cast<size_t>(tg[i])])
          return "maps violate functoriality at " + cat.morLabel(g) + " after " + cat.morLabel(f);
    }
  return {};
}

std::string SetPshMor::validate() const {
  if (!X || !Y) return "set presheaf morphism has loose ends";
  if (X->on != Y->on) return "set presheaf morphism crosses sites";
  const site::Category& cat = X->on->cat;
  if (static_cast<int>(comp.size()) != cat.objects()) return "component count mismatch";
  for (Id u = 0; u < cat.objects(); ++u) {
    const auto& c = comp[static_cast<size_t>(u)];
    if (static_cast<int>(c.size()) != X->size[static_cast<size_t>(u)])
      return "component at " + cat.objLabel(u) + " has wrong domain";
    for (Id v : c)
      if (v < 0 || v >= Y->size[static_cast<size_t>(u)])
        return "component at " + cat.objLabel(u) + " lands out of range";
  }
  for (Id m = 0; m < cat.morphisms(); ++m) {
    Id u = cat.dst(m), v = cat.src(m);
    for (Id i = 0; i < X->size[static_cast<size_t>(u)]; ++i) {
      Id lhs = comp[static_cast<size_t>(v)][static_cast<size_t>(X->map[static_cast<size_t>(m)][static_cast<size_t>(i)])];
      Id rhs = Y->map[static_cast<size_t>(m)][static_cast<size_t>(comp[static_cast<size_t>(u)][static_cast<size_t>(i)])];
      if (lhs != rhs) return "naturality fails along " + cat.morLabel(m);
    }
  }
  return {};
}

SetPsh pi0Psh(const Psh& X) {
  SetPsh p;
  p.on = X.on;
  const site::Category& cat = X.s().cat;
  std::vector<grpd::Pi0> comps;
  std::vector<std::vector<Id>> rep;
  for (Id u = 0; u < cat.objects(); ++u) {
    comps.push_back(grpd::pi0(X.at(u)));
    p.size.push_back(comps.back().count);
    std::vector<Id> r(static_cast<size_t>(comps.back().count), kNone);
    for (Id o = 0; o < X.at(u).objects(); ++o) {
      int c = comps.back().comp_of_obj[static_cast<size_t>(o)];
      if (r[static_cast<size_t>(c)] == kNone) r[static_cast<size_t>(c)] = o;
    }
    rep.push_back(std::move(r));
  }
  for (Id m = 0; m < cat.morphisms(); ++m) {
    Id u = cat.dst(m), v = cat.src(m);
    std::vector<Id> t;
    for (Id o : rep[static_cast<size_t>(u)])
      t.push_back(comps[static_cast<size_t>(v)].comp_of_obj[static_cast<size_t>(X.res(m).obj(o))]);
    p.map.push_back(std::move(t));
  }
  return p;
}

SetPshMor pi0Mor(const PshMor& f, const SetPsh& px, const SetPsh& py) {
  SetPshMor r;
  r.X = &px;
  r.Y = &py;
  const site::Category& cat = f.X->s().cat;
  for (Id u = 0; u < cat.objects(); ++u) {
    grpd::Pi0 cx = grpd::pi0(f.X->at(u));
    grpd::Pi0 cy = grpd::pi0(f.Y->at(u));
    std::vector<Id> t(static_cast<size_t>(cx.count), kNone);
    for (Id o = 0; o < f.X->at(u).objects(); ++o)
      t[static_cast<size_t>(cx.comp_of_obj[static_cast<size_t>(o)])] =
          cy.comp_of_obj[static_cast<size_t>(f.comp[static_cast<size_t>(u)].obj(o))];
    r.comp.push_back(std::move(t));
  }
  return r;
}

SetPsh AutPsh::underlyingSet() const {
  SetPsh p;
  p.on = &over->site;
  for (const auto& e : elem) p.size.push_back(static_cast<int>(e.size()));
  p.map = map;
  return p;
}

std::string AutPsh::validate() const {
  if (!over) return "aut presheaf has no slice";
  for (const auto& g : group)
    if (auto err = g.validate(); !err.empty()) return err;
  if (auto err = underlyingSet().validate(); !err.empty()) return err;
  const site::Category& cat = over->site.cat;
  for (Id m = 0; m < cat.morphisms(); ++m) {
    Id a = cat.src(m), b = cat.dst(m);
    const grpd::FinGroup& gb = group[static_cast<size_t>(b)];
    const grpd::FinGroup& ga = group[static_cast<size_t>(a)];
    const auto& t = map[static_cast<size_t>(m)];
    for (Id p = 0; p < gb.n; ++p)
      for (Id q = 0; q < gb.n; ++q)
        if (t[static_cast<size_t>(gb.times(p, q))] !=
            ga.times(t[static_cast<size_t>(p)], t[static_cast<size_t>(q)]))
          return "map along " + cat.morLabel(m) + " is not a homomorphism";
  }
  return {};
}

AutPsh pi1Psh(const Psh& X, Id U, Id x) {
  return pi1Psh(X, std::make_shared<site::OverSite>(site::overSite(X.s(), U)), x);
}

AutPsh pi1Psh(const Psh& X, const std::shared_ptr<site::OverSite>& over, Id x) {
  AutPsh a;
  a.over = over;
  const site::Category& cat = over->site.cat;
  std::vector<Id> base(static_cast<size_t>(cat.objects()));
  std::vector<std::vector<Id>> elem_index;
  for (Id o = 0; o < cat.objects(); ++o) {
    Id g = over->leg[static_cast<size_t>(o)];
    Id v = X.s().cat.src(g);
    Id y = X.res(g).obj(x);
    base[static_cast<size_t>(o)] = y;
    const Groupoid& st = X.at(v);
    std::vector<Id> elems = st.hom(y, y);
    std::vector<Id> index(static_cast<size_t>(st.morphisms()), kNone);
    for (Id i = 0; i < static_cast<Id>(elems.size()); ++i)
      index[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
    grpd::FinGroup gr;
    gr.n = static_cast<int>(elems.size());
    gr.e = index[static_cast<size_t>(st.identity(y))];
    for (Id p = 0; p < gr.n; ++p)
      for (Id q = 0; q < gr.n; ++q)
        gr.mul.push_back(index[static_cast<size_t>(
            st.compose(elems[static_cast<size_t>(p)], elems[static_cast<size_t>(q)]))]);
    for (Id p = 0; p < gr.n; ++p)
      gr.inv.push_back(index[static_cast<size_t>(st.inverse(elems[static_cast<size_t>(p)]))]);
    for (Id p = 0; p < gr.n; ++p) gr.label.push_back(st.morLabel(elems[static_cast<size_t>(p)]));
    a.elem.push_back(std::move(elems));
    a.group.push_back(std::move(gr));
    elem_index.push_back(std::move(index));
  }
  for (Id m = 0; m < cat.morphisms(); ++m) {
    Id src_o = cat.src(m), dst_o = cat.dst(m);
    Id h = over->back_mor[static_cast<size_t>(m)];
    std::vector<Id> t;
    for (Id g : a.elem[static_cast<size_t>(dst_o)])
      t.push_back(elem_index[static_cast<size_t>(src_o)][static_cast<size_t>(X.res(h).mor(g))]);
    a.map.push_back(std::move(t));
  }
  return a;
}

std::vector<std::vector<Id>> pi1MorComp(const PshMor& f, const AutPsh& a, const AutPsh& b) {
  if (a.over != b.over) throw StructuralError("pi1 comparison needs a shared slice");
  const site::Category& cat = a.over->site.cat;
  std::vector<std::vector<Id>> comp;
  for (Id o = 0; o < cat.objects(); ++o) {
    Id v = f.X->s().cat.src(a.over->leg[static_cast<size_t>(o)]);
    std::vector<Id> index(static_cast<size_t>(f.Y->at(v).morphisms()), kNone);
    for (Id i = 0; i < static_cast<Id>(b.elem[static_cast<size_t>(o)].size()); ++i)
      index[static_cast<size_t>(b.elem[static_cast<size_t>(o)][static_cast<size_t>(i)])] = i;
    std::vector<Id> t;
    for (Id g : a.elem[static_cast<size_t>(o)]) {
      Id img = f.comp[static_cast<size_t>(v)].mor(g);
      if (index[static_cast<size_t>(img)] == kNone)
        throw StructuralError("pi1 comparison: image misses the basepoint group");
      t.push_back(index[static_cast<size_t>(img)]);
    }
    comp.push_back(std::move(t));
  }
  return comp;
}

Psh flatPsh(const Psh& X) {
  Psh f;
  f.on = X.on;
  Id pt = X.s().pt;
  f.stage.assign(static_cast<size_t>(X.s().cat.objects()), X.stage[static_cast<size_t>(pt)]);
  f.restriction.assign(static_cast<size_t>(X.s().cat.morphisms()), grpd::identityFunctor(X.at(pt)));
  return f;
}

PshMor flatCounit(const Psh& flat, const Psh& X) {
  PshMor f;
  f.X = &flat;
  f.Y = &X;
  const Site& s = X.s();
  for (Id u = 0; u < s.cat.objects(); ++u) f.comp.push_back(X.res(s.cat.hom(u, s.pt)[0]));
  return f;
}

PshMor flatMap(const PshMor& f, const Psh& fx, const Psh& fy) {
  PshMor r;
  r.X = &fx;
  r.Y = &fy;
  Id pt = f.X->s().pt;
  r.comp.assign(static_cast<size_t>(f.X->s().cat.objects()), f.comp[static_cast<size_t>(pt)]);
  return r;
}

SharpPsh sharpPsh(const Psh& X, std::size_t cap) {
  SharpPsh sh;
  sh.psh.on = X.on;
  const Site& s = X.s();
  GroupoidPtr pt_stage = X.stage[static_cast<size_t>(s.pt)];
  std::vector<std::vector<Id>> point_index(static_cast<size_t>(s.cat.objects()));
  for (Id u = 0; u < s.cat.objects(); ++u) {
    sh.point.push_back(s.cat.hom(s.pt, u));
    point_index[static_cast<size_t>(u)] = homIndexOf(s.cat, s.pt, u);
    sh.prod.push_back(grpd::productOfGroupoids(
        std::vector<GroupoidPtr>(sh.point.back().size(), pt_stage), cap));
    sh.psh.stage.push_back(sh.prod.back().grpd);
  }
  Functor idf = grpd::identityFunctor(*pt_stage);
  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id u = s.cat.dst(m), v = s.cat.src(m);
    std::vector<int> gather;
    for (Id p : sh.point[static_cast<size_t>(v)])
      gather.push_back(static_cast<int>(point_index[static_cast<size_t>(u)][static_cast<size_t>(s.cat.compose(m, p))]));
    std::vector<const Functor*> slots(gather.size(), &idf);
    sh.psh.restriction.push_back(grpd::gatherProductFunctor(
        sh.prod[static_cast<size_t>(u)], sh.prod[static_cast<size_t>(v)], gather, slots));
  }
  return sh;
}

PshMor zetaMor(const Psh& X, const SharpPsh& sh) {
  PshMor z;
  z.X = &X;
  z.Y = &sh.psh;
  for (Id u = 0; u < X.s().cat.objects(); ++u) {
    std::vector<const Functor*> legs;
    for (Id p : sh.point[static_cast<size_t>(u)]) legs.push_back(&X.res(p));
    z.comp.push_back(grpd::tupleFunctor(X.at(u), sh.prod[static_cast<size_t>(u)], legs));
  }
  return z;
}

PshMor sharpMap(const PshMor& f, const SharpPsh& sx, const SharpPsh& sy) {
  PshMor r;
  r.X = &sx.psh;
  r.Y = &sy.psh;
  Id pt = f.X->s().pt;
  const Functor& fpt = f.comp[static_cast<size_t>(pt)];
  for (size_t u = 0; u < sx.prod.size(); ++u) {
    std::vector<int> gather(sx.point[u].size());
    for (size_t t = 0; t < gather.size(); ++t) gather[t] = static_cast<int>(t);
    std::vector<const Functor*> slots(gather.size(), &fpt);
    r.comp.push_back(grpd::gatherProductFunctor(sx.prod[u], sy.prod[u], gather, slots));
  }
  return r;
}

}  // namespace stk::psh
