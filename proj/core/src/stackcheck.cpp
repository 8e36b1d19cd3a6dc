#include "stackcore/stackcheck.hpp"

#include "stackcore/limits.hpp"
#include "stackcore/model.hpp"

namespace stk::psh {

using grpd::Functor;
using grpd::Id;
using grpd::kNone;
using grpd::StructuralError;

namespace {

std::string coverName(const Site& s, Id u, int c) {
  return "cover " + std::to_string(c) + " of " + s.cat.objLabel(u);
}

// X(U) -> Y(U) xh_{holim Y} holim X over the comparison of Y and the functor
// induced on descent groupoids. The connecting isomorphisms are identities
// because both squares commute strictly.
Functor coverComparison(const grpd::HomotopyFiberProduct& P, const Functor& fu,
                        const Functor& cmp_x, const Functor& cmp_y,
                        const Functor& induced) {
  const grpd::Groupoid& XU = *fu.A;
  Functor out;
  out.A = fu.A;
  out.B = P.grpd.get();
  out.on_obj.resize(static_cast<size_t>(XU.objects()));
  out.on_mor.resize(static_cast<size_t>(XU.morphisms()));
  for (Id x = 0; x < XU.objects(); ++x) {
    Id a = fu.obj(x);
    Id b = cmp_x.obj(x);
    if (cmp_y.obj(a) != induced.obj(b))
      throw StructuralError("coverComparison: comparison square does not commute");
    Id k = P.z->identity(cmp_y.obj(a));
    Id o = P.objIndex(a, b, k);
    if (o == kNone) throw StructuralError("coverComparison: image object missing");
    out.on_obj[static_cast<size_t>(x)] = o;
  }
  for (Id g = 0; g < XU.morphisms(); ++g) {
    Id src = out.on_obj[static_cast<size_t>(XU.src(g))];
    Id m = P.morIndex(src, fu.mor(g), cmp_x.mor(g));
    if (m == kNone) throw StructuralError("coverComparison: image morphism missing");
    out.on_mor[static_cast<size_t>(g)] = m;
  }
  std::string err = out.validate();
  if (!err.empty()) throw StructuralError("coverComparison: " + err);
  return out;
}

}  // namespace

StackReport isStack(const Psh& X, std::size_t cap) {
  const Site& s = *X.on;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    for (int c = 0; c < static_cast<int>(s.covers_of[static_cast<size_t>(u)].size()); ++c) {
      CechDiagram d = cechDiagram(X, u, c, cap);
      grpd::Descent h = grpd::holimDescent(d.d);
      Functor cmp = grpd::descentComparison(h, d.d, d.aug);
      grpd::Check w = grpd::checkWeakEquivalence(cmp);
      if (!w.ok) {
        StackReport r;
        r.ok = false;
        r.witness = {u, c};
        r.detail = coverName(s, u, c) + ": " + w.detail;
        return r;
      }
    }
  }
  return {};
}

StageReport isGlobalFibration(const PshMor& f) {
  const Site& s = *f.X->on;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    grpd::Check c = grpd::checkFibration(f.comp[static_cast<size_t>(u)]);
    if (!c.ok) return {false, u, "stage " + s.cat.objLabel(u) + ": " + c.detail};
  }
  return {};
}

StageReport isGlobalWeq(const PshMor& f) {
  const Site& s = *f.X->on;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    grpd::Check c = grpd::checkWeakEquivalence(f.comp[static_cast<size_t>(u)]);
    if (!c.ok) return {false, u, "stage " + s.cat.objLabel(u) + ": " + c.detail};
  }
  return {};
}

LocalReport isLocalFibration(const PshMor& f, std::size_t cap) {
  StageReport st = isGlobalFibration(f);
  if (!st.ok) {
    LocalReport r;
    r.ok = false;
    r.witness_obj = st.witness_obj;
    r.detail = "not a stage-wise fibration: " + st.detail;
    return r;
  }
  const Psh& X = *f.X;
  const Psh& Y = *f.Y;
  const Site& s = *X.on;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    for (int c = 0; c < static_cast<int>(s.covers_of[static_cast<size_t>(u)].size()); ++c) {
      CechDiagram dx = cechDiagram(X, u, c, cap);
      CechDiagram dy = cechDiagram(Y, u, c, cap);
      grpd::Descent hx = grpd::holimDescent(dx.d);
      grpd::Descent hy = grpd::holimDescent(dy.d);
      Functor cmp_x = grpd::descentComparison(hx, dx.d, dx.aug);
      Functor cmp_y = grpd::descentComparison(hy, dy.d, dy.aug);
      Functor induced = inducedDescentFunctor(hx, hy, cechMap(f, dx, dy));
      grpd::HomotopyFiberProduct P = grpd::homotopyFiberProduct(cmp_y, induced);
      Functor cano = coverComparison(P, f.comp[static_cast<size_t>(u)],
                                     cmp_x, cmp_y, induced);
      grpd::Check w = grpd::checkWeakEquivalence(cano);
      if (!w.ok) {
        LocalReport r;
        r.ok = false;
        r.witness_obj = u;
        r.witness_cover = {u, c};
        r.detail = coverName(s, u, c) + ": homotopy pullback comparison fails: " + w.detail;
        return r;
      }
    }
  }
  return {};
}

LocalReport isLocalWeq(const PshMor& f, std::size_t cap) {
  const Psh& X = *f.X;
  const Psh& Y = *f.Y;
  const Site& s = *X.on;
  if (isStack(X, cap).ok && isStack(Y, cap).ok) {
    StageReport st = isGlobalWeq(f);
    if (st.ok) return {};
    LocalReport r;
    r.ok = false;
    r.witness_obj = st.witness_obj;
    r.detail = "both endpoints are stacks but " + st.detail;
    return r;
  }

  SetPsh px = pi0Psh(X);
  SetPsh py = pi0Psh(Y);
  SetPshMor p0 = pi0Mor(f, px, py);
  Sheafified sx = sheafify(px, cap);
  Sheafified sy = sheafify(py, cap);
  std::vector<std::vector<Id>> p0s = sheafifyMap(px, py, sx, sy, p0.comp);
  for (Id u = 0; u < s.cat.objects(); ++u) {
    if (!bijective(p0s[static_cast<size_t>(u)], sy.psh().size[static_cast<size_t>(u)])) {
      LocalReport r;
      r.ok = false;
      r.witness_obj = u;
      r.detail = "sheafified pi0 is not bijective at " + s.cat.objLabel(u);
      return r;
    }
  }

  for (Id u = 0; u < s.cat.objects(); ++u) {
    auto over = std::make_shared<site::OverSite>(site::overSite(s, u));
    const grpd::Groupoid& XU = *X.stage[static_cast<size_t>(u)];
    for (Id x = 0; x < XU.objects(); ++x) {
      AutPsh ax = pi1Psh(X, over, x);
      AutPsh ay = pi1Psh(Y, over, f.comp[static_cast<size_t>(u)].obj(x));
      std::vector<std::vector<Id>> comp = pi1MorComp(f, ax, ay);
      SetPsh ux = ax.underlyingSet();
      SetPsh uy = ay.underlyingSet();
      Sheafified shx = sheafify(ux, cap);
      Sheafified shy = sheafify(uy, cap);
      std::vector<std::vector<Id>> ps = sheafifyMap(ux, uy, shx, shy, comp);
      for (size_t v = 0; v < ps.size(); ++v) {
        if (!bijective(ps[v], shy.psh().size[v])) {
          LocalReport r;
          r.ok = false;
          r.witness_obj = u;
          r.detail = "sheafified pi1 at basepoint " + XU.objLabel(x) + " over " +
                     s.cat.objLabel(u) + " is not bijective at slice object " +
                     over->site.cat.objLabel(static_cast<Id>(v));
          return r;
        }
      }
    }
  }
  return {};
}

HofibPsh hofibPresheaf(const PshMor& f1, const PshMor& f2) {
  if (f1.Y != f2.Y) throw StructuralError("hofibPresheaf: targets differ");
  const Psh& X = *f1.X;
  const Psh& Y = *f2.X;
  const Psh& Z = *f1.Y;
  const Site& s = *X.on;

  HofibPsh out;
  out.psh = std::make_shared<Psh>();
  Psh& p = *out.psh;
  p.on = &s;
  p.stage.resize(static_cast<size_t>(s.cat.objects()));
  p.restriction.resize(static_cast<size_t>(s.cat.morphisms()));
  out.stage.reserve(static_cast<size_t>(s.cat.objects()));
  for (Id u = 0; u < s.cat.objects(); ++u) {
    out.stage.push_back(grpd::homotopyFiberProduct(f1.comp[static_cast<size_t>(u)],
                                                   f2.comp[static_cast<size_t>(u)]));
    p.stage[static_cast<size_t>(u)] = out.stage.back().grpd;
  }
  for (Id m = 0; m < s.cat.morphisms(); ++m) {
    Id u = s.cat.dst(m);
    Id v = s.cat.src(m);
    const grpd::HomotopyFiberProduct& PU = out.stage[static_cast<size_t>(u)];
    const grpd::HomotopyFiberProduct& PV = out.stage[static_cast<size_t>(v)];
    const Functor& rx = X.res(m);
    const Functor& ry = Y.res(m);
    const Functor& rz = Z.res(m);
    Functor r;
    r.A = PU.grpd.get();
    r.B = PV.grpd.get();
    r.on_obj.resize(PU.obj_data.size());
    r.on_mor.resize(PU.mor_data.size());
    for (size_t i = 0; i < PU.obj_data.size(); ++i) {
      const auto& d = PU.obj_data[i];
      Id j = PV.objIndex(rx.obj(d[0]), ry.obj(d[1]), rz.mor(d[2]));
      if (j == kNone) throw StructuralError("hofibPresheaf: restricted object missing");
      r.on_obj[i] = j;
    }
    for (size_t i = 0; i < PU.mor_data.size(); ++i) {
      const auto& d = PU.mor_data[i];
      Id j = PV.morIndex(r.on_obj[static_cast<size_t>(d[0])], rx.mor(d[1]), ry.mor(d[2]));
      if (j == kNone) throw StructuralError("hofibPresheaf: restricted morphism missing");
      r.on_mor[i] = j;
    }
    p.restriction[static_cast<size_t>(m)] = std::move(r);
  }
  std::string err = p.validate();
  if (!err.empty()) throw StructuralError("hofibPresheaf: " + err);

  out.proj1.X = out.psh.get();
  out.proj1.Y = &X;
  out.proj2.X = out.psh.get();
  out.proj2.Y = &Y;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    out.proj1.comp.push_back(out.stage[static_cast<size_t>(u)].proj1);
    out.proj2.comp.push_back(out.stage[static_cast<size_t>(u)].proj2);
  }
  err = out.proj1.validate();
  if (err.empty()) err = out.proj2.validate();
  if (!err.empty()) throw StructuralError("hofibPresheaf projections: " + err);
  return out;
}

}  // namespace stk::psh
