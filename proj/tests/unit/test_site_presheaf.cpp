#include <doctest.h>

#include "stackcore/model.hpp"
#include "stackcore/presheaf.hpp"
#include "stackcore/products.hpp"
#include "stackcore/sheaves.hpp"

using namespace stk;
using namespace stk::psh;
using grpd::Id;

namespace {

Id byLabel(const site::Site& s, const std::string& n) {
  for (Id u = 0; u < s.cat.objects(); ++u)
    if (s.cat.objLabel(u) == n) return u;
  return grpd::kNone;
}

grpd::Groupoid bz(int n) { return grpd::deloopOpposite(grpd::FinGroup::cyclic(n)); }

bool sameTables(const grpd::Functor& f, const grpd::Functor& g) {
  return f.on_obj == g.on_obj && f.on_mor == g.on_mor;
}

// Counit of the flat/sharp adjunction at Y: flat(sharp Y) -> Y projects the
// unique point slot and restricts along U -> pt.
PshMor adjCounit(const Psh& fsh, const SharpPsh& sh, const Psh& Y) {
  const site::Site& s = Y.s();
  PshMor eps;
  eps.X = &fsh;
  eps.Y = &Y;
  for (Id u = 0; u < s.cat.objects(); ++u) {
    grpd::Functor pr0 = grpd::projectionFunctor(sh.prod[static_cast<size_t>(s.pt)], 0);
    eps.comp.push_back(grpd::composeFunctors(Y.res(s.cat.hom(u, s.pt)[0]), pr0));
  }
  return eps;
}

}  // namespace

TEST_CASE("sample sites validate and have the expected shape") {
  site::Site iv = site::intervalTwoChartSite();
  site::Site ci = site::circleThreeArcSite();
  site::Site ln = site::lineThreeChartSite();
  site::Site dp = site::discretePointSite(3);

  CHECK(iv.cat.objects() == 5);
  CHECK(ci.cat.objects() == 8);
  CHECK(ln.cat.objects() == 7);
  CHECK(dp.cat.objects() == 2);

  for (const site::Site* s : {&iv, &ci, &ln, &dp}) {
    for (Id u = 0; u < s->cat.objects(); ++u) {
      CHECK(s->cat.hom(u, s->pt).size() == 1);
      CHECK(!s->covers_of[static_cast<size_t>(u)].empty());
    }
  }

  Id S = byLabel(ci, "S");
  const site::Cover& arcs = ci.covers_of[static_cast<size_t>(S)][1];
  CHECK(arcs.members() == 3);
  CHECK(arcs.pair.size() == 3);
  CHECK(arcs.triple.size() == 1);
  CHECK(arcs.triple[0].obj == grpd::kNone);

  site::PairSlot diag = ci.pairSlot(arcs, 0, 0);
  CHECK(diag.obj == arcs.member_obj[0]);
  CHECK(ci.cat.isIdentity(diag.to_i));
  site::TripleSlot t112 = ci.tripleSlot(arcs, 0, 0, 1);
  CHECK(t112.obj == ci.pairSlot(arcs, 0, 1).obj);
  CHECK(ci.cat.isIdentity(t112.to_jk));
  site::TripleSlot t122 = ci.tripleSlot(arcs, 0, 1, 1);
  CHECK(t122.obj == ci.pairSlot(arcs, 0, 1).obj);
  CHECK(ci.cat.isIdentity(t122.to_ij));
}

TEST_CASE("malformed categories and sites are rejected") {
  CHECK_THROWS_AS(site::Category::make(2, {{0, 5}}, {}, {}), grpd::StructuralError);

  site::Site s = site::intervalTwoChartSite();
  s.covers_of[0][0].member_mor[0] = 99;
  CHECK(!s.validate().empty());
}

TEST_CASE("slice site over the terminal object is the whole category") {
  site::Site iv = site::intervalTwoChartSite();
  site::OverSite o = site::overSite(iv, iv.pt);
  CHECK(o.site.cat.objects() == iv.cat.objects());
  CHECK(o.site.cat.morphisms() == iv.cat.morphisms());

  site::Site ci = site::circleThreeArcSite();
  site::OverSite oc = site::overSite(ci, ci.pt);
  CHECK(oc.site.cat.objects() == ci.cat.objects());
  CHECK(oc.site.cat.morphisms() == ci.cat.morphisms());
}

TEST_CASE("slice site keeps parallel legs over a fat point apart") {
  site::Site dp = site::discretePointSite(2);
  Id U = (dp.pt == 0) ? 1 : 0;
  site::OverSite o = site::overSite(dp, U);
  CHECK(o.site.validate().empty());
  int into = 0;
  for (Id m = 0; m < dp.cat.morphisms(); ++m)
    if (dp.cat.dst(m) == U) ++into;
  CHECK(o.site.cat.objects() == into);
  CHECK(o.site.pt == o.objOf(dp.cat.identity(U)));
}

TEST_CASE("representable stages are the hom sets") {
  site::Site iv = site::intervalTwoChartSite();
  Id C = byLabel(iv, "C");
  Representable r = representablePsh(iv, C);
  CHECK(r.psh.validate().empty());
  for (Id u = 0; u < iv.cat.objects(); ++u)
    CHECK(r.psh.at(u).objects() == static_cast<int>(iv.cat.hom(u, C).size()));
}

TEST_CASE("constant, terminal and product presheaves validate") {
  site::Site iv = site::intervalTwoChartSite();
  Psh big = constantPsh(iv, bz(2));
  CHECK(big.validate().empty());
  Psh one = terminalPsh(iv);
  CHECK(one.validate().empty());
  Psh none = emptyPsh(iv);
  CHECK(none.validate().empty());

  ProductPsh p = productPsh(big, big);
  CHECK(p.psh.validate().empty());
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    CHECK(p.psh.at(u).objects() == 1);
    CHECK(p.psh.at(u).morphisms() == 4);
  }
  CHECK(productPshProj(p, big, big, 0).validate().empty());
  CHECK(productPshProj(p, big, big, 1).validate().empty());

  PshMor t = terminalMor(big, one);
  CHECK(t.validate().empty());
  CHECK(composePshMor(t, identityPshMor(big)).validate().empty());
}

TEST_CASE("pi0 and pi1 of delooped groups") {
  site::Site iv = site::intervalTwoChartSite();
  Psh big = constantPsh(iv, bz(3));
  SetPsh p0 = pi0Psh(big);
  CHECK(p0.validate().empty());
  for (int sz : p0.size) CHECK(sz == 1);

  AutPsh a = pi1Psh(big, byLabel(iv, "I"), 0);
  CHECK(a.validate().empty());
  for (const grpd::FinGroup& g : a.group) {
    CHECK(g.n == 3);
    for (Id e = 0; e < 3; ++e) CHECK(g.times(e, g.inv[static_cast<size_t>(e)]) == g.e);
  }

  Psh s3 = constantPsh(iv, grpd::deloopOpposite(grpd::FinGroup::symmetric(3)));
  AutPsh b = pi1Psh(s3, byLabel(iv, "I"), 0);
  const grpd::FinGroup& g = b.group[0];
  bool abelian = true;
  for (Id x = 0; x < g.n; ++x)
    for (Id y = 0; y < g.n; ++y)
      if (g.times(x, y) != g.times(y, x)) abelian = false;
  CHECK(g.n == 6);
  CHECK(!abelian);
}

TEST_CASE("sharp stages multiply over points and zeta evaluates there") {
  site::Site dp = site::discretePointSite(2);
  Id U = (dp.pt == 0) ? 1 : 0;
  Psh big = constantPsh(dp, bz(2));
  SharpPsh sh = sharpPsh(big);
  CHECK(sh.psh.validate().empty());
  CHECK(sh.psh.at(dp.pt).objects() == big.at(dp.pt).objects());
  CHECK(sh.psh.at(dp.pt).morphisms() == big.at(dp.pt).morphisms());
  CHECK(sh.psh.at(U).objects() == 1);
  CHECK(sh.psh.at(U).morphisms() == 4);

  PshMor z = zetaMor(big, sh);
  CHECK(z.validate().empty());
  CHECK(grpd::checkFibration(z.comp[static_cast<size_t>(dp.pt)]).ok);
  CHECK(!grpd::checkFibration(z.comp[static_cast<size_t>(U)]).ok);

  site::Site iv = site::intervalTwoChartSite();
  Psh ivbig = constantPsh(iv, bz(2));
  SharpPsh ivs = sharpPsh(ivbig);
  for (Id u = 0; u < iv.cat.objects(); ++u)
    if (u != iv.pt) CHECK(ivs.psh.at(u).objects() == 1);
  CHECK(ivs.psh.at(iv.pt).morphisms() == 2);
}

TEST_CASE("zeta is a stage-wise fibration on codiscrete and spatial samples") {
  site::Site dp = site::discretePointSite(2);
  Psh big = constantPsh(dp, bz(2));
  SharpPsh sh = sharpPsh(big);
  SharpPsh sh2 = sharpPsh(sh.psh);
  PshMor z = zetaMor(sh.psh, sh2);
  for (const grpd::Functor& c : z.comp) CHECK(grpd::checkIsomorphism(c).ok);

  site::Site iv = site::intervalTwoChartSite();
  Psh ivbig = constantPsh(iv, bz(3));
  SharpPsh ivs = sharpPsh(ivbig);
  PshMor zi = zetaMor(ivbig, ivs);
  for (const grpd::Functor& c : zi.comp) CHECK(grpd::checkFibration(c).ok);
}

TEST_CASE("flat and sharp satisfy the adjunction triangle identities") {
  for (int variant = 0; variant < 3; ++variant) {
    site::Site s = variant < 2 ? site::discretePointSite(variant == 0 ? 2 : 3)
                               : site::intervalTwoChartSite();
    Psh big = constantPsh(s, bz(2));

    SharpPsh sh = sharpPsh(big);
    Psh fsh = flatPsh(sh.psh);
    PshMor eps = adjCounit(fsh, sh, big);
    REQUIRE(eps.validate().empty());

    SharpPsh shfsh = sharpPsh(fsh);
    PshMor unit_sh = zetaMor(sh.psh, shfsh);
    PshMor sheps = sharpMap(eps, shfsh, sh);
    PshMor round = composePshMor(sheps, unit_sh);
    for (size_t u = 0; u < round.comp.size(); ++u)
      CHECK(sameTables(round.comp[u], identityFunctor(sh.psh.at(static_cast<Id>(u)))));

    Psh fl = flatPsh(big);
    SharpPsh shfl = sharpPsh(fl);
    PshMor unit_x = zetaMor(big, shfl);
    Psh fshfl = flatPsh(shfl.psh);
    PshMor flunit = flatMap(unit_x, fl, fshfl);
    PshMor eps2 = adjCounit(fshfl, shfl, fl);
    REQUIRE(eps2.validate().empty());
    PshMor round2 = composePshMor(eps2, flunit);
    for (size_t u = 0; u < round2.comp.size(); ++u)
      CHECK(sameTables(round2.comp[u], identityFunctor(fl.at(static_cast<Id>(u)))));
  }
}

TEST_CASE("sheafification glues the non-glueable section exactly once") {
  site::Site iv = site::intervalTwoChartSite();
  SetPsh F;
  F.on = &iv;
  F.size = {0, 1, 1, 1, 0};
  for (Id m = 0; m < iv.cat.morphisms(); ++m)
    F.map.emplace_back(static_cast<size_t>(F.size[static_cast<size_t>(iv.cat.dst(m))]), 0);
  REQUIRE(F.validate().empty());

  CHECK(!isSetSheaf(F));
  Sheafified sh = sheafify(F);
  CHECK(sh.psh().size == std::vector<int>{1, 1, 1, 1, 0});
  CHECK(isSetSheaf(sh.psh()));
}

TEST_CASE("sheafify is idempotent on samples") {
  site::Site ci = site::circleThreeArcSite();
  Psh big = constantPsh(ci, bz(2));
  SetPsh p0 = pi0Psh(big);
  Sheafified s1 = sheafify(p0);
  Sheafified s2 = sheafify(s1.psh());
  for (Id u = 0; u < ci.cat.objects(); ++u) {
    CHECK(s2.psh().size[static_cast<size_t>(u)] == s1.psh().size[static_cast<size_t>(u)]);
    CHECK(bijective(s2.unit[static_cast<size_t>(u)], s2.psh().size[static_cast<size_t>(u)]));
  }
}

TEST_CASE("sheafify preserves finite products on samples") {
  site::Site iv = site::intervalTwoChartSite();
  SetPsh F;
  F.on = &iv;
  F.size = {0, 1, 1, 1, 0};
  for (Id m = 0; m < iv.cat.morphisms(); ++m)
    F.map.emplace_back(static_cast<size_t>(F.size[static_cast<size_t>(iv.cat.dst(m))]), 0);
  REQUIRE(F.validate().empty());
  SetPsh G = pi0Psh(constantPsh(iv, bz(2)));

  SetPsh P;
  P.on = &iv;
  for (Id u = 0; u < iv.cat.objects(); ++u)
    P.size.push_back(F.size[static_cast<size_t>(u)] * G.size[static_cast<size_t>(u)]);
  for (Id m = 0; m < iv.cat.morphisms(); ++m) {
    Id u = iv.cat.dst(m), v = iv.cat.src(m);
    std::vector<Id> t;
    for (Id a = 0; a < F.size[static_cast<size_t>(u)]; ++a)
      for (Id b = 0; b < G.size[static_cast<size_t>(u)]; ++b)
        t.push_back(F.map[static_cast<size_t>(m)][static_cast<size_t>(a)] *
                        G.size[static_cast<size_t>(v)] +
                    G.map[static_cast<size_t>(m)][static_cast<size_t>(b)]);
    P.map.push_back(std::move(t));
  }
  REQUIRE(P.validate().empty());

  std::vector<std::vector<Id>> pr1, pr2;
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    std::vector<Id> a, b;
    for (Id x = 0; x < F.size[static_cast<size_t>(u)]; ++x)
      for (Id y = 0; y < G.size[static_cast<size_t>(u)]; ++y) {
        a.push_back(x);
        b.push_back(y);
      }
    pr1.push_back(std::move(a));
    pr2.push_back(std::move(b));
  }

  Sheafified sp = sheafify(P);
  Sheafified sf = sheafify(F);
  Sheafified sg = sheafify(G);
  std::vector<std::vector<Id>> q1 = sheafifyMap(P, F, sp, sf, pr1);
  std::vector<std::vector<Id>> q2 = sheafifyMap(P, G, sp, sg, pr2);
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    int nf = sf.psh().size[static_cast<size_t>(u)];
    int ng = sg.psh().size[static_cast<size_t>(u)];
    CHECK(sp.psh().size[static_cast<size_t>(u)] == nf * ng);
    std::vector<Id> paired;
    for (size_t c = 0; c < q1[static_cast<size_t>(u)].size(); ++c)
      paired.push_back(q1[static_cast<size_t>(u)][c] * ng + q2[static_cast<size_t>(u)][c]);
    CHECK(bijective(paired, nf * ng));
  }
}
