#include <doctest.h>

#include "stackcore/internal_hom.hpp"
#include "stackcore/limits.hpp"
#include "stackcore/model.hpp"
#include "stackcore/stackcheck.hpp"

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

}  // namespace

TEST_CASE("constant delooping is a stack on the interval but not on the circle") {
  site::Site iv = site::intervalTwoChartSite();
  site::Site ci = site::circleThreeArcSite();

  Psh big_iv = constantPsh(iv, bz(2));
  CHECK(isStack(big_iv).ok);

  Psh big_ci = constantPsh(ci, bz(2));
  StackReport r = isStack(big_ci);
  CHECK(!r.ok);
  CHECK(r.witness.obj == byLabel(ci, "S"));
  CHECK(r.witness.cover == 1);
  CHECK(!r.detail.empty());

  Psh big3 = constantPsh(ci, bz(3));
  CHECK(!isStack(big3).ok);
}

TEST_CASE("representables are stacks") {
  site::Site iv = site::intervalTwoChartSite();
  site::Site ci = site::circleThreeArcSite();
  site::Site ln = site::lineThreeChartSite();
  for (const site::Site* s : {&iv, &ci, &ln})
    for (Id u = 0; u < s->cat.objects(); ++u) {
      Representable r = representablePsh(*s, u);
      CHECK(isStack(r.psh).ok);
    }
}

TEST_CASE("a constant delooping fails descent along a fat point cover") {
  site::Site dp = site::discretePointSite(2);
  Psh big = constantPsh(dp, bz(2));
  StackReport r = isStack(big);
  CHECK(!r.ok);
  CHECK(r.witness.obj == ((dp.pt == 0) ? 1 : 0));
}

TEST_CASE("global fibration and weq report the failing stage") {
  site::Site iv = site::intervalTwoChartSite();
  Psh big = constantPsh(iv, bz(2));
  Psh one = terminalPsh(iv);

  PshMor down = terminalMor(big, one);
  CHECK(isGlobalFibration(down).ok);
  CHECK(!isGlobalWeq(down).ok);
  CHECK(isGlobalWeq(identityPshMor(big)).ok);

  PshMor up;
  up.X = &one;
  up.Y = &big;
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    grpd::Functor c;
    c.A = one.stage[static_cast<size_t>(u)].get();
    c.B = big.stage[static_cast<size_t>(u)].get();
    c.on_obj = {0};
    c.on_mor = {big.at(u).identity(0)};
    up.comp.push_back(std::move(c));
  }
  REQUIRE(up.validate().empty());
  StageReport f = isGlobalFibration(up);
  CHECK(!f.ok);
  CHECK(f.witness_obj == 0);
  CHECK(!f.detail.empty());
}

TEST_CASE("a stack maps to the terminal presheaf by a local fibration") {
  site::Site iv = site::intervalTwoChartSite();
  site::Site ci = site::circleThreeArcSite();

  Psh big_iv = constantPsh(iv, bz(2));
  Psh one_iv = terminalPsh(iv);
  CHECK(isLocalFibration(terminalMor(big_iv, one_iv)).ok);

  Representable r = representablePsh(iv, byLabel(iv, "I"));
  Psh one2 = terminalPsh(iv);
  CHECK(isLocalFibration(terminalMor(r.psh, one2)).ok);

  Psh big_ci = constantPsh(ci, bz(2));
  Psh one_ci = terminalPsh(ci);
  LocalReport lr = isLocalFibration(terminalMor(big_ci, one_ci));
  CHECK(!lr.ok);
  CHECK(lr.witness_cover.obj == byLabel(ci, "S"));
  CHECK(lr.witness_cover.cover == 1);
}

TEST_CASE("between stacks local and global fibrations agree") {
  site::Site iv = site::intervalTwoChartSite();
  Psh big = constantPsh(iv, bz(2));
  Psh one = terminalPsh(iv);
  Representable rc = representablePsh(iv, byLabel(iv, "C"));
  Representable ri = representablePsh(iv, byLabel(iv, "I"));

  PshMor down = terminalMor(big, one);
  CHECK(isGlobalFibration(down).ok == isLocalFibration(down).ok);

  PshMor incl = yonedaMor(rc, ri.psh, 0);
  REQUIRE(incl.validate().empty());
  CHECK(isGlobalFibration(incl).ok == isLocalFibration(incl).ok);

  PshMor up;
  up.X = &one;
  up.Y = &big;
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    grpd::Functor c;
    c.A = one.stage[static_cast<size_t>(u)].get();
    c.B = big.stage[static_cast<size_t>(u)].get();
    c.on_obj = {0};
    c.on_mor = {big.at(u).identity(0)};
    up.comp.push_back(std::move(c));
  }
  CHECK(isGlobalFibration(up).ok == isLocalFibration(up).ok);
}

TEST_CASE("local weq: stack route, sheaf route and a failing sample") {
  site::Site iv = site::intervalTwoChartSite();
  site::Site ci = site::circleThreeArcSite();

  Psh big_iv = constantPsh(iv, bz(2));
  CHECK(isLocalWeq(identityPshMor(big_iv)).ok);

  Psh big_ci = constantPsh(ci, bz(2));
  CHECK(isLocalWeq(identityPshMor(big_ci)).ok);

  Representable ri = representablePsh(iv, byLabel(iv, "I"));
  Id L = byLabel(iv, "L");
  Id R = byLabel(iv, "R");
  CechReplacement vc = cechReplacement(ri.psh, {{L, 0}, {R, 0}});
  CHECK(!isStack(*vc.psh).ok);
  CHECK(isLocalWeq(vc.q).ok);

  Representable rl = representablePsh(iv, L);
  Psh one = terminalPsh(iv);
  LocalReport bad = isLocalWeq(terminalMor(rl.psh, one));
  CHECK(!bad.ok);
  CHECK(bad.witness_obj == byLabel(iv, "I"));
  CHECK(!bad.detail.empty());
}

TEST_CASE("homotopy fiber over the terminal presheaf is the product") {
  site::Site iv = site::intervalTwoChartSite();
  Psh big = constantPsh(iv, bz(2));
  Psh one = terminalPsh(iv);
  PshMor down = terminalMor(big, one);

  HofibPsh hf = hofibPresheaf(down, down);
  ProductPsh pr = productPsh(big, big);
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    CHECK(hf.psh->at(u).objects() == pr.psh.at(u).objects());
    CHECK(hf.psh->at(u).morphisms() == pr.psh.at(u).morphisms());
  }
  CHECK(isStack(*hf.psh).ok);
}

TEST_CASE("homotopy fiber of stacks is a stack") {
  site::Site iv = site::intervalTwoChartSite();
  Representable ri = representablePsh(iv, byLabel(iv, "I"));
  Representable rc = representablePsh(iv, byLabel(iv, "C"));
  Representable rr = representablePsh(iv, byLabel(iv, "R"));
  PshMor f1 = yonedaMor(rc, ri.psh, 0);
  PshMor f2 = yonedaMor(rr, ri.psh, 0);
  HofibPsh hf = hofibPresheaf(f1, f2);
  CHECK(isStack(*hf.psh).ok);
  CHECK(isLocalFibration(hf.proj1).ok);
}

TEST_CASE("with one leg a local fibration the strict fiber product is equivalent") {
  site::Site iv = site::intervalTwoChartSite();
  Psh big = constantPsh(iv, bz(2));
  Representable ri = representablePsh(iv, byLabel(iv, "I"));
  PshMor f1 = identityPshMor(big);
  PshMor f2 = yonedaMor(ri, big, 0);
  REQUIRE(isLocalFibration(f1).ok);

  HofibPsh hf = hofibPresheaf(f1, f2);

  Psh strict;
  strict.on = &iv;
  std::vector<grpd::StrictFiberProduct> st;
  for (Id u = 0; u < iv.cat.objects(); ++u) {
    st.push_back(grpd::strictFiberProduct(f1.comp[static_cast<size_t>(u)],
                                          f2.comp[static_cast<size_t>(u)]));
    strict.stage.push_back(st.back().grpd);
  }
  auto strictObj = [&](Id u, Id x, Id y) {
    const auto& od = st[static_cast<size_t>(u)].obj_data;
    for (size_t i = 0; i < od.size(); ++i)
      if (od[i] == std::make_pair(x, y)) return static_cast<Id>(i);
    return grpd::kNone;
  };
  auto strictMor = [&](Id u, Id g, Id h) {
    const auto& md = st[static_cast<size_t>(u)].mor_data;
    for (size_t i = 0; i < md.size(); ++i)
      if (md[i] == std::make_pair(g, h)) return static_cast<Id>(i);
    return grpd::kNone;
  };
  for (Id m = 0; m < iv.cat.morphisms(); ++m) {
    Id u = iv.cat.dst(m), v = iv.cat.src(m);
    grpd::Functor r;
    r.A = strict.stage[static_cast<size_t>(u)].get();
    r.B = strict.stage[static_cast<size_t>(v)].get();
    for (const auto& [x, y] : st[static_cast<size_t>(u)].obj_data)
      r.on_obj.push_back(strictObj(v, big.res(m).obj(x), ri.psh.res(m).obj(y)));
    for (const auto& [g, h] : st[static_cast<size_t>(u)].mor_data)
      r.on_mor.push_back(strictMor(v, big.res(m).mor(g), ri.psh.res(m).mor(h)));
    strict.restriction.push_back(std::move(r));
  }
  REQUIRE(strict.validate().empty());

  PshMor cmp;
  cmp.X = &strict;
  cmp.Y = hf.psh.get();
  for (Id u = 0; u < iv.cat.objects(); ++u)
    cmp.comp.push_back(
        grpd::strictToHomotopyComparison(st[static_cast<size_t>(u)], hf.stage[static_cast<size_t>(u)]));
  REQUIRE(cmp.validate().empty());
  CHECK(isLocalWeq(cmp).ok);
}
