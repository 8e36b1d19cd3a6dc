#include <doctest.h>

#include <memory>
#include <random>

#include "stackcore/internal_hom.hpp"
#include "stackcore/model.hpp"
#include "stackcore/over.hpp"
#include "stackcore/presheaf.hpp"
#include "stackcore/site.hpp"
#include "stackcore/stackcheck.hpp"
#include "support/fuzz.hpp"

using namespace stk;
using namespace stk::psh;

namespace {

grpd::Id byLabel(const site::Site& s, const std::string& l) {
  for (grpd::Id u = 0; u < s.cat.objects(); ++u)
    if (s.cat.objLabel(u) == l) return u;
  return grpd::kNone;
}

grpd::Groupoid bz(int n) { return grpd::deloopOpposite(grpd::FinGroup::cyclic(n)); }

bool sameTables(const PshMor& a, const PshMor& b) {
  for (size_t u = 0; u < a.comp.size(); ++u)
    if (a.comp[u].on_obj != b.comp[u].on_obj || a.comp[u].on_mor != b.comp[u].on_mor) return false;
  return true;
}

// One object, one identity, only the trivial cover.
site::Site pointSite() {
  site::Site s;
  s.cat = site::Category::make(1, {{0, 0}}, {0}, {}, {"pt"}, {"id"});
  s.pt = 0;
  site::Cover c;
  c.base = 0;
  c.member_obj = {0};
  c.member_mor = {0};
  s.covers_of = {{c}};
  s.refines_of = {{}};
  REQUIRE(s.validate().empty());
  return s;
}

PshMor pickObjectMor(const Psh& X, const Psh& K, grpd::Id z) {
  PshMor f;
  f.X = &X;
  f.Y = &K;
  for (size_t u = 0; u < X.stage.size(); ++u) {
    grpd::Functor c;
    c.A = X.stage[u].get();
    c.B = K.stage[u].get();
    c.on_obj.assign(static_cast<size_t>(X.stage[u]->objects()), z);
    c.on_mor.assign(static_cast<size_t>(X.stage[u]->morphisms()), K.stage[u]->identity(z));
    f.comp.push_back(c);
  }
  REQUIRE(f.validate().empty());
  return f;
}

struct TwoChartInterval {
  site::Site iv = site::intervalTwoChartSite();
  Representable ri;
  CechReplacement rep;
  TwoChartInterval() {
    grpd::Id I = byLabel(iv, "I"), L = byLabel(iv, "L"), R = byLabel(iv, "R");
    ri = representablePsh(iv, I);
    CechChart cl{L, ri.obj_of_mor[(size_t)iv.cat.hom(L, I)[0]]};
    CechChart cr{R, ri.obj_of_mor[(size_t)iv.cat.hom(R, I)[0]]};
    rep = cechReplacement(ri.psh, {cl, cr});
  }
};

}  // namespace

TEST_CASE("full image of a stage-wise surjective full morphism is the whole base") {
  auto ci = site::circleThreeArcSite();
  auto k = constantPsh(ci, bz(2));
  auto o = overObject(identityPshMor(k));
  auto im = fullImage(o);
  for (grpd::Id u = 0; u < ci.cat.objects(); ++u) {
    CHECK(im.im.psh->at(u).objects() == k.at(u).objects());
    CHECK(im.im.psh->at(u).morphisms() == k.at(u).morphisms());
    CHECK(grpd::checkIsomorphism(im.to_im.comp[(size_t)u]).ok);
  }
  CHECK(sameTables(composePshMor(im.im.incl, im.to_im), o.map));

  auto e = emptyPsh(ci);
  auto oe = overObject(terminalMor(e, k));
  auto ime = fullImage(oe);
  for (grpd::Id u = 0; u < ci.cat.objects(); ++u) CHECK(ime.im.psh->at(u).objects() == 0);
}

TEST_CASE("full sub-presheaf construction rejects subsets open under restriction") {
  auto iv = site::intervalTwoChartSite();
  auto ri = representablePsh(iv, byLabel(iv, "I"));
  std::vector<std::vector<grpd::Id>> objs((size_t)iv.cat.objects());
  objs[(size_t)byLabel(iv, "I")] = {0};
  CHECK_THROWS_AS(fullSubPsh(ri.psh, objs), grpd::StructuralError);
}

TEST_CASE("a glued chart image lies in the one-image but not the full image") {
  TwoChartInterval t;
  grpd::Id I = byLabel(t.iv, "I"), L = byLabel(t.iv, "L"), R = byLabel(t.iv, "R"),
           C = byLabel(t.iv, "C"), PT = byLabel(t.iv, "pt");
  auto o = overObject(t.rep.q);
  auto im = fullImage(o);
  auto im1 = oneImage(o);

  CHECK(im.im.obj_of_sub[(size_t)I].empty());
  CHECK(im.im.obj_of_sub[(size_t)L].size() == 1);
  CHECK(im.im.obj_of_sub[(size_t)R].size() == 1);
  CHECK(im.im.obj_of_sub[(size_t)C].size() == 1);
  CHECK(im.im.obj_of_sub[(size_t)PT].empty());
  CHECK(im1.im.obj_of_sub[(size_t)I].size() == 1);
  CHECK(im1.im.obj_of_sub[(size_t)L].size() == 1);
  CHECK(im1.im.obj_of_sub[(size_t)C].size() == 1);
  CHECK(sameTables(composePshMor(im.im.incl, im.to_im), t.rep.q));
  CHECK(sameTables(composePshMor(im1.im.incl, im1.to_im), t.rep.q));

  CHECK_FALSE(isStack(*im.im.psh).ok);
  CHECK(imVsOneImageWeq(o).ok);

  auto local1 = isSMinusOneLocal(im1.im.over());
  CHECK(local1.ok);
  auto local0 = isSMinusOneLocal(im.im.over());
  CHECK_FALSE(local0.ok);
  CHECK(local0.detail.find("local fibration") != std::string::npos);
}

TEST_CASE("identity slice objects are fibrant in the truncated slice") {
  auto ci = site::circleThreeArcSite();
  auto k = constantPsh(ci, bz(2));
  CHECK(isLocalFibration(identityPshMor(k)).ok);
  CHECK(isSMinusOneLocal(overObject(identityPshMor(k))).ok);

  auto dp = site::discretePointSite(2);
  auto x = constantPsh(dp, bz(2));
  auto sh = sharpPsh(x);
  CHECK_FALSE(isSMinusOneLocal(overObject(zetaMor(x, sh))).ok);
}

TEST_CASE("one-image on a trivial-cover site is the essential image") {
  auto ps = pointSite();
  auto one = constantPsh(ps, grpd::terminalGroupoid());

  auto k_disc = constantPsh(ps, grpd::discreteGroupoid(2));
  auto od = overObject(pickObjectMor(one, k_disc, 0));
  auto imd = fullImage(od);
  auto im1d = oneImage(od);
  CHECK(imd.im.obj_of_sub[0] == std::vector<grpd::Id>{0});
  CHECK(im1d.im.obj_of_sub[0] == std::vector<grpd::Id>{0});

  auto k_ind = constantPsh(ps, grpd::indiscreteGroupoid(2));
  auto oi = overObject(pickObjectMor(one, k_ind, 0));
  auto imi = fullImage(oi);
  auto im1i = oneImage(oi);
  CHECK(imi.im.obj_of_sub[0] == std::vector<grpd::Id>{0});
  CHECK(im1i.im.obj_of_sub[0] == std::vector<grpd::Id>{0, 1});
  auto can = inducedSubMor(imi.im, im1i.im, identityPshMor(k_ind));
  CHECK(grpd::checkWeakEquivalence(can.comp[0]).ok);
  CHECK(imVsOneImageWeq(oi).ok);
}

TEST_CASE("sheafified component surjections certify truncated equivalences") {
  TwoChartInterval t;
  auto o = overObject(t.rep.q);
  CHECK(pi0Epi(oneImage(o).to_im));
  CHECK(pi0Epi(fullImage(o).to_im));
  CHECK(pi0Epi(t.rep.q));

  auto one = constantPsh(t.iv, grpd::terminalGroupoid());
  auto two = constantPsh(t.iv, grpd::discreteGroupoid(2));
  CHECK_FALSE(pi0Epi(pickObjectMor(one, two, 0)));
}

TEST_CASE("slice mapping groupoids into image targets are empty or a point") {
  TwoChartInterval t;
  auto o = overObject(t.rep.q);
  auto im = fullImage(o);
  auto target = im.im.over();

  auto self = sliceMapping(target, target);
  CHECK(self.objs.size() == 1);
  CHECK(self.mors.size() == 1);
  CHECK(self.emptyOrPoint());

  auto from_total = sliceMapping(o, target);
  CHECK(from_total.objs.size() == 1);
  CHECK(from_total.emptyOrPoint());
  CHECK(sameTables(from_total.objs[0], im.to_im));

  auto one = constantPsh(t.iv, grpd::terminalGroupoid());
  auto two = constantPsh(t.iv, grpd::discreteGroupoid(2));
  auto oo = overObject(pickObjectMor(one, two, 0));
  std::vector<std::vector<grpd::Id>> other((size_t)t.iv.cat.objects(), {1});
  auto sub_other = fullSubPsh(two, other);
  auto disjoint = sliceMapping(oo, sub_other.over());
  CHECK(disjoint.objs.empty());
  CHECK(disjoint.emptyOrPoint());
}

TEST_CASE("slice mapping over the terminal base is the plain mapping groupoid") {
  auto ps = pointSite();
  auto x = constantPsh(ps, bz(3));
  auto term = terminalPsh(ps);
  auto a = overObject(terminalMor(x, term));
  auto mg = sliceMapping(a, a);
  CHECK(mg.objs.size() == 3);
  CHECK(mg.mors.size() == 9);
  CHECK_FALSE(mg.emptyOrPoint());
}

TEST_CASE("base change along local weak equivalences preserves both images") {
  TwoChartInterval t;
  auto o = overObject(t.rep.q);
  CHECK(baseChangeWeq(o, identityPshMor(t.ri.psh)).ok);

  auto oc = overObject(identityPshMor(*t.rep.psh));
  auto bc = baseChangeWeq(oc, t.rep.q);
  CHECK(bc.ok);
  CHECK(bc.im.ok);
  CHECK(bc.im1.ok);

  auto gf = overObject(composePshMor(t.rep.q, oc.map));
  auto im_f = fullImage(oc), im_gf = fullImage(gf);
  auto im1_f = oneImage(oc), im1_gf = oneImage(gf);
  auto v_im = inducedSubMor(im_f.im, im_gf.im, t.rep.q);
  auto v_im1 = inducedSubMor(im1_f.im, im1_gf.im, t.rep.q);
  auto h_f = inducedSubMor(im_f.im, im1_f.im, identityPshMor(*t.rep.psh));
  auto h_gf = inducedSubMor(im_gf.im, im1_gf.im, identityPshMor(t.ri.psh));
  CHECK(sameTables(composePshMor(v_im1, h_f), composePshMor(h_gf, v_im)));
  CHECK(sameTables(composePshMor(v_im, im_f.to_im), im_gf.to_im));

  auto one = constantPsh(t.iv, grpd::terminalGroupoid());
  auto two = constantPsh(t.iv, grpd::discreteGroupoid(2));
  auto bad = pickObjectMor(one, two, 0);
  CHECK_THROWS_AS(baseChangeWeq(overObject(identityPshMor(one)), bad), grpd::StructuralError);
}

TEST_CASE("fuzzed slice instances satisfy the truncation laws") {
  auto iv = site::intervalTwoChartSite();
  auto ci = site::circleThreeArcSite();
  auto dp = site::discretePointSite(2);
  const site::Site* sites[] = {&iv, &ci, &dp};

  std::mt19937 rng(20250815u);
  int done = 0;
  for (int round = 0; done < 12 && round < 200; ++round) {
    const auto& s = *sites[round % 3];
    auto inst = testsupport::randomSliceInstance(s, rng);
    if (!inst) continue;
    ++done;
    auto o = overObject(inst->f);
    auto im1 = oneImage(o);
    CHECK(isSMinusOneLocal(im1.im.over()).ok);
    CHECK(pi0Epi(im1.to_im));
    CHECK(imVsOneImageWeq(o).ok);
    auto imz = fullImage(overObject(inst->g));
    CHECK(sliceMapping(o, imz.im.over()).emptyOrPoint());
  }
  CHECK(done == 12);
}
