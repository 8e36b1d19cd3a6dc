#include <doctest.h>

#include <memory>

#include "stackcore/limits.hpp"
#include "stackcore/model.hpp"

using namespace stk::grpd;

namespace {

GroupoidPtr share(Groupoid g) { return std::make_shared<Groupoid>(std::move(g)); }

Functor pointInclusion(const Groupoid& pt, const Groupoid& b, Id obj) {
  Functor f;
  f.A = &pt;
  f.B = &b;
  f.on_obj = {obj};
  f.on_mor = {b.identity(obj)};
  return f;
}

}  // namespace

TEST_CASE("pushout along the identity returns the other foot") {
  auto bz2 = share(deloopOpposite(FinGroup::cyclic(2)));
  auto cz2 = share(connectedGroupoid(2, FinGroup::cyclic(2)));
  Functor incl;
  incl.A = bz2.get();
  incl.B = cz2.get();
  incl.on_obj = {0};
  incl.on_mor = {0, 1};
  REQUIRE(incl.validate().empty());

  auto p = pushoutAlongCofibration(identityFunctor(*bz2), incl);
  REQUIRE(p.grpd->validate().empty());
  CHECK(checkIsomorphism(p.inj_g2).ok);
}

TEST_CASE("pushout under the empty groupoid is the coproduct") {
  auto e = share(emptyGroupoid());
  auto h = share(connectedGroupoid(2, FinGroup::cyclic(2)));
  auto g2 = share(deloopOpposite(FinGroup::cyclic(3)));
  Functor f;
  f.A = e.get();
  f.B = h.get();
  Functor fp;
  fp.A = e.get();
  fp.B = g2.get();

  auto p = pushoutAlongCofibration(f, fp);
  REQUIRE(p.grpd->validate().empty());
  CHECK(p.grpd->objects() == h->objects() + g2->objects());
  CHECK(p.grpd->morphisms() == h->morphisms() + g2->morphisms());
  CHECK(checkCofibration(p.inj_h).ok);
  CHECK(checkCofibration(p.inj_g2).ok);
  CHECK(checkFullyFaithful(p.inj_h).ok);
  CHECK(checkFullyFaithful(p.inj_g2).ok);
}

TEST_CASE("interval glued to a delooped group at one end") {
  auto pt = share(terminalGroupoid());
  auto delta1 = share(intervalGroupoid());
  auto bz2 = share(deloopOpposite(FinGroup::cyclic(2)));
  auto f = pointInclusion(*pt, *delta1, 0);
  auto fp = pointInclusion(*pt, *bz2, 0);

  auto p = pushoutAlongCofibration(f, fp);
  REQUIRE(p.grpd->validate().empty());
  CHECK(p.grpd->objects() == 2);
  CHECK(p.grpd->morphisms() == 8);
  CHECK(pi0(*p.grpd).count == 1);
  for (Id x = 0; x < 2; ++x)
    for (Id y = 0; y < 2; ++y) CHECK(p.grpd->hom(x, y).size() == 2);

  auto t = share(connectedGroupoid(2, FinGroup::cyclic(2)));
  Functor c1;
  c1.A = p.h.get();
  c1.B = t.get();
  c1.on_obj = {0, 1};
  // interval morphisms encode as (src*2+dst); send the edges to the
  // group-unit connecting morphisms
  c1.on_mor = {t->identity(0), 2, 4, t->identity(1)};
  REQUIRE(c1.validate().empty());
  Functor c2;
  c2.A = p.g2.get();
  c2.B = t.get();
  c2.on_obj = {0};
  c2.on_mor = {0, 1};
  REQUIRE(c2.validate().empty());

  auto med = mediatingFunctor(p, c1, c2);
  REQUIRE(med.validate().empty());
  CHECK(composeFunctors(med, p.inj_h).on_mor == c1.on_mor);
  CHECK(composeFunctors(med, p.inj_g2).on_mor == c2.on_mor);

  int satisfying = 0;
  for (const auto& cand : enumerateFunctors(*p.grpd, *t, 1'000'000)) {
    if (composeFunctors(cand, p.inj_h).on_mor == c1.on_mor &&
        composeFunctors(cand, p.inj_h).on_obj == c1.on_obj &&
        composeFunctors(cand, p.inj_g2).on_mor == c2.on_mor &&
        composeFunctors(cand, p.inj_g2).on_obj == c2.on_obj)
      ++satisfying;
  }
  CHECK(satisfying == 1);
}

TEST_CASE("mediating functor rejects a non commuting cocone") {
  auto pt = share(terminalGroupoid());
  auto delta1 = share(intervalGroupoid());
  auto bz2 = share(deloopOpposite(FinGroup::cyclic(2)));
  auto p = pushoutAlongCofibration(pointInclusion(*pt, *delta1, 0),
                                   pointInclusion(*pt, *bz2, 0));

  auto t = share(connectedGroupoid(2, FinGroup::cyclic(2)));
  Functor c1;
  c1.A = p.h.get();
  c1.B = t.get();
  c1.on_obj = {0, 1};
  c1.on_mor = {t->identity(0), 2, 4, t->identity(1)};
  REQUIRE(c1.validate().empty());
  Functor c2;
  c2.A = p.g2.get();
  c2.B = t.get();
  c2.on_obj = {1};
  c2.on_mor = {t->identity(1), 7};
  REQUIRE(c2.validate().empty());
  CHECK_THROWS_AS(mediatingFunctor(p, c1, c2), StructuralError);
}

TEST_CASE("gluing two intervals along both endpoints does not stay finite") {
  auto d2 = share(discreteGroupoid(2));
  auto delta1 = share(intervalGroupoid());
  Functor ends;
  ends.A = d2.get();
  ends.B = delta1.get();
  ends.on_obj = {0, 1};
  ends.on_mor = {delta1->identity(0), delta1->identity(1)};
  REQUIRE(ends.validate().empty());
  CHECK_THROWS_AS(pushoutAlongCofibration(ends, ends, 120), EnumerationOverflow);
}

TEST_CASE("pushout requires an object injective first leg") {
  auto d2 = share(discreteGroupoid(2));
  auto pt = share(terminalGroupoid());
  Functor collapse;
  collapse.A = d2.get();
  collapse.B = pt.get();
  collapse.on_obj = {0, 0};
  collapse.on_mor = {0, 0};
  CHECK_THROWS_AS(pushoutAlongCofibration(collapse, collapse), StructuralError);
}

TEST_CASE("explicit interval box model agrees with the saturated pushout") {
  auto pt = share(terminalGroupoid());
  auto bz2 = share(deloopOpposite(FinGroup::cyclic(2)));
  auto f = pointInclusion(*pt, *bz2, 0);

  auto jp = jPushoutProduct(f);
  REQUIRE(jp.p->validate().empty());
  CHECK(jp.p->objects() == 2);
  CHECK(jp.p->morphisms() == 8);
  REQUIRE(jp.box.validate().empty());
  CHECK(checkCofibration(jp.box).ok);
  CHECK(checkWeakEquivalence(jp.box).ok);
  CHECK(checkIsomorphism(jp.box).ok);

  auto j = makeJ();
  auto pp = pushoutProduct(f, j.j);
  REQUIRE(pp.pushout.grpd->validate().empty());
  CHECK(pp.pushout.grpd->objects() == jp.p->objects());
  CHECK(pp.pushout.grpd->morphisms() == jp.p->morphisms());
  REQUIRE(pp.box.validate().empty());
  CHECK(checkCofibration(pp.box).ok);
  CHECK(checkWeakEquivalence(pp.box).ok);
}

TEST_CASE("box of the point inclusion with the interval inclusion is again acyclic") {
  auto e = share(emptyGroupoid());
  auto pt = share(terminalGroupoid());
  Functor f;
  f.A = e.get();
  f.B = pt.get();

  auto jp = jPushoutProduct(f);
  CHECK(jp.p->objects() == 1);
  CHECK(jp.p->morphisms() == 1);
  CHECK(checkCofibration(jp.box).ok);
  CHECK(checkWeakEquivalence(jp.box).ok);
  CHECK_FALSE(checkIsomorphism(jp.box).ok);
}

TEST_CASE("interval box stays acyclic across a family of cofibrations") {
  auto pt = share(terminalGroupoid());
  auto delta1 = share(intervalGroupoid());
  auto d2 = share(discreteGroupoid(2));
  auto bz2 = share(deloopOpposite(FinGroup::cyclic(2)));
  auto cz2 = share(connectedGroupoid(2, FinGroup::cyclic(2)));

  std::vector<Functor> cofibs;
  cofibs.push_back(pointInclusion(*pt, *delta1, 0));
  cofibs.push_back(pointInclusion(*pt, *delta1, 1));
  cofibs.push_back(pointInclusion(*pt, *bz2, 0));
  {
    Functor ends;
    ends.A = d2.get();
    ends.B = delta1.get();
    ends.on_obj = {0, 1};
    ends.on_mor = {delta1->identity(0), delta1->identity(1)};
    cofibs.push_back(ends);
  }
  {
    Functor incl;
    incl.A = bz2.get();
    incl.B = cz2.get();
    incl.on_obj = {0};
    incl.on_mor = {0, 1};
    cofibs.push_back(incl);
  }
  for (const auto& f : cofibs) {
    REQUIRE(f.validate().empty());
    REQUIRE(checkCofibration(f).ok);
    auto jp = jPushoutProduct(f);
    REQUIRE(jp.p->validate().empty());
    REQUIRE(jp.box.validate().empty());
    CHECK(checkCofibration(jp.box).ok);
    CHECK(checkWeakEquivalence(jp.box).ok);
  }
}

TEST_CASE("object level box data matches the saturated pushout") {
  auto pt = share(terminalGroupoid());
  auto delta1 = share(intervalGroupoid());
  auto bz2 = share(deloopOpposite(FinGroup::cyclic(2)));
  auto f = pointInclusion(*pt, *delta1, 0);
  auto fp = pointInclusion(*pt, *bz2, 0);

  auto bo = pushoutProductObjects(f, fp);
  auto pp = pushoutProduct(f, fp);
  CHECK(bo.classes == pp.pushout.grpd->objects());
  CHECK(bo.injective == checkCofibration(pp.box).ok);
  CHECK(static_cast<Id>(bo.image.size()) == bo.classes);
}
