#include <doctest.h>

#include <memory>

#include "oracles/brute.hpp"
#include "oracles/cech_circle.hpp"
#include "stackcore/limits.hpp"
#include "stackcore/model.hpp"

using namespace stk::grpd;

TEST_CASE("descent of a constant diagram recovers the input") {
  auto g = std::make_shared<Groupoid>(connectedGroupoid(2, FinGroup::cyclic(3)));
  auto d = constantCosimplicial(*g);
  REQUIRE(d.validate().empty());

  auto h = holimDescent(d);
  REQUIRE(h.grpd->validate().empty());
  CHECK(h.grpd->objects() == g->objects());
  CHECK(h.grpd->morphisms() == g->morphisms());

  auto c = descentComparison(h, d, identityFunctor(*d.g0));
  REQUIRE(c.validate().empty());
  CHECK(checkIsomorphism(c).ok);
}

TEST_CASE("circle cover diagram satisfies the cosimplicial identities") {
  auto circ = oracle::circleDiagram(FinGroup::cyclic(2));
  CHECK(circ.d.validate().empty());
  auto circ3 = oracle::circleDiagram(FinGroup::symmetric(3));
  CHECK(circ3.d.validate().empty());
}

TEST_CASE("descent over the circle counts gauge orbits of cocycles") {
  struct Row {
    FinGroup g;
    int expected_pi0;
  };
  const Row rows[] = {
      {FinGroup::cyclic(2), 2},
      {FinGroup::cyclic(3), 3},
  };
  for (const auto& row : rows) {
    const int n = row.g.n;
    auto circ = oracle::circleDiagram(row.g);
    auto h = holimDescent(circ.d);
    REQUIRE(h.grpd->validate().empty());
    CHECK(h.grpd->objects() == n * n * n);
    CHECK(h.grpd->morphisms() == h.grpd->objects() * n * n * n);
    const int orbits = pi0(*h.grpd).count;
    CHECK(orbits == row.expected_pi0);
    CHECK(orbits == oracle::circleCocycleOrbits(row.g));
    CHECK(orbits == oracle::conjugacyClassCount(row.g));
  }
}

TEST_CASE("circle comparison is fully faithful but not essentially surjective") {
  auto circ = oracle::circleDiagram(FinGroup::cyclic(2));
  auto h = holimDescent(circ.d);
  auto c = descentComparison(h, circ.d, circ.aug);
  REQUIRE(c.validate().empty());
  CHECK(checkFullyFaithful(c).ok);
  CHECK_FALSE(checkEssentiallySurjective(c).ok);
  CHECK_FALSE(checkWeakEquivalence(c).ok);
}

TEST_CASE("comparison rejects an augmentation that does not equalize") {
  auto circ = oracle::circleDiagram(FinGroup::cyclic(2));
  auto h = holimDescent(circ.d);
  auto skew = oracle::gatherFunctor(*circ.bg, *circ.d.g0, 2, {0, 0, 1}, 2);
  CHECK_THROWS_AS(descentComparison(h, circ.d, skew), StructuralError);
}

TEST_CASE("homotopy fiber product over the point is the plain product") {
  auto x = std::make_shared<Groupoid>(discreteGroupoid(2));
  auto y = std::make_shared<Groupoid>(deloopOpposite(FinGroup::cyclic(2)));
  auto pt = std::make_shared<Groupoid>(terminalGroupoid());
  Functor f1;
  f1.A = x.get();
  f1.B = pt.get();
  f1.on_obj = {0, 0};
  f1.on_mor = {0, 0};
  Functor f2;
  f2.A = y.get();
  f2.B = pt.get();
  f2.on_obj = {0};
  f2.on_mor = {0, 0};
  auto p = homotopyFiberProduct(f1, f2);
  REQUIRE(p.grpd->validate().empty());
  CHECK(p.grpd->objects() == x->objects() * y->objects());
  CHECK(p.grpd->morphisms() == x->morphisms() * y->morphisms());
  CHECK(checkFibration(p.proj1).ok);
  CHECK(checkFibration(p.proj2).ok);
}

TEST_CASE("loops of the point over a delooped group") {
  auto pt = std::make_shared<Groupoid>(terminalGroupoid());
  auto bz2 = std::make_shared<Groupoid>(deloopOpposite(FinGroup::cyclic(2)));
  Functor f;
  f.A = pt.get();
  f.B = bz2.get();
  f.on_obj = {0};
  f.on_mor = {bz2->identity(0)};
  auto p = homotopyFiberProduct(f, f);
  REQUIRE(p.grpd->validate().empty());
  CHECK(p.grpd->objects() == 2);
  CHECK(p.grpd->morphisms() == 2);
  CHECK(pi0(*p.grpd).count == 2);
}

TEST_CASE("strict to homotopy comparison is a weq when one leg fibrates") {
  auto x = std::make_shared<Groupoid>(deloopOpposite(FinGroup::cyclic(4)));
  auto z = std::make_shared<Groupoid>(deloopOpposite(FinGroup::cyclic(2)));
  auto y = std::make_shared<Groupoid>(indiscreteGroupoid(2));
  Functor f1;
  f1.A = x.get();
  f1.B = z.get();
  f1.on_obj = {0};
  f1.on_mor = {0, 1, 0, 1};
  REQUIRE(f1.validate().empty());
  Functor f2;
  f2.A = y.get();
  f2.B = z.get();
  f2.on_obj = {0, 0};
  f2.on_mor.assign(4, z->identity(0));
  REQUIRE(f2.validate().empty());
  REQUIRE(checkFibration(f1).ok);

  auto p = homotopyFiberProduct(f2, f1);
  auto s = strictFiberProduct(f2, f1);
  REQUIRE(p.grpd->validate().empty());
  REQUIRE(s.grpd->validate().empty());
  auto c = strictToHomotopyComparison(s, p);
  REQUIRE(c.validate().empty());
  CHECK(checkWeakEquivalence(c).ok);
}

TEST_CASE("strict comparison can fail without a fibration") {
  auto pt = std::make_shared<Groupoid>(terminalGroupoid());
  auto delta1 = std::make_shared<Groupoid>(intervalGroupoid());
  Functor at0;
  at0.A = pt.get();
  at0.B = delta1.get();
  at0.on_obj = {0};
  at0.on_mor = {delta1->identity(0)};
  Functor at1;
  at1.A = pt.get();
  at1.B = delta1.get();
  at1.on_obj = {1};
  at1.on_mor = {delta1->identity(1)};

  auto p = homotopyFiberProduct(at0, at1);
  auto s = strictFiberProduct(at0, at1);
  CHECK(s.grpd->objects() == 0);
  CHECK(p.grpd->objects() == 1);
  auto c = strictToHomotopyComparison(s, p);
  CHECK_FALSE(checkWeakEquivalence(c).ok);
}
