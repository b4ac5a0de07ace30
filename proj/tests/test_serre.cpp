#include "doctest.h"
#include "serreq/serre.hpp"
#include "serreq/testkit.hpp"
#include "serreq/zmod.hpp"

using namespace serreq;

namespace {

IntMatrix mat1(long long v) {
  IntMatrix m(1, 1);
  m.at(0, 0) = Integer(v);
  return m;
}

struct Fixture {
  std::shared_ptr<ZModCategory> cat = ZModCategory::create();
  ThickSubcategory torsion = torsion_subcategory(cat);
  ObjectRef z = cat->free_object(1);

  MorphismRef scalar(long long v) { return cat->morphism(z, z, mat1(v)); }
};

}  // namespace

TEST_CASE("lift of x6 along x4 modulo torsion") {
  Fixture fx;
  GeneralizedMorphism lift = lift_gabriel(honest_of(fx.scalar(6)),
                                          honest_of(fx.scalar(4)), fx.torsion);
  CHECK(is_gabriel(lift, fx.torsion));
  GeneralizedMorphism expected = make_generalized(
      fx.scalar(2), fx.scalar(3), fx.cat->identity(fx.z));
  CHECK(equal_gen(lift, expected));
  // and it composes back to ×6 in the quotient
  CHECK(serre_equal(compose_gen(lift, honest_of(fx.scalar(4))),
                    honest_of(fx.scalar(6)), fx.torsion));
}

TEST_CASE("lift preconditions fail with named obstructions") {
  Fixture fx;
  // beta = 0 has free kernel: not a quotient mono
  CHECK_THROWS_WITH_AS(
      lift_gabriel(honest_of(fx.scalar(6)),
                   zero_gen(fx.z, fx.z), fx.torsion),
      doctest::Contains("not liftable modulo C"), PreconditionError);
  // gamma onto ℤ does not factor through the image of ℤ --0--> ℤ⊕ℤ/0...
  auto z2 = fx.cat->direct_sum(fx.z, fx.z);
  auto beta = fx.cat->morphism(fx.z, z2.object, [] {
    IntMatrix m(1, 2);
    m.at(0, 0) = 1;
    return m;
  }());
  auto gamma = fx.cat->morphism(fx.z, z2.object, [] {
    IntMatrix m(1, 2);
    m.at(0, 1) = 1;
    return m;
  }());
  CHECK_THROWS_WITH_AS(
      lift_gabriel(honest_of(gamma), honest_of(beta), fx.torsion),
      doctest::Contains("does not factor"), PreconditionError);
}

TEST_CASE("colift of identity along x4 acts as one quarter") {
  Fixture fx;
  GeneralizedMorphism colift = colift_gabriel(
      honest_of(fx.cat->identity(fx.z)), honest_of(fx.scalar(4)), fx.torsion);
  CHECK(is_gabriel(colift, fx.torsion));
  CHECK(serre_equal(compose_gen(honest_of(fx.scalar(4)), colift),
                    honest_of(fx.cat->identity(fx.z)), fx.torsion));
  QMatrix r = rationalize(colift);
  REQUIRE(r.rows() == 1);
  CHECK(r.at(0, 0) == Rational(1, 4));
}

TEST_CASE("serre_equal identifies morphisms differing by torsion") {
  Fixture fx;
  auto z2 = fx.cat->cyclic(2);
  auto proj = fx.cat->morphism(fx.z, z2, mat1(1));
  auto zero = fx.cat->zero_morphism(fx.z, z2);
  CHECK(!fx.cat->is_equal(proj, zero));
  CHECK(serre_equal(honest_of(proj), honest_of(zero), fx.torsion));
  CHECK(!serre_equal(honest_of(fx.scalar(2)), honest_of(fx.scalar(3)),
                     fx.torsion));
  CHECK_THROWS_AS(serre_equal(honest_of(proj), honest_of(fx.scalar(1)),
                              fx.torsion),
                  UsageError);
}

TEST_CASE("is_quotient_iso detects torsion-only defects") {
  Fixture fx;
  CHECK(is_quotient_iso(honest_of(fx.scalar(5)), fx.torsion));
  CHECK(!is_quotient_iso(zero_gen(fx.z, fx.z), fx.torsion));
  auto proj = fx.cat->morphism(fx.z, fx.cat->cyclic(4), mat1(1));
  CHECK(!is_quotient_iso(honest_of(proj), fx.torsion));
}

TEST_CASE("rationalization is an equality oracle for the torsion quotient") {
  Fixture fx;
  Rng rng(test_seed() + 10);
  Sampler s = zmod_sampler(fx.cat);
  int disagreements = 0;
  for (int it = 0; it < 40; ++it) {
    auto pair = random_parallel_gabriel(rng, s, 2);
    bool eq = serre_equal(pair[0], pair[1], fx.torsion);
    bool rational_eq = rationalize(pair[0]) == rationalize(pair[1]);
    if (eq != rational_eq) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("inverse monoid laws in the Gabriel calculus") {
  Fixture fx;
  Rng rng(test_seed() + 11);
  Sampler s = zmod_sampler(fx.cat);
  for (int it = 0; it < 25; ++it) {
    auto pair = random_parallel_gabriel(rng, s, 2);
    const GeneralizedMorphism& psi = pair[0];
    const GeneralizedMorphism& phi = pair[1];
    // psi - psi + psi = psi
    CHECK(serre_equal(add_gen(add_gen(psi, psi, -1), psi, +1), psi,
                      fx.torsion));
    // idempotents commute
    GeneralizedMorphism e1 = associated_idempotent(psi);
    GeneralizedMorphism e2 = associated_idempotent(phi);
    CHECK(serre_equal(add_gen(e1, e2, +1), add_gen(e2, e1, +1), fx.torsion));
    // the zeroid absorbs composition on both sides
    CHECK(in_zeroid(e1, fx.torsion));
    GeneralizedMorphism tail = random_gabriel(rng, s);
    GeneralizedMorphism glue =
        zero_gen(psi.target, tail.source);
    CHECK(in_zeroid(compose_gen(e1, compose_gen(glue, tail)), fx.torsion));
    GeneralizedMorphism head = random_gabriel(rng, s);
    CHECK(in_zeroid(
        compose_gen(head, compose_gen(zero_gen(head.target, psi.source), e1)),
        fx.torsion));
  }
}

TEST_CASE("quotient category basics and axiom smoke run") {
  Fixture fx;
  auto q = SerreQuotientCategory::create(fx.torsion);
  CHECK(q->name() == "zmod/torsion");
  CHECK(q->is_zero_object(q->from_base(fx.cat->cyclic(6))));
  CHECK(!q->is_zero_object(q->from_base(fx.z)));
  // ×5 becomes invertible in the quotient
  auto x5 = q->from_base_morphism(fx.scalar(5));
  CHECK(q->is_iso(x5));
  auto inv = q->inverse_of_iso(x5);
  CHECK(q->is_equal(q->compose(x5, inv), q->identity(x5.source())));

  Sampler s = quotient_sampler(q, zmod_sampler(fx.cat));
  AxiomSuiteResult r = run_axiom_suite(s, 40, test_seed());
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
}
