#include "doctest.h"
#include "serreq/testkit.hpp"
#include "serreq/zmod.hpp"

using namespace serreq;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Integer(v[i * c + j]);
  return m;
}

}  // namespace

TEST_CASE("object equality is presentation-normalized") {
  auto cat = ZModCategory::create();
  CHECK(cat->objects_equal(cat->object(2, mat(2, 2, {2, 0, 0, 1})),
                           cat->object(2, mat(2, 2, {0, 1, 2, 0}))));
  CHECK(cat->objects_equal(cat->object(1, mat(1, 1, {2})),
                           cat->object(1, mat(1, 1, {-2}))));
  CHECK(!cat->objects_equal(cat->cyclic(2), cat->cyclic(4)));
  CHECK(cat->is_zero_object(cat->cyclic(1)));
  CHECK(cat->is_zero_object(cat->free_object(0)));
  CHECK(!cat->is_zero_object(cat->cyclic(0)));  // ℤ
}

TEST_CASE("well-definedness check") {
  auto cat = ZModCategory::create();
  auto z2 = cat->cyclic(2);
  auto z4 = cat->cyclic(4);
  // ℤ/2 → ℤ/4, 1 ↦ 2 is fine; 1 ↦ 1 is not.
  CHECK_NOTHROW(cat->morphism(z2, z4, mat(1, 1, {2})));
  CHECK_THROWS_AS(cat->morphism(z2, z4, mat(1, 1, {1})), UsageError);
  CHECK(!cat->is_well_defined(cat->candidate(z2, z4, mat(1, 1, {1}))));
}

TEST_CASE("kernel and cokernel of multiplication maps") {
  auto cat = ZModCategory::create();
  auto z = cat->free_object(1);
  auto x4 = cat->morphism(z, z, mat(1, 1, {4}));
  SubObject k = cat->kernel(x4);
  CHECK(cat->is_zero_object(k.object));
  QuotObject c = cat->cokernel(x4);
  CHECK(cat->objects_equal(c.object, cat->cyclic(4)));

  // kernel of the projection ℤ → ℤ/4 is 4ℤ ≅ ℤ embedded by ×4
  auto proj = cat->morphism(z, cat->cyclic(4), mat(1, 1, {1}));
  SubObject kp = cat->kernel(proj);
  CHECK(cat->objects_equal(kp.object, z));
  bool emb_is_times_4 =
      cat->is_equal(kp.embedding, cat->morphism(kp.object, z, mat(1, 1, {4}))) ||
      cat->is_equal(kp.embedding, cat->morphism(kp.object, z, mat(1, 1, {-4})));
  CHECK(emb_is_times_4);
}

TEST_CASE("mono_lift and epi_colift on scalars") {
  auto cat = ZModCategory::create();
  auto z = cat->free_object(1);
  auto x2 = cat->morphism(z, z, mat(1, 1, {2}));
  auto x6 = cat->morphism(z, z, mat(1, 1, {6}));
  CHECK(cat->is_equal(cat->mono_lift(x2, x6),
                      cat->morphism(z, z, mat(1, 1, {3}))));
  CHECK_THROWS_AS(cat->mono_lift(x2, cat->morphism(z, z, mat(1, 1, {3}))),
                  PreconditionError);

  auto z3 = cat->cyclic(3);
  auto eps = cat->morphism(z, z3, mat(1, 1, {1}));
  auto eta = cat->morphism(z, z3, mat(1, 1, {2}));
  auto colift = cat->epi_colift(eps, eta);
  CHECK(cat->is_equal(cat->compose(eps, colift), eta));
}

TEST_CASE("torsion subcategory membership") {
  auto cat = ZModCategory::create();
  ThickSubcategory torsion = torsion_subcategory(cat);
  CHECK(torsion.contains(cat->cyclic(5)));
  CHECK(torsion.contains(cat->object(2, mat(2, 2, {2, 0, 0, 3}))));
  CHECK(!torsion.contains(cat->free_object(1)));
  CHECK(!torsion.contains(cat->object(2, mat(1, 2, {2, 0}))));
  CHECK(torsion.contains(cat->free_object(0)));
}

TEST_CASE("rationalize strips torsion") {
  auto cat = ZModCategory::create();
  // ℤ ⊕ ℤ/2 presented on two generators
  auto m = cat->object(2, mat(1, 2, {0, 2}));
  auto z = cat->free_object(1);
  auto phi = cat->morphism(m, z, mat(2, 1, {3, 0}));
  QMatrix r = rationalize(phi);
  REQUIRE(r.rows() == 1);
  REQUIRE(r.cols() == 1);
  CHECK((r.at(0, 0) == Rational(3) || r.at(0, 0) == Rational(-3)));
}

TEST_CASE("minimal_presentation produces SNF form with inverse isos") {
  auto cat = ZModCategory::create();
  auto m = cat->object(3, mat(2, 3, {2, 4, 0, 6, 8, 0}));
  MinimalPresentation mp = minimal_presentation(cat, m);
  CHECK(cat->objects_equal(mp.object, m));
  CHECK(cat->is_equal(cat->compose(mp.to_min, mp.from_min),
                      cat->identity(m)));
  CHECK(cat->is_equal(cat->compose(mp.from_min, mp.to_min),
                      cat->identity(mp.object)));
  const FgAbGroup& g = cat->group_of(mp.object);
  for (std::size_t i = 0; i < g.relations.rows(); ++i)
    for (std::size_t j = 0; j < g.relations.cols(); ++j)
      if (i != j) CHECK(g.relations.at(i, j) == 0);
}

TEST_CASE("zmod axiom suite smoke run") {
  auto cat = ZModCategory::create();
  AxiomSuiteResult r = run_axiom_suite(zmod_sampler(cat), 65, test_seed());
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
}
