#include "doctest.h"
#include "serreq/grmod.hpp"
#include "serreq/testkit.hpp"

using namespace serreq;

namespace {

GradedModule quotient_module(const RingPtr& ring,
                             std::vector<std::string> relations) {
  GradedModule m;
  m.ring = ring;
  m.gen_degrees.push_back(DegreeVector(ring->grading_rank(), 0));
  for (const auto& r : relations)
    m.relations.push_back(parse_poly(ring, 1, r));
  return m;
}

Integer binom(long long n, long long k) {
  Integer r = 1;
  for (long long i = 0; i < k; ++i) r = r * Integer(n - i) / Integer(i + 1);
  return r;
}

}  // namespace

TEST_CASE("hilbert function of the full polynomial ring") {
  RingPtr ring = standard_ring({"x", "y", "z"});
  GradedModule s = quotient_module(ring, {});
  for (long long d = 0; d <= 10; ++d)
    CHECK(hilbert_function(s, d) == binom(d + 2, 2));
  CHECK(hilbert_function(s, -1) == 0);
}

TEST_CASE("hilbert series of small quotients") {
  RingPtr ring = standard_ring({"x", "y"});
  // S/(x): series (1-t)/(1-t)^2, numerator 1 - t
  LaurentPoly n1 = hilbert_series(quotient_module(ring, {"x"}));
  CHECK(n1 == LaurentPoly{{0, 1}, {1, -1}});
  // shifted free module S(-2): numerator t^2
  GradedModule shifted;
  shifted.ring = ring;
  shifted.gen_degrees.push_back(DegreeVector{2});
  CHECK(hilbert_series(shifted) == LaurentPoly{{2, 1}});
  // the Koszul complex of (x, y): numerator 1 - 2t + t^2
  CHECK(hilbert_series(quotient_module(ring, {"x", "y"})) ==
        LaurentPoly{{0, 1}, {1, -2}, {2, 1}});
}

TEST_CASE("hilbert series against brute monomial counting") {
  RingPtr ring = standard_ring({"x", "y", "z"});
  Rng rng(test_seed() + 30);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (int it = 0; it < 30; ++it) {
    // random monomial ideal with up to 3 generators
    std::vector<PolyVector> gens;
    GradedModule m = quotient_module(ring, {});
    for (int k = 0; k < 3; ++k) {
      Term t{0, {e(rng), e(rng), e(rng)}};
      if (t.exponents == std::vector<unsigned>{0, 0, 0}) continue;
      PolyVector v(ring, 1);
      v.set(t, Rational(1));
      m.relations.push_back(v);
    }
    for (long long d = 0; d <= 8; ++d) {
      // count standard monomials of degree d directly
      long long count = 0;
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) {
          unsigned c = static_cast<unsigned>(d) - a - b;
          Term t{0, {a, b, c}};
          bool divisible = false;
          for (const auto& r : m.relations)
            if (monomial_divides(r.terms().begin()->first, t))
              divisible = true;
          if (!divisible) ++count;
        }
      CHECK(hilbert_function(m, d) == count);
    }
  }
}

TEST_CASE("is_quasi_zero_proj") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr ring = standard_ring(vars);
    std::vector<std::string> all(vars.begin(), vars.end());
    CHECK(is_quasi_zero_proj(quotient_module(ring, all)));
    CHECK(!is_quasi_zero_proj(quotient_module(ring, {})));
    for (long long a = 1; a <= 3; ++a) {
      GradedModule shifted;
      shifted.ring = ring;
      shifted.gen_degrees.push_back(DegreeVector{-a});
      CHECK(!is_quasi_zero_proj(shifted));
    }
  }
  RingPtr ring = standard_ring({"x", "y"});
  CHECK(is_quasi_zero_proj(quotient_module(ring, {"x^2", "x*y", "y^3"})));
  CHECK(!is_quasi_zero_proj(quotient_module(ring, {"x"})));
}

TEST_CASE("kernel of the irrelevant-ideal evaluation map") {
  RingPtr ring = standard_ring({"x", "y"});
  auto cat = GrmodCategory::create(ring);
  auto s = cat->free_module({DegreeVector{0}});
  auto src = cat->free_module({DegreeVector{1}, DegreeVector{1}});
  auto phi = cat->morphism(src, s, {parse_poly(ring, 1, "x"),
                                    parse_poly(ring, 1, "y")});
  SubObject k = cat->kernel(phi);
  CHECK(cat->is_zero_morphism(cat->compose(k.embedding, phi)));
  CHECK(cat->is_mono(k.embedding));
  // the kernel is S(-2) embedded by the Koszul syzygy
  CHECK(cat->objects_equal(k.object, cat->free_module({DegreeVector{2}})));
  QuotObject c = cat->cokernel(phi);
  CHECK(cat->is_zero_object(
      cat->cokernel(cat->morphism(s, c.object,
                                  {parse_poly(ring, 1, "1")}))
          .object));
}

TEST_CASE("annihilator computations") {
  RingPtr ring = standard_ring({"x", "y"});
  auto ann1 = annihilator(quotient_module(ring, {"x^2 - y^2"}));
  REQUIRE(ann1.size() == 1);
  CHECK(ann1[0] == parse_poly(ring, 1, "x^2 - y^2"));

  // S/(x) ⊕ S/(y): annihilator (x) ∩ (y) = (xy)
  GradedModule sum;
  sum.ring = ring;
  sum.gen_degrees = {DegreeVector{0}, DegreeVector{0}};
  sum.relations = {parse_poly(ring, 2, "x*e_1"), parse_poly(ring, 2, "y*e_2")};
  auto ann2 = annihilator(sum);
  REQUIRE(ann2.size() == 1);
  CHECK(ann2[0] == parse_poly(ring, 1, "x*y"));

  // free module: zero annihilator
  CHECK(annihilator(quotient_module(ring, {})).empty());
}

TEST_CASE("chart and radical quasi-zero tests agree on P1xP1") {
  RingPtr ring = make_ring({"x0", "x1", "y0", "y1"},
                           {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  ToricChartData charts{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
  std::vector<PolyVector> b = {
      parse_poly(ring, 1, "x0*y0"), parse_poly(ring, 1, "x0*y1"),
      parse_poly(ring, 1, "x1*y0"), parse_poly(ring, 1, "x1*y1")};

  GradedModule zero_sheaf = quotient_module(ring, {"x0", "x1"});
  CHECK(is_quasi_zero_chart(zero_sheaf, charts));
  CHECK(is_quasi_zero_radical(zero_sheaf, b));

  GradedModule point = quotient_module(ring, {"x0", "y0"});
  CHECK(!is_quasi_zero_chart(point, charts));
  CHECK(!is_quasi_zero_radical(point, b));

  GradedModule trivial;
  trivial.ring = ring;
  CHECK(is_quasi_zero_chart(trivial, charts));
  CHECK(is_quasi_zero_radical(trivial, b));

  // random agreement
  auto cat = GrmodCategory::create(ring);
  Sampler s = grmod_sampler(cat);
  Rng rng(test_seed() + 31);
  for (int it = 0; it < 12; ++it) {
    ObjectRef o = s.object(rng);
    const GradedModule& m = cat->module_of(o);
    CHECK(is_quasi_zero_chart(m, charts) == is_quasi_zero_radical(m, b));
  }
}

TEST_CASE("proj test agrees with chart and radical tests on P1") {
  RingPtr ring = standard_ring({"x0", "x1"});
  ToricChartData charts{{{0}, {1}}};
  std::vector<PolyVector> b = {parse_poly(ring, 1, "x0"),
                               parse_poly(ring, 1, "x1")};
  auto cat = GrmodCategory::create(ring);
  Sampler s = grmod_sampler(cat);
  Rng rng(test_seed() + 32);
  for (int it = 0; it < 15; ++it) {
    ObjectRef o = s.object(rng);
    const GradedModule& m = cat->module_of(o);
    bool proj = is_quasi_zero_proj(m);
    CHECK(proj == is_quasi_zero_chart(m, charts));
    CHECK(proj == is_quasi_zero_radical(m, b));
  }
}

TEST_CASE("grmod axiom suite smoke run") {
  auto cat = GrmodCategory::create(standard_ring({"x", "y"}));
  AxiomSuiteResult r = run_axiom_suite(grmod_sampler(cat), 40, test_seed());
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
}

TEST_CASE("sheaf quotient on P1: quotient-isos and zero objects") {
  RingPtr ring = standard_ring({"x0", "x1"});
  auto cat = GrmodCategory::create(ring);
  ThickSubcategory c = quasi_zero_proj_subcategory(cat);
  auto sheaves = coherent_sheaf_category(c);

  // S ↠ S/(x0,x1)^2 is zero as a sheaf morphism
  GradedModule mod = quotient_module(ring, {"x0^2", "x0*x1", "x1^2"});
  auto s = cat->free_module({DegreeVector{0}});
  auto t = cat->object(mod);
  auto onto = cat->morphism(s, t, {parse_poly(ring, 1, "1")});
  CHECK(serre_equal(honest_of(onto), zero_gen(s, t), c));

  // m = (x0, x1) ⊂ S is a quotient-iso with a two-sided inverse
  GradedModule mm;
  mm.ring = ring;
  mm.gen_degrees = {DegreeVector{1}, DegreeVector{1}};
  mm.relations = {parse_poly(ring, 2, "x1*e_1 - x0*e_2")};
  auto m = cat->object(mm);
  auto emb = cat->morphism(m, s, {parse_poly(ring, 1, "x0"),
                                  parse_poly(ring, 1, "x1")});
  CHECK(is_quotient_iso(honest_of(emb), c));
  GeneralizedMorphism inv =
      lift_gabriel(honest_of(cat->identity(s)), honest_of(emb), c);
  CHECK(serre_equal(compose_gen(inv, honest_of(emb)), id_gen(s), c));
  CHECK(serre_equal(compose_gen(honest_of(emb), inv), id_gen(m), c));

  CHECK(sheaves->is_zero_object(sheaves->from_base(t)));
}
