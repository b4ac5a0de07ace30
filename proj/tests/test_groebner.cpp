#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "serreq/groebner.hpp"
#include "serreq/testkit.hpp"

using namespace serreq;

namespace {

const TermOrder kOrd = TermOrder::degrevlex();

PolyVector p(const RingPtr& ring, const std::string& s, std::size_t rank = 1) {
  return parse_poly(ring, rank, s);
}

bool reduces_to_zero(const PolyVector& v, const std::vector<PolyVector>& gb) {
  return normal_form(v, gb, kOrd).remainder.is_zero();
}

/// Every S-vector of the basis must reduce to zero (Buchberger's criterion).
bool is_groebner(const std::vector<PolyVector>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const Term& a = gb[i].leading_term(kOrd);
      const Term& b = gb[j].leading_term(kOrd);
      if (a.component != b.component) continue;
      std::vector<unsigned> lcm(a.exponents.size());
      for (std::size_t k = 0; k < lcm.size(); ++k)
        lcm[k] = std::max(a.exponents[k], b.exponents[k]);
      std::vector<unsigned> qa(lcm.size()), qb(lcm.size());
      for (std::size_t k = 0; k < lcm.size(); ++k) {
        qa[k] = lcm[k] - a.exponents[k];
        qb[k] = lcm[k] - b.exponents[k];
      }
      PolyVector s =
          gb[i].times_monomial(qa, Rational(1) / gb[i].leading_coeff(kOrd)) -
          gb[j].times_monomial(qb, Rational(1) / gb[j].leading_coeff(kOrd));
      if (!reduces_to_zero(s, gb)) return false;
    }
  return true;
}

std::vector<PolyVector> random_homogeneous_system(Rng& rng,
                                                  const RingPtr& ring,
                                                  std::size_t rank,
                                                  std::size_t count) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(1, 3);
  std::vector<PolyVector> out;
  std::vector<DegreeVector> shifts(rank, DegreeVector{0});
  for (std::size_t i = 0; i < count; ++i) {
    PolyVector v(ring, rank);
    long long d = deg(rng);
    // all monomials of total degree d in each component, sparse coefficients
    std::size_t nv = ring->variables.size();
    std::vector<unsigned> e(nv, 0);
    std::function<void(std::size_t, long long, std::size_t)> rec =
        [&](std::size_t var, long long rem, std::size_t comp) {
          if (var + 1 == nv) {
            e[var] = static_cast<unsigned>(rem);
            int c = coeff(rng);
            if (c != 0 && std::uniform_int_distribution<int>(0, 2)(rng) == 0)
              v.add_to(Term{comp, e}, Rational(c));
            return;
          }
          for (long long k = 0; k <= rem; ++k) {
            e[var] = static_cast<unsigned>(k);
            rec(var + 1, rem - k, comp);
          }
          e[var] = 0;
        };
    for (std::size_t comp = 0; comp < rank; ++comp) rec(0, d, comp);
    if (!v.is_zero()) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("reduced basis of a classic ideal") {
  RingPtr ring = standard_ring({"x", "y"});
  auto gb = buchberger({p(ring, "x^2 + y^2"), p(ring, "x*y")}, kOrd);
  REQUIRE(gb.size() == 3);
  CHECK(gb[0] == p(ring, "x*y"));
  CHECK(gb[1] == p(ring, "x^2 + y^2"));
  CHECK(gb[2] == p(ring, "y^3"));
  CHECK(is_groebner(gb));
}

TEST_CASE("buchberger criterion holds on random systems") {
  RingPtr ring = standard_ring({"x", "y", "z"});
  Rng rng(test_seed() + 20);
  for (int it = 0; it < 15; ++it) {
    auto sys = random_homogeneous_system(rng, ring, 1, 3);
    if (sys.empty()) continue;
    auto gb = buchberger(sys, kOrd);
    CHECK(is_groebner(gb));
    for (const auto& g : sys) CHECK(reduces_to_zero(g, gb));
  }
  // and on module input
  for (int it = 0; it < 10; ++it) {
    auto sys = random_homogeneous_system(rng, ring, 2, 3);
    if (sys.empty()) continue;
    CHECK(is_groebner(buchberger(sys, kOrd)));
  }
}

TEST_CASE("reduced basis is canonical under generator shuffles") {
  RingPtr ring = standard_ring({"x", "y", "z"});
  Rng rng(test_seed() + 21);
  for (int it = 0; it < 10; ++it) {
    auto sys = random_homogeneous_system(rng, ring, 1, 3);
    if (sys.size() < 2) continue;
    auto gb1 = buchberger(sys, kOrd);
    std::reverse(sys.begin(), sys.end());
    auto gb2 = buchberger(sys, kOrd);
    CHECK(gb1 == gb2);
  }
}

TEST_CASE("syzygies of a pair of monomials") {
  RingPtr ring = standard_ring({"x", "y"});
  std::vector<PolyVector> gens = {p(ring, "x"), p(ring, "y")};
  auto syz = syzygy_basis(gens);
  REQUIRE(syz.size() == 1);
  // the Koszul syzygy y·e1 - x·e2, up to sign and scaling
  PolyVector koszul = p(ring, "y*e_1 - x*e_2", 2);
  CHECK((syz[0] == koszul || syz[0] == -koszul));
}

TEST_CASE("syzygy basis annihilates the generators") {
  RingPtr ring = standard_ring({"x", "y", "z"});
  Rng rng(test_seed() + 22);
  for (int it = 0; it < 12; ++it) {
    auto gens = random_homogeneous_system(rng, ring, 2, 3);
    if (gens.empty()) continue;
    for (const auto& s : syzygy_basis(gens)) {
      PolyVector combo(ring, 2);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        PolyVector ci(ring, 1);
        for (const auto& [t, c] : s.terms())
          if (t.component == i) ci.add_to(Term{0, t.exponents}, c);
        combo = combo + gens[i].times_poly(ci);
      }
      CHECK(combo.is_zero());
    }
  }
}

TEST_CASE("syzygies match the truncated kernel oracle") {
  RingPtr ring = standard_ring({"x", "y"});
  Rng rng(test_seed() + 23);
  for (int it = 0; it < 10; ++it) {
    auto gens = random_homogeneous_system(rng, ring, 1, 2);
    if (gens.empty()) continue;
    std::vector<DegreeVector> shifts;
    for (const auto& g : gens) {
      DegreeVector d;
      REQUIRE(is_homogeneous(g, {DegreeVector{0}}, &d));
      shifts.push_back(d);
    }
    auto oracle = truncated_kernel_oracle(gens, {DegreeVector{0}}, 6);
    auto syz = buchberger(syzygy_basis(gens), kOrd);
    // every oracle kernel element reduces to zero against the syzygy GB
    for (const auto& v : oracle)
      CHECK(normal_form(v, syz, kOrd).remainder.is_zero());
    // and every syzygy evaluates to zero on the generators (checked above),
    // with matching truncated dimension via membership both ways: each
    // syzygy of low degree must be expressible in the oracle's span over ℚ
    // degree by degree — covered by reduction of oracle elements when the
    // syzygy module is generated in low degrees, so here we only check
    // nontrivial oracles are nonempty when a syzygy of degree ≤ 6 exists.
    bool has_low_syzygy = false;
    for (const auto& s : syz) {
      DegreeVector d;
      if (is_homogeneous(s, shifts, &d) && !s.is_zero() && d[0] <= 6)
        has_low_syzygy = true;
    }
    if (has_low_syzygy) CHECK(!oracle.empty());
  }
}

TEST_CASE("express_in reconstructs members and rejects outsiders") {
  RingPtr ring = standard_ring({"x", "y"});
  std::vector<PolyVector> basis = {p(ring, "x^2"), p(ring, "y")};
  auto coeffs = express_in(basis, p(ring, "x^2*y + y^2"));
  REQUIRE(coeffs.has_value());
  PolyVector rebuilt(ring, 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    rebuilt = rebuilt + basis[i].times_poly((*coeffs)[i]);
  CHECK(rebuilt == p(ring, "x^2*y + y^2"));
  CHECK(!express_in(basis, p(ring, "x")).has_value());
}

TEST_CASE("colon and intersection of ideals") {
  RingPtr ring = standard_ring({"x", "y"});
  auto quot = ideal_quotient({p(ring, "x^2")}, p(ring, "x"));
  REQUIRE(quot.size() == 1);
  CHECK(quot[0] == p(ring, "x"));

  auto inter = ideal_intersection({p(ring, "x")}, {p(ring, "y")});
  REQUIRE(inter.size() == 1);
  CHECK(inter[0] == p(ring, "x*y"));

  auto unit = ideal_quotient({p(ring, "x")}, PolyVector(ring, 1));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == p(ring, "1"));
}

TEST_CASE("radical membership via the Rabinowitsch trick") {
  RingPtr ring = standard_ring({"x", "y"});
  CHECK(radical_membership(p(ring, "x"), {p(ring, "x^2")}));
  CHECK(!radical_membership(p(ring, "y"), {p(ring, "x^2")}));
  CHECK(radical_membership(p(ring, "x+y"), {p(ring, "x"), p(ring, "y^3")}));
  CHECK(radical_membership(PolyVector(ring, 1), {p(ring, "x")}));
}

TEST_CASE("truncated kernel oracle on a hand example") {
  RingPtr ring = standard_ring({"x", "y"});
  // x, y as a map S(-1)^2 -> S: kernel generated by (y, -x) in degree 2
  auto oracle = truncated_kernel_oracle({p(ring, "x"), p(ring, "y")},
                                        {DegreeVector{0}}, 3);
  CHECK(!oracle.empty());
  for (const auto& v : oracle) {
    PolyVector c1(ring, 1), c2(ring, 1);
    for (const auto& [t, c] : v.terms())
      (t.component == 0 ? c1 : c2).add_to(Term{0, t.exponents}, c);
    CHECK(p(ring, "x").times_poly(c1) + p(ring, "y").times_poly(c2) ==
          PolyVector(ring, 1));
  }
}
