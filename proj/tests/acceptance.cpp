// Acceptance checks: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary and golden/example directories arrive via the
// SERREQ_CLI_PATH, SERREQ_GOLDEN_DIR and SERREQ_EXAMPLES_DIR environment
// variables (set by ctest).

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "serreq/grmod.hpp"
#include "serreq/serre.hpp"
#include "serreq/session.hpp"
#include "serreq/testkit.hpp"
#include "serreq/zmod.hpp"

using namespace serreq;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " ("
            << label << ", " << ms << " ms)";
  if (!ok && !detail.empty()) std::cout << ": " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

IntMatrix mat1(long long v) {
  IntMatrix m(1, 1);
  m.at(0, 0) = Integer(v);
  return m;
}

// ---------------------------------------------------------------------------

bool c1_z_lift(std::string& detail) {
  auto cat = ZModCategory::create();
  ThickSubcategory torsion = torsion_subcategory(cat);
  auto z = cat->free_object(1);
  GeneralizedMorphism lift =
      lift_gabriel(honest_of(cat->morphism(z, z, mat1(6))),
                   honest_of(cat->morphism(z, z, mat1(4))), torsion);
  GeneralizedMorphism expected =
      make_generalized(cat->morphism(z, z, mat1(2)),
                       cat->morphism(z, z, mat1(3)), cat->identity(z));
  if (!equal_gen(lift, expected)) {
    detail = "lift not equal to (2, 3, 1)";
    return false;
  }
  return true;
}

bool c2_axiom_suites(std::string& detail) {
  const std::uint64_t seed = test_seed();
  bool ok = true;
  auto run = [&](const std::string& label, const Sampler& s, std::size_t n) {
    AxiomSuiteResult r = run_axiom_suite(s, n, seed);
    if (!r.ok()) {
      ok = false;
      detail += label + ": " + r.failures.front() + " (+more); ";
    }
  };
  auto z = ZModCategory::create();
  Sampler zs = zmod_sampler(z);
  run("zmod", zs, 200);

  auto g2 = GrmodCategory::create(standard_ring({"x", "y"}));
  run("grmod[x,y]", grmod_sampler(g2), 200);
  auto g3 = GrmodCategory::create(standard_ring({"x", "y", "z"}));
  run("grmod[x,y,z]", grmod_sampler(g3), 200);

  auto zq = SerreQuotientCategory::create(torsion_subcategory(z));
  run("zmod/torsion", quotient_sampler(zq, zs), 200);

  auto p1 = GrmodCategory::create(standard_ring({"x0", "x1"}));
  auto sheaves = coherent_sheaf_category(quasi_zero_proj_subcategory(p1));
  run("coh(P^1)", quotient_sampler(sheaves, grmod_sampler(p1)), 200);
  return ok;
}

bool c3_rational_oracle(std::string& detail) {
  auto cat = ZModCategory::create();
  ThickSubcategory torsion = torsion_subcategory(cat);
  auto q = SerreQuotientCategory::create(torsion);
  Sampler s = zmod_sampler(cat);
  Rng rng(test_seed() + 100);
  for (int it = 0; it < 100; ++it) {
    auto pair = random_parallel_gabriel(rng, s, 2);
    bool eq = serre_equal(pair[0], pair[1], torsion);
    if (eq != (rationalize(pair[0]) == rationalize(pair[1]))) {
      detail = "serre_equal disagrees with rational matrices at iteration " +
               std::to_string(it);
      return false;
    }
  }
  // kernel/cokernel object ranks against rational nullity/corank
  auto free_rank = [&](const ObjectRef& base) {
    const FgAbGroup& g = cat->group_of(base);
    return g.generators - rank(g.relations);
  };
  for (int it = 0; it < 40; ++it) {
    GeneralizedMorphism psi = random_gabriel(rng, s);
    MorphismRef phi = q->from_gen(psi);
    QMatrix r = rationalize(psi);
    QMatrix rr = r;
    std::size_t rk = rr.rref();
    std::size_t nullity = r.rows() - rk;
    std::size_t corank = r.cols() - rk;
    std::size_t kr = free_rank(q->base_object(q->kernel(phi).object));
    std::size_t cr = free_rank(q->base_object(q->cokernel(phi).object));
    if (kr != nullity || cr != corank) {
      detail = "quotient kernel/cokernel rank mismatch at iteration " +
               std::to_string(it) + " (kernel " + std::to_string(kr) + " vs " +
               std::to_string(nullity) + ", cokernel " + std::to_string(cr) +
               " vs " + std::to_string(corank) + ")";
      return false;
    }
  }
  return true;
}

bool c4_groebner(std::string& detail) {
  const TermOrder ord = TermOrder::degrevlex();
  RingPtr ring = standard_ring({"x", "y", "z"});
  Rng rng(test_seed() + 200);
  std::uniform_int_distribution<int> coeff(-3, 3), deg(1, 3), pick(0, 2);
  auto random_system = [&](std::size_t rank, std::size_t count) {
    std::vector<PolyVector> out;
    for (std::size_t i = 0; i < count; ++i) {
      PolyVector v(ring, rank);
      long long d = deg(rng);
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b)
          for (std::size_t comp = 0; comp < rank; ++comp) {
            int c = coeff(rng);
            if (c != 0 && pick(rng) == 0)
              v.add_to(Term{comp, {a, b, static_cast<unsigned>(d) - a - b}},
                       Rational(c));
          }
      if (!v.is_zero()) out.push_back(v);
    }
    return out;
  };
  auto s_vectors_reduce = [&](const std::vector<PolyVector>& gb) {
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        const Term& a = gb[i].leading_term(ord);
        const Term& b = gb[j].leading_term(ord);
        if (a.component != b.component) continue;
        std::vector<unsigned> qa(a.exponents.size()), qb(a.exponents.size());
        for (std::size_t k = 0; k < qa.size(); ++k) {
          unsigned l = std::max(a.exponents[k], b.exponents[k]);
          qa[k] = l - a.exponents[k];
          qb[k] = l - b.exponents[k];
        }
        PolyVector sv =
            gb[i].times_monomial(qa, Rational(1) / gb[i].leading_coeff(ord)) -
            gb[j].times_monomial(qb, Rational(1) / gb[j].leading_coeff(ord));
        if (!normal_form(sv, gb, ord).remainder.is_zero()) return false;
      }
    return true;
  };
  int instances = 0;
  for (int it = 0; instances < 50 && it < 200; ++it) {
    std::size_t rank = 1 + static_cast<std::size_t>(pick(rng)) % 2;
    auto gens = random_system(rank, 1 + static_cast<std::size_t>(pick(rng)));
    if (gens.empty()) continue;
    ++instances;
    auto gb = buchberger(gens, ord);
    if (!s_vectors_reduce(gb)) {
      detail = "an S-vector fails to reduce to zero";
      return false;
    }
    // syzygies vs the truncated rational oracle
    std::vector<DegreeVector> shifts(rank, DegreeVector{0});
    auto oracle = truncated_kernel_oracle(gens, shifts, 6);
    auto syz_gb = buchberger(syzygy_basis(gens), ord);
    for (const auto& v : oracle)
      if (!normal_form(v, syz_gb, ord).remainder.is_zero()) {
        detail = "oracle kernel element missed by syzygy_basis";
        return false;
      }
    for (const auto& s : syzygy_basis(gens)) {
      PolyVector combo(ring, rank);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        PolyVector ci(ring, 1);
        for (const auto& [t, c] : s.terms())
          if (t.component == i) ci.add_to(Term{0, t.exponents}, c);
        combo = combo + gens[i].times_poly(ci);
      }
      if (!combo.is_zero()) {
        detail = "syzygy does not annihilate the generators";
        return false;
      }
    }
  }
  if (instances < 50) {
    detail = "sampler failed to produce 50 instances";
    return false;
  }
  return true;
}

bool c5_hilbert(std::string& detail) {
  RingPtr ring3 = standard_ring({"x", "y", "z"});
  GradedModule s;
  s.ring = ring3;
  s.gen_degrees.push_back(DegreeVector{0});
  for (long long d = 0; d <= 10; ++d) {
    if (hilbert_function(s, d) != Integer((d + 2) * (d + 1) / 2)) {
      detail = "HF(S, " + std::to_string(d) + ") wrong";
      return false;
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i <= n; ++i)
      vars.push_back("x" + std::to_string(i));
    RingPtr ring = standard_ring(vars);
    GradedModule irrelevant;
    irrelevant.ring = ring;
    irrelevant.gen_degrees.push_back(DegreeVector{0});
    for (const auto& v : vars)
      irrelevant.relations.push_back(parse_poly(ring, 1, v));
    if (!is_quasi_zero_proj(irrelevant)) {
      detail = "S/(x0..xn) not quasi-zero for n=" + std::to_string(n);
      return false;
    }
    for (long long a = 0; a <= 3; ++a) {
      GradedModule shifted;
      shifted.ring = ring;
      shifted.gen_degrees.push_back(DegreeVector{-a});
      if (is_quasi_zero_proj(shifted)) {
        detail = "S(-" + std::to_string(a) + ") reported quasi-zero";
        return false;
      }
    }
  }
  return true;
}

bool c6_p1_semantics(std::string& detail) {
  RingPtr ring = standard_ring({"x0", "x1"});
  auto cat = GrmodCategory::create(ring);
  ThickSubcategory c = quasi_zero_proj_subcategory(cat);
  auto s = cat->free_module({DegreeVector{0}});

  GradedModule sq;
  sq.ring = ring;
  sq.gen_degrees.push_back(DegreeVector{0});
  for (const char* r : {"x0^2", "x0*x1", "x1^2"})
    sq.relations.push_back(parse_poly(ring, 1, r));
  auto t = cat->object(sq);
  auto onto = cat->morphism(s, t, {parse_poly(ring, 1, "1")});
  if (!serre_equal(honest_of(onto), zero_gen(s, t), c)) {
    detail = "S onto S/m^2 is not serre-zero";
    return false;
  }

  GradedModule mm;
  mm.ring = ring;
  mm.gen_degrees = {DegreeVector{1}, DegreeVector{1}};
  mm.relations = {parse_poly(ring, 2, "x1*e_1 - x0*e_2")};
  auto m = cat->object(mm);
  auto emb = cat->morphism(m, s, {parse_poly(ring, 1, "x0"),
                                  parse_poly(ring, 1, "x1")});
  if (!is_quotient_iso(honest_of(emb), c)) {
    detail = "twisting-ideal inclusion not a quotient iso";
    return false;
  }
  GeneralizedMorphism inv =
      lift_gabriel(honest_of(cat->identity(s)), honest_of(emb), c);
  if (!serre_equal(compose_gen(inv, honest_of(emb)), id_gen(s), c) ||
      !serre_equal(compose_gen(honest_of(emb), inv), id_gen(m), c)) {
    detail = "inverse does not round-trip to the identities";
    return false;
  }
  return true;
}

bool c7_toric(std::string& detail) {
  RingPtr ring = make_ring({"x0", "x1", "y0", "y1"},
                           {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
  ToricChartData charts{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
  std::vector<PolyVector> b = {
      parse_poly(ring, 1, "x0*y0"), parse_poly(ring, 1, "x0*y1"),
      parse_poly(ring, 1, "x1*y0"), parse_poly(ring, 1, "x1*y1")};
  auto cyclic = [&](std::vector<std::string> rels) {
    GradedModule m;
    m.ring = ring;
    m.gen_degrees.push_back(DegreeVector{0, 0});
    for (const auto& r : rels) m.relations.push_back(parse_poly(ring, 1, r));
    return m;
  };
  GradedModule ruled = cyclic({"x0", "x1"});
  GradedModule point = cyclic({"x0", "y0"});
  if (!is_quasi_zero_chart(ruled, charts) ||
      !is_quasi_zero_radical(ruled, b)) {
    detail = "S/(x0,x1) not detected as zero sheaf";
    return false;
  }
  if (is_quasi_zero_chart(point, charts) ||
      is_quasi_zero_radical(point, b)) {
    detail = "S/(x0,y0) wrongly reported zero";
    return false;
  }
  auto cat = GrmodCategory::create(ring);
  Sampler s = grmod_sampler(cat);
  Rng rng(test_seed() + 300);
  for (int it = 0; it < 30; ++it) {
    ObjectRef o = s.object(rng);
    const GradedModule& m = cat->module_of(o);
    if (is_quasi_zero_chart(m, charts) != is_quasi_zero_radical(m, b)) {
      detail = "chart and radical tests disagree at iteration " +
               std::to_string(it);
      return false;
    }
  }
  return true;
}

bool c8_inverse_monoid(std::string& detail) {
  auto cat = ZModCategory::create();
  ThickSubcategory torsion = torsion_subcategory(cat);
  Sampler s = zmod_sampler(cat);
  Rng rng(test_seed() + 400);
  int sampled = 0;
  while (sampled < 200) {
    auto pair = random_parallel_gabriel(rng, s, 2);
    sampled += 2;
    const GeneralizedMorphism& psi = pair[0];
    const GeneralizedMorphism& phi = pair[1];
    if (!serre_equal(add_gen(add_gen(psi, psi, -1), psi, +1), psi, torsion)) {
      detail = "psi - psi + psi != psi";
      return false;
    }
    GeneralizedMorphism e1 = associated_idempotent(psi);
    GeneralizedMorphism e2 = associated_idempotent(phi);
    if (!serre_equal(add_gen(e1, e2, +1), add_gen(e2, e1, +1), torsion)) {
      detail = "idempotents fail to commute";
      return false;
    }
    if (!in_zeroid(e1, torsion)) {
      detail = "associated idempotent not in the zeroid";
      return false;
    }
    GeneralizedMorphism tail = random_gabriel(rng, s);
    if (!in_zeroid(compose_gen(
            e1, compose_gen(zero_gen(psi.target, tail.source), tail)),
                   torsion) ||
        !in_zeroid(compose_gen(
            compose_gen(tail, zero_gen(tail.target, psi.source)), e1),
                   torsion)) {
      detail = "zeroid not absorbing under composition";
      return false;
    }
  }
  return true;
}

std::string run_cli(const std::string& args, int* exit_code) {
  const char* cli = std::getenv("SERREQ_CLI_PATH");
  if (cli == nullptr) throw std::runtime_error("SERREQ_CLI_PATH not set");
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  if (exit_code != nullptr) *exit_code = WEXITSTATUS(status);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool c9_cli_determinism(std::string& detail) {
  const char* golden_dir = std::getenv("SERREQ_GOLDEN_DIR");
  const char* examples_dir = std::getenv("SERREQ_EXAMPLES_DIR");
  if (golden_dir == nullptr || examples_dir == nullptr) {
    detail = "SERREQ_GOLDEN_DIR / SERREQ_EXAMPLES_DIR not set";
    return false;
  }
  const std::array<std::pair<const char*, const char*>, 3> demos = {{
      {"z-lift", "z_lift"},
      {"p1-iso", "p1_iso"},
      {"p1xp1-zero", "p1xp1_zero"},
  }};
  for (const auto& [demo, stem] : demos) {
    int code = 0;
    std::string first = run_cli(std::string("demo ") + demo, &code);
    if (code != 0) {
      detail = std::string("demo ") + demo + " exited with " +
               std::to_string(code);
      return false;
    }
    std::string second = run_cli(std::string("demo ") + demo, &code);
    if (first != second) {
      detail = std::string("demo ") + demo + " not byte-identical across runs";
      return false;
    }
    std::string golden =
        read_file(std::string(golden_dir) + "/" + stem + ".json");
    if (first != golden) {
      detail = std::string("demo ") + demo + " differs from golden file";
      return false;
    }
    std::string from_file = run_cli(
        std::string("run ") + examples_dir + "/" + stem + ".json", &code);
    if (code != 0 || from_file != golden) {
      detail = std::string("bundled session ") + stem +
               ".json does not match the golden output";
      return false;
    }
  }
  // exit-code contract: malformed input is 1, precondition failures are 2
  int code = 0;
  run_cli("run /nonexistent.json", &code);
  if (code != 1) {
    detail = "missing file should exit 1, got " + std::to_string(code);
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "integer lift example", c1_z_lift);
  criterion(2, "category axiom suites", c2_axiom_suites);
  criterion(3, "rationalization oracle", c3_rational_oracle);
  criterion(4, "Groebner and syzygy correctness", c4_groebner);
  criterion(5, "Hilbert series checks", c5_hilbert);
  criterion(6, "sheaf semantics on P^1", c6_p1_semantics);
  criterion(7, "toric chart/radical agreement", c7_toric);
  criterion(8, "inverse monoid laws", c8_inverse_monoid);
  criterion(9, "CLI determinism and goldens", c9_cli_determinism);
  return g_failures == 0 ? 0 : 1;
}
