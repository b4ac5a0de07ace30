#include "serreq/testkit.hpp"

#include <cstdlib>
#include <sstream>

namespace serreq {
namespace {

long long rint(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                            long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Integer(rint(rng, -bound, bound));
  return m;
}

// -- graded helpers ----------------------------------------------------------

void collect_monomials(const GradedRing& ring, std::size_t var,
                       DegreeVector remaining, std::vector<unsigned>& exps,
                       std::vector<std::vector<unsigned>>& out) {
  if (var == ring.variables.size()) {
    for (long long r : remaining)
      if (r != 0) return;
    out.push_back(exps);
    return;
  }
  const DegreeVector& w = ring.variable_degrees[var];
  long long bound = -1;  // -1: unconstrained so far
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] <= 0) continue;
    long long b = remaining[k] / w[k];
    if (remaining[k] < 0) b = -1;
    if (bound < 0 || b < bound) bound = b;
  }
  if (bound < 0) bound = 0;  // degree-0 variable: any power would not end
  for (long long e = 0; e <= bound; ++e) {
    exps[var] = static_cast<unsigned>(e);
    DegreeVector rem = remaining;
    bool feasible = true;
    for (std::size_t k = 0; k < w.size(); ++k) {
      rem[k] -= e * w[k];
      if (rem[k] < 0) feasible = false;
    }
    if (feasible) collect_monomials(ring, var + 1, rem, exps, out);
  }
  exps[var] = 0;
}

std::vector<std::vector<unsigned>> monomials_of_multidegree(
    const RingPtr& ring, const DegreeVector& d) {
  for (long long dk : d)
    if (dk < 0) return {};
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> exps(ring->variables.size(), 0);
  collect_monomials(*ring, 0, d, exps, out);
  return out;
}

/// Sparse random homogeneous rank-`rank` vector entry in component `c` of
/// the given multidegree; may come out zero.
void add_random_homogeneous(Rng& rng, const RingPtr& ring, PolyVector& v,
                            std::size_t c, const DegreeVector& d) {
  for (const auto& e : monomials_of_multidegree(ring, d)) {
    if (rint(rng, 0, 2) == 0) continue;  // keep it sparse
    long long coeff = rint(rng, -3, 3);
    if (coeff != 0) v.add_to(Term{c, e}, Rational(coeff));
  }
}

DegreeVector random_small_degree(Rng& rng, std::size_t rank, long long hi) {
  DegreeVector d(rank);
  for (auto& x : d) x = rint(rng, 0, hi);
  return d;
}

DegreeVector vec_add(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

DegreeVector vec_sub(const DegreeVector& a, const DegreeVector& b) {
  DegreeVector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

}  // namespace

std::uint64_t test_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("SERREQ_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return fallback;
}

Sampler zmod_sampler(const std::shared_ptr<ZModCategory>& category) {
  Sampler s;
  s.category = category;
  s.object = [category](Rng& rng) {
    std::size_t gens = static_cast<std::size_t>(rint(rng, 0, 3));
    std::size_t rels = static_cast<std::size_t>(rint(rng, 0, 3));
    return category->object(gens, random_int_matrix(rng, rels, gens, 4));
  };
  s.morphism_into = [category](Rng& rng, const ObjectRef& y) {
    std::size_t m = static_cast<std::size_t>(rint(rng, 0, 2));
    const auto& g = category->group_of(y);
    return category->morphism(category->free_object(m), y,
                              random_int_matrix(rng, m, g.generators, 4));
  };
  s.parallel_into = [category](Rng& rng, const ObjectRef& y, std::size_t k) {
    std::size_t m = static_cast<std::size_t>(rint(rng, 0, 2));
    ObjectRef src = category->free_object(m);
    const auto& g = category->group_of(y);
    std::vector<MorphismRef> out;
    for (std::size_t i = 0; i < k; ++i)
      out.push_back(category->morphism(
          src, y, random_int_matrix(rng, m, g.generators, 4)));
    return out;
  };
  s.morphism = [category, s](Rng& rng) {
    MorphismRef f = s.morphism_into(rng, s.object(rng));
    switch (rint(rng, 0, 4)) {
      case 0:
        return f;
      case 1:
        return category->cokernel(f).projection;
      case 2:
        return category->kernel(f).embedding;
      case 3:
        return category->compose(
            f, category->cokernel(s.morphism_into(rng, f.target()))
                   .projection);
      default: {
        auto pair = s.parallel_into(rng, f.target(), 2);
        return category->add(pair[0], pair[1]);
      }
    }
  };
  s.dense_sub = [category](Rng& rng, const ObjectRef& m) {
    Integer n(rint(rng, 1, 3));
    const auto& g = category->group_of(m);
    IntMatrix scale = IntMatrix::identity(g.generators);
    for (std::size_t i = 0; i < g.generators; ++i) scale.at(i, i) = n;
    return category->morphism(m, m, scale);
  };
  s.small_kernel = s.dense_sub;
  return s;
}

Sampler grmod_sampler(const std::shared_ptr<GrmodCategory>& category) {
  const RingPtr ring = category->ring();
  const std::size_t r = ring->grading_rank();
  Sampler s;
  s.category = category;
  s.object = [category, ring, r](Rng& rng) {
    std::size_t gens = static_cast<std::size_t>(rint(rng, 0, 2));
    GradedModule m;
    m.ring = ring;
    for (std::size_t i = 0; i < gens; ++i)
      m.gen_degrees.push_back(random_small_degree(rng, r, 2));
    std::size_t rels = gens == 0 ? 0 : static_cast<std::size_t>(rint(rng, 0, 2));
    for (std::size_t i = 0; i < rels; ++i) {
      std::size_t c0 = static_cast<std::size_t>(rint(rng, 0, gens - 1));
      DegreeVector total =
          vec_add(m.gen_degrees[c0], random_small_degree(rng, r, 1));
      PolyVector row(ring, gens);
      for (std::size_t c = 0; c < gens; ++c)
        add_random_homogeneous(rng, ring, row, c,
                               vec_sub(total, m.gen_degrees[c]));
      if (!row.is_zero()) m.relations.push_back(row);
    }
    return category->object(std::move(m));
  };
  s.morphism_into = [category, ring, r](Rng& rng, const ObjectRef& y) {
    const auto& tgt = category->module_of(y);
    std::size_t m = static_cast<std::size_t>(rint(rng, 0, 2));
    if (tgt.gen_degrees.empty()) m = 0;
    std::vector<DegreeVector> src_deg;
    std::vector<PolyVector> rows;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = static_cast<std::size_t>(
          rint(rng, 0, static_cast<long long>(tgt.gen_degrees.size()) - 1));
      DegreeVector d =
          vec_add(tgt.gen_degrees[j], random_small_degree(rng, r, 1));
      src_deg.push_back(d);
      PolyVector row(ring, tgt.gen_degrees.size());
      for (std::size_t c = 0; c < tgt.gen_degrees.size(); ++c)
        add_random_homogeneous(rng, ring, row, c,
                               vec_sub(d, tgt.gen_degrees[c]));
      rows.push_back(row);
    }
    return category->morphism(category->free_module(std::move(src_deg)), y,
                              std::move(rows));
  };
  s.parallel_into = [category, ring, r, s](Rng& rng, const ObjectRef& y,
                                           std::size_t k) {
    const auto& tgt = category->module_of(y);
    std::size_t m = tgt.gen_degrees.empty()
                        ? 0
                        : static_cast<std::size_t>(rint(rng, 0, 2));
    std::vector<DegreeVector> src_deg;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = static_cast<std::size_t>(
          rint(rng, 0, static_cast<long long>(tgt.gen_degrees.size()) - 1));
      src_deg.push_back(
          vec_add(tgt.gen_degrees[j], random_small_degree(rng, r, 1)));
    }
    ObjectRef src = category->free_module(src_deg);
    std::vector<MorphismRef> out;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<PolyVector> rows;
      for (std::size_t a = 0; a < m; ++a) {
        PolyVector row(ring, tgt.gen_degrees.size());
        for (std::size_t c = 0; c < tgt.gen_degrees.size(); ++c)
          add_random_homogeneous(rng, ring, row, c,
                                 vec_sub(src_deg[a], tgt.gen_degrees[c]));
        rows.push_back(row);
      }
      out.push_back(category->morphism(src, y, std::move(rows)));
    }
    return out;
  };
  s.morphism = [category, s](Rng& rng) {
    MorphismRef f = s.morphism_into(rng, s.object(rng));
    switch (rint(rng, 0, 3)) {
      case 0:
        return f;
      case 1:
        return category->cokernel(f).projection;
      case 2:
        return category->kernel(f).embedding;
      default: {
        auto pair = s.parallel_into(rng, f.target(), 2);
        return category->add(pair[0], pair[1]);
      }
    }
  };
  // Image of ⊕_v M(-deg x_v) --x_v--> M is the submodule 𝔪·M; its cokernel
  // M/𝔪M is quasi-zero in every reading of C.
  s.dense_sub = [category, ring](Rng&, const ObjectRef& m) {
    const auto& mod = category->module_of(m);
    const std::size_t g = mod.gen_degrees.size();
    const std::size_t nv = ring->variables.size();
    GradedModule src;
    src.ring = ring;
    std::vector<PolyVector> rows;
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<unsigned> xe(nv, 0);
      xe[v] = 1;
      for (std::size_t c = 0; c < g; ++c) {
        src.gen_degrees.push_back(
            vec_add(mod.gen_degrees[c], ring->variable_degrees[v]));
        PolyVector row(ring, g);
        row.add_to(Term{c, xe}, Rational(1));
        rows.push_back(row);
      }
      for (const auto& rel : mod.relations) {
        PolyVector shifted(ring, nv * g);
        for (const auto& [t, coeff] : rel.terms())
          shifted.add_to(Term{v * g + t.component, t.exponents}, coeff);
        src.relations.push_back(shifted);
      }
    }
    return category->morphism(category->object(std::move(src)), m,
                              std::move(rows));
  };
  // Kernel of M --(x_v)_v--> ⊕_v M(deg x_v) is the submodule killed by
  // every variable, which vanishes on every chart and at the sheaf level.
  s.small_kernel = [category, ring](Rng&, const ObjectRef& m) {
    const auto& mod = category->module_of(m);
    const std::size_t g = mod.gen_degrees.size();
    const std::size_t nv = ring->variables.size();
    GradedModule tgt;
    tgt.ring = ring;
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t c = 0; c < g; ++c)
        tgt.gen_degrees.push_back(
            vec_sub(mod.gen_degrees[c], ring->variable_degrees[v]));
      for (const auto& rel : mod.relations) {
        PolyVector shifted(ring, nv * g);
        for (const auto& [t, coeff] : rel.terms())
          shifted.add_to(Term{v * g + t.component, t.exponents}, coeff);
        tgt.relations.push_back(shifted);
      }
    }
    std::vector<PolyVector> rows;
    for (std::size_t c = 0; c < g; ++c) {
      PolyVector row(ring, nv * g);
      for (std::size_t v = 0; v < nv; ++v) {
        std::vector<unsigned> xe(nv, 0);
        xe[v] = 1;
        row.add_to(Term{v * g + c, xe}, Rational(1));
      }
      rows.push_back(row);
    }
    return category->morphism(m, category->object(std::move(tgt)),
                              std::move(rows));
  };
  return s;
}

GeneralizedMorphism adapt_random(Rng& rng, const Sampler& base,
                                 const MorphismRef& f) {
  auto& cat = *base.category;
  long long shape = rint(rng, 0, 2);
  MorphismRef iota = cat.identity(f.source());
  if (shape != 1) {
    SubObject img = cat.image_embedding(base.dense_sub(rng, f.source()));
    iota = img.embedding;
  }
  MorphismRef jay = cat.identity(f.target());
  if (shape != 0) {
    SubObject k = cat.kernel(base.small_kernel(rng, f.target()));
    jay = cat.cokernel(k.embedding).projection;
  }
  MorphismRef arrow = cat.compose(cat.compose(iota, f), jay);
  return make_generalized(iota, arrow, jay);
}

GeneralizedMorphism random_gabriel(Rng& rng, const Sampler& base) {
  MorphismRef f = base.morphism(rng);
  if (rint(rng, 0, 3) == 0) return honest_of(f);
  return adapt_random(rng, base, f);
}

std::vector<GeneralizedMorphism> random_parallel_gabriel(Rng& rng,
                                                         const Sampler& base,
                                                         std::size_t k) {
  ObjectRef y = base.object(rng);
  std::vector<GeneralizedMorphism> out;
  for (const MorphismRef& f : base.parallel_into(rng, y, k)) {
    if (rint(rng, 0, 3) == 0)
      out.push_back(honest_of(f));
    else
      out.push_back(adapt_random(rng, base, f));
  }
  return out;
}

Sampler quotient_sampler(
    const std::shared_ptr<SerreQuotientCategory>& category,
    const Sampler& base) {
  Sampler s;
  s.category = category;
  s.object = [category, base](Rng& rng) {
    return category->from_base(base.object(rng));
  };
  s.morphism = [category, base](Rng& rng) {
    return category->from_gen(random_gabriel(rng, base));
  };
  s.morphism_into = [category, base](Rng& rng, const ObjectRef& y) {
    MorphismRef f = base.morphism_into(rng, category->base_object(y));
    if (rint(rng, 0, 1) == 0) return category->from_base_morphism(f);
    return category->from_gen(adapt_random(rng, base, f));
  };
  s.parallel_into = [category, base](Rng& rng, const ObjectRef& y,
                                     std::size_t k) {
    std::vector<MorphismRef> out;
    for (const MorphismRef& f :
         base.parallel_into(rng, category->base_object(y), k)) {
      if (rint(rng, 0, 1) == 0)
        out.push_back(category->from_base_morphism(f));
      else
        out.push_back(category->from_gen(adapt_random(rng, base, f)));
    }
    return out;
  };
  return s;
}

namespace {

/// Driver state for one suite run.
struct Suite {
  const Sampler& s;
  Category& cat;
  Rng rng;
  AxiomSuiteResult result;

  Suite(const Sampler& sampler, std::uint64_t seed)
      : s(sampler), cat(*sampler.category), rng(seed) {}

  void require(bool cond, const std::string& what) {
    ++result.checks;
    if (!cond) result.failures.push_back(what);
  }

  /// Some morphism out of b: identity, zero, a sum inclusion, or a
  /// cokernel projection — enough shapes to exercise composition laws
  /// against arbitrary presentations.
  MorphismRef extend(const ObjectRef& b, int depth = 1) {
    MorphismRef step = [&] {
      switch (rint(rng, 0, 3)) {
        case 0:
          return cat.identity(b);
        case 1:
          return cat.zero_morphism(b, s.object(rng));
        case 2:
          return cat.direct_sum(b, s.object(rng)).inj1;
        default:
          return cat.cokernel(s.morphism_into(rng, b)).projection;
      }
    }();
    if (depth > 0 && rint(rng, 0, 1) == 0)
      return cat.compose(step, extend(step.target(), depth - 1));
    return step;
  }

  void compose_assoc() {
    MorphismRef f = s.morphism(rng);
    MorphismRef g = extend(f.target());
    MorphismRef h = extend(g.target());
    require(cat.is_equal(cat.compose(cat.compose(f, g), h),
                         cat.compose(f, cat.compose(g, h))),
            "composition associativity");
  }

  void identity_laws() {
    MorphismRef f = s.morphism(rng);
    require(cat.is_well_defined(f), "sampled morphism well-defined");
    require(cat.is_equal(cat.compose(cat.identity(f.source()), f), f),
            "left identity");
    require(cat.is_equal(cat.compose(f, cat.identity(f.target())), f),
            "right identity");
  }

  void additive_group() {
    ObjectRef y = s.object(rng);
    auto par = s.parallel_into(rng, y, 3);
    const MorphismRef &f = par[0], &g = par[1], &h = par[2];
    require(cat.is_equal(cat.add(f, g), cat.add(g, f)), "addition commutes");
    require(cat.is_equal(cat.add(cat.add(f, g), h), cat.add(f, cat.add(g, h))),
            "addition associates");
    require(cat.is_equal(
                cat.add(f, cat.zero_morphism(f.source(), f.target())), f),
            "zero is neutral");
    require(cat.is_zero_morphism(cat.add(f, cat.negate(f))),
            "negation inverts");
    require(cat.is_equal(cat.sub(f, g), cat.add(f, cat.negate(g))),
            "subtraction definition");
  }

  void bilinearity() {
    ObjectRef y = s.object(rng);
    auto par = s.parallel_into(rng, y, 2);
    const MorphismRef &f = par[0], &g = par[1];
    MorphismRef h = extend(y);
    require(cat.is_equal(cat.compose(cat.add(f, g), h),
                         cat.add(cat.compose(f, h), cat.compose(g, h))),
            "right distributivity");
    MorphismRef e = s.morphism_into(rng, f.source());
    require(cat.is_equal(cat.compose(e, cat.add(f, g)),
                         cat.add(cat.compose(e, f), cat.compose(e, g))),
            "left distributivity");
  }

  void kernel_universal() {
    MorphismRef f = s.morphism(rng);
    SubObject k = cat.kernel(f);
    require(cat.is_zero_morphism(cat.compose(k.embedding, f)),
            "kernel composes to zero");
    require(cat.is_mono(k.embedding), "kernel embedding is mono");
    MorphismRef tau =
        cat.compose(s.morphism_into(rng, k.object), k.embedding);
    MorphismRef lift = cat.kernel_lift(k.embedding, tau);
    require(cat.is_equal(cat.compose(lift, k.embedding), tau),
            "kernel lift factors");
  }

  void cokernel_universal() {
    MorphismRef f = s.morphism(rng);
    QuotObject c = cat.cokernel(f);
    require(cat.is_zero_morphism(cat.compose(f, c.projection)),
            "cokernel composes to zero");
    require(cat.is_epi(c.projection), "cokernel projection is epi");
    MorphismRef eta = cat.compose(c.projection, extend(c.object));
    MorphismRef colift = cat.cokernel_colift(c.projection, eta);
    require(cat.is_equal(cat.compose(c.projection, colift), eta),
            "cokernel colift factors");
  }

  void image_factorization() {
    MorphismRef f = s.morphism(rng);
    SubObject img = cat.image_embedding(f);
    QuotObject coimg = cat.coimage_projection(f);
    MorphismRef theta = cat.coimage_to_image_iso(f);
    require(cat.is_mono(img.embedding), "image embedding is mono");
    require(cat.is_epi(coimg.projection), "coimage projection is epi");
    require(cat.is_iso(theta), "coimage-to-image is iso");
    require(cat.is_equal(cat.compose(coimg.projection,
                                     cat.compose(theta, img.embedding)),
                         f),
            "epi-mono factorization recomposes");
  }

  void mono_is_kernel() {
    MorphismRef m = cat.image_embedding(s.morphism(rng)).embedding;
    QuotObject c = cat.cokernel(m);
    SubObject k = cat.kernel(c.projection);
    MorphismRef lift = cat.kernel_lift(k.embedding, m);
    require(cat.is_iso(lift), "mono is kernel of its cokernel (iso)");
    require(cat.is_equal(cat.compose(lift, k.embedding), m),
            "mono is kernel of its cokernel (factorization)");
  }

  void epi_is_cokernel() {
    MorphismRef e = cat.coimage_projection(s.morphism(rng)).projection;
    SubObject k = cat.kernel(e);
    QuotObject c = cat.cokernel(k.embedding);
    MorphismRef colift = cat.cokernel_colift(c.projection, e);
    require(cat.is_iso(colift), "epi is cokernel of its kernel (iso)");
    require(cat.is_equal(cat.compose(c.projection, colift), e),
            "epi is cokernel of its kernel (factorization)");
  }

  void biproduct() {
    ObjectRef a = s.object(rng);
    ObjectRef b = s.object(rng);
    DirectSum ds = cat.direct_sum(a, b);
    require(cat.is_equal(cat.compose(ds.inj1, ds.proj1), cat.identity(a)),
            "inj1.proj1 = id");
    require(cat.is_equal(cat.compose(ds.inj2, ds.proj2), cat.identity(b)),
            "inj2.proj2 = id");
    require(cat.is_zero_morphism(cat.compose(ds.inj1, ds.proj2)),
            "inj1.proj2 = 0");
    require(cat.is_zero_morphism(cat.compose(ds.inj2, ds.proj1)),
            "inj2.proj1 = 0");
    require(cat.is_equal(cat.add(cat.compose(ds.proj1, ds.inj1),
                                 cat.compose(ds.proj2, ds.inj2)),
                         cat.identity(ds.object)),
            "biproduct identity decomposition");
    MorphismRef u = s.morphism_into(rng, ds.object);
    MorphismRef p = cat.pairing(cat.compose(u, ds.proj1),
                                cat.compose(u, ds.proj2));
    require(cat.is_equal(p, u), "pairing reassembles");
    MorphismRef w = extend(ds.object);
    MorphismRef cp = cat.copairing(cat.compose(ds.inj1, w),
                                   cat.compose(ds.inj2, w));
    require(cat.is_equal(cp, w), "copairing reassembles");
  }

  void pullback_square() {
    MorphismRef f = s.morphism(rng);
    MorphismRef g = s.morphism_into(rng, f.target());
    PullbackResult pb = cat.pullback(f, g);
    require(cat.is_equal(cat.compose(pb.proj1, f), cat.compose(pb.proj2, g)),
            "pullback square commutes");
    MorphismRef u = s.morphism_into(rng, pb.object);
    MorphismRef med = cat.kernel_lift(
        pb.mono_to_sum,
        cat.pairing(cat.compose(u, pb.proj1), cat.compose(u, pb.proj2)));
    require(cat.is_equal(cat.compose(med, pb.proj1), cat.compose(u, pb.proj1)),
            "pullback mediating morphism (first leg)");
    require(cat.is_equal(cat.compose(med, pb.proj2), cat.compose(u, pb.proj2)),
            "pullback mediating morphism (second leg)");
  }

  void pushout_square() {
    MorphismRef f = s.morphism(rng);
    MorphismRef g = cat.compose(
        cat.identity(f.source()), extend(f.source()));
    PushoutResult po = cat.pushout(f, g);
    require(cat.is_equal(cat.compose(f, po.inj1), cat.compose(g, po.inj2)),
            "pushout square commutes");
    MorphismRef w = extend(po.object);
    MorphismRef med = cat.cokernel_colift(
        po.epi_from_sum,
        cat.copairing(cat.compose(po.inj1, w), cat.compose(po.inj2, w)));
    require(cat.is_equal(cat.compose(po.inj1, med), cat.compose(po.inj1, w)),
            "pushout mediating morphism (first leg)");
    require(cat.is_equal(cat.compose(po.inj2, med), cat.compose(po.inj2, w)),
            "pushout mediating morphism (second leg)");
  }

  void zero_laws() {
    require(cat.is_zero_object(cat.zero_object()), "zero object is zero");
    MorphismRef f = s.morphism(rng);
    MorphismRef z = cat.zero_morphism(f.source(), f.target());
    require(cat.is_zero_morphism(z), "zero morphism is zero");
    require(cat.is_zero_morphism(cat.compose(z, extend(f.target()))),
            "zero absorbs composition");
    require(cat.is_equal(cat.add(f, z), f), "adding zero is neutral");
  }

  void run_one(std::size_t which) {
    switch (which % 13) {
      case 0: return compose_assoc();
      case 1: return identity_laws();
      case 2: return additive_group();
      case 3: return bilinearity();
      case 4: return kernel_universal();
      case 5: return cokernel_universal();
      case 6: return image_factorization();
      case 7: return mono_is_kernel();
      case 8: return epi_is_cokernel();
      case 9: return biproduct();
      case 10: return pullback_square();
      case 11: return pushout_square();
      default: return zero_laws();
    }
  }
};

}  // namespace

AxiomSuiteResult run_axiom_suite(const Sampler& sampler,
                                 std::size_t instances, std::uint64_t seed) {
  Suite suite(sampler, seed);
  for (std::size_t i = 0; i < instances; ++i) {
    try {
      suite.run_one(i);
    } catch (const std::exception& e) {
      ++suite.result.checks;
      std::ostringstream msg;
      msg << "instance " << i << " raised: " << e.what();
      suite.result.failures.push_back(msg.str());
    }
  }
  return suite.result;
}

}  // namespace serreq
