#include "serreq/grmod.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <utility>

namespace serreq {

namespace {

struct GrObject : detail::ObjectPayload {
  GradedModule module;
  mutable std::mutex mu;
  mutable std::optional<std::vector<PolyVector>> gb;
};

struct GrMorphism : detail::MorphismPayload {
  std::vector<PolyVector> rows;
};

/// Image of an ambient vector under the map given by rows: v ↦ Σ vⱼ·rowⱼ.
PolyVector apply_rows(const PolyVector& v, const std::vector<PolyVector>& rows,
                      const RingPtr& ring, std::size_t target_rank) {
  PolyVector out(ring, target_rank);
  for (const auto& [t, c] : v.terms())
    out = out + rows[t.component].times_monomial(t.exponents, c);
  return out;
}

}  // namespace

std::shared_ptr<GrmodCategory> GrmodCategory::create(RingPtr ring) {
  if (!ring) throw UsageError("grmod: null ring");
  return std::shared_ptr<GrmodCategory>(new GrmodCategory(std::move(ring)));
}

ObjectRef GrmodCategory::object(GradedModule m) {
  if (!m.ring || *m.ring != *ring_)
    throw UsageError("grmod object: ring mismatch");
  std::size_t r = ring_->grading_rank();
  for (const auto& d : m.gen_degrees)
    if (d.size() != r)
      throw UsageError("grmod object: generator degree of wrong length");
  for (std::size_t i = 0; i < m.relations.size(); ++i) {
    const PolyVector& row = m.relations[i];
    if (!row.ring() || *row.ring() != *ring_ ||
        row.rank() != m.gen_degrees.size())
      throw UsageError("grmod object: relation row " + std::to_string(i) +
                       " has the wrong ambient rank");
    if (!is_homogeneous(row, m.gen_degrees))
      throw UsageError("grmod object: relation row " + std::to_string(i) +
                       " is not homogeneous");
  }
  auto payload = std::make_shared<GrObject>();
  payload->module = std::move(m);
  return make_object(std::move(payload));
}

ObjectRef GrmodCategory::free_module(std::vector<DegreeVector> degrees) {
  GradedModule m;
  m.ring = ring_;
  m.gen_degrees = std::move(degrees);
  return object(std::move(m));
}

MorphismRef GrmodCategory::candidate(const ObjectRef& source,
                                     const ObjectRef& target,
                                     std::vector<PolyVector> rows) {
  check_owns(source, "grmod candidate");
  check_owns(target, "grmod candidate");
  const GradedModule& src = module_of(source);
  const GradedModule& tgt = module_of(target);
  if (rows.size() != src.gen_degrees.size())
    throw UsageError("grmod candidate: one row per source generator "
                     "required");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ring() || *rows[i].ring() != *ring_ ||
        rows[i].rank() != tgt.gen_degrees.size())
      throw UsageError("grmod candidate: row " + std::to_string(i) +
                       " has the wrong ambient rank");
    DegreeVector d;
    if (!is_homogeneous(rows[i], tgt.gen_degrees, &d))
      throw UsageError("grmod candidate: row " + std::to_string(i) +
                       " is not homogeneous");
    if (!rows[i].is_zero() && d != src.gen_degrees[i])
      throw UsageError("grmod candidate: row " + std::to_string(i) +
                       " is not a degree-0 map entry");
  }
  auto payload = std::make_shared<GrMorphism>();
  payload->rows = std::move(rows);
  return make_morphism(source, target, std::move(payload));
}

MorphismRef GrmodCategory::morphism(const ObjectRef& source,
                                    const ObjectRef& target,
                                    std::vector<PolyVector> rows) {
  MorphismRef phi = candidate(source, target, std::move(rows));
  if (!is_well_defined(phi))
    throw UsageError("grmod morphism: matrix does not respect the source "
                     "relations");
  return phi;
}

const GradedModule& GrmodCategory::module_of(const ObjectRef& m) const {
  check_owns(m, "module_of");
  return m.payload_as<GrObject>().module;
}

const std::vector<PolyVector>& GrmodCategory::rows_of(
    const MorphismRef& phi) const {
  check_owns(phi, "rows_of");
  return phi.payload_as<GrMorphism>().rows;
}

const std::vector<PolyVector>& GrmodCategory::relations_gb(
    const ObjectRef& m) const {
  check_owns(m, "relations_gb");
  const GrObject& p = m.payload_as<GrObject>();
  std::lock_guard<std::mutex> lock(p.mu);
  if (!p.gb) p.gb = buchberger(p.module.relations);
  return *p.gb;
}

ObjectRef GrmodCategory::zero_object_impl() {
  GradedModule m;
  m.ring = ring_;
  return object(std::move(m));
}

bool GrmodCategory::objects_equal_impl(const ObjectRef& a,
                                       const ObjectRef& b) {
  const GradedModule& ma = module_of(a);
  const GradedModule& mb = module_of(b);
  if (ma.gen_degrees != mb.gen_degrees) return false;
  return relations_gb(a) == relations_gb(b);
}

bool GrmodCategory::is_zero_object_impl(const ObjectRef& m) {
  const GradedModule& mod = module_of(m);
  const std::vector<PolyVector>& gb = relations_gb(m);
  for (std::size_t c = 0; c < mod.gen_degrees.size(); ++c) {
    PolyVector e = PolyVector::unit(ring_, mod.gen_degrees.size(), c);
    if (!normal_form(e, gb).remainder.is_zero()) return false;
  }
  return true;
}

MorphismRef GrmodCategory::identity_impl(const ObjectRef& m) {
  std::size_t n = module_of(m).gen_degrees.size();
  std::vector<PolyVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back(PolyVector::unit(ring_, n, i));
  return candidate(m, m, std::move(rows));
}

MorphismRef GrmodCategory::zero_morphism_impl(const ObjectRef& m,
                                              const ObjectRef& n) {
  std::size_t nt = module_of(n).gen_degrees.size();
  std::vector<PolyVector> rows(module_of(m).gen_degrees.size(),
                               PolyVector(ring_, nt));
  return candidate(m, n, std::move(rows));
}

bool GrmodCategory::is_well_defined_impl(const MorphismRef& phi) {
  const GradedModule& src = module_of(phi.source());
  const GradedModule& tgt = module_of(phi.target());
  const std::vector<PolyVector>& rows = rows_of(phi);
  const std::vector<PolyVector>& gb = relations_gb(phi.target());
  for (const PolyVector& rel : src.relations) {
    PolyVector image =
        apply_rows(rel, rows, ring_, tgt.gen_degrees.size());
    if (!normal_form(image, gb).remainder.is_zero()) return false;
  }
  return true;
}

bool GrmodCategory::is_equal_impl(const MorphismRef& phi,
                                  const MorphismRef& psi) {
  const std::vector<PolyVector>& a = rows_of(phi);
  const std::vector<PolyVector>& b = rows_of(psi);
  const std::vector<PolyVector>& gb = relations_gb(phi.target());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!normal_form(a[i] - b[i], gb).remainder.is_zero()) return false;
  return true;
}

MorphismRef GrmodCategory::compose_impl(const MorphismRef& phi,
                                        const MorphismRef& psi) {
  const std::vector<PolyVector>& a = rows_of(phi);
  const std::vector<PolyVector>& b = rows_of(psi);
  std::size_t nt = module_of(psi.target()).gen_degrees.size();
  std::vector<PolyVector> rows;
  for (const PolyVector& row : a)
    rows.push_back(apply_rows(row, b, ring_, nt));
  return candidate(phi.source(), psi.target(), std::move(rows));
}

MorphismRef GrmodCategory::add_impl(const MorphismRef& phi,
                                    const MorphismRef& psi) {
  const std::vector<PolyVector>& a = rows_of(phi);
  const std::vector<PolyVector>& b = rows_of(psi);
  std::vector<PolyVector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(a[i] + b[i]);
  return candidate(phi.source(), phi.target(), std::move(rows));
}

MorphismRef GrmodCategory::negate_impl(const MorphismRef& phi) {
  std::vector<PolyVector> rows;
  for (const PolyVector& row : rows_of(phi)) rows.push_back(-row);
  return candidate(phi.source(), phi.target(), std::move(rows));
}

namespace {

PolyVector embed_component(const PolyVector& v, std::size_t new_rank,
                           std::size_t offset) {
  PolyVector r(v.ring(), new_rank);
  for (const auto& [t, c] : v.terms()) {
    Term shifted = t;
    shifted.component += offset;
    r.set(shifted, c);
  }
  return r;
}

PolyVector project_components(const PolyVector& v, std::size_t from,
                              std::size_t rank) {
  PolyVector r(v.ring(), rank);
  for (const auto& [t, c] : v.terms()) {
    if (t.component < from || t.component >= from + rank) continue;
    Term shifted = t;
    shifted.component -= from;
    r.set(shifted, c);
  }
  return r;
}

}  // namespace

DirectSum GrmodCategory::direct_sum_impl(const ObjectRef& m1,
                                         const ObjectRef& m2) {
  const GradedModule& a = module_of(m1);
  const GradedModule& b = module_of(m2);
  std::size_t n1 = a.gen_degrees.size();
  std::size_t n2 = b.gen_degrees.size();
  GradedModule sum;
  sum.ring = ring_;
  sum.gen_degrees = a.gen_degrees;
  sum.gen_degrees.insert(sum.gen_degrees.end(), b.gen_degrees.begin(),
                         b.gen_degrees.end());
  for (const PolyVector& rel : a.relations)
    sum.relations.push_back(embed_component(rel, n1 + n2, 0));
  for (const PolyVector& rel : b.relations)
    sum.relations.push_back(embed_component(rel, n1 + n2, n1));
  DirectSum ds;
  ds.object = object(std::move(sum));
  std::vector<PolyVector> p1, p2, i1, i2;
  for (std::size_t i = 0; i < n1 + n2; ++i) {
    p1.push_back(i < n1 ? PolyVector::unit(ring_, n1, i)
                        : PolyVector(ring_, n1));
    p2.push_back(i < n1 ? PolyVector(ring_, n2)
                        : PolyVector::unit(ring_, n2, i - n1));
  }
  for (std::size_t i = 0; i < n1; ++i)
    i1.push_back(PolyVector::unit(ring_, n1 + n2, i));
  for (std::size_t i = 0; i < n2; ++i)
    i2.push_back(PolyVector::unit(ring_, n1 + n2, n1 + i));
  ds.proj1 = candidate(ds.object, m1, std::move(p1));
  ds.proj2 = candidate(ds.object, m2, std::move(p2));
  ds.inj1 = candidate(m1, ds.object, std::move(i1));
  ds.inj2 = candidate(m2, ds.object, std::move(i2));
  return ds;
}

SubObject GrmodCategory::kernel_impl(const MorphismRef& phi) {
  const GradedModule& src = module_of(phi.source());
  const GradedModule& tgt = module_of(phi.target());
  std::size_t ns = src.gen_degrees.size();
  std::vector<PolyVector> stacked = rows_of(phi);
  for (const PolyVector& rel : tgt.relations) stacked.push_back(rel);
  // Syzygies of (rows | target relations); the source block generates the
  // kernel as a subobject of the source.
  std::vector<PolyVector> gens;
  std::vector<DegreeVector> gen_degrees;
  for (const PolyVector& s : syzygy_basis(stacked)) {
    PolyVector head = project_components(s, 0, ns);
    if (head.is_zero()) continue;
    DegreeVector d;
    is_homogeneous(head, src.gen_degrees, &d);
    gens.push_back(head);
    gen_degrees.push_back(d);
  }
  // Relations of the kernel presentation: syzygies of (gens | src relations).
  std::vector<PolyVector> inner = gens;
  for (const PolyVector& rel : src.relations) inner.push_back(rel);
  GradedModule km;
  km.ring = ring_;
  km.gen_degrees = gen_degrees;
  for (const PolyVector& s : syzygy_basis(inner)) {
    PolyVector head = project_components(s, 0, gens.size());
    if (!head.is_zero()) km.relations.push_back(head);
  }
  SubObject k;
  k.object = object(std::move(km));
  k.embedding = candidate(k.object, phi.source(), gens);
  return k;
}

QuotObject GrmodCategory::cokernel_impl(const MorphismRef& phi) {
  const GradedModule& tgt = module_of(phi.target());
  GradedModule cm;
  cm.ring = ring_;
  cm.gen_degrees = tgt.gen_degrees;
  cm.relations = rows_of(phi);
  for (const PolyVector& rel : tgt.relations) cm.relations.push_back(rel);
  QuotObject c;
  c.object = object(std::move(cm));
  c.projection = identity_like(phi.target(), c.object);
  return c;
}

MorphismRef GrmodCategory::identity_like(const ObjectRef& from,
                                         const ObjectRef& to) {
  std::size_t n = module_of(from).gen_degrees.size();
  std::vector<PolyVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back(PolyVector::unit(ring_, n, i));
  return candidate(from, to, std::move(rows));
}

MorphismRef GrmodCategory::mono_lift_impl(const MorphismRef& kappa,
                                          const MorphismRef& tau) {
  const GradedModule& mid = module_of(kappa.target());
  std::size_t nk = module_of(kappa.source()).gen_degrees.size();
  std::vector<PolyVector> basis = rows_of(kappa);
  for (const PolyVector& rel : mid.relations) basis.push_back(rel);
  std::vector<PolyVector> lift_rows;
  for (const PolyVector& row : rows_of(tau)) {
    auto coeffs = express_in(basis, row);
    if (!coeffs)
      throw PreconditionError("mono_lift: image is not contained in the "
                              "subobject");
    PolyVector lifted(ring_, nk);
    for (std::size_t j = 0; j < nk; ++j)
      lifted = lifted + PolyVector::unit(ring_, nk, j).times_poly((*coeffs)[j]);
    lift_rows.push_back(lifted);
  }
  return candidate(tau.source(), kappa.source(), std::move(lift_rows));
}

MorphismRef GrmodCategory::epi_colift_impl(const MorphismRef& epsilon,
                                           const MorphismRef& eta) {
  const GradedModule& quot = module_of(epsilon.target());
  const GradedModule& mid = module_of(epsilon.source());
  std::size_t nm = mid.gen_degrees.size();
  std::size_t nq = quot.gen_degrees.size();
  std::vector<PolyVector> basis = rows_of(epsilon);
  for (const PolyVector& rel : quot.relations) basis.push_back(rel);
  std::vector<PolyVector> colift_rows;
  for (std::size_t q = 0; q < nq; ++q) {
    auto coeffs = express_in(basis, PolyVector::unit(ring_, nq, q));
    if (!coeffs)
      throw PreconditionError("epi_colift: not an epimorphism");
    PolyVector section(ring_, nm);
    for (std::size_t j = 0; j < nm; ++j)
      section =
          section + PolyVector::unit(ring_, nm, j).times_poly((*coeffs)[j]);
    colift_rows.push_back(apply_rows(section, rows_of(eta), ring_,
                                     module_of(eta.target()).gen_degrees.size()));
  }
  MorphismRef colift =
      candidate(epsilon.target(), eta.target(), std::move(colift_rows));
  if (!is_equal(compose(epsilon, colift), eta))
    throw PreconditionError("epi_colift: morphism does not factor through "
                            "the epimorphism");
  return colift;
}

// ---------------------------------------------------------------------------
// Hilbert series and quasi-zero tests

namespace {

std::vector<long long> positive_weights(const GradedRing& ring) {
  if (ring.grading_rank() != 1)
    throw UsageError("hilbert series: ℤ-graded rings only");
  std::vector<long long> w;
  for (const auto& d : ring.variable_degrees) {
    if (d[0] <= 0)
      throw UsageError("hilbert series: positive variable degrees required");
    w.push_back(d[0]);
  }
  return w;
}

using Mono = std::vector<unsigned>;

long long mono_degree(const Mono& m, const std::vector<long long>& w) {
  long long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    d += static_cast<long long>(m[i]) * w[i];
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Mono> remove_redundant(std::vector<Mono> gens) {
  std::vector<Mono> kept;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && mono_divides(gens[j], gens[i]) &&
          (gens[j] != gens[i] || j < i))
        redundant = true;
    if (!redundant) kept.push_back(gens[i]);
  }
  return kept;
}

void laurent_add(LaurentPoly* a, const LaurentPoly& b, const Integer& scale,
                 long long shift) {
  for (const auto& [e, c] : b) {
    Integer& slot = (*a)[e + shift];
    slot += c * scale;
    if (slot == 0) a->erase(e + shift);
  }
}

/// Hilbert numerator of S/I for a monomial ideal via the splitting
/// K(I + (m)) = K(I) − t^{deg m} · K(I : m).
LaurentPoly monomial_numerator(std::vector<Mono> gens,
                               const std::vector<long long>& w) {
  gens = remove_redundant(std::move(gens));
  if (gens.empty()) return LaurentPoly{{0, 1}};
  // A unit generator kills everything.
  if (mono_degree(gens.front(), w) == 0) return LaurentPoly{};
  Mono m = gens.back();
  gens.pop_back();
  LaurentPoly base = monomial_numerator(gens, w);
  std::vector<Mono> colon;
  for (const Mono& g : gens) {
    Mono q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    colon.push_back(q);
  }
  LaurentPoly rest = monomial_numerator(colon, w);
  laurent_add(&base, rest, -1, mono_degree(m, w));
  return base;
}

}  // namespace

LaurentPoly hilbert_series(const GradedModule& m) {
  std::vector<long long> w = positive_weights(*m.ring);
  std::vector<PolyVector> gb = buchberger(m.relations);
  TermOrder ord = TermOrder::degrevlex();
  LaurentPoly total;
  for (std::size_t c = 0; c < m.gen_degrees.size(); ++c) {
    std::vector<Mono> leads;
    for (const PolyVector& g : gb) {
      const Term& lt = g.leading_term(ord);
      if (lt.component == c) leads.push_back(lt.exponents);
    }
    LaurentPoly piece = monomial_numerator(leads, w);
    laurent_add(&total, piece, 1, m.gen_degrees[c][0]);
  }
  return total;
}

Integer hilbert_function(const GradedModule& m, long long d) {
  std::vector<long long> w = positive_weights(*m.ring);
  LaurentPoly series = hilbert_series(m);
  // Multiply by each geometric series 1/(1 − t^w), truncated at degree d.
  for (long long weight : w) {
    LaurentPoly next;
    for (const auto& [e, c] : series)
      for (long long k = e; k <= d; k += weight) {
        Integer& slot = next[k];
        slot += c;
        if (slot == 0) next.erase(k);
      }
    series = std::move(next);
  }
  auto it = series.find(d);
  return it == series.end() ? Integer(0) : it->second;
}

bool is_quasi_zero_proj(const GradedModule& m) {
  std::vector<long long> w = positive_weights(*m.ring);
  for (long long weight : w)
    if (weight != 1)
      throw UsageError("is_quasi_zero_proj: standard grading required");
  LaurentPoly n = hilbert_series(m);
  // Quasi-zero iff (1 − t)^#vars divides the numerator.
  for (std::size_t round = 0; round < w.size(); ++round) {
    Integer at_one = 0;
    for (const auto& [e, c] : n) at_one += c;
    if (at_one != 0) return false;
    if (n.empty()) return true;
    // Divide by (1 − t): with n = Σ aₑ tᵉ = (1 − t)·q, qₑ = aₑ + qₑ₋₁.
    LaurentPoly q;
    Integer carry = 0;
    long long lo = n.begin()->first;
    long long hi = n.rbegin()->first;
    for (long long e = lo; e <= hi; ++e) {
      auto it = n.find(e);
      carry += it == n.end() ? Integer(0) : it->second;
      if (carry != 0) q[e] = carry;
    }
    n = std::move(q);
  }
  return true;
}

bool is_quasi_zero_chart(const GradedModule& m, const ToricChartData& charts) {
  if (charts.charts.empty())
    throw UsageError("is_quasi_zero_chart: no charts given");
  std::size_t nv = m.ring->variables.size();
  std::size_t n = m.gen_degrees.size();
  for (const auto& chart : charts.charts) {
    std::vector<bool> keep(nv, false);
    for (std::size_t v : chart) {
      if (v >= nv)
        throw UsageError("is_quasi_zero_chart: variable index out of range");
      keep[v] = true;
    }
    // Substitute 1 for the variables outside the chart.
    std::vector<PolyVector> substituted;
    for (const PolyVector& rel : m.relations) {
      PolyVector s(m.ring, n);
      for (const auto& [t, c] : rel.terms()) {
        Term nt = t;
        for (std::size_t v = 0; v < nv; ++v)
          if (!keep[v]) nt.exponents[v] = 0;
        s.add_to(nt, c);
      }
      if (!s.is_zero()) substituted.push_back(s);
    }
    std::vector<PolyVector> gb = buchberger(substituted);
    for (std::size_t c = 0; c < n; ++c) {
      PolyVector e = PolyVector::unit(m.ring, n, c);
      if (!normal_form(e, gb).remainder.is_zero()) return false;
    }
  }
  return true;
}

std::vector<PolyVector> annihilator(const GradedModule& m) {
  std::size_t n = m.gen_degrees.size();
  if (n == 0) return {PolyVector::constant(m.ring, 1)};
  std::vector<PolyVector> ann =
      ideal_quotient(m.relations, PolyVector::unit(m.ring, n, 0));
  for (std::size_t c = 1; c < n; ++c) {
    std::vector<PolyVector> next =
        ideal_quotient(m.relations, PolyVector::unit(m.ring, n, c));
    ann = ideal_intersection(ann, next);
  }
  return buchberger(ann);
}

bool is_quasi_zero_radical(const GradedModule& m,
                           const std::vector<PolyVector>& b_gens) {
  std::vector<PolyVector> ann = annihilator(m);
  for (const PolyVector& b : b_gens)
    if (!radical_membership(b, ann)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// thick subcategories and the sheaf quotient

ThickSubcategory quasi_zero_proj_subcategory(
    const std::shared_ptr<GrmodCategory>& category) {
  auto cat = category;
  return ThickSubcategory(category, "quasi-zero", [cat](const ObjectRef& m) {
    return is_quasi_zero_proj(cat->module_of(m));
  });
}

ThickSubcategory quasi_zero_chart_subcategory(
    const std::shared_ptr<GrmodCategory>& category, ToricChartData charts) {
  auto cat = category;
  return ThickSubcategory(
      category, "quasi-zero",
      [cat, charts = std::move(charts)](const ObjectRef& m) {
        return is_quasi_zero_chart(cat->module_of(m), charts);
      });
}

ThickSubcategory quasi_zero_radical_subcategory(
    const std::shared_ptr<GrmodCategory>& category,
    std::vector<PolyVector> b_gens) {
  auto cat = category;
  return ThickSubcategory(
      category, "quasi-zero",
      [cat, b_gens = std::move(b_gens)](const ObjectRef& m) {
        return is_quasi_zero_radical(cat->module_of(m), b_gens);
      });
}

std::shared_ptr<SerreQuotientCategory> coherent_sheaf_category(
    const ThickSubcategory& quasi_zero) {
  return quotient_category(quasi_zero);
}

}  // namespace serreq
