#include "serreq/groebner.hpp"

#include <algorithm>
#include <utility>

#include "serreq/qmatrix.hpp"

namespace serreq {

namespace {

void check_same_ambient(const std::vector<PolyVector>& g) {
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!g[i].ring() || *g[i].ring() != *g[0].ring() ||
        g[i].rank() != g[0].rank())
      throw UsageError("polynomial vectors from different ambient modules");
}

unsigned long long total_degree(const Term& t) {
  unsigned long long d = 0;
  for (unsigned e : t.exponents) d += e;
  return d;
}

Term lcm_term(const Term& a, const Term& b) {
  Term l = a;
  for (std::size_t i = 0; i < l.exponents.size(); ++i)
    l.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return l;
}

PolyVector embed(const PolyVector& v, std::size_t new_rank,
                 std::size_t component_offset) {
  PolyVector r(v.ring(), new_rank);
  for (const auto& [t, c] : v.terms()) {
    Term shifted = t;
    shifted.component += component_offset;
    r.set(shifted, c);
  }
  return r;
}

/// Component-range slice as a vector of the given rank.
PolyVector slice(const PolyVector& v, std::size_t from, std::size_t rank) {
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

NormalFormResult normal_form(const PolyVector& f,
                             const std::vector<PolyVector>& g,
                             const TermOrder& ord) {
  for (const auto& gi : g)
    if (gi.ring() && f.ring() &&
        (*gi.ring() != *f.ring() || gi.rank() != f.rank()))
      throw UsageError("normal_form: ambient module mismatch");
  NormalFormResult res;
  res.remainder = PolyVector(f.ring(), f.rank());
  res.quotients.assign(g.size(), PolyVector(f.ring(), 1));
  PolyVector p = f;
  while (!p.is_zero()) {
    Term lt = p.leading_term(ord);
    Rational lc = p.coeff(lt);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_zero()) continue;
      std::vector<unsigned> quot;
      if (!monomial_divides(g[i].leading_term(ord), lt, &quot)) continue;
      Rational ratio = lc / g[i].leading_coeff(ord);
      p = p - g[i].times_monomial(quot, ratio);
      Term qt;
      qt.exponents = std::move(quot);
      res.quotients[i].add_to(qt, ratio);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_to(lt, lc);
      p.set(lt, 0);
    }
  }
  return res;
}

std::vector<PolyVector> buchberger(const std::vector<PolyVector>& gens,
                                   const TermOrder& ord) {
  check_same_ambient(gens);
  std::vector<PolyVector> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return {};
  std::size_t rank = basis[0].rank();

  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  auto lead = [&](std::size_t i) -> const Term& {
    return basis[i].leading_term(ord);
  };
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (lead(i).component == lead(j).component) pairs.push_back({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const Pair& p : pairs)
      if (p.i == a && p.j == b) return true;
    return false;
  };

  while (!pairs.empty()) {
    // Normal selection: smallest lcm degree first.
    std::size_t best = 0;
    unsigned long long best_deg =
        total_degree(lcm_term(lead(pairs[0].i), lead(pairs[0].j)));
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      unsigned long long d =
          total_degree(lcm_term(lead(pairs[p].i), lead(pairs[p].j)));
      if (d < best_deg) {
        best_deg = d;
        best = p;
      }
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    const Term lt_i = lead(pr.i);
    const Term lt_j = lead(pr.j);
    Term l = lcm_term(lt_i, lt_j);
    // Product criterion — for ideals only; it is unsound for module
    // components in general.
    if (rank == 1 && total_degree(l) == total_degree(lt_i) + total_degree(lt_j))
      continue;
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (monomial_divides(lead(k), l) && !pending(pr.i, k) &&
          !pending(pr.j, k))
        skip = true;
    }
    if (skip) continue;
    std::vector<unsigned> qi, qj;
    monomial_divides(lt_i, l, &qi);
    monomial_divides(lt_j, l, &qj);
    PolyVector s =
        basis[pr.i].times_monomial(qi, Rational(1) / basis[pr.i].leading_coeff(ord)) -
        basis[pr.j].times_monomial(qj, Rational(1) / basis[pr.j].leading_coeff(ord));
    PolyVector r = normal_form(s, basis, ord).remainder;
    if (!r.is_zero()) {
      basis.push_back(r);
      add_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<bool> drop(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      if (!monomial_divides(lead(j), lead(i))) continue;
      if (lead(i) == lead(j) && j > i) continue;  // keep the earlier one
      drop[i] = true;
    }
  std::vector<PolyVector> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!drop[i]) minimal.push_back(basis[i]);
  // Tail-reduce each element against the others and normalize leads.
  std::vector<PolyVector> reduced(minimal.size(),
                                  PolyVector(basis[0].ring(), rank));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyVector> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    PolyVector r = normal_form(minimal[i], others, ord).remainder;
    reduced[i] = r.scaled(Rational(1) / r.leading_coeff(ord));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ord](const PolyVector& a, const PolyVector& b) {
              return ord.less(a.leading_term(ord), b.leading_term(ord));
            });
  return reduced;
}

std::vector<PolyVector> syzygy_basis(const std::vector<PolyVector>& gens) {
  if (gens.empty()) return {};
  check_same_ambient(gens);
  std::size_t r = gens[0].rank();
  std::size_t k = gens.size();
  std::vector<PolyVector> tagged;
  for (std::size_t i = 0; i < k; ++i) {
    PolyVector t = embed(gens[i], r + k, 0);
    Term tag;
    tag.component = r + i;
    tag.exponents.assign(gens[0].ring()->variables.size(), 0);
    t.add_to(tag, 1);
    tagged.push_back(t);
  }
  TermOrder ord = TermOrder::block_components(r);
  std::vector<PolyVector> result;
  for (const auto& b : buchberger(tagged, ord)) {
    bool pure_tag = true;
    for (const auto& [t, c] : b.terms())
      if (t.component < r) pure_tag = false;
    if (pure_tag) result.push_back(slice(b, r, k));
  }
  return result;
}

std::optional<std::vector<PolyVector>> express_in(
    const std::vector<PolyVector>& gens, const PolyVector& f) {
  std::size_t r = f.rank();
  std::size_t k = gens.size();
  std::vector<PolyVector> tagged;
  for (std::size_t i = 0; i < k; ++i) {
    if (!gens[i].ring() || *gens[i].ring() != *f.ring() ||
        gens[i].rank() != r)
      throw UsageError("express_in: ambient module mismatch");
    PolyVector t = embed(gens[i], r + k, 0);
    Term tag;
    tag.component = r + i;
    tag.exponents.assign(f.ring()->variables.size(), 0);
    t.add_to(tag, 1);
    tagged.push_back(t);
  }
  TermOrder ord = TermOrder::block_components(r);
  std::vector<PolyVector> gb = buchberger(tagged, ord);
  PolyVector rem = normal_form(embed(f, r + k, 0), gb, ord).remainder;
  for (const auto& [t, c] : rem.terms())
    if (t.component < r) return std::nullopt;
  std::vector<PolyVector> coeffs;
  for (std::size_t i = 0; i < k; ++i) {
    PolyVector ci(f.ring(), 1);
    for (const auto& [t, c] : rem.terms()) {
      if (t.component != r + i) continue;
      Term mono;
      mono.exponents = t.exponents;
      ci.set(mono, -c);
    }
    coeffs.push_back(ci);
  }
  return coeffs;
}

std::vector<PolyVector> ideal_quotient(const std::vector<PolyVector>& u,
                                       const PolyVector& v) {
  if (v.is_zero()) return {PolyVector::constant(v.ring(), 1)};
  std::vector<PolyVector> list;
  list.push_back(v);
  for (const auto& g : u) list.push_back(g);
  std::vector<PolyVector> result;
  for (const auto& s : syzygy_basis(list)) {
    PolyVector head = slice(s, 0, 1);
    if (!head.is_zero()) result.push_back(head);
  }
  return buchberger(result);
}

std::vector<PolyVector> ideal_intersection(const std::vector<PolyVector>& a,
                                           const std::vector<PolyVector>& b) {
  RingPtr ring;
  if (!a.empty())
    ring = a[0].ring();
  else if (!b.empty())
    ring = b[0].ring();
  else
    return {};
  PolyVector v = PolyVector::unit(ring, 2, 0) + PolyVector::unit(ring, 2, 1);
  std::vector<PolyVector> u;
  for (const auto& f : a) u.push_back(embed(f, 2, 0));
  for (const auto& g : b) u.push_back(embed(g, 2, 1));
  return ideal_quotient(u, v);
}

bool radical_membership(const PolyVector& f,
                        const std::vector<PolyVector>& ideal) {
  if (f.rank() != 1) throw UsageError("radical_membership: rank-1 input only");
  if (f.is_zero()) return true;
  const GradedRing& ring = *f.ring();
  std::string fresh = "t";
  bool clash = true;
  while (clash) {
    clash = false;
    for (const auto& v : ring.variables)
      if (v == fresh) {
        fresh += "_";
        clash = true;
      }
  }
  std::vector<std::string> vars = ring.variables;
  vars.push_back(fresh);
  std::vector<DegreeVector> degs = ring.variable_degrees;
  degs.push_back(DegreeVector(ring.grading_rank(), 1));
  RingPtr ext = make_ring(std::move(vars), std::move(degs));
  auto remap = [&ext](const PolyVector& p) {
    PolyVector r(ext, 1);
    for (const auto& [t, c] : p.terms()) {
      Term nt = t;
      nt.exponents.push_back(0);
      r.set(nt, c);
    }
    return r;
  };
  std::vector<PolyVector> extended;
  for (const auto& g : ideal) extended.push_back(remap(g));
  std::vector<unsigned> t_mono(ext->variables.size(), 0);
  t_mono.back() = 1;
  PolyVector witness =
      PolyVector::constant(ext, 1) - remap(f).times_monomial(t_mono, 1);
  extended.push_back(witness);
  for (const auto& g : buchberger(extended)) {
    const Term& lt = g.leading_term(TermOrder::degrevlex());
    if (total_degree(lt) == 0) return true;
  }
  return false;
}

namespace {

void enum_monomials(const std::vector<long long>& weights, std::size_t i,
                    long long remaining, std::vector<unsigned>& current,
                    std::vector<std::vector<unsigned>>& out) {
  if (i == weights.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (long long e = 0; e * weights[i] <= remaining; ++e) {
    current[i] = static_cast<unsigned>(e);
    enum_monomials(weights, i + 1, remaining - e * weights[i], current, out);
  }
  current[i] = 0;
}

std::vector<std::vector<unsigned>> monomials_of_degree(
    const std::vector<long long>& weights, long long degree) {
  std::vector<std::vector<unsigned>> out;
  if (degree < 0) return out;
  std::vector<unsigned> current(weights.size(), 0);
  enum_monomials(weights, 0, degree, current, out);
  return out;
}

}  // namespace

std::vector<PolyVector> truncated_kernel_oracle(
    const std::vector<PolyVector>& gens,
    const std::vector<DegreeVector>& ambient_shifts, long long bound) {
  if (gens.empty()) return {};
  check_same_ambient(gens);
  const RingPtr& ring = gens[0].ring();
  if (ring->grading_rank() != 1)
    throw UsageError("truncated_kernel_oracle: ℤ-graded rings only");
  std::vector<long long> weights;
  for (const auto& d : ring->variable_degrees) {
    if (d[0] <= 0)
      throw UsageError("truncated_kernel_oracle: positive grading required");
    weights.push_back(d[0]);
  }
  std::size_t k = gens.size();
  std::vector<PolyVector> result;
  std::vector<std::size_t> live;         // indices of nonzero generators
  std::vector<long long> live_degrees;   // their internal degrees
  for (std::size_t i = 0; i < k; ++i) {
    if (gens[i].is_zero()) {
      result.push_back(PolyVector::unit(ring, k, i));
      continue;
    }
    DegreeVector d;
    if (!is_homogeneous(gens[i], ambient_shifts, &d))
      throw UsageError("truncated_kernel_oracle: inhomogeneous generator");
    live.push_back(i);
    live_degrees.push_back(d[0]);
  }
  if (live.empty()) return result;
  long long dmin = *std::min_element(live_degrees.begin(), live_degrees.end());
  for (long long deg = dmin; deg <= bound + dmin; ++deg) {
    // Domain basis: (live index, monomial) with matching internal degree.
    std::vector<std::pair<std::size_t, std::vector<unsigned>>> domain;
    for (std::size_t li = 0; li < live.size(); ++li)
      for (auto& m : monomials_of_degree(weights, deg - live_degrees[li]))
        domain.emplace_back(li, std::move(m));
    // Codomain basis: terms of the ambient free module at this degree.
    std::map<Term, std::size_t> codomain;
    for (std::size_t c = 0; c < ambient_shifts.size(); ++c)
      for (auto& m : monomials_of_degree(weights, deg - ambient_shifts[c][0])) {
        Term t;
        t.component = c;
        t.exponents = std::move(m);
        codomain.emplace(t, codomain.size());
      }
    if (domain.empty()) continue;
    QMatrix mat(domain.size(), codomain.size());
    for (std::size_t row = 0; row < domain.size(); ++row) {
      PolyVector image = gens[live[domain[row].first]].times_monomial(
          domain[row].second, 1);
      for (const auto& [t, c] : image.terms())
        mat.at(row, codomain.at(t)) = c;
    }
    QMatrix ns = mat.left_nullspace();
    for (std::size_t row = 0; row < ns.rows(); ++row) {
      PolyVector syz(ring, k);
      for (std::size_t col = 0; col < domain.size(); ++col) {
        if (ns.at(row, col) == 0) continue;
        Term t;
        t.component = live[domain[col].first];
        t.exponents = domain[col].second;
        syz.add_to(t, ns.at(row, col));
      }
      if (!syz.is_zero()) result.push_back(syz);
    }
  }
  return result;
}

}  // namespace serreq
