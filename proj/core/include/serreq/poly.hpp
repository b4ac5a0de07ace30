#ifndef SERREQ_POLY_HPP
#define SERREQ_POLY_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "serreq/error.hpp"
#include "serreq/numbers.hpp"

namespace serreq {

using DegreeVector = std::vector<long long>;

/// ℤʳ-graded polynomial ring ℚ[x₁..xₙ]: variable names plus one degree
/// vector per variable. Constants have degree 0 by construction.
struct GradedRing {
  std::vector<std::string> variables;
  std::vector<DegreeVector> variable_degrees;

  std::size_t grading_rank() const {
    return variable_degrees.empty() ? 1 : variable_degrees.front().size();
  }
  std::size_t var_index(const std::string& name) const;

  bool operator==(const GradedRing&) const = default;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::string> variables,
                  std::vector<DegreeVector> degrees);
/// All variables of degree (1) in a ℤ-grading.
RingPtr standard_ring(std::vector<std::string> variables);

/// One term of a free-module element: a monomial sitting in one component.
struct Term {
  std::size_t component = 0;          // 0-based
  std::vector<unsigned> exponents;    // one entry per ring variable

  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Monomial order with component handling. The default is degrevlex with
/// lower component index winning ties. A component block split makes every
/// term in a component below the split dominate the rest — the elimination
/// order used for syzygy computations.
class TermOrder {
 public:
  static TermOrder degrevlex() { return TermOrder(); }
  static TermOrder block_components(std::size_t split) {
    TermOrder o;
    o.component_split_ = split;
    return o;
  }

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const Term& a, const Term& b) const;
  bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }

 private:
  std::size_t component_split_ = std::numeric_limits<std::size_t>::max();
};

/// Sparse element of the free module S^rank: map from terms to nonzero
/// rational coefficients. Component degree shifts live with the module
/// presentation, not here.
class PolyVector {
 public:
  PolyVector() = default;
  PolyVector(RingPtr ring, std::size_t rank)
      : ring_(std::move(ring)), rank_(rank) {}

  static PolyVector unit(RingPtr ring, std::size_t rank,
                         std::size_t component);
  /// The constant polynomial c in S = S^1.
  static PolyVector constant(RingPtr ring, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Term, Rational>& terms() const { return terms_; }

  void set(const Term& t, const Rational& c);
  void add_to(const Term& t, const Rational& c);
  Rational coeff(const Term& t) const;

  PolyVector operator+(const PolyVector& other) const;
  PolyVector operator-(const PolyVector& other) const;
  PolyVector operator-() const;
  bool operator==(const PolyVector& other) const;

  PolyVector scaled(const Rational& c) const;
  /// Multiply by c · x^e.
  PolyVector times_monomial(const std::vector<unsigned>& e,
                            const Rational& c) const;
  /// Multiply by a rank-1 polynomial.
  PolyVector times_poly(const PolyVector& f) const;

  const Term& leading_term(const TermOrder& ord) const;
  const Rational& leading_coeff(const TermOrder& ord) const;

 private:
  void check_compatible(const PolyVector& other) const;

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::map<Term, Rational> terms_;
};

/// ℤʳ-degree of one term under the given component shifts.
DegreeVector term_degree(const GradedRing& ring, const Term& t,
                         const std::vector<DegreeVector>& shifts);

/// True iff all terms share one degree (the zero vector is homogeneous of
/// every degree); on success and for nonzero input, *degree_out is filled.
bool is_homogeneous(const PolyVector& v,
                    const std::vector<DegreeVector>& shifts,
                    DegreeVector* degree_out = nullptr);

/// Whether a | b as monomials; quotient exponents in *quot when divisible.
bool monomial_divides(const Term& a, const Term& b,
                      std::vector<unsigned>* quot = nullptr);

/// ASCII expressions with `+ - * ^`, integer or p/q coefficients, ring
/// variable names, and e_i (1-based) for module components.
PolyVector parse_poly(const RingPtr& ring, std::size_t rank,
                      const std::string& text);

/// Canonical form: terms in descending order, explicit signs, `*` between
/// factors; e_i printed for rank > 1.
std::string print_poly(const PolyVector& v,
                       const TermOrder& ord = TermOrder::degrevlex());

}  // namespace serreq

#endif  // SERREQ_POLY_HPP
