#include "serreq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace serreq {

std::size_t GradedRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  throw UsageError("unknown variable '" + name + "'");
}

RingPtr make_ring(std::vector<std::string> variables,
                  std::vector<DegreeVector> degrees) {
  if (variables.size() != degrees.size())
    throw UsageError("make_ring: one degree vector per variable required");
  if (!degrees.empty()) {
    std::size_t r = degrees.front().size();
    if (r == 0) throw UsageError("make_ring: empty grading vectors");
    for (const auto& d : degrees)
      if (d.size() != r)
        throw UsageError("make_ring: grading vectors of unequal length");
  }
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw UsageError("make_ring: duplicate variable '" + variables[i] +
                         "'");
  auto ring = std::make_shared<GradedRing>();
  ring->variables = std::move(variables);
  ring->variable_degrees = std::move(degrees);
  return ring;
}

RingPtr standard_ring(std::vector<std::string> variables) {
  std::vector<DegreeVector> degrees(variables.size(), DegreeVector{1});
  return make_ring(std::move(variables), std::move(degrees));
}

// ---------------------------------------------------------------------------
// term order

int TermOrder::compare(const Term& a, const Term& b) const {
  bool fa = a.component < component_split_;
  bool fb = b.component < component_split_;
  if (fa != fb) return fa ? 1 : -1;
  unsigned long long da = 0, db = 0;
  for (unsigned e : a.exponents) da += e;
  for (unsigned e : b.exponents) db += e;
  if (da != db) return da < db ? -1 : 1;
  // degrevlex tie-break: the last variable where the exponents differ
  // decides, larger exponent there means smaller term.
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i])
      return a.exponents[i] > b.exponents[i] ? -1 : 1;
  }
  if (a.component != b.component) return a.component < b.component ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------------------
// PolyVector

PolyVector PolyVector::unit(RingPtr ring, std::size_t rank,
                            std::size_t component) {
  if (component >= rank) throw UsageError("unit vector component out of range");
  PolyVector v(std::move(ring), rank);
  Term t;
  t.component = component;
  t.exponents.assign(v.ring_->variables.size(), 0);
  v.terms_[t] = 1;
  return v;
}

PolyVector PolyVector::constant(RingPtr ring, const Rational& c) {
  PolyVector v(std::move(ring), 1);
  if (c != 0) {
    Term t;
    t.exponents.assign(v.ring_->variables.size(), 0);
    v.terms_[t] = c;
  }
  return v;
}

void PolyVector::set(const Term& t, const Rational& c) {
  if (t.component >= rank_ || t.exponents.size() != ring_->variables.size())
    throw UsageError("PolyVector::set: malformed term");
  if (c == 0)
    terms_.erase(t);
  else
    terms_[t] = c;
}

void PolyVector::add_to(const Term& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational PolyVector::coeff(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyVector::check_compatible(const PolyVector& other) const {
  if (!ring_ || !other.ring_ || *ring_ != *other.ring_ ||
      rank_ != other.rank_)
    throw UsageError("PolyVector: ambient module mismatch");
}

PolyVector PolyVector::operator+(const PolyVector& other) const {
  check_compatible(other);
  PolyVector r = *this;
  for (const auto& [t, c] : other.terms_) r.add_to(t, c);
  return r;
}

PolyVector PolyVector::operator-(const PolyVector& other) const {
  check_compatible(other);
  PolyVector r = *this;
  for (const auto& [t, c] : other.terms_) r.add_to(t, -c);
  return r;
}

PolyVector PolyVector::operator-() const { return scaled(-1); }

bool PolyVector::operator==(const PolyVector& other) const {
  check_compatible(other);
  return terms_ == other.terms_;
}

PolyVector PolyVector::scaled(const Rational& c) const {
  PolyVector r(ring_, rank_);
  if (c == 0) return r;
  for (const auto& [t, v] : terms_) r.terms_[t] = v * c;
  return r;
}

PolyVector PolyVector::times_monomial(const std::vector<unsigned>& e,
                                      const Rational& c) const {
  if (e.size() != ring_->variables.size())
    throw UsageError("times_monomial: exponent vector length mismatch");
  PolyVector r(ring_, rank_);
  if (c == 0) return r;
  for (const auto& [t, v] : terms_) {
    Term shifted = t;
    for (std::size_t i = 0; i < e.size(); ++i) shifted.exponents[i] += e[i];
    r.terms_[shifted] = v * c;
  }
  return r;
}

PolyVector PolyVector::times_poly(const PolyVector& f) const {
  if (!f.ring_ || *f.ring_ != *ring_ || f.rank_ != 1)
    throw UsageError("times_poly: multiplier must be a rank-1 polynomial "
                     "over the same ring");
  PolyVector r(ring_, rank_);
  for (const auto& [ft, fc] : f.terms_)
    for (const auto& [t, c] : terms_) {
      Term shifted = t;
      for (std::size_t i = 0; i < ft.exponents.size(); ++i)
        shifted.exponents[i] += ft.exponents[i];
      r.add_to(shifted, fc * c);
    }
  return r;
}

const Term& PolyVector::leading_term(const TermOrder& ord) const {
  if (terms_.empty())
    throw UsageError("leading_term of the zero vector");
  const Term* best = nullptr;
  for (const auto& [t, c] : terms_)
    if (best == nullptr || ord.less(*best, t)) best = &t;
  return *best;
}

const Rational& PolyVector::leading_coeff(const TermOrder& ord) const {
  return terms_.at(leading_term(ord));
}

// ---------------------------------------------------------------------------
// degrees

DegreeVector term_degree(const GradedRing& ring, const Term& t,
                         const std::vector<DegreeVector>& shifts) {
  std::size_t r = ring.grading_rank();
  DegreeVector d(r, 0);
  if (t.component < shifts.size()) {
    const DegreeVector& s = shifts[t.component];
    if (s.size() != r) throw UsageError("term_degree: shift length mismatch");
    d = s;
  }
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    if (t.exponents[i] == 0) continue;
    const DegreeVector& vd = ring.variable_degrees[i];
    for (std::size_t k = 0; k < r; ++k)
      d[k] += static_cast<long long>(t.exponents[i]) * vd[k];
  }
  return d;
}

bool is_homogeneous(const PolyVector& v,
                    const std::vector<DegreeVector>& shifts,
                    DegreeVector* degree_out) {
  bool first = true;
  DegreeVector deg;
  for (const auto& [t, c] : v.terms()) {
    DegreeVector d = term_degree(*v.ring(), t, shifts);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (!first && degree_out != nullptr) *degree_out = deg;
  return true;
}

bool monomial_divides(const Term& a, const Term& b,
                      std::vector<unsigned>* quot) {
  if (a.component != b.component ||
      a.exponents.size() != b.exponents.size())
    return false;
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  if (quot != nullptr) {
    quot->resize(a.exponents.size());
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
      (*quot)[i] = b.exponents[i] - a.exponents[i];
  }
  return true;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::size_t rank, const std::string& text)
      : ring_(ring), rank_(rank), text_(text) {}

  PolyVector parse() {
    PolyVector v = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("polynomial parse error at position " +
                     std::to_string(pos_) + ": " + msg + " in '" + text_ +
                     "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(text_.substr(start, pos_ - start));
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
          text_[pos_] == '_'))
      fail("expected an identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  PolyVector parse_expr() {
    PolyVector acc(ring_, rank_);
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    acc = acc + parse_term(negative);
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + parse_term(false);
      } else if (c == '-') {
        ++pos_;
        acc = acc + parse_term(true);
      } else {
        break;
      }
    }
    return acc;
  }

  PolyVector parse_term(bool negative) {
    Rational coeff = negative ? -1 : 1;
    std::vector<unsigned> exps(ring_->variables.size(), 0);
    std::optional<std::size_t> component;
    PolyVector nested(ring_, 1);
    bool has_nested = false;
    for (;;) {
      parse_factor(&coeff, &exps, &component, &nested, &has_nested);
      if (!eat('*')) break;
    }
    std::size_t comp = component.value_or(0);
    if (comp >= rank_) fail("component index exceeds the module rank");
    PolyVector term = PolyVector::unit(ring_, rank_, comp)
                          .times_monomial(exps, coeff);
    if (has_nested) {
      // Fold the parenthesized rank-1 parts in by multiplication.
      term = term.times_poly(nested);
    }
    return term;
  }

  void parse_factor(Rational* coeff, std::vector<unsigned>* exps,
                    std::optional<std::size_t>* component,
                    PolyVector* nested, bool* has_nested) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      PolyVector inner = PolyParser(ring_, 1, "").parse_from(*this);
      if (!eat(')')) fail("expected ')'");
      *nested = *has_nested ? nested->times_poly(inner) : inner;
      *has_nested = true;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_integer();
      Rational q(num);
      if (eat('/')) {
        Integer den = parse_integer();
        if (den == 0) fail("zero denominator");
        q = Rational(num, den);
      }
      *coeff *= q;
      if (eat('^')) {
        // Allow things like 2^3 for convenience.
        Integer e = parse_integer();
        Rational p = 1;
        for (Integer i = 0; i < e; ++i) p *= q;
        *coeff /= q;
        *coeff *= p;
      }
      return;
    }
    std::string name = parse_ident();
    // Component marker e_i (1-based), unless a ring variable shadows it.
    bool is_var = false;
    for (const auto& v : ring_->variables)
      if (v == name) is_var = true;
    if (!is_var && name.size() > 2 && name[0] == 'e' && name[1] == '_') {
      std::string idx = name.substr(2);
      for (char ch : idx)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          fail("bad component index in '" + name + "'");
      std::size_t comp = std::stoul(idx);
      if (comp == 0) fail("component indices are 1-based");
      if (component->has_value()) fail("two component markers in one term");
      *component = comp - 1;
      return;
    }
    std::size_t vi;
    try {
      vi = ring_->var_index(name);
    } catch (const UsageError&) {
      fail("unknown variable '" + name + "'");
    }
    unsigned e = 1;
    if (eat('^')) {
      Integer exp = parse_integer();
      if (exp < 0 || exp > 1000000) fail("exponent out of range");
      e = static_cast<unsigned>(exp);
    }
    (*exps)[vi] += e;
  }

  // Continue parsing a nested expression inside the parent's text buffer.
  PolyVector parse_from(PolyParser& parent) {
    text_ = parent.text_;
    pos_ = parent.pos_;
    PolyVector v = parse_expr();
    parent.pos_ = pos_;
    return v;
  }

  RingPtr ring_;
  std::size_t rank_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyVector parse_poly(const RingPtr& ring, std::size_t rank,
                      const std::string& text) {
  if (!ring) throw UsageError("parse_poly: null ring");
  return PolyParser(ring, rank, text).parse();
}

// ---------------------------------------------------------------------------
// printer

std::string print_poly(const PolyVector& v, const TermOrder& ord) {
  if (v.is_zero()) return "0";
  std::vector<std::pair<Term, Rational>> terms(v.terms().begin(),
                                               v.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&ord](const auto& a, const auto& b) {
              return ord.less(b.first, a.first);
            });
  const GradedRing& ring = *v.ring();
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        out << " - ";
        a = -a;
      } else {
        out << " + ";
      }
    }
    std::vector<std::string> factors;
    if (a != 1) factors.push_back(a.str());
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      std::string f = ring.variables[i];
      if (t.exponents[i] > 1) f += "^" + std::to_string(t.exponents[i]);
      factors.push_back(f);
    }
    if (v.rank() > 1)
      factors.push_back("e_" + std::to_string(t.component + 1));
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace serreq
