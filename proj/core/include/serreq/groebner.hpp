#ifndef SERREQ_GROEBNER_HPP
#define SERREQ_GROEBNER_HPP

#include <optional>
#include <vector>

#include "serreq/poly.hpp"

namespace serreq {

struct NormalFormResult {
  PolyVector remainder;
  std::vector<PolyVector> quotients;  // rank-1, one per divisor
};

/// Division with remainder: f = Σ quotients[i]·g[i] + remainder, and no term
/// of the remainder is divisible by any leading term of g. Against a Gröbner
/// basis the remainder is the unique coset representative.
NormalFormResult normal_form(const PolyVector& f,
                             const std::vector<PolyVector>& g,
                             const TermOrder& ord = TermOrder::degrevlex());

/// Reduced Gröbner basis of the submodule generated by gens (normal pair
/// selection; leading coefficients normalized to 1; tails reduced).
std::vector<PolyVector> buchberger(
    const std::vector<PolyVector>& gens,
    const TermOrder& ord = TermOrder::degrevlex());

/// Generators of { (a₁..a_k) : Σ aᵢ·gensᵢ = 0 } in S^k, computed by a
/// Gröbner basis of the tagged module with a component-block elimination
/// order.
std::vector<PolyVector> syzygy_basis(const std::vector<PolyVector>& gens);

/// Writes f as an explicit combination of gens (not necessarily a Gröbner
/// basis); nullopt when f is not in the generated submodule.
std::optional<std::vector<PolyVector>> express_in(
    const std::vector<PolyVector>& gens, const PolyVector& f);

/// Generators of the colon ideal { f ∈ S : f·v ∈ <u> }.
std::vector<PolyVector> ideal_quotient(const std::vector<PolyVector>& u,
                                       const PolyVector& v);

/// Generators of the intersection of two ideals (rank-1 inputs).
std::vector<PolyVector> ideal_intersection(const std::vector<PolyVector>& a,
                                           const std::vector<PolyVector>& b);

/// Rabinowitsch: f ∈ √I iff 1 ∈ I + (1 − t·f) in the ring with a fresh
/// variable t appended.
bool radical_membership(const PolyVector& f,
                        const std::vector<PolyVector>& ideal);

/// Brute-force validation oracle: for homogeneous gens over a positively
/// ℤ-graded ring, the exact rational nullspaces of the multiplication maps,
/// degree by degree, covering all syzygies with coefficient degree ≤ bound.
/// ambient_shifts are the degree shifts of the ambient free module.
std::vector<PolyVector> truncated_kernel_oracle(
    const std::vector<PolyVector>& gens,
    const std::vector<DegreeVector>& ambient_shifts, long long bound);

}  // namespace serreq

#endif  // SERREQ_GROEBNER_HPP
