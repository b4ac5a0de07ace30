#ifndef SERREQ_GENERALIZED_HPP
#define SERREQ_GENERALIZED_HPP

#include <utility>

#include "serreq/category.hpp"

namespace serreq {

/// A generalized morphism M → N over a base Abelian category: a triple
///
///   iota : M' ↪ M      (the domain, a mono)
///   arrow: M' → N''
///   jay  : N  ↠ N''    (the codomain, an epi)
///
/// read as iota⁻¹ · arrow · jay⁻¹. One concrete representative is stored;
/// no canonical form is enforced, equality is the witness search equal_gen.
struct GeneralizedMorphism {
  ObjectRef source;
  ObjectRef target;
  MorphismRef iota;
  MorphismRef arrow;
  MorphismRef jay;
};

/// Validates endpoints (usage error) and the mono/epi requirements on the
/// legs (precondition error), then assembles the triple.
GeneralizedMorphism make_generalized(const MorphismRef& iota,
                                     const MorphismRef& arrow,
                                     const MorphismRef& jay);

/// [1_M, phi, 1_N].
GeneralizedMorphism honest_of(const MorphismRef& phi);

bool is_honest(const GeneralizedMorphism& psi);

GeneralizedMorphism id_gen(const ObjectRef& m);
GeneralizedMorphism zero_gen(const ObjectRef& m, const ObjectRef& n);

/// True iff the unique candidate lift of iota_phi along iota_psi and colift
/// of jay_psi along jay_phi exist, are isomorphisms, and commute with the
/// arrows. False (not an error) when sources or targets differ.
bool equal_gen(const GeneralizedMorphism& phi, const GeneralizedMorphism& psi);

GeneralizedMorphism compose_gen(const GeneralizedMorphism& phi,
                                const GeneralizedMorphism& psi);

GeneralizedMorphism negate_gen(const GeneralizedMorphism& psi);

/// Restricts both inputs to the pullback of their domains; the results share
/// one domain leg.
std::pair<GeneralizedMorphism, GeneralizedMorphism> common_restriction(
    const GeneralizedMorphism& beta, const GeneralizedMorphism& gamma);

/// Dual: pushout of the codomains; the results share one codomain leg.
std::pair<GeneralizedMorphism, GeneralizedMorphism> common_coarsening(
    const GeneralizedMorphism& beta, const GeneralizedMorphism& gamma);

/// Common adaptation (restriction then coarsening), then arrow_phi ± arrow_psi.
GeneralizedMorphism add_gen(const GeneralizedMorphism& phi,
                            const GeneralizedMorphism& psi, int sign);

/// [iota_psi, 0, jay_psi], the idempotent psi − psi.
GeneralizedMorphism associated_idempotent(const GeneralizedMorphism& psi);

}  // namespace serreq

#endif  // SERREQ_GENERALIZED_HPP
