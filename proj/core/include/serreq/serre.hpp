#ifndef SERREQ_SERRE_HPP
#define SERREQ_SERRE_HPP

#include <memory>

#include "serreq/generalized.hpp"
#include "serreq/thick.hpp"

namespace serreq {

/// A Gabriel morphism with respect to C: coker(iota) ∈ C and ker(jay) ∈ C.
bool is_gabriel(const GeneralizedMorphism& psi, const ThickSubcategory& c);

/// Zeroid membership: the image object of the arrow lies in C.
bool in_zeroid(const GeneralizedMorphism& psi, const ThickSubcategory& c);

/// Equality in A/C: the difference lies in the zeroid. Errors when the
/// morphisms are not parallel.
bool serre_equal(const GeneralizedMorphism& phi,
                 const GeneralizedMorphism& psi, const ThickSubcategory& c);

/// Lift of gamma: L→M along beta: K→M modulo C; the result composed with
/// beta is serre_equal to gamma. Errors with "not liftable modulo C: ..."
/// identifying which of the two obstructions failed.
GeneralizedMorphism lift_gabriel(const GeneralizedMorphism& gamma,
                                 const GeneralizedMorphism& beta,
                                 const ThickSubcategory& c);

/// Colift of gamma: M→L along beta: M→K modulo C (formal dual of the lift).
GeneralizedMorphism colift_gabriel(const GeneralizedMorphism& gamma,
                                   const GeneralizedMorphism& beta,
                                   const ThickSubcategory& c);

/// Both the kernel and the cokernel object of the arrow lie in C.
bool is_quotient_iso(const GeneralizedMorphism& phi,
                     const ThickSubcategory& c);

/// The Serre quotient A/C: objects wrap A-objects, morphisms wrap Gabriel
/// morphisms, equality is serre_equal, and every interface operation is
/// realized through the generalized-morphism calculus. The instance is a
/// full Category, so constructions (and the axiom suites) nest.
class SerreQuotientCategory : public Category {
 public:
  static std::shared_ptr<SerreQuotientCategory> create(ThickSubcategory c);

  std::string name() const override;

  const ThickSubcategory& thick() const { return thick_; }
  const std::shared_ptr<Category>& base() const { return base_; }

  ObjectRef from_base(const ObjectRef& base_object);
  const ObjectRef& base_object(const ObjectRef& m) const;

  /// Wraps a Gabriel morphism; rejects non-Gabriel input.
  MorphismRef from_gen(const GeneralizedMorphism& g);
  /// Honest morphism on a base arrow.
  MorphismRef from_base_morphism(const MorphismRef& phi);
  const GeneralizedMorphism& gen_of(const MorphismRef& phi) const;

 protected:
  ObjectRef zero_object_impl() override;
  bool objects_equal_impl(const ObjectRef& a, const ObjectRef& b) override;
  bool is_zero_object_impl(const ObjectRef& m) override;
  MorphismRef identity_impl(const ObjectRef& m) override;
  MorphismRef zero_morphism_impl(const ObjectRef& m,
                                 const ObjectRef& n) override;
  bool is_well_defined_impl(const MorphismRef& phi) override;
  bool is_equal_impl(const MorphismRef& phi, const MorphismRef& psi) override;
  MorphismRef compose_impl(const MorphismRef& phi,
                           const MorphismRef& psi) override;
  MorphismRef add_impl(const MorphismRef& phi, const MorphismRef& psi) override;
  MorphismRef negate_impl(const MorphismRef& phi) override;
  DirectSum direct_sum_impl(const ObjectRef& m1, const ObjectRef& m2) override;
  SubObject kernel_impl(const MorphismRef& phi) override;
  QuotObject cokernel_impl(const MorphismRef& phi) override;
  MorphismRef mono_lift_impl(const MorphismRef& kappa,
                             const MorphismRef& tau) override;
  MorphismRef epi_colift_impl(const MorphismRef& epsilon,
                              const MorphismRef& eta) override;
  MorphismRef pairing_impl(const MorphismRef& psi1,
                           const MorphismRef& psi2) override;
  MorphismRef copairing_impl(const MorphismRef& psi1,
                             const MorphismRef& psi2) override;

 private:
  explicit SerreQuotientCategory(ThickSubcategory c);

  ThickSubcategory thick_;
  std::shared_ptr<Category> base_;
};

std::shared_ptr<SerreQuotientCategory> quotient_category(
    const ThickSubcategory& c);

}  // namespace serreq

#endif  // SERREQ_SERRE_HPP
