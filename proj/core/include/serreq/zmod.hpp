#ifndef SERREQ_ZMOD_HPP
#define SERREQ_ZMOD_HPP

#include <cstddef>
#include <memory>

#include "serreq/category.hpp"
#include "serreq/intmatrix.hpp"
#include "serreq/qmatrix.hpp"
#include "serreq/thick.hpp"

namespace serreq {

struct GeneralizedMorphism;

/// Finite presentation of an Abelian group: the cokernel of the relation
/// matrix acting on row vectors, so `relations` has `generators` columns.
struct FgAbGroup {
  std::size_t generators = 0;
  IntMatrix relations;  // rows are relation vectors
};

/// Finitely presented ℤ-modules. Morphisms carry an n_src × n_tgt integer
/// matrix acting on row vectors from the right, so composition is plain
/// matrix multiplication in diagrammatic order.
class ZModCategory : public Category {
 public:
  static std::shared_ptr<ZModCategory> create();

  std::string name() const override { return "zmod"; }

  ObjectRef object(const FgAbGroup& group);
  ObjectRef object(std::size_t generators, const IntMatrix& relations);
  ObjectRef free_object(std::size_t rank);
  /// ℤ/n as coker(n : ℤ→ℤ).
  ObjectRef cyclic(const Integer& n);

  /// Builds a morphism and rejects ill-defined candidates (relations of the
  /// source must map into the relation span of the target).
  MorphismRef morphism(const ObjectRef& source, const ObjectRef& target,
                       const IntMatrix& matrix);
  /// Same, but skips the well-definedness check; pair with is_well_defined.
  MorphismRef candidate(const ObjectRef& source, const ObjectRef& target,
                        const IntMatrix& matrix);

  const FgAbGroup& group_of(const ObjectRef& m) const;
  const IntMatrix& matrix_of(const MorphismRef& phi) const;

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
  ObjectSimplification simplify_object_impl(const ObjectRef& m) override;
  MorphismRef epi_colift_impl(const MorphismRef& epsilon,
                              const MorphismRef& eta) override;

 private:
  ZModCategory() = default;
};

/// Smith-normal-form presentation ℤ^k ⊕ ⊕ ℤ/dᵢ of an object, with the
/// mutually inverse isomorphisms to and from the original presentation.
struct MinimalPresentation {
  ObjectRef object;
  MorphismRef to_min;    // original → minimal
  MorphismRef from_min;  // minimal → original
};

MinimalPresentation minimal_presentation(
    const std::shared_ptr<ZModCategory>& category, const ObjectRef& m);

/// Finitely generated torsion groups inside the given zmod instance.
ThickSubcategory torsion_subcategory(
    const std::shared_ptr<ZModCategory>& category);

/// The induced ℚ-linear map between the free parts ℚ⊗source → ℚ⊗target,
/// in bases read off from Smith normal form of the presentations.
QMatrix rationalize(const MorphismRef& phi);

/// Extension to generalized morphisms: rationalize(iota)⁻¹ · rationalize
/// (arrow) · rationalize(jay)⁻¹; both inverses exist since torsion dies.
QMatrix rationalize(const GeneralizedMorphism& g);

}  // namespace serreq

#endif  // SERREQ_ZMOD_HPP
