#ifndef SERREQ_GRMOD_HPP
#define SERREQ_GRMOD_HPP

#include <map>
#include <memory>
#include <vector>

#include "serreq/category.hpp"
#include "serreq/groebner.hpp"
#include "serreq/poly.hpp"
#include "serreq/serre.hpp"
#include "serreq/thick.hpp"

namespace serreq {

/// Finite presentation of a ℤʳ-graded module: generator degree shifts plus
/// homogeneous relation rows in the ambient free module S^{#generators}.
struct GradedModule {
  RingPtr ring;
  std::vector<DegreeVector> gen_degrees;
  std::vector<PolyVector> relations;
};

/// Chart data for a smooth toric variety: each maximal cone lists the
/// variable indices whose rays span it (the chart keeps those variables).
struct ToricChartData {
  std::vector<std::vector<std::size_t>> charts;
};

/// Finitely presented graded modules over a fixed ring, degree-0 morphisms
/// only (twists are generator-degree shifts). A morphism is stored as one
/// row per source generator, each a vector in the target's ambient module.
class GrmodCategory : public Category {
 public:
  static std::shared_ptr<GrmodCategory> create(RingPtr ring);

  std::string name() const override { return "grmod"; }
  const RingPtr& ring() const { return ring_; }

  ObjectRef object(GradedModule m);
  ObjectRef free_module(std::vector<DegreeVector> degrees);

  /// Validated construction: dimensions, per-entry homogeneity of the right
  /// degree, and well-definedness on the source relations.
  MorphismRef morphism(const ObjectRef& source, const ObjectRef& target,
                       std::vector<PolyVector> rows);
  /// Skips only the well-definedness check.
  MorphismRef candidate(const ObjectRef& source, const ObjectRef& target,
                        std::vector<PolyVector> rows);

  const GradedModule& module_of(const ObjectRef& m) const;
  const std::vector<PolyVector>& rows_of(const MorphismRef& phi) const;
  /// Cached reduced Gröbner basis of the relation submodule.
  const std::vector<PolyVector>& relations_gb(const ObjectRef& m) const;

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

 private:
  explicit GrmodCategory(RingPtr ring) : ring_(std::move(ring)) {}

  /// Identity-shaped candidate between presentations on the same generators.
  MorphismRef identity_like(const ObjectRef& from, const ObjectRef& to);

  RingPtr ring_;
};

/// Laurent polynomial in t with integer coefficients, exponent → coefficient.
using LaurentPoly = std::map<long long, Integer>;

/// Numerator N(t) of the Hilbert series with implicit denominator
/// Π(1 − t^{deg xᵢ}); ℤ-graded positively graded rings only.
LaurentPoly hilbert_series(const GradedModule& m);

/// dim_ℚ M_d, by expanding the series.
Integer hilbert_function(const GradedModule& m, long long d);

/// M_d = 0 for d ≫ 0; standard grading (all degrees 1) only, decided by
/// divisibility of the series numerator by (1 − t)^{#vars}.
bool is_quasi_zero_proj(const GradedModule& m);

/// Zero sheafification on every chart: substitute 1 for the variables
/// outside the chart and test the resulting module for zero.
bool is_quasi_zero_chart(const GradedModule& m, const ToricChartData& charts);

/// Generators of Ann_S M = ∩ᵢ (relations : eᵢ).
std::vector<PolyVector> annihilator(const GradedModule& m);

/// Every generator of the irrelevant ideal B lies in √Ann M.
bool is_quasi_zero_radical(const GradedModule& m,
                           const std::vector<PolyVector>& b_gens);

ThickSubcategory quasi_zero_proj_subcategory(
    const std::shared_ptr<GrmodCategory>& category);
ThickSubcategory quasi_zero_chart_subcategory(
    const std::shared_ptr<GrmodCategory>& category, ToricChartData charts);
ThickSubcategory quasi_zero_radical_subcategory(
    const std::shared_ptr<GrmodCategory>& category,
    std::vector<PolyVector> b_gens);

/// The Serre quotient by the chosen quasi-zero subcategory: objects are
/// module presentations read as sheaves.
std::shared_ptr<SerreQuotientCategory> coherent_sheaf_category(
    const ThickSubcategory& quasi_zero);

}  // namespace serreq

#endif  // SERREQ_GRMOD_HPP
