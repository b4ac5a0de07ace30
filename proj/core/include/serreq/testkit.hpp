#ifndef SERREQ_TESTKIT_HPP
#define SERREQ_TESTKIT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "serreq/generalized.hpp"
#include "serreq/grmod.hpp"
#include "serreq/serre.hpp"
#include "serreq/zmod.hpp"

namespace serreq {

using Rng = std::mt19937_64;

/// Seed from SERREQ_SEED when set, else the given default.
std::uint64_t test_seed(std::uint64_t fallback = 20240915ull);

/// Randomized instance generation for one category. The free-source
/// generators keep every sampled matrix well-defined; derived objects enter
/// through kernels, cokernels and sums inside the suite.
struct Sampler {
  std::shared_ptr<Category> category;
  std::function<ObjectRef(Rng&)> object;
  std::function<MorphismRef(Rng&)> morphism;
  std::function<MorphismRef(Rng&, const ObjectRef&)> morphism_into;
  /// k morphisms sharing one (free) source into the given object.
  std::function<std::vector<MorphismRef>(Rng&, const ObjectRef&, std::size_t)>
      parallel_into;
  /// s with target M whose image is a subobject with C-small cokernel;
  /// powers the fabrication of Gabriel domains. Null outside quotient use.
  std::function<MorphismRef(Rng&, const ObjectRef&)> dense_sub;
  /// s with source M whose kernel lies in C; dual role.
  std::function<MorphismRef(Rng&, const ObjectRef&)> small_kernel;
};

Sampler zmod_sampler(const std::shared_ptr<ZModCategory>& category);
Sampler grmod_sampler(const std::shared_ptr<GrmodCategory>& category);
Sampler quotient_sampler(
    const std::shared_ptr<SerreQuotientCategory>& category,
    const Sampler& base);

/// A Gabriel morphism serre-equal to honest(f), with randomly fabricated
/// nontrivial domain and codomain legs.
GeneralizedMorphism adapt_random(Rng& rng, const Sampler& base,
                                 const MorphismRef& f);

/// A random Gabriel morphism with arbitrary endpoints.
GeneralizedMorphism random_gabriel(Rng& rng, const Sampler& base);

/// Parallel Gabriel morphisms (same source/target objects, independent
/// adaptations).
std::vector<GeneralizedMorphism> random_parallel_gabriel(Rng& rng,
                                                         const Sampler& base,
                                                         std::size_t k);

struct AxiomSuiteResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Randomized law checks covering the computable-Abelian operation bundle:
/// composition/identity/additive-group laws, bilinearity, biproducts with
/// (co)pairing, kernel/cokernel universal properties, image factorization,
/// mono-is-kernel / epi-is-cokernel, pullback/pushout squares with mediating
/// morphisms, and zero-object behavior.
AxiomSuiteResult run_axiom_suite(const Sampler& sampler,
                                 std::size_t instances, std::uint64_t seed);

}  // namespace serreq

#endif  // SERREQ_TESTKIT_HPP
