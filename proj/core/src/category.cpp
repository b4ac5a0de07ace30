#include "serreq/category.hpp"

namespace serreq {

// ---------------------------------------------------------------------------
// handle construction / validation

ObjectRef Category::make_object(
    std::shared_ptr<const detail::ObjectPayload> payload) {
  auto data = std::make_shared<detail::ObjectData>();
  data->category = shared_from_this();
  data->payload = std::move(payload);
  ObjectRef ref;
  ref.data_ = std::move(data);
  return ref;
}

MorphismRef Category::make_morphism(
    const ObjectRef& source, const ObjectRef& target,
    std::shared_ptr<const detail::MorphismPayload> payload) {
  check_owns(source, "make_morphism");
  check_owns(target, "make_morphism");
  MorphismRef ref;
  ref.source_ = source;
  ref.target_ = target;
  ref.payload_ = std::move(payload);
  return ref;
}

void Category::check_owns(const ObjectRef& m, const char* op) const {
  if (!m.valid())
    throw UsageError(std::string(op) + ": invalid object handle");
  if (m.category().get() != this)
    throw UsageError(std::string(op) + ": object belongs to a different " +
                     "category instance");
}

void Category::check_owns(const MorphismRef& phi, const char* op) const {
  if (!phi.valid())
    throw UsageError(std::string(op) + ": invalid morphism handle");
  check_owns(phi.source(), op);
  check_owns(phi.target(), op);
}

void Category::check_composable(const MorphismRef& phi,
                                const MorphismRef& psi) {
  if (!objects_equal(phi.target(), psi.source()))
    throw UsageError("compose: target of first morphism differs from source "
                     "of second");
}

void Category::check_parallel(const MorphismRef& phi, const MorphismRef& psi,
                              const char* op) {
  if (!objects_equal(phi.source(), psi.source()) ||
      !objects_equal(phi.target(), psi.target()))
    throw UsageError(std::string(op) + ": morphisms are not parallel");
}

// ---------------------------------------------------------------------------
// guarded public API

ObjectRef Category::zero_object() { return zero_object_impl(); }

bool Category::objects_equal(const ObjectRef& a, const ObjectRef& b) {
  check_owns(a, "objects_equal");
  check_owns(b, "objects_equal");
  if (a.same_handle(b)) return true;
  return objects_equal_impl(a, b);
}

bool Category::is_zero_object(const ObjectRef& m) {
  check_owns(m, "is_zero_object");
  int cached = m.data_->zero_state.load(std::memory_order_relaxed);
  if (cached >= 0) return cached == 1;
  bool z = is_zero_object_impl(m);
  m.data_->zero_state.store(z ? 1 : 0, std::memory_order_relaxed);
  return z;
}

MorphismRef Category::identity(const ObjectRef& m) {
  check_owns(m, "identity");
  return identity_impl(m);
}

MorphismRef Category::zero_morphism(const ObjectRef& m, const ObjectRef& n) {
  check_owns(m, "zero_morphism");
  check_owns(n, "zero_morphism");
  return zero_morphism_impl(m, n);
}

bool Category::is_well_defined(const MorphismRef& phi) {
  check_owns(phi, "is_well_defined");
  return is_well_defined_impl(phi);
}

bool Category::is_equal(const MorphismRef& phi, const MorphismRef& psi) {
  check_owns(phi, "is_equal");
  check_owns(psi, "is_equal");
  check_parallel(phi, psi, "is_equal");
  return is_equal_impl(phi, psi);
}

bool Category::is_zero_morphism(const MorphismRef& phi) {
  check_owns(phi, "is_zero_morphism");
  return is_zero_morphism_impl(phi);
}

MorphismRef Category::compose(const MorphismRef& phi, const MorphismRef& psi) {
  check_owns(phi, "compose");
  check_owns(psi, "compose");
  check_composable(phi, psi);
  return compose_impl(phi, psi);
}

MorphismRef Category::add(const MorphismRef& phi, const MorphismRef& psi) {
  check_owns(phi, "add");
  check_owns(psi, "add");
  check_parallel(phi, psi, "add");
  return add_impl(phi, psi);
}

MorphismRef Category::sub(const MorphismRef& phi, const MorphismRef& psi) {
  check_owns(phi, "sub");
  check_owns(psi, "sub");
  check_parallel(phi, psi, "sub");
  return add_impl(phi, negate_impl(psi));
}

MorphismRef Category::negate(const MorphismRef& phi) {
  check_owns(phi, "negate");
  return negate_impl(phi);
}

DirectSum Category::direct_sum(const ObjectRef& m1, const ObjectRef& m2) {
  check_owns(m1, "direct_sum");
  check_owns(m2, "direct_sum");
  return direct_sum_impl(m1, m2);
}

MorphismRef Category::pairing(const MorphismRef& psi1,
                              const MorphismRef& psi2) {
  check_owns(psi1, "pairing");
  check_owns(psi2, "pairing");
  if (!objects_equal(psi1.source(), psi2.source()))
    throw UsageError("pairing: sources differ");
  return pairing_impl(psi1, psi2);
}

MorphismRef Category::copairing(const MorphismRef& psi1,
                                const MorphismRef& psi2) {
  check_owns(psi1, "copairing");
  check_owns(psi2, "copairing");
  if (!objects_equal(psi1.target(), psi2.target()))
    throw UsageError("copairing: targets differ");
  return copairing_impl(psi1, psi2);
}

SubObject Category::kernel(const MorphismRef& phi) {
  check_owns(phi, "kernel");
  return kernel_impl(phi);
}

MorphismRef Category::kernel_lift(const MorphismRef& kappa,
                                  const MorphismRef& tau) {
  check_owns(kappa, "kernel_lift");
  check_owns(tau, "kernel_lift");
  if (!objects_equal(kappa.target(), tau.target()))
    throw UsageError("kernel_lift: targets differ");
  return kernel_lift_impl(kappa, tau);
}

QuotObject Category::cokernel(const MorphismRef& phi) {
  check_owns(phi, "cokernel");
  return cokernel_impl(phi);
}

MorphismRef Category::cokernel_colift(const MorphismRef& epsilon,
                                      const MorphismRef& eta) {
  check_owns(epsilon, "cokernel_colift");
  check_owns(eta, "cokernel_colift");
  if (!objects_equal(epsilon.source(), eta.source()))
    throw UsageError("cokernel_colift: sources differ");
  return cokernel_colift_impl(epsilon, eta);
}

MorphismRef Category::mono_lift(const MorphismRef& kappa,
                                const MorphismRef& tau) {
  check_owns(kappa, "mono_lift");
  check_owns(tau, "mono_lift");
  if (!objects_equal(kappa.target(), tau.target()))
    throw UsageError("mono_lift: targets differ");
  return mono_lift_impl(kappa, tau);
}

MorphismRef Category::epi_colift(const MorphismRef& epsilon,
                                 const MorphismRef& eta) {
  check_owns(epsilon, "epi_colift");
  check_owns(eta, "epi_colift");
  if (!objects_equal(epsilon.source(), eta.source()))
    throw UsageError("epi_colift: sources differ");
  return epi_colift_impl(epsilon, eta);
}

bool Category::is_mono(const MorphismRef& phi) {
  check_owns(phi, "is_mono");
  return is_mono_impl(phi);
}

bool Category::is_epi(const MorphismRef& phi) {
  check_owns(phi, "is_epi");
  return is_epi_impl(phi);
}

bool Category::is_iso(const MorphismRef& phi) {
  check_owns(phi, "is_iso");
  return is_mono_impl(phi) && is_epi_impl(phi);
}

SubObject Category::image_embedding(const MorphismRef& phi) {
  check_owns(phi, "image_embedding");
  return image_embedding_impl(phi);
}

QuotObject Category::coimage_projection(const MorphismRef& phi) {
  check_owns(phi, "coimage_projection");
  return coimage_projection_impl(phi);
}

MorphismRef Category::coimage_to_image_iso(const MorphismRef& phi) {
  check_owns(phi, "coimage_to_image_iso");
  return coimage_to_image_iso_impl(phi);
}

PullbackResult Category::pullback(const MorphismRef& f, const MorphismRef& g) {
  check_owns(f, "pullback");
  check_owns(g, "pullback");
  if (!objects_equal(f.target(), g.target()))
    throw UsageError("pullback: targets differ");
  DirectSum ds = direct_sum(f.source(), g.source());
  // P = ker <f, -g> with projections obtained from the biproduct.
  MorphismRef cop = copairing(f, negate(g));
  SubObject k = kernel(cop);
  PullbackResult r;
  r.object = k.object;
  r.mono_to_sum = k.embedding;
  r.proj1 = compose(k.embedding, ds.proj1);
  r.proj2 = compose(k.embedding, ds.proj2);
  return r;
}

PushoutResult Category::pushout(const MorphismRef& f, const MorphismRef& g) {
  check_owns(f, "pushout");
  check_owns(g, "pushout");
  if (!objects_equal(f.source(), g.source()))
    throw UsageError("pushout: sources differ");
  DirectSum ds = direct_sum(f.target(), g.target());
  MorphismRef pair = pairing(f, negate(g));
  QuotObject c = cokernel(pair);
  PushoutResult r;
  r.object = c.object;
  r.epi_from_sum = c.projection;
  r.inj1 = compose(ds.inj1, c.projection);
  r.inj2 = compose(ds.inj2, c.projection);
  return r;
}

MorphismRef Category::inverse_of_iso(const MorphismRef& phi) {
  check_owns(phi, "inverse_of_iso");
  return inverse_of_iso_impl(phi);
}

ObjectSimplification Category::simplify_object(const ObjectRef& m) {
  check_owns(m, "simplify_object");
  return simplify_object_impl(m);
}

// ---------------------------------------------------------------------------
// generic defaults for the derived virtuals

bool Category::is_zero_morphism_impl(const MorphismRef& phi) {
  return is_equal_impl(phi, zero_morphism_impl(phi.source(), phi.target()));
}

MorphismRef Category::pairing_impl(const MorphismRef& psi1,
                                   const MorphismRef& psi2) {
  DirectSum ds = direct_sum(psi1.target(), psi2.target());
  return add(compose(psi1, ds.inj1), compose(psi2, ds.inj2));
}

MorphismRef Category::copairing_impl(const MorphismRef& psi1,
                                     const MorphismRef& psi2) {
  DirectSum ds = direct_sum(psi1.source(), psi2.source());
  return add(compose(ds.proj1, psi1), compose(ds.proj2, psi2));
}

MorphismRef Category::kernel_lift_impl(const MorphismRef& kappa,
                                       const MorphismRef& tau) {
  return mono_lift_impl(kappa, tau);
}

MorphismRef Category::cokernel_colift_impl(const MorphismRef& epsilon,
                                           const MorphismRef& eta) {
  return epi_colift_impl(epsilon, eta);
}

bool Category::is_mono_impl(const MorphismRef& phi) {
  return is_zero_object(kernel(phi).object);
}

bool Category::is_epi_impl(const MorphismRef& phi) {
  return is_zero_object(cokernel(phi).object);
}

SubObject Category::image_embedding_impl(const MorphismRef& phi) {
  return kernel(cokernel(phi).projection);
}

QuotObject Category::coimage_projection_impl(const MorphismRef& phi) {
  return cokernel(kernel(phi).embedding);
}

MorphismRef Category::coimage_to_image_iso_impl(const MorphismRef& phi) {
  QuotObject coimg = coimage_projection(phi);
  SubObject img = image_embedding(phi);
  MorphismRef to_target = epi_colift(coimg.projection, phi);
  return mono_lift(img.embedding, to_target);
}

MorphismRef Category::inverse_of_iso_impl(const MorphismRef& phi) {
  if (!is_mono(phi))
    throw PreconditionError("inverse_of_iso: morphism is not mono");
  if (!is_epi(phi))
    throw PreconditionError("inverse_of_iso: morphism is not epi");
  return mono_lift(phi, identity(phi.target()));
}

ObjectSimplification Category::simplify_object_impl(const ObjectRef& m) {
  return {m, identity(m), identity(m)};
}

}  // namespace serreq
