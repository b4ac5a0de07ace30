#include "serreq/serre.hpp"

#include <utility>

namespace serreq {

// ---------------------------------------------------------------------------
// Gabriel calculus

bool is_gabriel(const GeneralizedMorphism& psi, const ThickSubcategory& c) {
  auto cat = psi.iota.category();
  if (cat != c.ambient())
    throw UsageError("is_gabriel: morphism not over the ambient category");
  return c.contains(cat->cokernel(psi.iota).object) &&
         c.contains(cat->kernel(psi.jay).object);
}

bool in_zeroid(const GeneralizedMorphism& psi, const ThickSubcategory& c) {
  auto cat = psi.iota.category();
  if (cat != c.ambient())
    throw UsageError("in_zeroid: morphism not over the ambient category");
  return c.contains(cat->image_embedding(psi.arrow).object);
}

bool serre_equal(const GeneralizedMorphism& phi,
                 const GeneralizedMorphism& psi, const ThickSubcategory& c) {
  auto cat = phi.iota.category();
  if (!cat->objects_equal(phi.source, psi.source) ||
      !cat->objects_equal(phi.target, psi.target))
    throw UsageError("serre_equal: morphisms are not parallel");
  return in_zeroid(add_gen(phi, psi, -1), c);
}

GeneralizedMorphism lift_gabriel(const GeneralizedMorphism& gamma,
                                 const GeneralizedMorphism& beta,
                                 const ThickSubcategory& c) {
  auto cat = gamma.iota.category();
  if (cat != c.ambient() || beta.iota.category() != cat)
    throw UsageError("lift_gabriel: category mismatch");
  if (!cat->objects_equal(gamma.target, beta.target))
    throw UsageError("lift_gabriel: targets differ");
  // Coarsen to a common codomain; afterwards both arrows land in one object.
  auto [cb, cg] = common_coarsening(beta, gamma);
  const MorphismRef& b = cb.arrow;  // K^beta -> Mbar
  const MorphismRef& g = cg.arrow;  // L^gamma -> Mbar
  if (!c.contains(cat->kernel(b).object))
    throw PreconditionError(
        "not liftable modulo C: kernel of the lift target is not in C (beta "
        "is not a quotient mono)");
  SubObject img_b = cat->image_embedding(b);
  MorphismRef obstruction =
      cat->compose(g, cat->cokernel(img_b.embedding).projection);
  if (!c.contains(cat->image_embedding(obstruction).object))
    throw PreconditionError(
        "not liftable modulo C: gamma does not factor through the image of "
        "beta up to C");
  // Pull gamma's arrow back over the image of beta's arrow, then descend to
  // the coimage and push the domain forward along it.
  PullbackResult pb = cat->pullback(g, img_b.embedding);
  QuotObject coimg = cat->coimage_projection(b);
  MorphismRef atilde_inv =
      cat->inverse_of_iso(cat->coimage_to_image_iso(b));
  MorphismRef lift0 = cat->compose(pb.proj2, atilde_inv);  // P -> coimg b
  PushoutResult po = cat->pushout(cb.iota, coimg.projection);
  // po.inj1 : K -> K' is an epi (pushout of the coimage projection);
  // po.inj2 : coimg b -> K' is a mono (pushout of the mono iota_beta).
  return make_generalized(cat->compose(pb.proj1, cg.iota),
                          cat->compose(lift0, po.inj2), po.inj1);
}

GeneralizedMorphism colift_gabriel(const GeneralizedMorphism& gamma,
                                   const GeneralizedMorphism& beta,
                                   const ThickSubcategory& c) {
  auto cat = gamma.iota.category();
  if (cat != c.ambient() || beta.iota.category() != cat)
    throw UsageError("colift_gabriel: category mismatch");
  if (!cat->objects_equal(gamma.source, beta.source))
    throw UsageError("colift_gabriel: sources differ");
  auto [rb, rg] = common_restriction(beta, gamma);
  const MorphismRef& b = rb.arrow;  // M' -> K_beta
  const MorphismRef& g = rg.arrow;  // M' -> L_gamma
  if (!c.contains(cat->cokernel(b).object))
    throw PreconditionError(
        "not coliftable modulo C: cokernel of the colift source is not in C "
        "(beta is not a quotient epi)");
  MorphismRef obstruction = cat->compose(cat->kernel(b).embedding, g);
  if (!c.contains(cat->image_embedding(obstruction).object))
    throw PreconditionError(
        "not coliftable modulo C: gamma does not kill the kernel of beta up "
        "to C");
  QuotObject coimg = cat->coimage_projection(b);
  SubObject img_b = cat->image_embedding(b);
  PushoutResult po = cat->pushout(g, coimg.projection);
  // po.inj1 : L_gamma -> Lbar is an epi, po.inj2 : coimg b -> Lbar.
  PullbackResult pb = cat->pullback(beta.jay, img_b.embedding);
  // pb.proj1 : P -> K is a mono, pb.proj2 : P -> img b is an epi.
  MorphismRef atilde_inv =
      cat->inverse_of_iso(cat->coimage_to_image_iso(b));
  MorphismRef mid = cat->compose(
      cat->compose(pb.proj2, atilde_inv), po.inj2);
  return make_generalized(pb.proj1, mid, cat->compose(rg.jay, po.inj1));
}

bool is_quotient_iso(const GeneralizedMorphism& phi,
                     const ThickSubcategory& c) {
  auto cat = phi.iota.category();
  if (cat != c.ambient())
    throw UsageError("is_quotient_iso: morphism not over the ambient "
                     "category");
  return c.contains(cat->kernel(phi.arrow).object) &&
         c.contains(cat->cokernel(phi.arrow).object);
}

// ---------------------------------------------------------------------------
// quotient category

namespace {

struct QuotObjectPayload : detail::ObjectPayload {
  ObjectRef base;
};

struct QuotMorphismPayload : detail::MorphismPayload {
  GeneralizedMorphism gen;
};

}  // namespace

SerreQuotientCategory::SerreQuotientCategory(ThickSubcategory c)
    : thick_(std::move(c)), base_(thick_.ambient()) {
  if (!thick_.valid())
    throw UsageError("quotient_category: empty thick subcategory");
}

std::shared_ptr<SerreQuotientCategory> SerreQuotientCategory::create(
    ThickSubcategory c) {
  return std::shared_ptr<SerreQuotientCategory>(
      new SerreQuotientCategory(std::move(c)));
}

std::shared_ptr<SerreQuotientCategory> quotient_category(
    const ThickSubcategory& c) {
  return SerreQuotientCategory::create(c);
}

std::string SerreQuotientCategory::name() const {
  return base_->name() + "/" + thick_.name();
}

ObjectRef SerreQuotientCategory::from_base(const ObjectRef& base_object) {
  if (!base_object.valid() || base_object.category() != base_)
    throw UsageError("quotient from_base: object not from the base category");
  auto payload = std::make_shared<QuotObjectPayload>();
  payload->base = base_object;
  return make_object(std::move(payload));
}

const ObjectRef& SerreQuotientCategory::base_object(const ObjectRef& m) const {
  check_owns(m, "base_object");
  return m.payload_as<QuotObjectPayload>().base;
}

MorphismRef SerreQuotientCategory::from_gen(const GeneralizedMorphism& g) {
  if (!is_gabriel(g, thick_))
    throw PreconditionError("quotient morphism: not a Gabriel morphism with "
                            "respect to C");
  // Renormalize the hidden objects of the triple: conjugating by the
  // simplification isos keeps the serre class while preventing presentation
  // blow-up across chains of quotient-level operations.
  GeneralizedMorphism s = g;
  ObjectSimplification h = base_->simplify_object(g.iota.source());
  ObjectSimplification j = base_->simplify_object(g.jay.target());
  if (!h.object.same_handle(g.iota.source()) ||
      !j.object.same_handle(g.jay.target())) {
    s.iota = base_->compose(h.to_original, g.iota);
    s.jay = base_->compose(g.jay, j.from_original);
    s.arrow = base_->compose(h.to_original,
                             base_->compose(g.arrow, j.from_original));
  }
  auto payload = std::make_shared<QuotMorphismPayload>();
  payload->gen = s;
  return make_morphism(from_base(s.source), from_base(s.target),
                       std::move(payload));
}

MorphismRef SerreQuotientCategory::from_base_morphism(const MorphismRef& phi) {
  return from_gen(honest_of(phi));
}

const GeneralizedMorphism& SerreQuotientCategory::gen_of(
    const MorphismRef& phi) const {
  check_owns(phi, "gen_of");
  return phi.payload_as<QuotMorphismPayload>().gen;
}

ObjectRef SerreQuotientCategory::zero_object_impl() {
  return from_base(base_->zero_object());
}

bool SerreQuotientCategory::objects_equal_impl(const ObjectRef& a,
                                               const ObjectRef& b) {
  return base_->objects_equal(base_object(a), base_object(b));
}

bool SerreQuotientCategory::is_zero_object_impl(const ObjectRef& m) {
  return thick_.contains(base_object(m));
}

MorphismRef SerreQuotientCategory::identity_impl(const ObjectRef& m) {
  return from_base_morphism(base_->identity(base_object(m)));
}

MorphismRef SerreQuotientCategory::zero_morphism_impl(const ObjectRef& m,
                                                      const ObjectRef& n) {
  return from_base_morphism(
      base_->zero_morphism(base_object(m), base_object(n)));
}

bool SerreQuotientCategory::is_well_defined_impl(const MorphismRef& phi) {
  const GeneralizedMorphism& g = gen_of(phi);
  return base_->is_well_defined(g.iota) && base_->is_well_defined(g.arrow) &&
         base_->is_well_defined(g.jay) && is_gabriel(g, thick_);
}

bool SerreQuotientCategory::is_equal_impl(const MorphismRef& phi,
                                          const MorphismRef& psi) {
  return serre_equal(gen_of(phi), gen_of(psi), thick_);
}

MorphismRef SerreQuotientCategory::compose_impl(const MorphismRef& phi,
                                                const MorphismRef& psi) {
  return from_gen(compose_gen(gen_of(phi), gen_of(psi)));
}

MorphismRef SerreQuotientCategory::add_impl(const MorphismRef& phi,
                                            const MorphismRef& psi) {
  return from_gen(add_gen(gen_of(phi), gen_of(psi), +1));
}

MorphismRef SerreQuotientCategory::negate_impl(const MorphismRef& phi) {
  return from_gen(negate_gen(gen_of(phi)));
}

DirectSum SerreQuotientCategory::direct_sum_impl(const ObjectRef& m1,
                                                 const ObjectRef& m2) {
  DirectSum b = base_->direct_sum(base_object(m1), base_object(m2));
  DirectSum ds;
  ds.object = from_base(b.object);
  ds.proj1 = from_base_morphism(b.proj1);
  ds.proj2 = from_base_morphism(b.proj2);
  ds.inj1 = from_base_morphism(b.inj1);
  ds.inj2 = from_base_morphism(b.inj2);
  return ds;
}

SubObject SerreQuotientCategory::kernel_impl(const MorphismRef& phi) {
  const GeneralizedMorphism& g = gen_of(phi);
  SubObject k = base_->kernel(g.arrow);
  SubObject r;
  r.object = from_base(k.object);
  r.embedding = from_base_morphism(base_->compose(k.embedding, g.iota));
  return r;
}

QuotObject SerreQuotientCategory::cokernel_impl(const MorphismRef& phi) {
  const GeneralizedMorphism& g = gen_of(phi);
  QuotObject c = base_->cokernel(g.arrow);
  QuotObject r;
  r.object = from_base(c.object);
  r.projection = from_base_morphism(base_->compose(g.jay, c.projection));
  return r;
}

MorphismRef SerreQuotientCategory::mono_lift_impl(const MorphismRef& kappa,
                                                  const MorphismRef& tau) {
  return from_gen(lift_gabriel(gen_of(tau), gen_of(kappa), thick_));
}

MorphismRef SerreQuotientCategory::epi_colift_impl(const MorphismRef& epsilon,
                                                   const MorphismRef& eta) {
  return from_gen(colift_gabriel(gen_of(eta), gen_of(epsilon), thick_));
}

MorphismRef SerreQuotientCategory::pairing_impl(const MorphismRef& psi1,
                                                const MorphismRef& psi2) {
  auto [r1, r2] = common_restriction(gen_of(psi1), gen_of(psi2));
  DirectSum dsm =
      base_->direct_sum(base_object(psi1.target()), base_object(psi2.target()));
  MorphismRef arrow = base_->pairing(r1.arrow, r2.arrow);
  MorphismRef jay = base_->pairing(base_->compose(dsm.proj1, r1.jay),
                                   base_->compose(dsm.proj2, r2.jay));
  return from_gen(make_generalized(r1.iota, arrow, jay));
}

MorphismRef SerreQuotientCategory::copairing_impl(const MorphismRef& psi1,
                                                  const MorphismRef& psi2) {
  auto [c1, c2] = common_coarsening(gen_of(psi1), gen_of(psi2));
  DirectSum dsm =
      base_->direct_sum(base_object(psi1.source()), base_object(psi2.source()));
  MorphismRef arrow = base_->copairing(c1.arrow, c2.arrow);
  MorphismRef iota = base_->copairing(base_->compose(c1.iota, dsm.inj1),
                                      base_->compose(c2.iota, dsm.inj2));
  return from_gen(make_generalized(iota, arrow, c1.jay));
}

}  // namespace serreq
