#include "serreq/generalized.hpp"

namespace serreq {

namespace {

std::shared_ptr<Category> category_of(const GeneralizedMorphism& psi) {
  return psi.iota.category();
}

void check_same_category(const GeneralizedMorphism& phi,
                         const GeneralizedMorphism& psi, const char* op) {
  if (category_of(phi) != category_of(psi))
    throw UsageError(std::string(op) +
                     ": generalized morphisms from different categories");
}

}  // namespace

GeneralizedMorphism make_generalized(const MorphismRef& iota,
                                     const MorphismRef& arrow,
                                     const MorphismRef& jay) {
  if (!iota.valid() || !arrow.valid() || !jay.valid())
    throw UsageError("generalized morphism: invalid leg");
  auto cat = iota.category();
  if (arrow.category() != cat || jay.category() != cat)
    throw UsageError("generalized morphism: legs from different categories");
  if (!cat->objects_equal(iota.source(), arrow.source()))
    throw UsageError("generalized morphism: domain leg and arrow must share "
                     "their source");
  if (!cat->objects_equal(jay.target(), arrow.target()))
    throw UsageError("generalized morphism: codomain leg and arrow must "
                     "share their target");
  if (!cat->is_mono(iota))
    throw PreconditionError("generalized morphism: domain leg is not a mono");
  if (!cat->is_epi(jay))
    throw PreconditionError("generalized morphism: codomain leg is not an "
                            "epi");
  GeneralizedMorphism g;
  g.source = iota.target();
  g.target = jay.source();
  g.iota = iota;
  g.arrow = arrow;
  g.jay = jay;
  return g;
}

GeneralizedMorphism honest_of(const MorphismRef& phi) {
  auto cat = phi.category();
  return make_generalized(cat->identity(phi.source()), phi,
                          cat->identity(phi.target()));
}

bool is_honest(const GeneralizedMorphism& psi) {
  auto cat = category_of(psi);
  return cat->objects_equal(psi.iota.source(), psi.source) &&
         cat->objects_equal(psi.jay.target(), psi.target) &&
         cat->is_equal(psi.iota, cat->identity(psi.source)) &&
         cat->is_equal(psi.jay, cat->identity(psi.target));
}

GeneralizedMorphism id_gen(const ObjectRef& m) {
  return honest_of(m.category()->identity(m));
}

GeneralizedMorphism zero_gen(const ObjectRef& m, const ObjectRef& n) {
  return honest_of(m.category()->zero_morphism(m, n));
}

bool equal_gen(const GeneralizedMorphism& phi,
               const GeneralizedMorphism& psi) {
  check_same_category(phi, psi, "equal_gen");
  auto cat = category_of(phi);
  if (!cat->objects_equal(phi.source, psi.source) ||
      !cat->objects_equal(phi.target, psi.target))
    return false;
  // Fast path: representatives agree on the nose.
  if (cat->objects_equal(phi.iota.source(), psi.iota.source()) &&
      cat->objects_equal(phi.jay.target(), psi.jay.target()) &&
      cat->is_equal(phi.iota, psi.iota) && cat->is_equal(phi.jay, psi.jay) &&
      cat->is_equal(phi.arrow, psi.arrow))
    return true;
  MorphismRef mu, nu;
  try {
    mu = cat->mono_lift(psi.iota, phi.iota);
    nu = cat->epi_colift(phi.jay, psi.jay);
  } catch (const PreconditionError&) {
    return false;
  }
  if (!cat->is_iso(mu) || !cat->is_iso(nu)) return false;
  return cat->is_equal(cat->compose(mu, psi.arrow),
                       cat->compose(phi.arrow, nu));
}

GeneralizedMorphism compose_gen(const GeneralizedMorphism& phi,
                                const GeneralizedMorphism& psi) {
  check_same_category(phi, psi, "compose_gen");
  auto cat = category_of(phi);
  if (!cat->objects_equal(phi.target, psi.source))
    throw UsageError("compose_gen: target of first differs from source of "
                     "second");
  // alpha: M^psi -> M_phi measures how the two adaptations of the middle
  // object overlap; factor it and deform both arrows to the overlap.
  MorphismRef alpha = cat->compose(psi.iota, phi.jay);
  QuotObject coimg = cat->coimage_projection(alpha);
  SubObject img = cat->image_embedding(alpha);
  MorphismRef atilde_inv =
      cat->inverse_of_iso(cat->coimage_to_image_iso(alpha));
  PullbackResult pb = cat->pullback(phi.arrow, img.embedding);
  PushoutResult po = cat->pushout(coimg.projection, psi.arrow);
  MorphismRef iota = cat->compose(pb.proj1, phi.iota);
  MorphismRef mid =
      cat->compose(cat->compose(pb.proj2, atilde_inv), po.inj1);
  MorphismRef jay = cat->compose(psi.jay, po.inj2);
  return make_generalized(iota, mid, jay);
}

GeneralizedMorphism negate_gen(const GeneralizedMorphism& psi) {
  GeneralizedMorphism r = psi;
  r.arrow = category_of(psi)->negate(psi.arrow);
  return r;
}

std::pair<GeneralizedMorphism, GeneralizedMorphism> common_restriction(
    const GeneralizedMorphism& beta, const GeneralizedMorphism& gamma) {
  check_same_category(beta, gamma, "common_restriction");
  auto cat = category_of(beta);
  if (!cat->objects_equal(beta.source, gamma.source))
    throw UsageError("common_restriction: sources differ");
  PullbackResult pb = cat->pullback(beta.iota, gamma.iota);
  MorphismRef kappa = cat->compose(pb.proj1, beta.iota);
  GeneralizedMorphism rb = make_generalized(
      kappa, cat->compose(pb.proj1, beta.arrow), beta.jay);
  GeneralizedMorphism rg = make_generalized(
      kappa, cat->compose(pb.proj2, gamma.arrow), gamma.jay);
  return {rb, rg};
}

std::pair<GeneralizedMorphism, GeneralizedMorphism> common_coarsening(
    const GeneralizedMorphism& beta, const GeneralizedMorphism& gamma) {
  check_same_category(beta, gamma, "common_coarsening");
  auto cat = category_of(beta);
  if (!cat->objects_equal(beta.target, gamma.target))
    throw UsageError("common_coarsening: targets differ");
  PushoutResult po = cat->pushout(beta.jay, gamma.jay);
  MorphismRef lambda = cat->compose(beta.jay, po.inj1);
  GeneralizedMorphism cb = make_generalized(
      beta.iota, cat->compose(beta.arrow, po.inj1), lambda);
  GeneralizedMorphism cg = make_generalized(
      gamma.iota, cat->compose(gamma.arrow, po.inj2), lambda);
  return {cb, cg};
}

GeneralizedMorphism add_gen(const GeneralizedMorphism& phi,
                            const GeneralizedMorphism& psi, int sign) {
  if (sign != 1 && sign != -1)
    throw UsageError("add_gen: sign must be +1 or -1");
  check_same_category(phi, psi, "add_gen");
  auto cat = category_of(phi);
  if (!cat->objects_equal(phi.source, psi.source) ||
      !cat->objects_equal(phi.target, psi.target))
    throw UsageError("add_gen: morphisms are not parallel");
  auto [r1, r2] = common_restriction(phi, psi);
  auto [c1, c2] = common_coarsening(r1, r2);
  MorphismRef arrow = sign > 0 ? cat->add(c1.arrow, c2.arrow)
                               : cat->sub(c1.arrow, c2.arrow);
  return make_generalized(c1.iota, arrow, c1.jay);
}

GeneralizedMorphism associated_idempotent(const GeneralizedMorphism& psi) {
  auto cat = category_of(psi);
  GeneralizedMorphism e = psi;
  e.arrow = cat->zero_morphism(psi.arrow.source(), psi.arrow.target());
  return e;
}

}  // namespace serreq
