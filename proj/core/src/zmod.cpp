#include "serreq/zmod.hpp"

#include <utility>

#include "serreq/generalized.hpp"

namespace serreq {

namespace {

struct ZObject : detail::ObjectPayload {
  FgAbGroup group;
  IntMatrix rel_hnf;  // nonzero rows of the row HNF of the relations
};

struct ZMorphism : detail::MorphismPayload {
  IntMatrix matrix;
};

IntMatrix drop_zero_rows(const IntMatrix& a) {
  std::size_t nz = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) {
        ++nz;
        break;
      }
  IntMatrix r(nz, a.cols());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(k, j) = a.at(i, j);
    ++k;
  }
  return r;
}

}  // namespace

std::shared_ptr<ZModCategory> ZModCategory::create() {
  return std::shared_ptr<ZModCategory>(new ZModCategory());
}

ObjectRef ZModCategory::object(const FgAbGroup& group) {
  if (group.relations.cols() != group.generators)
    throw UsageError("zmod object: relation matrix must have one column per "
                     "generator");
  auto payload = std::make_shared<ZObject>();
  payload->group = group;
  payload->rel_hnf = drop_zero_rows(hnf(group.relations).h);
  return make_object(std::move(payload));
}

ObjectRef ZModCategory::object(std::size_t generators,
                               const IntMatrix& relations) {
  return object(FgAbGroup{generators, relations});
}

ObjectRef ZModCategory::free_object(std::size_t rank) {
  return object(rank, IntMatrix(0, rank));
}

ObjectRef ZModCategory::cyclic(const Integer& n) {
  IntMatrix rel(1, 1);
  rel.at(0, 0) = n;
  return object(1, rel);
}

MorphismRef ZModCategory::morphism(const ObjectRef& source,
                                   const ObjectRef& target,
                                   const IntMatrix& matrix) {
  MorphismRef phi = candidate(source, target, matrix);
  if (!is_well_defined(phi))
    throw UsageError("zmod morphism: matrix does not respect the source "
                     "relations");
  return phi;
}

MorphismRef ZModCategory::candidate(const ObjectRef& source,
                                    const ObjectRef& target,
                                    const IntMatrix& matrix) {
  check_owns(source, "zmod candidate");
  check_owns(target, "zmod candidate");
  if (matrix.rows() != group_of(source).generators ||
      matrix.cols() != group_of(target).generators)
    throw UsageError("zmod candidate: matrix dimensions do not match the "
                     "generator counts");
  auto payload = std::make_shared<ZMorphism>();
  payload->matrix = matrix;
  // Equality of morphisms is modulo the target relations, so store the
  // size-reduced representative; this keeps entry growth under control
  // through long chains of derived constructions.
  reduce_rows_mod_lattice(payload->matrix, group_of(target).relations);
  return make_morphism(source, target, std::move(payload));
}

const FgAbGroup& ZModCategory::group_of(const ObjectRef& m) const {
  check_owns(m, "group_of");
  return m.payload_as<ZObject>().group;
}

const IntMatrix& ZModCategory::matrix_of(const MorphismRef& phi) const {
  check_owns(phi, "matrix_of");
  return phi.payload_as<ZMorphism>().matrix;
}

ObjectRef ZModCategory::zero_object_impl() {
  return object(0, IntMatrix(0, 0));
}

bool ZModCategory::objects_equal_impl(const ObjectRef& a, const ObjectRef& b) {
  const ZObject& pa = a.payload_as<ZObject>();
  const ZObject& pb = b.payload_as<ZObject>();
  return pa.group.generators == pb.group.generators &&
         pa.rel_hnf == pb.rel_hnf;
}

bool ZModCategory::is_zero_object_impl(const ObjectRef& m) {
  const ZObject& p = m.payload_as<ZObject>();
  // Zero iff every generator lies in the relation span, i.e. the HNF of the
  // relations is the identity.
  if (p.rel_hnf.rows() != p.group.generators) return false;
  return p.rel_hnf == IntMatrix::identity(p.group.generators);
}

MorphismRef ZModCategory::identity_impl(const ObjectRef& m) {
  return candidate(m, m, IntMatrix::identity(group_of(m).generators));
}

MorphismRef ZModCategory::zero_morphism_impl(const ObjectRef& m,
                                             const ObjectRef& n) {
  return candidate(m, n,
                   IntMatrix(group_of(m).generators, group_of(n).generators));
}

bool ZModCategory::is_well_defined_impl(const MorphismRef& phi) {
  const FgAbGroup& src = group_of(phi.source());
  const FgAbGroup& tgt = group_of(phi.target());
  const IntMatrix& a = matrix_of(phi);
  return solve_right(tgt.relations, src.relations * a).has_value();
}

bool ZModCategory::is_equal_impl(const MorphismRef& phi,
                                 const MorphismRef& psi) {
  const FgAbGroup& tgt = group_of(phi.target());
  IntMatrix diff = matrix_of(phi) - matrix_of(psi);
  return solve_right(tgt.relations, diff).has_value();
}

MorphismRef ZModCategory::compose_impl(const MorphismRef& phi,
                                       const MorphismRef& psi) {
  return candidate(phi.source(), psi.target(),
                   matrix_of(phi) * matrix_of(psi));
}

MorphismRef ZModCategory::add_impl(const MorphismRef& phi,
                                   const MorphismRef& psi) {
  return candidate(phi.source(), phi.target(),
                   matrix_of(phi) + matrix_of(psi));
}

MorphismRef ZModCategory::negate_impl(const MorphismRef& phi) {
  return candidate(phi.source(), phi.target(), -matrix_of(phi));
}

DirectSum ZModCategory::direct_sum_impl(const ObjectRef& m1,
                                        const ObjectRef& m2) {
  const FgAbGroup& g1 = group_of(m1);
  const FgAbGroup& g2 = group_of(m2);
  std::size_t n1 = g1.generators, n2 = g2.generators;
  DirectSum ds;
  ds.object = object(n1 + n2, IntMatrix::block_diag(g1.relations, g2.relations));
  ds.proj1 = candidate(ds.object, m1,
                       IntMatrix::vstack(IntMatrix::identity(n1),
                                         IntMatrix(n2, n1)));
  ds.proj2 = candidate(ds.object, m2,
                       IntMatrix::vstack(IntMatrix(n1, n2),
                                         IntMatrix::identity(n2)));
  ds.inj1 = candidate(m1, ds.object,
                      IntMatrix::hstack(IntMatrix::identity(n1),
                                        IntMatrix(n1, n2)));
  ds.inj2 = candidate(m2, ds.object,
                      IntMatrix::hstack(IntMatrix(n2, n1),
                                        IntMatrix::identity(n2)));
  return ds;
}

SubObject ZModCategory::kernel_impl(const MorphismRef& phi) {
  const FgAbGroup& src = group_of(phi.source());
  const FgAbGroup& tgt = group_of(phi.target());
  const IntMatrix& a = matrix_of(phi);
  // x is in the kernel iff x·a lands in the target relation span; solve the
  // combined homogeneous system and keep the x-block.
  IntMatrix combined = row_kernel(IntMatrix::vstack(a, tgt.relations));
  IntMatrix gens = combined.submatrix(0, 0, combined.rows(), src.generators);
  IntMatrix rel_full = row_kernel(IntMatrix::vstack(gens, src.relations));
  IntMatrix rel = rel_full.submatrix(0, 0, rel_full.rows(), gens.rows());
  SubObject k;
  k.object = object(gens.rows(), rel);
  k.embedding = candidate(k.object, phi.source(), gens);
  return k;
}

QuotObject ZModCategory::cokernel_impl(const MorphismRef& phi) {
  const FgAbGroup& tgt = group_of(phi.target());
  QuotObject c;
  c.object = object(tgt.generators,
                    IntMatrix::vstack(matrix_of(phi), tgt.relations));
  c.projection = candidate(phi.target(), c.object,
                           IntMatrix::identity(tgt.generators));
  return c;
}

MorphismRef ZModCategory::mono_lift_impl(const MorphismRef& kappa,
                                         const MorphismRef& tau) {
  const FgAbGroup& mid = group_of(kappa.target());
  IntMatrix stacked = IntMatrix::vstack(matrix_of(kappa), mid.relations);
  auto x = solve_right(stacked, matrix_of(tau));
  if (!x)
    throw PreconditionError("mono_lift: image is not contained in the "
                            "subobject");
  IntMatrix lift =
      x->submatrix(0, 0, x->rows(), group_of(kappa.source()).generators);
  return candidate(tau.source(), kappa.source(), lift);
}

MorphismRef ZModCategory::epi_colift_impl(const MorphismRef& epsilon,
                                          const MorphismRef& eta) {
  const FgAbGroup& mid = group_of(epsilon.source());
  const FgAbGroup& quot = group_of(epsilon.target());
  IntMatrix stacked = IntMatrix::vstack(matrix_of(epsilon), quot.relations);
  auto s = solve_right(stacked, IntMatrix::identity(quot.generators));
  if (!s)
    throw PreconditionError("epi_colift: not an epimorphism");
  IntMatrix section = s->submatrix(0, 0, s->rows(), mid.generators);
  MorphismRef colift =
      candidate(epsilon.target(), eta.target(), section * matrix_of(eta));
  if (!is_equal(compose(epsilon, colift), eta))
    throw PreconditionError("epi_colift: morphism does not factor through "
                            "the epimorphism");
  return colift;
}

ObjectSimplification ZModCategory::simplify_object_impl(const ObjectRef& m) {
  auto self = std::static_pointer_cast<ZModCategory>(shared_from_this());
  MinimalPresentation p = minimal_presentation(self, m);
  return {p.object, p.to_min, p.from_min};
}

MinimalPresentation minimal_presentation(
    const std::shared_ptr<ZModCategory>& category, const ObjectRef& m) {
  const FgAbGroup& g = category->group_of(m);
  const std::size_t n = g.generators;
  SnfResult s = snf(g.relations);
  // After x ↦ x·V the relations are diagonal; generators with dᵢ = 1 die.
  std::vector<std::size_t> kept;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < s.d.rows() ? s.d.at(i, i) : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    if (d != 0) torsion.push_back(d);
  }
  IntMatrix rel(torsion.size(), kept.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel.at(i, i) = torsion[i];

  auto v_inv_opt = solve_right(s.v, IntMatrix::identity(n));
  if (!v_inv_opt) throw InternalError("minimal_presentation: V not invertible");
  IntMatrix to(n, kept.size());
  IntMatrix from(kept.size(), n);
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      to.at(i, j) = s.v.at(i, kept[j]);
      from.at(j, i) = v_inv_opt->at(kept[j], i);
    }
  MinimalPresentation out;
  out.object = category->object(kept.size(), rel);
  out.to_min = category->morphism(m, out.object, to);
  out.from_min = category->morphism(out.object, m, from);
  return out;
}

ThickSubcategory torsion_subcategory(
    const std::shared_ptr<ZModCategory>& category) {
  auto cat = category;
  return ThickSubcategory(
      category, "torsion", [cat](const ObjectRef& m) {
        const FgAbGroup& g = cat->group_of(m);
        return rank(g.relations) == g.generators;
      });
}

namespace {

// SNF-based coordinates on the free part of ℚ⊗M: with U·rel·V = D, the map
// x ↦ x·V carries the presentation to coker(D); the free coordinates are the
// columns past the nonzero diagonal entries.
struct FreePart {
  QMatrix v_inv;              // full change of basis, inverted
  QMatrix v;                  // full change of basis
  std::size_t first_free;     // index of the first free coordinate
  std::size_t n;              // generator count
};

FreePart free_part(const FgAbGroup& g) {
  SnfResult s = snf(g.relations);
  std::size_t nz = 0;
  std::size_t bound = std::min(s.d.rows(), s.d.cols());
  for (std::size_t i = 0; i < bound; ++i)
    if (s.d.at(i, i) != 0) ++nz;
  FreePart fp;
  fp.v = QMatrix::from_int(s.v);
  auto inv = fp.v.inverse();
  if (!inv) throw InternalError("rationalize: SNF change of basis singular");
  fp.v_inv = *inv;
  fp.first_free = nz;
  fp.n = g.generators;
  return fp;
}

}  // namespace

QMatrix rationalize(const MorphismRef& phi) {
  auto cat = std::dynamic_pointer_cast<ZModCategory>(phi.category());
  if (!cat) throw UsageError("rationalize: not a zmod morphism");
  FreePart src = free_part(cat->group_of(phi.source()));
  FreePart tgt = free_part(cat->group_of(phi.target()));
  QMatrix full =
      src.v_inv * QMatrix::from_int(cat->matrix_of(phi)) * tgt.v;
  QMatrix r(src.n - src.first_free, tgt.n - tgt.first_free);
  for (std::size_t i = src.first_free; i < src.n; ++i)
    for (std::size_t j = tgt.first_free; j < tgt.n; ++j)
      r.at(i - src.first_free, j - tgt.first_free) = full.at(i, j);
  return r;
}

QMatrix rationalize(const GeneralizedMorphism& g) {
  QMatrix ri = rationalize(g.iota);
  QMatrix rj = rationalize(g.jay);
  auto ri_inv = ri.inverse();
  auto rj_inv = rj.inverse();
  if (!ri_inv || !rj_inv)
    throw PreconditionError("rationalize: adaptation legs are not rational "
                            "isomorphisms");
  return (*ri_inv) * rationalize(g.arrow) * (*rj_inv);
}

}  // namespace serreq
