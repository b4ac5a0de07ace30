#ifndef SERREQ_CATEGORY_HPP
#define SERREQ_CATEGORY_HPP

#include <atomic>
#include <memory>
#include <string>

#include "serreq/error.hpp"

namespace serreq {

class Category;
class ObjectRef;
class MorphismRef;

namespace detail {

struct ObjectPayload {
  virtual ~ObjectPayload() = default;
};

struct MorphismPayload {
  virtual ~MorphismPayload() = default;
};

struct ObjectData {
  std::shared_ptr<Category> category;
  std::shared_ptr<const ObjectPayload> payload;
  std::atomic<int> zero_state{-1};  // -1 undecided, 0 nonzero, 1 zero
};

}  // namespace detail

/// Handle to an object of some Category instance. Handles from different
/// instances never mix; every operation checks ownership first.
class ObjectRef {
 public:
  ObjectRef() = default;

  bool valid() const { return data_ != nullptr; }
  const std::shared_ptr<Category>& category() const { return data_->category; }

  template <class T>
  const T& payload_as() const {
    const T* p = dynamic_cast<const T*>(data_->payload.get());
    if (p == nullptr) throw InternalError("object payload type mismatch");
    return *p;
  }

  /// Identity of handles (same underlying data), not mathematical equality.
  bool same_handle(const ObjectRef& other) const {
    return data_ == other.data_;
  }

 private:
  friend class Category;
  std::shared_ptr<detail::ObjectData> data_;
};

class MorphismRef {
 public:
  MorphismRef() = default;

  bool valid() const { return payload_ != nullptr; }
  const ObjectRef& source() const { return source_; }
  const ObjectRef& target() const { return target_; }
  const std::shared_ptr<Category>& category() const {
    return source_.category();
  }

  template <class T>
  const T& payload_as() const {
    const T* p = dynamic_cast<const T*>(payload_.get());
    if (p == nullptr) throw InternalError("morphism payload type mismatch");
    return *p;
  }

 private:
  friend class Category;
  ObjectRef source_;
  ObjectRef target_;
  std::shared_ptr<const detail::MorphismPayload> payload_;
};

struct DirectSum {
  ObjectRef object;
  MorphismRef proj1, proj2;  // object -> summands
  MorphismRef inj1, inj2;    // summands -> object
};

struct SubObject {
  ObjectRef object;
  MorphismRef embedding;  // mono into the ambient object
};

struct QuotObject {
  ObjectRef object;
  MorphismRef projection;  // epi from the ambient object
};

struct PullbackResult {
  ObjectRef object;
  MorphismRef proj1, proj2;
  MorphismRef mono_to_sum;  // kernel embedding into direct_sum(X, Y)
};

struct PushoutResult {
  ObjectRef object;
  MorphismRef inj1, inj2;
  MorphismRef epi_from_sum;  // cokernel projection from direct_sum(X, Y)
};

struct ObjectSimplification {
  ObjectRef object;           // isomorphic, possibly smaller presentation
  MorphismRef from_original;  // iso: original -> object
  MorphismRef to_original;    // iso: object -> original
};

/// Abstract computable Abelian category. Backends implement the *_impl
/// virtuals; the public entry points validate ownership and endpoints, then
/// dispatch. Derived constructions (image, pullback, iso inversion, ...)
/// have default implementations in terms of the primitives and may be
/// overridden when a backend has something faster.
class Category : public std::enable_shared_from_this<Category> {
 public:
  virtual ~Category() = default;

  virtual std::string name() const = 0;

  // -- objects -------------------------------------------------------------
  ObjectRef zero_object();
  bool objects_equal(const ObjectRef& a, const ObjectRef& b);
  bool is_zero_object(const ObjectRef& m);

  // -- basic morphism operations -------------------------------------------
  MorphismRef identity(const ObjectRef& m);
  MorphismRef zero_morphism(const ObjectRef& m, const ObjectRef& n);
  bool is_well_defined(const MorphismRef& phi);
  bool is_equal(const MorphismRef& phi, const MorphismRef& psi);
  bool is_zero_morphism(const MorphismRef& phi);
  MorphismRef compose(const MorphismRef& phi, const MorphismRef& psi);
  MorphismRef add(const MorphismRef& phi, const MorphismRef& psi);
  MorphismRef sub(const MorphismRef& phi, const MorphismRef& psi);
  MorphismRef negate(const MorphismRef& phi);

  // -- biproducts ------------------------------------------------------------
  DirectSum direct_sum(const ObjectRef& m1, const ObjectRef& m2);
  /// {psi1, psi2}: N -> M1 (+) M2 for psi_i: N -> M_i.
  MorphismRef pairing(const MorphismRef& psi1, const MorphismRef& psi2);
  /// <psi1, psi2>: M1 (+) M2 -> N for psi_i: M_i -> N.
  MorphismRef copairing(const MorphismRef& psi1, const MorphismRef& psi2);

  // -- (co)kernels and their universal properties ----------------------------
  SubObject kernel(const MorphismRef& phi);
  /// For kappa = kernel(phi).embedding and tau with compose(tau, phi) = 0,
  /// the unique lift through kappa.
  MorphismRef kernel_lift(const MorphismRef& kappa, const MorphismRef& tau);
  QuotObject cokernel(const MorphismRef& phi);
  MorphismRef cokernel_colift(const MorphismRef& epsilon,
                              const MorphismRef& eta);
  /// Lift tau: N -> M through an arbitrary mono kappa: K -> M; errors when
  /// the image of tau is not contained in the image of kappa.
  MorphismRef mono_lift(const MorphismRef& kappa, const MorphismRef& tau);
  /// Colift eta: M -> N through an arbitrary epi epsilon: M -> Q.
  MorphismRef epi_colift(const MorphismRef& epsilon, const MorphismRef& eta);

  // -- derived constructions -------------------------------------------------
  bool is_mono(const MorphismRef& phi);
  bool is_epi(const MorphismRef& phi);
  bool is_iso(const MorphismRef& phi);
  SubObject image_embedding(const MorphismRef& phi);
  QuotObject coimage_projection(const MorphismRef& phi);
  MorphismRef coimage_to_image_iso(const MorphismRef& phi);
  PullbackResult pullback(const MorphismRef& f, const MorphismRef& g);
  PushoutResult pushout(const MorphismRef& f, const MorphismRef& g);
  MorphismRef inverse_of_iso(const MorphismRef& phi);

  /// An isomorphic object with a (possibly) smaller presentation, together
  /// with the iso pair. The default keeps the object as is; backends with a
  /// normal form (e.g. Smith reduction for Z-modules) override this so that
  /// long chains of derived constructions stay small.
  ObjectSimplification simplify_object(const ObjectRef& m);

 protected:
  // Primitive operations every backend provides.
  virtual ObjectRef zero_object_impl() = 0;
  virtual bool objects_equal_impl(const ObjectRef& a, const ObjectRef& b) = 0;
  virtual bool is_zero_object_impl(const ObjectRef& m) = 0;
  virtual MorphismRef identity_impl(const ObjectRef& m) = 0;
  virtual MorphismRef zero_morphism_impl(const ObjectRef& m,
                                         const ObjectRef& n) = 0;
  virtual bool is_well_defined_impl(const MorphismRef& phi) = 0;
  virtual bool is_equal_impl(const MorphismRef& phi,
                             const MorphismRef& psi) = 0;
  virtual MorphismRef compose_impl(const MorphismRef& phi,
                                   const MorphismRef& psi) = 0;
  virtual MorphismRef add_impl(const MorphismRef& phi,
                               const MorphismRef& psi) = 0;
  virtual MorphismRef negate_impl(const MorphismRef& phi) = 0;
  virtual DirectSum direct_sum_impl(const ObjectRef& m1,
                                    const ObjectRef& m2) = 0;
  virtual SubObject kernel_impl(const MorphismRef& phi) = 0;
  virtual QuotObject cokernel_impl(const MorphismRef& phi) = 0;
  virtual MorphismRef mono_lift_impl(const MorphismRef& kappa,
                                     const MorphismRef& tau) = 0;
  virtual MorphismRef epi_colift_impl(const MorphismRef& epsilon,
                                      const MorphismRef& eta) = 0;

  // Derived operations with generic defaults.
  virtual bool is_zero_morphism_impl(const MorphismRef& phi);
  virtual MorphismRef pairing_impl(const MorphismRef& psi1,
                                   const MorphismRef& psi2);
  virtual MorphismRef copairing_impl(const MorphismRef& psi1,
                                     const MorphismRef& psi2);
  virtual MorphismRef kernel_lift_impl(const MorphismRef& kappa,
                                       const MorphismRef& tau);
  virtual MorphismRef cokernel_colift_impl(const MorphismRef& epsilon,
                                           const MorphismRef& eta);
  virtual bool is_mono_impl(const MorphismRef& phi);
  virtual bool is_epi_impl(const MorphismRef& phi);
  virtual SubObject image_embedding_impl(const MorphismRef& phi);
  virtual QuotObject coimage_projection_impl(const MorphismRef& phi);
  virtual MorphismRef coimage_to_image_iso_impl(const MorphismRef& phi);
  virtual MorphismRef inverse_of_iso_impl(const MorphismRef& phi);
  virtual ObjectSimplification simplify_object_impl(const ObjectRef& m);

  // Handle construction helpers for backends.
  ObjectRef make_object(std::shared_ptr<const detail::ObjectPayload> payload);
  MorphismRef make_morphism(
      const ObjectRef& source, const ObjectRef& target,
      std::shared_ptr<const detail::MorphismPayload> payload);

  // Validation helpers.
  void check_owns(const ObjectRef& m, const char* op) const;
  void check_owns(const MorphismRef& phi, const char* op) const;
  void check_composable(const MorphismRef& phi, const MorphismRef& psi);
  void check_parallel(const MorphismRef& phi, const MorphismRef& psi,
                      const char* op);
};

}  // namespace serreq

#endif  // SERREQ_CATEGORY_HPP
