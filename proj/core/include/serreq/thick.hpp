#ifndef SERREQ_THICK_HPP
#define SERREQ_THICK_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "serreq/category.hpp"

namespace serreq {

/// A thick subcategory C of an Abelian category A, given by a decidable
/// membership test on objects. Thickness (closure under sub, quotient and
/// extension) is a promise of the supplier; the randomized property suite
/// spot-checks it.
class ThickSubcategory {
 public:
  ThickSubcategory() = default;
  ThickSubcategory(std::shared_ptr<Category> ambient, std::string name,
                   std::function<bool(const ObjectRef&)> membership)
      : ambient_(std::move(ambient)),
        name_(std::move(name)),
        membership_(std::move(membership)) {}

  bool valid() const { return static_cast<bool>(membership_); }
  const std::shared_ptr<Category>& ambient() const { return ambient_; }
  const std::string& name() const { return name_; }

  bool contains(const ObjectRef& m) const {
    if (!valid()) throw UsageError("ThickSubcategory: empty handle");
    if (!m.valid() || m.category() != ambient_)
      throw UsageError("ThickSubcategory: object not from the ambient "
                       "category");
    return membership_(m);
  }

 private:
  std::shared_ptr<Category> ambient_;
  std::string name_;
  std::function<bool(const ObjectRef&)> membership_;
};

}  // namespace serreq

#endif  // SERREQ_THICK_HPP
