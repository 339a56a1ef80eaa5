// Behavioral interface of a strict monoidal category, optionally with chosen
// adjoints, units and counits at every winding level.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "autocat/morphism.hpp"
#include "autocat/object.hpp"

namespace autocat {

class CategoryModel {
 public:
  virtual ~CategoryModel() = default;

  virtual std::string name() const = 0;

  virtual CBase unit() const = 0;
  virtual CBase tensor_obj(const CBase& a, const CBase& b) const = 0;

  // Interprets a basic object name from a signature file.
  virtual CBase object(const std::string& basic) const = 0;

  virtual Morphism identity(const CBase& obj) const = 0;
  virtual Morphism compose(const Morphism& g, const Morphism& f) const = 0;
  virtual Morphism tensor(const Morphism& f, const Morphism& g) const = 0;

  // Sound on Equal and NotEqual; Unknown is an honest "cannot tell".
  // Throws on dom/cod mismatch rather than returning NotEqual.
  virtual TriState equal(const Morphism& f, const Morphism& g) const = 0;

  virtual bool is_identity(const Morphism& f) const {
    if (!(f.dom == f.cod)) return false;
    return equal(f, identity(f.dom)) == TriState::Equal;
  }

  // Pointwise evaluation for function-like models.
  virtual std::optional<RatVector> apply(const Morphism&, const RatVector&) const {
    return std::nullopt;
  }

  CBase tensor_obj(const std::vector<CBase>& factors) const {
    CBase acc = unit();
    for (const auto& f : factors) acc = tensor_obj(acc, f);
    return acc;
  }

 protected:
  void require_composable(const Morphism& g, const Morphism& f) const {
    if (!(f.cod == g.dom))
      throw std::invalid_argument(name() + ": compose mismatch, cod(f)=" +
                                  to_string(f.cod) + " dom(g)=" + to_string(g.dom));
  }
  void require_comparable(const Morphism& f, const Morphism& g) const {
    if (!(f.dom == g.dom) || !(f.cod == g.cod))
      throw std::invalid_argument(name() + ": equal on morphisms with different boundaries");
  }
};

class AutonomousModel : public CategoryModel {
 public:
  virtual CBase left_adj(const CBase& obj) const = 0;
  virtual CBase right_adj(const CBase& obj) const = 0;

  CBase iterate(CBase obj, int n) const {
    for (; n > 0; --n) obj = right_adj(obj);
    for (; n < 0; ++n) obj = left_adj(obj);
    return obj;
  }

  // eps(A, n) : A^(n) (x) A^(n+1) -> I,  eta(A, n) : I -> A^(n+1) (x) A^(n).
  virtual Morphism eps(const CBase& obj, int level) const = 0;
  virtual Morphism eta(const CBase& obj, int level) const = 0;
};

}  // namespace autocat
