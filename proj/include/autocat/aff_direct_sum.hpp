// Affine maps under the direct sum. Monoidal but not autonomous: the snake
// composite for any candidate adjunction collapses to a constant-extended
// map (see functors.hpp for the executable refutation).
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "autocat/model.hpp"

namespace autocat {

class AffDirectSumModel : public CategoryModel {
 public:
  AffDirectSumModel() = default;
  explicit AffDirectSumModel(std::map<std::string, long> dims)
      : dims_(std::move(dims)) {}

  std::string name() const override { return "aff-direct-sum"; }

  CBase unit() const override { return CBase::dim(0); }
  CBase tensor_obj(const CBase& a, const CBase& b) const override {
    return CBase::dim(dim_of(a) + dim_of(b));
  }

  CBase object(const std::string& basic) const override {
    auto it = dims_.find(basic);
    if (it != dims_.end()) return CBase::dim(it->second);
    if (!basic.empty() && basic.find_first_not_of("0123456789") == std::string::npos)
      return CBase::dim(std::stol(basic));
    throw std::invalid_argument("aff-direct-sum: no dimension for object '" + basic + "'");
  }

  Morphism identity(const CBase& obj) const override {
    auto d = static_cast<std::size_t>(dim_of(obj));
    return {obj, obj, AffMap{RatMatrix::identity(d), RatVector(d)}};
  }

  // x |-> M_g (M_f x + b_f) + b_g, i.e. (M_g M_f, M_g b_f + b_g).
  Morphism compose(const Morphism& g, const Morphism& f) const override {
    require_composable(g, f);
    const AffMap& ag = aff(g);
    const AffMap& af = aff(f);
    RatVector b = apply_matrix(ag.linear, af.offset);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += ag.offset[i];
    return {f.dom, g.cod, AffMap{ag.linear * af.linear, std::move(b)}};
  }

  Morphism tensor(const Morphism& f, const Morphism& g) const override {
    const AffMap& af = aff(f);
    const AffMap& ag = aff(g);
    RatVector b = af.offset;
    b.insert(b.end(), ag.offset.begin(), ag.offset.end());
    return {tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod),
            AffMap{af.linear.direct_sum(ag.linear), std::move(b)}};
  }

  TriState equal(const Morphism& f, const Morphism& g) const override {
    require_comparable(f, g);
    return aff(f) == aff(g) ? TriState::Equal : TriState::NotEqual;
  }

  bool is_identity(const Morphism& f) const override {
    if (!(f.dom == f.cod)) return false;
    const AffMap& a = aff(f);
    if (!a.linear.is_identity()) return false;
    for (const auto& x : a.offset)
      if (x != 0) return false;
    return true;
  }

  std::optional<RatVector> apply(const Morphism& f, const RatVector& x) const override {
    return aff(f).apply(x);
  }

  static const AffMap& aff(const Morphism& m) {
    if (!std::holds_alternative<AffMap>(m.value))
      throw std::invalid_argument("aff-direct-sum: morphism from another model");
    return std::get<AffMap>(m.value);
  }

  static long dim_of(const CBase& obj) {
    if (!obj.is_dim())
      throw std::invalid_argument("aff-direct-sum: object is not a dimension");
    return obj.dim_value();
  }

  Morphism from_parts(RatMatrix linear, RatVector offset) const {
    if (linear.rows() != offset.size())
      throw std::invalid_argument("aff-direct-sum: offset size mismatch");
    long r = static_cast<long>(linear.rows()), c = static_cast<long>(linear.cols());
    return {CBase::dim(c), CBase::dim(r), AffMap{std::move(linear), std::move(offset)}};
  }

 private:
  std::map<std::string, long> dims_;
};

}  // namespace autocat
