// Matrices over exact rationals with the Kronecker product as tensor.
// Self-dual at every winding level: eps is the flattened identity, eta its
// transpose.
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "autocat/model.hpp"

namespace autocat {

class MatTensorModel : public AutonomousModel {
 public:
  MatTensorModel() = default;
  explicit MatTensorModel(std::map<std::string, long> dims)
      : dims_(std::move(dims)) {}

  std::string name() const override { return "mat-tensor"; }

  CBase unit() const override { return CBase::dim(1); }
  CBase tensor_obj(const CBase& a, const CBase& b) const override {
    return CBase::dim(dim_of(a) * dim_of(b));
  }

  CBase object(const std::string& basic) const override {
    auto it = dims_.find(basic);
    if (it != dims_.end()) return CBase::dim(it->second);
    if (!basic.empty() && basic.find_first_not_of("0123456789") == std::string::npos)
      return CBase::dim(std::stol(basic));
    throw std::invalid_argument("mat-tensor: no dimension for object '" + basic + "'");
  }

  Morphism identity(const CBase& obj) const override {
    long d = dim_of(obj);
    return {obj, obj, RatMatrix::identity(static_cast<std::size_t>(d))};
  }

  Morphism compose(const Morphism& g, const Morphism& f) const override {
    require_composable(g, f);
    return {f.dom, g.cod, mat(g) * mat(f)};
  }

  Morphism tensor(const Morphism& f, const Morphism& g) const override {
    return {tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod),
            mat(f).kron(mat(g))};
  }

  TriState equal(const Morphism& f, const Morphism& g) const override {
    require_comparable(f, g);
    return mat(f) == mat(g) ? TriState::Equal : TriState::NotEqual;
  }

  bool is_identity(const Morphism& f) const override {
    return f.dom == f.cod && mat(f).is_identity();
  }

  std::optional<RatVector> apply(const Morphism& f, const RatVector& x) const override {
    return apply_matrix(mat(f), x);
  }

  CBase left_adj(const CBase& obj) const override { return obj; }
  CBase right_adj(const CBase& obj) const override { return obj; }

  Morphism eps(const CBase& obj, int) const override {
    long d = dim_of(obj);
    RatMatrix m(1, static_cast<std::size_t>(d * d));
    for (long i = 0; i < d; ++i) m.at(0, static_cast<std::size_t>(i * d + i)) = 1;
    return {CBase::dim(d * d), unit(), m};
  }

  Morphism eta(const CBase& obj, int level) const override {
    Morphism e = eps(obj, level);
    return {e.cod, e.dom, mat(e).transpose()};
  }

  static const RatMatrix& mat(const Morphism& m) {
    if (!std::holds_alternative<RatMatrix>(m.value))
      throw std::invalid_argument("mat-tensor: morphism from another model");
    return std::get<RatMatrix>(m.value);
  }

  static long dim_of(const CBase& obj) {
    if (!obj.is_dim())
      throw std::invalid_argument("mat-tensor: object is not a dimension");
    return obj.dim_value();
  }

  Morphism from_matrix(RatMatrix m) const {
    long r = static_cast<long>(m.rows()), c = static_cast<long>(m.cols());
    return {CBase::dim(c), CBase::dim(r), std::move(m)};
  }

 private:
  std::map<std::string, long> dims_;
};

}  // namespace autocat
