// The free strict monoidal category over a signature: objects are lists of
// basic names, morphisms are terms over generators, identities, formal
// compose and formal tensor. Term equality is decided through the diagram
// normal form (see free_equal.hpp).
#pragma once

#include <stdexcept>
#include <string>

#include "autocat/model.hpp"
#include "autocat/signature.hpp"

namespace autocat {

class FreeSignatureModel : public CategoryModel {
 public:
  explicit FreeSignatureModel(const Signature& sig) : sig_(&sig) {}

  std::string name() const override { return "free-signature"; }
  const Signature& signature() const { return *sig_; }

  CBase unit() const override { return CBase(CBase::FreeList{}); }

  CBase tensor_obj(const CBase& a, const CBase& b) const override {
    CBase::FreeList out = names(a);
    const auto& nb = names(b);
    out.insert(out.end(), nb.begin(), nb.end());
    return CBase(std::move(out));
  }

  CBase object(const std::string& basic) const override {
    if (!sig_->has_object(basic))
      throw std::invalid_argument("free-signature: unknown object '" + basic + "'");
    return CBase::basic(basic);
  }

  Morphism identity(const CBase& obj) const override {
    names(obj);
    return {obj, obj, FreeTerm::id(obj)};
  }

  Morphism compose(const Morphism& g, const Morphism& f) const override {
    require_composable(g, f);
    return {f.dom, g.cod, FreeTerm::compose(term(g), term(f))};
  }

  Morphism tensor(const Morphism& f, const Morphism& g) const override {
    return {tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod),
            FreeTerm::tensor(term(f), term(g))};
  }

  // Interprets both terms as progressive diagrams and compares normal forms;
  // defined in free_equal.hpp.
  TriState equal(const Morphism& f, const Morphism& g) const override;

  bool is_identity(const Morphism& f) const override {
    return f.dom == f.cod && term_is_identity(term(f));
  }

  Morphism generator(const std::string& gname) const {
    const Generator& g = sig_->generator(gname);
    return {CBase(CBase::FreeList(g.dom)), CBase(CBase::FreeList(g.cod)),
            FreeTerm::gen(gname)};
  }

  static const FreeTermPtr& term(const Morphism& m) {
    if (!std::holds_alternative<FreeTermPtr>(m.value))
      throw std::invalid_argument("free-signature: morphism from another model");
    return std::get<FreeTermPtr>(m.value);
  }

  static const CBase::FreeList& names(const CBase& obj) {
    if (!obj.is_free())
      throw std::invalid_argument("free-signature: object is not a name list");
    return obj.free_list();
  }

 private:
  const Signature* sig_;
};

}  // namespace autocat
