// Equality of free monoidal terms, decided through the canonical progressive
// diagram: interpret the term as boxes and wires, normalize, and compare
// structurally. The interchange canonicalization makes the normal form
// independent of bracketing and interleaving, so plain structural equality
// of the results is the decision.
#pragma once

#include <stdexcept>

#include "autocat/diagram.hpp"
#include "autocat/free_signature.hpp"
#include "autocat/rewrite.hpp"

namespace autocat {

inline Diagram term_to_diagram(const FreeTermPtr& t, const FreeSignatureModel& model) {
  if (!t) throw std::invalid_argument("term_to_diagram: null term");
  switch (t->kind) {
    case FreeTerm::Kind::Gen: {
      const Generator& g = model.signature().generator(t->name);
      std::vector<CBase> dom_f, cod_f;
      for (const auto& n : g.dom) dom_f.push_back(CBase::basic(n));
      for (const auto& n : g.cod) cod_f.push_back(CBase::basic(n));
      return box_diagram(model.generator(t->name), std::move(dom_f),
                         std::move(cod_f));
    }
    case FreeTerm::Kind::Id: {
      Interface i;
      for (const auto& n : FreeSignatureModel::names(t->obj))
        i.push_back({CBase::basic(n), 0});
      return identity_diagram(std::move(i));
    }
    case FreeTerm::Kind::Compose:  // lhs after rhs
      return compose(term_to_diagram(t->rhs, model), term_to_diagram(t->lhs, model));
    default:
      return tensor(term_to_diagram(t->lhs, model), term_to_diagram(t->rhs, model));
  }
}

inline TriState FreeSignatureModel::equal(const Morphism& f, const Morphism& g) const {
  require_comparable(f, g);
  if (term_equal(term(f), term(g))) return TriState::Equal;
  Diagram df = normalize(term_to_diagram(term(f), *this), *this);
  Diagram dg = normalize(term_to_diagram(term(g), *this), *this);
  return df == dg ? TriState::Equal : TriState::NotEqual;
}

}  // namespace autocat
