// Diagrams: a domain interface plus a sequence of elementary slices of
// boxes, cups, caps and wires. These are the morphism representatives of the
// free autonomous category over a monoidal model; the equivalence relation
// on them lives in rewrite.hpp.
#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "autocat/model.hpp"
#include "autocat/morphism.hpp"
#include "autocat/object.hpp"

namespace autocat {

struct Wire {
  SignedObject obj;
};

struct Box {
  Morphism value;
  std::vector<CBase> dom_factors, cod_factors;
};

// dom (base^level, base^level+1), cod ()
struct Cup {
  CBase base;
  int level = 0;
};

// dom (), cod (base^level+1, base^level)
struct Cap {
  CBase base;
  int level = 0;
};

using Item = std::variant<Wire, Box, Cup, Cap>;

inline Interface item_dom(const Item& it) {
  if (const auto* w = std::get_if<Wire>(&it)) return {w->obj};
  if (const auto* b = std::get_if<Box>(&it)) {
    Interface out;
    for (const auto& f : b->dom_factors) out.push_back({f, 0});
    return out;
  }
  if (const auto* c = std::get_if<Cup>(&it))
    return {{c->base, c->level}, {c->base, c->level + 1}};
  return {};
}

inline Interface item_cod(const Item& it) {
  if (const auto* w = std::get_if<Wire>(&it)) return {w->obj};
  if (const auto* b = std::get_if<Box>(&it)) {
    Interface out;
    for (const auto& f : b->cod_factors) out.push_back({f, 0});
    return out;
  }
  if (std::holds_alternative<Cup>(it)) return {};
  const auto& c = std::get<Cap>(it);
  return {{c.base, c.level + 1}, {c.base, c.level}};
}

inline bool is_node(const Item& it) { return !std::holds_alternative<Wire>(it); }

struct Slice {
  std::vector<Item> items;

  Interface upper() const {
    Interface out;
    for (const auto& it : items) {
      Interface d = item_dom(it);
      out.insert(out.end(), d.begin(), d.end());
    }
    return out;
  }
  Interface lower() const {
    Interface out;
    for (const auto& it : items) {
      Interface c = item_cod(it);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }
};

struct Diagram {
  Interface dom;
  std::vector<Slice> slices;

  Interface cod() const { return slices.empty() ? dom : slices.back().lower(); }
};

// --- structural equality --------------------------------------------------

inline bool operator==(const Diagram& a, const Diagram& b);

inline bool DiagramRef::operator==(const DiagramRef& o) const {
  if (ptr == o.ptr) return true;
  if (!ptr || !o.ptr) return false;
  return *ptr == *o.ptr;
}

inline bool operator==(const Morphism& a, const Morphism& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) return false;
  if (a.value.index() != b.value.index()) return false;
  if (const auto* t = std::get_if<FreeTermPtr>(&a.value))
    return term_equal(*t, std::get<FreeTermPtr>(b.value));
  return a.value == b.value;
}

inline bool operator==(const Item& a, const Item& b);

inline bool operator==(const Wire& a, const Wire& b) { return a.obj == b.obj; }
inline bool operator==(const Box& a, const Box& b) {
  return a.value == b.value && a.dom_factors == b.dom_factors &&
         a.cod_factors == b.cod_factors;
}
inline bool operator==(const Cup& a, const Cup& b) {
  return a.base == b.base && a.level == b.level;
}
inline bool operator==(const Cap& a, const Cap& b) {
  return a.base == b.base && a.level == b.level;
}
inline bool operator==(const Item& a, const Item& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&b](const auto& x) {
        return x == std::get<std::decay_t<decltype(x)>>(b);
      },
      a);
}
inline bool operator==(const Slice& a, const Slice& b) { return a.items == b.items; }
inline bool operator==(const Diagram& a, const Diagram& b) {
  return a.dom == b.dom && a.slices == b.slices;
}
inline bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

// --- validation -----------------------------------------------------------

// Returns an error description, or nullopt when the diagram is well formed.
// With a model, box factorizations are checked against the model's object
// monoid as well.
inline std::optional<std::string> validate_error(
    const Diagram& d, const CategoryModel* model = nullptr) {
  Interface cur = d.dom;
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    const Slice& s = d.slices[k];
    Interface up = s.upper();
    if (!(up == cur))
      return "slice " + std::to_string(k) + ": upper interface " + to_string(up) +
             " does not chain with " + to_string(cur);
    for (const auto& it : s.items) {
      if (const auto* b = std::get_if<Box>(&it)) {
        if (model) {
          if (!(model->tensor_obj(b->dom_factors) == b->value.dom))
            return "slice " + std::to_string(k) +
                   ": box dom factorization does not multiply to " +
                   to_string(b->value.dom);
          if (!(model->tensor_obj(b->cod_factors) == b->value.cod))
            return "slice " + std::to_string(k) +
                   ": box cod factorization does not multiply to " +
                   to_string(b->value.cod);
        }
      }
    }
    cur = s.lower();
  }
  return std::nullopt;
}

inline void validate(const Diagram& d, const CategoryModel* model = nullptr) {
  if (auto err = validate_error(d, model))
    throw std::invalid_argument("invalid diagram: " + *err);
}

// --- constructors ---------------------------------------------------------

inline Diagram identity_diagram(Interface i) { return {std::move(i), {}}; }

inline Diagram box_diagram(Morphism f, std::vector<CBase> dom_factors,
                           std::vector<CBase> cod_factors,
                           const CategoryModel* model = nullptr) {
  Box b{std::move(f), std::move(dom_factors), std::move(cod_factors)};
  Diagram d{item_dom(Item{b}), {Slice{{Item{std::move(b)}}}}};
  if (model) validate(d, model);
  return d;
}

inline Diagram cup(CBase base, int level) {
  Cup c{std::move(base), level};
  return {item_dom(Item{c}), {Slice{{Item{std::move(c)}}}}};
}

inline Diagram cap(CBase base, int level) {
  Cap c{std::move(base), level};
  return {{}, {Slice{{Item{std::move(c)}}}}};
}

// --- composition and tensor -----------------------------------------------

inline Diagram compose(const Diagram& f, const Diagram& g) {
  Interface fc = f.cod();
  if (!(fc == g.dom)) {
    std::size_t pos = 0;
    while (pos < fc.size() && pos < g.dom.size() && fc[pos] == g.dom[pos]) ++pos;
    throw std::invalid_argument(
        "compose: interface mismatch at position " + std::to_string(pos) +
        ": cod(f)=" + to_string(fc) + " dom(g)=" + to_string(g.dom));
  }
  Diagram out = f;
  out.slices.insert(out.slices.end(), g.slices.begin(), g.slices.end());
  return out;
}

inline Slice wire_slice(const Interface& i) {
  Slice s;
  for (const auto& so : i) s.items.push_back(Wire{so});
  return s;
}

// Pads the shorter operand with wire-only slices at the bottom, then joins
// each slice pair horizontally.
inline Diagram tensor(const Diagram& f, const Diagram& g) {
  std::size_t depth = std::max(f.slices.size(), g.slices.size());
  Diagram out{concat(f.dom, g.dom), {}};
  for (std::size_t k = 0; k < depth; ++k) {
    Slice s = k < f.slices.size() ? f.slices[k] : wire_slice(f.cod());
    Slice t = k < g.slices.size() ? g.slices[k] : wire_slice(g.cod());
    s.items.insert(s.items.end(), t.items.begin(), t.items.end());
    out.slices.push_back(std::move(s));
  }
  return out;
}

// --- canonical adjunction witnesses ---------------------------------------

// snake_eps(i) : left_adjoint(i) ++ i -> (), nested cups innermost first.
inline Diagram snake_eps(const Interface& i) {
  Diagram d{concat(left_adjoint(i), i), {}};
  std::size_t p = i.size();
  for (std::size_t k = 0; k < p; ++k) {
    // contract pair at positions (p-1-k, p-k) of the current interface
    Slice s;
    for (std::size_t j = 0; j + 1 < p - k; ++j)
      s.items.push_back(Wire{d.dom[j]});
    s.items.push_back(Cup{i[k].base, i[k].winding - 1});
    for (std::size_t j = p + 1 + k; j < 2 * p; ++j)
      s.items.push_back(Wire{d.dom[j]});
    d.slices.push_back(std::move(s));
  }
  return d;
}

// snake_eta(i) : () -> i ++ left_adjoint(i), nested caps outermost first.
inline Diagram snake_eta(const Interface& i) {
  Diagram d{{}, {}};
  std::size_t p = i.size();
  for (std::size_t k = 0; k < p; ++k) {
    Slice s;
    for (std::size_t j = 0; j < k; ++j) s.items.push_back(Wire{i[j]});
    s.items.push_back(Cap{i[k].base, i[k].winding - 1});
    for (std::size_t j = 0; j < k; ++j) {
      const SignedObject& so = i[k - 1 - j];
      s.items.push_back(Wire{{so.base, so.winding - 1}});
    }
    d.slices.push_back(std::move(s));
  }
  return d;
}

// The canonical comparison between two left adjoints exhibited by
// (eps1, eta1) and (eps2, eta2): (eps1 (x) 1) o (1 (x) eta2).
inline Diagram adjunction_iso(const Diagram& eps1, const Diagram& eta1,
                              const Diagram& eps2, const Diagram& eta2) {
  if (!(eps1.cod() == Interface{}) || !(eps2.cod() == Interface{}) ||
      !(eta1.dom == Interface{}) || !(eta2.dom == Interface{}))
    throw std::invalid_argument("adjunction_iso: not counit/unit shaped");
  const Interface& d1 = eps1.dom;  // A ++ B
  Interface c2 = eta2.cod();       // B ++ A'
  // split d1 = A ++ B by matching the B prefix-of-c2 suffix-of-d1
  for (std::size_t asz = 0; asz <= d1.size(); ++asz) {
    std::size_t bsz = d1.size() - asz;
    if (bsz > c2.size()) continue;
    bool match = true;
    for (std::size_t j = 0; j < bsz; ++j)
      if (!(d1[asz + j] == c2[j])) match = false;
    if (!match) continue;
    Interface a(d1.begin(), d1.begin() + static_cast<long>(asz));
    Interface a2(c2.begin() + static_cast<long>(bsz), c2.end());
    // sanity against the other pair
    if (!(eta1.cod() == concat(Interface(d1.begin() + static_cast<long>(asz), d1.end()), a)))
      continue;
    return compose(tensor(identity_diagram(a), eta2),
                   tensor(eps1, identity_diagram(a2)));
  }
  throw std::invalid_argument("adjunction_iso: boundary mismatch");
}

// Repackaging isomorphism between two factorizations of the same object.
inline Diagram assoc_iso(const CategoryModel& model, const std::vector<CBase>& ab,
                         const std::vector<CBase>& cd) {
  CBase prod = model.tensor_obj(ab);
  if (!(prod == model.tensor_obj(cd)))
    throw std::invalid_argument("assoc_iso: factorizations have different products");
  return box_diagram(model.identity(prod), ab, cd, &model);
}

}  // namespace autocat
