// Objects as they appear on diagram wires: an object of the generating
// category together with an integer winding, and lists of these as the
// boundaries of diagrams.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace autocat {

struct SignedObject;

// Ordered list of winding-indexed objects; the empty list is the unit.
using Interface = std::vector<SignedObject>;

// An object of the generating category C. Three shapes cover all models in
// use: a list of named basics (free signatures, grammar types), a dimension
// (matrix / affine / network models), and an interface (when the generating
// category is itself a category of diagrams).
class CBase {
 public:
  using FreeList = std::vector<std::string>;

  CBase() : v_(FreeList{}) {}
  explicit CBase(FreeList names) : v_(std::move(names)) {}
  explicit CBase(long dim) : v_(dim) {}
  explicit CBase(Interface iface) : v_(std::move(iface)) {}
  static CBase basic(std::string name) { return CBase(FreeList{std::move(name)}); }
  static CBase dim(long d) { return CBase(d); }

  bool is_free() const { return std::holds_alternative<FreeList>(v_); }
  bool is_dim() const { return std::holds_alternative<long>(v_); }
  bool is_interface() const { return std::holds_alternative<Interface>(v_); }

  const FreeList& free_list() const { return std::get<FreeList>(v_); }
  long dim_value() const { return std::get<long>(v_); }
  const Interface& interface_value() const { return std::get<Interface>(v_); }

  bool operator==(const CBase& o) const;
  bool operator!=(const CBase& o) const { return !(*this == o); }

 private:
  std::variant<FreeList, long, Interface> v_;
};

struct SignedObject {
  CBase base;
  int winding = 0;

  bool operator==(const SignedObject& o) const {
    return winding == o.winding && base == o.base;
  }
  bool operator!=(const SignedObject& o) const { return !(*this == o); }
};

inline bool CBase::operator==(const CBase& o) const { return v_ == o.v_; }

// Reverse the list; left adjoint decrements every winding, right increments.
inline Interface left_adjoint(const Interface& i) {
  Interface out;
  out.reserve(i.size());
  for (auto it = i.rbegin(); it != i.rend(); ++it)
    out.push_back({it->base, it->winding - 1});
  return out;
}

inline Interface right_adjoint(const Interface& i) {
  Interface out;
  out.reserve(i.size());
  for (auto it = i.rbegin(); it != i.rend(); ++it)
    out.push_back({it->base, it->winding + 1});
  return out;
}

inline Interface iterate_adjoint(Interface i, int n) {
  for (; n > 0; --n) i = right_adjoint(i);
  for (; n < 0; ++n) i = left_adjoint(i);
  return i;
}

inline Interface concat(Interface a, const Interface& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// --- printing -------------------------------------------------------------

inline std::string to_string(const Interface& i);

inline std::string to_string(const CBase& b) {
  if (b.is_dim()) return std::to_string(b.dim_value());
  if (b.is_interface()) return to_string(b.interface_value());
  const auto& names = b.free_list();
  if (names.empty()) return "I";
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += "*";
    out += names[k];
  }
  return out;
}

inline std::string to_string(const SignedObject& s) {
  std::string out = to_string(s.base);
  if (s.winding != 0) out += "^" + std::to_string(s.winding);
  return out;
}

inline std::string to_string(const Interface& i) {
  std::string out = "(";
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (k) out += ", ";
    out += to_string(i[k]);
  }
  return out + ")";
}

// Parses an object token of the wire format: `I`, `A`, `A*B`, or a dimension
// such as `3`. Interface-based objects have no text form.
inline std::optional<CBase> parse_cbase(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  bool digits = true;
  for (char c : tok)
    if (!isdigit(static_cast<unsigned char>(c))) digits = false;
  if (digits) return CBase::dim(std::stol(tok));
  if (tok == "I") return CBase(CBase::FreeList{});
  CBase::FreeList names;
  std::string cur;
  for (char c : tok) {
    if (c == '*') {
      if (cur.empty()) return std::nullopt;
      names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) return std::nullopt;
  names.push_back(cur);
  return CBase(std::move(names));
}

}  // namespace autocat
