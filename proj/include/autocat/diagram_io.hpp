// Text form of diagrams. One header line `dom: ...`, then one line per
// slice with comma-separated items:
//
//   dom: A, B^-1
//   wire A, box f [A] -> [B, C], cup B^-1
//
// `^0` is omitted; an all-empty slice prints as `-`. Box references are
// generator names, term expressions `(f . g)` / `(f x g)` / `id(A*B)`, or
// inline matrices `mat[RxC: a, b, ...]`. parse(print(d)) == d structurally.
#pragma once

#include <cctype>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autocat/diagram.hpp"
#include "autocat/free_signature.hpp"
#include "autocat/rational.hpp"

namespace autocat {

// --- printing -------------------------------------------------------------

inline std::string print_box_ref(const Morphism& m) {
  if (const auto* t = std::get_if<FreeTermPtr>(&m.value)) return to_string(*t);
  if (const auto* mat = std::get_if<RatMatrix>(&m.value)) {
    std::string out = "mat[" + std::to_string(mat->rows()) + "x" +
                      std::to_string(mat->cols()) + ":";
    for (std::size_t i = 0; i < mat->rows(); ++i)
      for (std::size_t j = 0; j < mat->cols(); ++j) {
        if (i || j) out += ",";
        out += to_string(mat->at(i, j));
      }
    return out + "]";
  }
  throw std::invalid_argument("diagram print: box value has no text form");
}

inline std::string print_factors(const std::vector<CBase>& fs) {
  std::string out = "[";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) out += ",";
    out += to_string(fs[k]);
  }
  return out + "]";
}

inline std::string print_item(const Item& it) {
  if (const auto* w = std::get_if<Wire>(&it)) return "wire " + to_string(w->obj);
  if (const auto* b = std::get_if<Box>(&it))
    return "box " + print_box_ref(b->value) + " " + print_factors(b->dom_factors) +
           " -> " + print_factors(b->cod_factors);
  if (const auto* c = std::get_if<Cup>(&it))
    return "cup " + to_string(SignedObject{c->base, c->level});
  const auto& c = std::get<Cap>(it);
  return "cap " + to_string(SignedObject{c.base, c.level});
}

inline std::string print_diagram(const Diagram& d) {
  std::string out = "dom:";
  for (std::size_t k = 0; k < d.dom.size(); ++k)
    out += (k ? ", " : " ") + to_string(d.dom[k]);
  out += "\n";
  for (const Slice& s : d.slices) {
    if (s.items.empty()) {
      out += "-\n";
      continue;
    }
    for (std::size_t k = 0; k < s.items.size(); ++k)
      out += (k ? ", " : "") + print_item(s.items[k]);
    out += "\n";
  }
  return out;
}

// --- parsing --------------------------------------------------------------

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Split on commas that are not nested inside (), [].
inline std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
  return out;
}

inline CBase obj_from_token(const std::string& tok, const CategoryModel& model) {
  if (tok.empty()) throw ParseError("empty object token");
  if (tok == "I") return model.unit();
  std::vector<CBase> factors;
  std::istringstream ss(tok);
  std::string part;
  while (std::getline(ss, part, '*')) {
    part = strip(part);
    if (part.empty()) throw ParseError("malformed object '" + tok + "'");
    factors.push_back(model.object(part));
  }
  return model.tensor_obj(factors);
}

inline SignedObject signed_from_token(const std::string& tok,
                                      const CategoryModel& model) {
  auto caret = tok.rfind('^');
  if (caret != std::string::npos && caret + 1 < tok.size()) {
    std::string suffix = tok.substr(caret + 1);
    char* end = nullptr;
    long w = std::strtol(suffix.c_str(), &end, 10);
    if (end && *end == '\0')
      return {obj_from_token(strip(tok.substr(0, caret)), model),
              static_cast<int>(w)};
  }
  return {obj_from_token(tok, model), 0};
}

inline Morphism parse_box_ref(const std::string& ref, const CategoryModel& model);

inline Morphism parse_mat_ref(const std::string& ref) {
  // mat[RxC: e, e, ...]
  auto colon = ref.find(':');
  auto close = ref.rfind(']');
  if (colon == std::string::npos || close == std::string::npos)
    throw ParseError("malformed matrix reference '" + ref + "'");
  std::string shape = strip(ref.substr(4, colon - 4));
  auto x = shape.find('x');
  if (x == std::string::npos)
    throw ParseError("malformed matrix shape '" + shape + "'");
  std::size_t rows = std::stoul(shape.substr(0, x));
  std::size_t cols = std::stoul(shape.substr(x + 1));
  RatMatrix m(rows, cols);
  std::istringstream body(ref.substr(colon + 1, close - colon - 1));
  std::string entry;
  std::size_t idx = 0;
  while (std::getline(body, entry, ',')) {
    entry = strip(entry);
    if (entry.empty()) continue;
    if (idx >= rows * cols) throw ParseError("too many matrix entries");
    auto r = parse_rational(entry);
    if (!r) throw ParseError("bad matrix entry '" + entry + "'");
    m.at(idx / cols, idx % cols) = *r;
    ++idx;
  }
  if (idx != rows * cols) throw ParseError("missing matrix entries");
  return {CBase::dim(static_cast<long>(cols)), CBase::dim(static_cast<long>(rows)),
          std::move(m)};
}

// Fully parenthesized binary term: (ref . ref) or (ref x ref).
inline Morphism parse_term_ref(const std::string& ref, const CategoryModel& model) {
  std::string inner = strip(ref.substr(1, ref.size() - 2));
  int depth = 0;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    char c = inner[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && k > 0 && k + 1 < inner.size() && (c == '.' || c == 'x') &&
        inner[k - 1] == ' ' && inner[k + 1] == ' ') {
      Morphism lhs = parse_box_ref(strip(inner.substr(0, k - 1)), model);
      Morphism rhs = parse_box_ref(strip(inner.substr(k + 2)), model);
      return c == '.' ? model.compose(lhs, rhs) : model.tensor(lhs, rhs);
    }
  }
  throw ParseError("malformed term '" + ref + "'");
}

inline Morphism parse_box_ref(const std::string& ref, const CategoryModel& model) {
  if (ref.empty()) throw ParseError("empty box reference");
  if (ref.rfind("mat[", 0) == 0) return parse_mat_ref(ref);
  if (ref.rfind("id(", 0) == 0 && ref.back() == ')')
    return model.identity(obj_from_token(strip(ref.substr(3, ref.size() - 4)), model));
  if (ref.front() == '(') return parse_term_ref(ref, model);
  if (const auto* free = dynamic_cast<const FreeSignatureModel*>(&model))
    return free->generator(ref);
  throw ParseError("unknown box reference '" + ref + "'");
}

inline std::vector<CBase> parse_factors(const std::string& s,
                                        const CategoryModel& model) {
  std::string t = strip(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("expected factor list, got '" + s + "'");
  std::vector<CBase> out;
  for (const auto& tok : split_top(t.substr(1, t.size() - 2), ','))
    if (!tok.empty()) out.push_back(obj_from_token(tok, model));
  return out;
}

inline Item parse_item(const std::string& tok, const CategoryModel& model) {
  if (tok.rfind("wire ", 0) == 0)
    return Wire{signed_from_token(strip(tok.substr(5)), model)};
  if (tok.rfind("cup ", 0) == 0) {
    SignedObject so = signed_from_token(strip(tok.substr(4)), model);
    return Cup{so.base, so.winding};
  }
  if (tok.rfind("cap ", 0) == 0) {
    SignedObject so = signed_from_token(strip(tok.substr(4)), model);
    return Cap{so.base, so.winding};
  }
  if (tok.rfind("box ", 0) == 0) {
    std::string rest = strip(tok.substr(4));
    auto arrow = rest.rfind("->");
    if (arrow == std::string::npos) throw ParseError("box item missing '->'");
    std::string cods = strip(rest.substr(arrow + 2));
    std::string head = strip(rest.substr(0, arrow));
    // the dom factor list is the bracket group ending at the tail of head
    if (head.empty() || head.back() != ']') throw ParseError("box item missing factors");
    int depth = 0;
    std::size_t open = std::string::npos;
    for (std::size_t k = head.size(); k-- > 0;) {
      if (head[k] == ']') ++depth;
      if (head[k] == '[') {
        if (--depth == 0) {
          open = k;
          break;
        }
      }
    }
    if (open == std::string::npos) throw ParseError("box item missing factors");
    std::vector<CBase> dom_f = parse_factors(head.substr(open), model);
    std::vector<CBase> cod_f = parse_factors(cods, model);
    Morphism value = parse_box_ref(strip(head.substr(0, open)), model);
    return Box{std::move(value), std::move(dom_f), std::move(cod_f)};
  }
  throw ParseError("unknown item '" + tok + "'");
}

}  // namespace detail

inline Diagram parse_diagram(std::istream& in, const CategoryModel& model) {
  using detail::strip;
  Diagram d;
  std::string line;
  int lineno = 0;
  bool have_dom = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    try {
      if (!have_dom) {
        if (s.rfind("dom:", 0) != 0)
          throw ParseError("expected 'dom:' header");
        for (const auto& tok : detail::split_top(strip(s.substr(4)), ','))
          if (!tok.empty()) d.dom.push_back(detail::signed_from_token(tok, model));
        have_dom = true;
        continue;
      }
      Slice slice;
      if (s != "-")
        for (const auto& tok : detail::split_top(s, ','))
          slice.items.push_back(detail::parse_item(tok, model));
      d.slices.push_back(std::move(slice));
    } catch (const std::exception& e) {
      throw ParseError("diagram line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_dom) throw ParseError("diagram file has no 'dom:' header");
  if (auto err = validate_error(d, &model)) throw ParseError(*err);
  return d;
}

inline Diagram parse_diagram(const std::string& text, const CategoryModel& model) {
  std::istringstream in(text);
  return parse_diagram(in, model);
}

}  // namespace autocat
