// Pregroup grammar front end: types as interfaces over basic grammar
// objects, planar reduction search, reduction diagrams, and sentence
// meanings by evaluation in a matrix model.
#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autocat/diagram.hpp"
#include "autocat/functors.hpp"
#include "autocat/signature.hpp"

namespace autocat {

// --- types ----------------------------------------------------------------

// `atom ::= name ('^' ('l'|'r')*)*`, space separated; each r adds one to the
// winding and each l subtracts one, so ^rl cancels.
inline Interface parse_type(const std::string& s, const Signature* sig = nullptr) {
  Interface out;
  std::istringstream ss(s);
  std::string atom;
  while (ss >> atom) {
    std::string name;
    int winding = 0;
    bool in_suffix = false;
    for (char c : atom) {
      if (c == '^') {
        in_suffix = true;
        continue;
      }
      if (!in_suffix) {
        name += c;
      } else if (c == 'r') {
        ++winding;
      } else if (c == 'l') {
        --winding;
      } else {
        throw std::invalid_argument("pregroup type: bad adjoint suffix in '" +
                                    atom + "'");
      }
    }
    if (name.empty())
      throw std::invalid_argument("pregroup type: empty atom in '" + s + "'");
    if (sig && !sig->has_object(name))
      throw std::invalid_argument("pregroup type: unknown basic type '" + name + "'");
    out.push_back({CBase::basic(name), winding});
  }
  return out;
}

inline std::string print_type(const Interface& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += " ";
    out += to_string(t[k].base);
    if (t[k].winding > 0)
      out += "^" + std::string(static_cast<std::size_t>(t[k].winding), 'r');
    if (t[k].winding < 0)
      out += "^" + std::string(static_cast<std::size_t>(-t[k].winding), 'l');
  }
  return out;
}

// --- reductions -----------------------------------------------------------

struct Reduction {
  std::vector<std::pair<std::size_t, std::size_t>> links;  // 0-indexed atoms
  std::vector<std::size_t> survivors;

  bool operator==(const Reduction& o) const {
    return links == o.links && survivors == o.survivors;
  }
};

namespace pg {

inline const std::string& basic_name(const SignedObject& so) {
  const auto& names = so.base.free_list();
  if (names.size() != 1)
    throw std::invalid_argument("pregroup: atoms must be basic types");
  return names[0];
}

// Contraction (x^n, y^{n+1}): at even n it needs x <= y, at odd n y <= x
// (the pregroup order reverses under each adjoint).
inline bool can_link(const SignedObject& a, const SignedObject& b,
                     const Signature& sig) {
  if (b.winding != a.winding + 1) return false;
  bool even = ((a.winding % 2) + 2) % 2 == 0;
  return even ? sig.leq(basic_name(a), basic_name(b))
              : sig.leq(basic_name(b), basic_name(a));
}

inline void search(const std::vector<SignedObject>& atoms, const Signature& sig,
                   const Interface& target, std::size_t k,
                   std::vector<std::size_t>& stack,
                   std::vector<std::pair<std::size_t, std::size_t>>& links,
                   std::vector<Reduction>& out, bool all) {
  if (!all && !out.empty()) return;
  if (k == atoms.size()) {
    if (stack.size() != target.size()) return;
    for (std::size_t i = 0; i < stack.size(); ++i)
      if (!(atoms[stack[i]] == target[i])) return;
    Reduction r{links, stack};
    std::sort(r.links.begin(), r.links.end());
    out.push_back(std::move(r));
    return;
  }
  if (!stack.empty() && can_link(atoms[stack.back()], atoms[k], sig)) {
    std::size_t top = stack.back();
    stack.pop_back();
    links.push_back({top, k});
    search(atoms, sig, target, k + 1, stack, links, out, all);
    links.pop_back();
    stack.push_back(top);
  }
  stack.push_back(k);
  search(atoms, sig, target, k + 1, stack, links, out, all);
  stack.pop_back();
}

}  // namespace pg

inline std::vector<SignedObject> concat_types(const std::vector<Interface>& types) {
  std::vector<SignedObject> atoms;
  for (const Interface& t : types) atoms.insert(atoms.end(), t.begin(), t.end());
  return atoms;
}

// Leftmost-greedy first reduction (link preferred over push), backtracking
// until the survivors spell the target.
inline std::optional<Reduction> find_reduction(const std::vector<Interface>& types,
                                               const Interface& target,
                                               const Signature& sig) {
  auto atoms = concat_types(types);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<Reduction> out;
  pg::search(atoms, sig, target, 0, stack, links, out, false);
  if (out.empty()) return std::nullopt;
  return out.front();
}

inline std::vector<Reduction> all_reductions(const std::vector<Interface>& types,
                                             const Interface& target,
                                             const Signature& sig) {
  auto atoms = concat_types(types);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<Reduction> out;
  pg::search(atoms, sig, target, 0, stack, links, out, true);
  std::sort(out.begin(), out.end(), [](const Reduction& a, const Reduction& b) {
    return a.links < b.links;
  });
  return out;
}

// Independent validity check: planarity, winding adjacency, order
// compatibility, disjointness, survivors = unlinked positions in order.
inline std::optional<std::string> reduction_error(const Reduction& r,
                                                  const std::vector<Interface>& types,
                                                  const Signature& sig) {
  auto atoms = concat_types(types);
  std::vector<bool> used(atoms.size(), false);
  for (const auto& [i, j] : r.links) {
    if (i >= j || j >= atoms.size()) return "link out of range or misordered";
    if (used[i] || used[j]) return "position linked twice";
    used[i] = used[j] = true;
    if (!pg::can_link(atoms[i], atoms[j], sig))
      return "link (" + std::to_string(i) + "," + std::to_string(j) +
             ") is not a valid contraction";
  }
  for (const auto& [i, j] : r.links)
    for (const auto& [k, l] : r.links)
      if (i < k && k < j && j < l) return "crossing links";
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < atoms.size(); ++p)
    if (!used[p]) rest.push_back(p);
  if (rest != r.survivors) return "survivors do not match unlinked positions";
  return std::nullopt;
}

// The reduction as a diagram: cups innermost first, one slice per nesting
// depth. Cups are monochrome, so a subtyped link relabels both of its atoms
// to the lesser base; survivors keep their own labels.
inline Diagram reduction_to_diagram(const Reduction& r,
                                    const std::vector<Interface>& types,
                                    const Signature& sig) {
  if (auto err = reduction_error(r, types, sig))
    throw std::invalid_argument("reduction_to_diagram: " + *err);
  auto atoms = concat_types(types);
  std::vector<std::size_t> mate(atoms.size(), rw::npos);
  for (const auto& [i, j] : r.links) {
    bool even = ((atoms[i].winding % 2) + 2) % 2 == 0;
    CBase lesser = even ? atoms[i].base : atoms[j].base;
    atoms[i].base = lesser;
    atoms[j].base = lesser;
    mate[i] = j;
    mate[j] = i;
  }
  Diagram d{Interface(atoms.begin(), atoms.end()), {}};
  std::vector<std::size_t> alive;
  for (std::size_t p = 0; p < atoms.size(); ++p) alive.push_back(p);
  std::size_t remaining = r.links.size();
  while (remaining > 0) {
    Slice s;
    std::vector<std::size_t> next;
    for (std::size_t a = 0; a < alive.size(); ++a) {
      std::size_t p = alive[a];
      if (a + 1 < alive.size() && mate[p] == alive[a + 1]) {
        s.items.push_back(Cup{atoms[p].base, atoms[p].winding});
        ++a;  // also consumes the mate
        --remaining;
      } else {
        s.items.push_back(Wire{atoms[p]});
        next.push_back(p);
      }
    }
    if (next.size() == alive.size())
      throw std::logic_error("reduction_to_diagram: no adjacent link found");
    d.slices.push_back(std::move(s));
    alive = std::move(next);
  }
  return d;
}

// --- lexicon --------------------------------------------------------------

struct LexiconEntry {
  std::string word;
  Interface type;
  std::optional<RatMatrix> meaning;  // a state: column vector over the type
};

// `word "<surface>" : <type> [= matrix <file>]`
class Lexicon {
 public:
  static Lexicon parse(std::istream& in, const Signature& sig,
                       const std::string& base_dir = ".") {
    Lexicon lex;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto b = line.find_first_not_of(" \t\r\n");
      if (b == std::string::npos || line[b] == '#') continue;
      try {
        lex.add(parse_line(line, sig, base_dir));
      } catch (const std::exception& e) {
        throw std::runtime_error("lexicon line " + std::to_string(lineno) + ": " +
                                 e.what());
      }
    }
    return lex;
  }

  void add(LexiconEntry e) { entries_[e.word] = std::move(e); }

  const LexiconEntry& entry(const std::string& word) const {
    auto it = entries_.find(word);
    if (it == entries_.end())
      throw std::runtime_error("lexicon: unknown word '" + word + "'");
    return it->second;
  }

  bool has(const std::string& word) const { return entries_.count(word) > 0; }
  const std::map<std::string, LexiconEntry>& entries() const { return entries_; }

 private:
  static LexiconEntry parse_line(const std::string& line, const Signature& sig,
                                 const std::string& base_dir) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw != "word") throw std::runtime_error("expected 'word'");
    auto q1 = line.find('"');
    auto q2 = line.find('"', q1 + 1);
    if (q1 == std::string::npos || q2 == std::string::npos)
      throw std::runtime_error("expected quoted surface form");
    LexiconEntry e;
    e.word = line.substr(q1 + 1, q2 - q1 - 1);
    auto colon = line.find(':', q2);
    if (colon == std::string::npos) throw std::runtime_error("expected ':'");
    auto eq = line.find('=', colon);
    std::string type_str = line.substr(colon + 1, eq == std::string::npos
                                                      ? std::string::npos
                                                      : eq - colon - 1);
    e.type = parse_type(type_str, &sig);
    if (eq != std::string::npos) {
      std::istringstream rest(line.substr(eq + 1));
      std::string mkw, file;
      rest >> mkw >> file;
      if (mkw != "matrix") throw std::runtime_error("expected 'matrix <file>'");
      std::ifstream mf(base_dir + "/" + file);
      if (!mf) throw std::runtime_error("cannot open matrix file '" + file + "'");
      e.meaning = read_matrix(mf);
    }
    return e;
  }

  std::map<std::string, LexiconEntry> entries_;
};

// --- sentence meaning -----------------------------------------------------

// Tensor the word states, contract along the first reduction, return the
// sentence state; nullopt when the sentence does not reduce to the target.
inline std::optional<Morphism> sentence_meaning(const std::vector<std::string>& words,
                                                const Lexicon& lex,
                                                const Interpretation& interp,
                                                const Interface& target,
                                                const Signature& sig) {
  std::vector<Interface> types;
  RatMatrix state(1, 1);
  state.at(0, 0) = 1;
  for (const auto& w : words) {
    const LexiconEntry& e = lex.entry(w);
    if (!e.meaning)
      throw std::runtime_error("lexicon: word '" + w + "' has no meaning");
    long d = 1;
    for (const SignedObject& so : e.type)
      d *= MatTensorModel::dim_of(interp.model->object(pg::basic_name(so)));
    if (static_cast<long>(e.meaning->rows()) != d || e.meaning->cols() != 1)
      throw std::runtime_error("lexicon: meaning of '" + w +
                               "' does not match its type's dimension");
    state = state.kron(*e.meaning);
    types.push_back(e.type);
  }
  auto red = find_reduction(types, target, sig);
  if (!red) return std::nullopt;
  Diagram rd = reduction_to_diagram(*red, types, sig);
  // relabel grammar basics as dimensions, then evaluate the cup pattern
  StrongMonoidalFunctor F;
  F.target = interp.model.get();
  F.obj_map = [&interp](const CBase& b) {
    CBase acc = interp.model->unit();
    for (const auto& n : b.free_list())
      acc = interp.model->tensor_obj(acc, interp.model->object(n));
    return acc;
  };
  F.mor_map = [](const Morphism&) -> Morphism {
    throw std::runtime_error("reduction diagrams contain no boxes");
  };
  Morphism contraction = value(map_diagram(F, rd), *interp.model);
  return interp.model->compose(contraction, interp.model->from_matrix(state));
}

}  // namespace autocat
