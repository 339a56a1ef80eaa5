// Signature files: basic objects (with optional numeric dimensions), typed
// generators with factorized boundaries, and a partial order on basics.
//
//   object <name> [dim=<int>]
//   gen <name> : <obj>(,<obj>)* -> <obj>(,<obj>)*
//   order <a> <= <b>
//
// `I` or an empty side stands for the unit. Lines starting with `#` are
// comments.
#pragma once

#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace autocat {

struct Generator {
  std::string name;
  std::vector<std::string> dom, cod;  // factor lists of basic names
};

class Signature {
 public:
  void add_object(const std::string& name, long dim = -1) {
    if (objects_.count(name))
      throw std::runtime_error("signature: duplicate object '" + name + "'");
    objects_.insert(name);
    if (dim >= 0) dims_[name] = dim;
  }

  void add_generator(Generator g) {
    for (const auto& o : g.dom) require_object(o);
    for (const auto& o : g.cod) require_object(o);
    if (gens_.count(g.name))
      throw std::runtime_error("signature: duplicate generator '" + g.name + "'");
    gens_[g.name] = std::move(g);
  }

  void add_order(const std::string& a, const std::string& b) {
    require_object(a);
    require_object(b);
    order_.insert({a, b});
  }

  bool has_object(const std::string& name) const { return objects_.count(name) > 0; }
  bool has_generator(const std::string& name) const { return gens_.count(name) > 0; }

  const Generator& generator(const std::string& name) const {
    auto it = gens_.find(name);
    if (it == gens_.end())
      throw std::runtime_error("signature: unknown generator '" + name + "'");
    return it->second;
  }

  const std::map<std::string, Generator>& generators() const { return gens_; }
  const std::map<std::string, long>& dims() const { return dims_; }
  const std::set<std::string>& objects() const { return objects_; }

  // Reflexive-transitive order on basics.
  bool leq(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    std::set<std::string> seen{a};
    std::vector<std::string> todo{a};
    while (!todo.empty()) {
      std::string cur = todo.back();
      todo.pop_back();
      for (const auto& [x, y] : order_) {
        if (x != cur || seen.count(y)) continue;
        if (y == b) return true;
        seen.insert(y);
        todo.push_back(y);
      }
    }
    return false;
  }

  static Signature parse(std::istream& in) {
    Signature sig;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = strip(line);
      if (s.empty() || s[0] == '#') continue;
      std::istringstream ls(s);
      std::string kw;
      ls >> kw;
      try {
        if (kw == "object") {
          std::string name, attr;
          ls >> name;
          if (name.empty()) throw std::runtime_error("missing object name");
          long dim = -1;
          while (ls >> attr) {
            if (attr.rfind("dim=", 0) == 0)
              dim = std::stol(attr.substr(4));
            else
              throw std::runtime_error("unknown attribute '" + attr + "'");
          }
          sig.add_object(name, dim);
        } else if (kw == "gen") {
          sig.add_generator(parse_gen_line(s));
        } else if (kw == "order") {
          std::string a, le, b;
          ls >> a >> le >> b;
          if (le != "<=") throw std::runtime_error("expected '<='");
          sig.add_order(a, b);
        } else {
          throw std::runtime_error("unknown keyword '" + kw + "'");
        }
      } catch (const std::exception& e) {
        throw std::runtime_error("signature line " + std::to_string(lineno) +
                                 ": " + e.what());
      }
    }
    return sig;
  }

 private:
  void require_object(const std::string& name) const {
    if (!objects_.count(name))
      throw std::runtime_error("signature: unknown object '" + name + "'");
  }

  static std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  static std::vector<std::string> split_factors(const std::string& side) {
    std::vector<std::string> out;
    std::istringstream ss(side);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = strip(tok);
      if (tok.empty()) throw std::runtime_error("empty factor");
      if (tok == "I") continue;
      out.push_back(tok);
    }
    return out;
  }

  static Generator parse_gen_line(const std::string& s) {
    auto colon = s.find(':');
    auto arrow = s.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw std::runtime_error("expected 'gen <name> : <dom> -> <cod>'");
    std::istringstream head(s.substr(0, colon));
    std::string kw, name;
    head >> kw >> name;
    if (name.empty()) throw std::runtime_error("missing generator name");
    Generator g;
    g.name = name;
    g.dom = split_factors(strip(s.substr(colon + 1, arrow - colon - 1)));
    g.cod = split_factors(strip(s.substr(arrow + 2)));
    return g;
  }

  std::set<std::string> objects_;
  std::map<std::string, long> dims_;
  std::map<std::string, Generator> gens_;
  std::set<std::pair<std::string, std::string>> order_;
};

}  // namespace autocat
