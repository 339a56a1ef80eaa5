// Seeded generators for property suites: random interfaces, random
// progressive diagrams over a signature or over matrices, zig-zag
// insertion, and small random matrices. Everything is a pure function of
// the seed, so harness reports are reproducible.
#pragma once

#include <random>
#include <vector>

#include "autocat/diagram.hpp"
#include "autocat/free_signature.hpp"
#include "autocat/mat_tensor.hpp"
#include "autocat/signature.hpp"

namespace autocat {

class DiagramGen {
 public:
  explicit DiagramGen(unsigned seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Interface random_interface(const std::vector<CBase>& bases, std::size_t min_len,
                             std::size_t max_len, int max_winding) {
    Interface out;
    std::size_t n = static_cast<std::size_t>(
        uniform(static_cast<long>(min_len), static_cast<long>(max_len)));
    for (std::size_t k = 0; k < n; ++k)
      out.push_back({bases[static_cast<std::size_t>(
                         uniform(0, static_cast<long>(bases.size()) - 1))],
                     static_cast<int>(uniform(-max_winding, max_winding))});
    return out;
  }

  RatMatrix random_matrix(std::size_t rows, std::size_t cols, long lo = -3,
                          long hi = 3) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(uniform(lo, hi));
    return m;
  }

  // Boxes and wires only, built layer by layer over the signature's
  // generators; all windings zero.
  Diagram random_progressive(const FreeSignatureModel& model, std::size_t depth) {
    const Signature& sig = model.signature();
    std::vector<std::string> names(sig.objects().begin(), sig.objects().end());
    Interface cur;
    std::size_t len = static_cast<std::size_t>(uniform(1, 4));
    for (std::size_t k = 0; k < len; ++k)
      cur.push_back({CBase::basic(names[static_cast<std::size_t>(
                         uniform(0, static_cast<long>(names.size()) - 1))]),
                     0});
    Diagram d{cur, {}};
    for (std::size_t layer = 0; layer < depth; ++layer) {
      Slice s;
      std::size_t pos = 0;
      while (pos < cur.size()) {
        const Generator* pick = nullptr;
        if (uniform(0, 1) == 0) {
          std::vector<const Generator*> fits;
          for (const auto& [gname, g] : sig.generators()) {
            if (g.dom.empty() || pos + g.dom.size() > cur.size()) continue;
            bool match = true;
            for (std::size_t r = 0; r < g.dom.size(); ++r)
              if (!(cur[pos + r].base == CBase::basic(g.dom[r])) ||
                  cur[pos + r].winding != 0)
                match = false;
            if (match) fits.push_back(&g);
          }
          if (!fits.empty())
            pick = fits[static_cast<std::size_t>(
                uniform(0, static_cast<long>(fits.size()) - 1))];
        }
        if (pick) {
          std::vector<CBase> dom_f, cod_f;
          for (const auto& n : pick->dom) dom_f.push_back(CBase::basic(n));
          for (const auto& n : pick->cod) cod_f.push_back(CBase::basic(n));
          s.items.push_back(Box{model.generator(pick->name), dom_f, cod_f});
          pos += pick->dom.size();
        } else {
          s.items.push_back(Wire{cur[pos]});
          ++pos;
        }
      }
      cur = s.lower();
      d.slices.push_back(std::move(s));
    }
    return d;
  }

  // Progressive diagram over matrices with random shapes and entries.
  Diagram random_mat_diagram(std::size_t depth, long max_dim) {
    Interface cur;
    std::size_t len = static_cast<std::size_t>(uniform(1, 3));
    for (std::size_t k = 0; k < len; ++k)
      cur.push_back({CBase::dim(uniform(1, max_dim)), 0});
    Diagram d{cur, {}};
    for (std::size_t layer = 0; layer < depth; ++layer) {
      Slice s;
      std::size_t pos = 0;
      while (pos < cur.size()) {
        if (uniform(0, 2) == 0 && cur[pos].winding == 0) {
          std::size_t span = static_cast<std::size_t>(uniform(1, 2));
          if (pos + span > cur.size()) span = 1;
          bool zero = true;
          long dd = 1;
          std::vector<CBase> dom_f;
          for (std::size_t r = 0; r < span; ++r) {
            if (cur[pos + r].winding != 0) zero = false;
            dd *= cur[pos + r].base.dim_value();
            dom_f.push_back(cur[pos + r].base);
          }
          if (zero) {
            std::vector<CBase> cod_f;
            long dc = 1;
            std::size_t outs = static_cast<std::size_t>(uniform(1, 2));
            for (std::size_t r = 0; r < outs; ++r) {
              long dv = uniform(1, max_dim);
              dc *= dv;
              cod_f.push_back(CBase::dim(dv));
            }
            Morphism v{CBase::dim(dd), CBase::dim(dc),
                       random_matrix(static_cast<std::size_t>(dc),
                                     static_cast<std::size_t>(dd))};
            s.items.push_back(Box{std::move(v), std::move(dom_f), std::move(cod_f)});
            pos += span;
            continue;
          }
        }
        s.items.push_back(Wire{cur[pos]});
        ++pos;
      }
      cur = s.lower();
      d.slices.push_back(std::move(s));
    }
    return d;
  }

  // Splices a cap-then-cup detour onto a random wire position at a random
  // depth; the boundary is unchanged and the insertion yanks away.
  Diagram insert_zigzag(Diagram d) {
    std::size_t k = static_cast<std::size_t>(
        uniform(0, static_cast<long>(d.slices.size())));
    Interface at = k == 0 ? d.dom : d.slices[k - 1].lower();
    if (at.empty()) return d;
    std::size_t p = static_cast<std::size_t>(
        uniform(0, static_cast<long>(at.size()) - 1));
    const SignedObject& so = at[p];
    Slice s1, s2;
    for (std::size_t j = 0; j < at.size(); ++j) {
      if (j == p) {
        s1.items.push_back(Wire{so});
        s1.items.push_back(Cap{so.base, so.winding});
        s2.items.push_back(Cup{so.base, so.winding});
        s2.items.push_back(Wire{so});
      } else {
        s1.items.push_back(Wire{at[j]});
        s2.items.push_back(Wire{at[j]});
      }
    }
    d.slices.insert(d.slices.begin() + static_cast<long>(k), {s1, s2});
    return d;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace autocat
