// Oriented rewriting on diagrams: zig-zag elimination, identity-box removal,
// interchange canonicalization and sequential merging, iterated to a fixed
// point. The measure (cups+caps, boxes, sum of slice indices) decreases
// lexicographically at every step, so normalization terminates.
//
// Within each round, interchange canonicalization runs before merging:
// merges then read their sources off the canonical slicing, which makes the
// composed box values independent of how the input diagram was presented.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "autocat/diagram.hpp"

namespace autocat {

using RewriteTrace = std::vector<std::string>;

struct NodeCount {
  std::size_t boxes = 0, cups = 0, caps = 0;
  std::size_t total() const { return boxes + cups + caps; }
  bool operator==(const NodeCount& o) const {
    return boxes == o.boxes && cups == o.cups && caps == o.caps;
  }
};

inline NodeCount count_nodes(const Diagram& d) {
  NodeCount n;
  for (const Slice& s : d.slices)
    for (const Item& it : s.items) {
      if (std::holds_alternative<Box>(it)) ++n.boxes;
      if (std::holds_alternative<Cup>(it)) ++n.cups;
      if (std::holds_alternative<Cap>(it)) ++n.caps;
    }
  return n;
}

namespace rw {

inline std::size_t upper_width(const Item& it) {
  if (std::holds_alternative<Wire>(it)) return 1;
  if (const auto* b = std::get_if<Box>(&it)) return b->dom_factors.size();
  return std::holds_alternative<Cup>(it) ? 2 : 0;
}

inline std::size_t lower_width(const Item& it) {
  if (std::holds_alternative<Wire>(it)) return 1;
  if (const auto* b = std::get_if<Box>(&it)) return b->cod_factors.size();
  return std::holds_alternative<Cup>(it) ? 0 : 2;
}

struct ItemSpan {
  std::size_t up = 0, up_n = 0, lo = 0, lo_n = 0;
};

inline std::vector<ItemSpan> item_spans(const Slice& s) {
  std::vector<ItemSpan> out;
  out.reserve(s.items.size());
  std::size_t u = 0, l = 0;
  for (const Item& it : s.items) {
    std::size_t un = upper_width(it), ln = lower_width(it);
    out.push_back({u, un, l, ln});
    u += un;
    l += ln;
  }
  return out;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Index of the item whose upper span contains position pos.
inline std::size_t item_at_upper(const std::vector<ItemSpan>& sp, std::size_t pos) {
  for (std::size_t j = 0; j < sp.size(); ++j)
    if (sp[j].up <= pos && pos < sp[j].up + sp[j].up_n) return j;
  return npos;
}

inline void emit(RewriteTrace* trace, const char* rule, std::size_t slice,
                 std::size_t pos) {
  if (trace)
    trace->push_back(std::string(rule) + " @ slice=" + std::to_string(slice) +
                     " pos=" + std::to_string(pos));
}

// --- Yank: cap leg feeds a cup leg through adjacent plain wires -----------

inline bool try_yank(Diagram& d, RewriteTrace* trace) {
  for (std::size_t t = 0; t < d.slices.size(); ++t) {
    auto sp_t = item_spans(d.slices[t]);
    for (std::size_t i = 0; i < d.slices[t].items.size(); ++i) {
      if (!std::holds_alternative<Cap>(d.slices[t].items[i])) continue;
      // legs at lower positions (a, b) = (q, q+1); trace them down together
      std::size_t a = sp_t[i].lo, b = a + 1;
      std::vector<std::pair<std::size_t, std::size_t>> middle;  // (slice, left item)
      for (std::size_t k = t + 1; k < d.slices.size(); ++k) {
        auto sp = item_spans(d.slices[k]);
        std::size_t ia = item_at_upper(sp, a), ib = item_at_upper(sp, b);
        if (ia == npos || ib == npos) break;
        bool cup_right = std::holds_alternative<Cup>(d.slices[k].items[ia]) &&
                         sp[ia].up + 1 == a;  // left leg enters cup's right slot
        bool cup_left = std::holds_alternative<Cup>(d.slices[k].items[ib]) &&
                        sp[ib].up == b;  // right leg enters cup's left slot
        if (cup_right || cup_left) {
          std::size_t cup_item = cup_right ? ia : ib;
          emit(trace, "Yank", t, i);
          d.slices[k].items.erase(d.slices[k].items.begin() +
                                  static_cast<long>(cup_item));
          for (auto it = middle.rbegin(); it != middle.rend(); ++it) {
            Slice& s = d.slices[it->first];
            s.items.erase(s.items.begin() + static_cast<long>(it->second + 1));
            s.items.erase(s.items.begin() + static_cast<long>(it->second));
          }
          d.slices[t].items.erase(d.slices[t].items.begin() + static_cast<long>(i));
          return true;
        }
        if (!std::holds_alternative<Wire>(d.slices[k].items[ia]) ||
            !std::holds_alternative<Wire>(d.slices[k].items[ib]) ||
            ib != ia + 1)
          break;  // strands split apart or hit a node: no planar pull here
        middle.push_back({k, ia});
        a = sp[ia].lo;
        b = sp[ib].lo;
      }
    }
  }
  return false;
}

// --- DropIdentity: identity box with matching factorizations --------------

inline bool try_drop_identity(Diagram& d, const CategoryModel& model,
                              RewriteTrace* trace) {
  for (std::size_t k = 0; k < d.slices.size(); ++k)
    for (std::size_t i = 0; i < d.slices[k].items.size(); ++i) {
      const auto* b = std::get_if<Box>(&d.slices[k].items[i]);
      if (!b || !(b->dom_factors == b->cod_factors)) continue;
      if (!model.is_identity(b->value)) continue;
      emit(trace, "DropIdentity", k, i);
      std::vector<Item> wires;
      for (const CBase& f : b->dom_factors) wires.push_back(Wire{{f, 0}});
      auto& items = d.slices[k].items;
      items.erase(items.begin() + static_cast<long>(i));
      items.insert(items.begin() + static_cast<long>(i), wires.begin(), wires.end());
      return true;
    }
  return false;
}

// --- Interchange: slide a node to the previous slice over plain wires -----

inline bool try_interchange(Diagram& d, RewriteTrace* trace) {
  for (std::size_t k = 1; k < d.slices.size(); ++k) {
    auto sp = item_spans(d.slices[k]);
    Slice& prev = d.slices[k - 1];
    auto spp = item_spans(prev);
    for (std::size_t i = 0; i < d.slices[k].items.size(); ++i) {
      if (!is_node(d.slices[k].items[i])) continue;
      std::size_t p = sp[i].up, m = sp[i].up_n;
      std::size_t j0 = npos;
      if (m == 0) {
        // needs an item boundary of prev at lower position p
        std::size_t cum = 0;
        for (std::size_t j = 0; j <= prev.items.size(); ++j) {
          if (cum == p) {
            j0 = j;
            break;
          }
          if (j < prev.items.size()) cum += spp[j].lo_n;
        }
        if (j0 == npos) continue;
      } else {
        std::size_t first = npos;
        for (std::size_t j = 0; j < prev.items.size(); ++j)
          if (spp[j].lo == p && spp[j].lo_n > 0) first = j;
        if (first == npos || !std::holds_alternative<Wire>(prev.items[first]))
          continue;
        bool ok = true;
        for (std::size_t r = 0; r < m; ++r)
          if (first + r >= prev.items.size() ||
              !std::holds_alternative<Wire>(prev.items[first + r]))
            ok = false;
        if (!ok) continue;
        j0 = first;
      }
      emit(trace, "Interchange", k, i);
      Item node = d.slices[k].items[i];
      std::vector<Item> cod_wires;
      for (const SignedObject& so : item_cod(node)) cod_wires.push_back(Wire{so});
      auto& items = d.slices[k].items;
      items.erase(items.begin() + static_cast<long>(i));
      items.insert(items.begin() + static_cast<long>(i), cod_wires.begin(),
                   cod_wires.end());
      prev.items.erase(prev.items.begin() + static_cast<long>(j0),
                       prev.items.begin() + static_cast<long>(j0 + m));
      prev.items.insert(prev.items.begin() + static_cast<long>(j0), node);
      return true;
    }
  }
  return false;
}

inline bool drop_wire_slices(Diagram& d, RewriteTrace* trace) {
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    bool all_wires = true;
    for (const Item& it : d.slices[k].items)
      if (is_node(it)) all_wires = false;
    if (!all_wires) continue;
    emit(trace, "DropWireSlice", k, 0);
    d.slices.erase(d.slices.begin() + static_cast<long>(k));
    return true;
  }
  return false;
}

// --- MergeSequential: fold a fully plugged run of sources into one box ----

inline bool try_merge(Diagram& d, const CategoryModel& model, RewriteTrace* trace) {
  for (std::size_t s = 1; s < d.slices.size(); ++s) {
    auto sp = item_spans(d.slices[s]);
    Slice& prev = d.slices[s - 1];
    auto spp = item_spans(prev);
    for (std::size_t i = 0; i < d.slices[s].items.size(); ++i) {
      const auto* b2 = std::get_if<Box>(&d.slices[s].items[i]);
      if (!b2) continue;
      std::size_t p = sp[i].up, m = sp[i].up_n;
      if (m == 0) continue;
      // collect the producing items: wires and boxes whose whole output
      // lands inside [p, p+m), starting exactly at p and covering it
      std::vector<std::size_t> sources;
      std::size_t covered = 0, nboxes = 0;
      bool ok = false;
      for (std::size_t j = 0; j < prev.items.size(); ++j) {
        if (spp[j].lo_n == 0) continue;
        if (spp[j].lo + spp[j].lo_n <= p) continue;
        if (sources.empty() && spp[j].lo != p) break;
        if (std::holds_alternative<Wire>(prev.items[j])) {
          if (std::get<Wire>(prev.items[j]).obj.winding != 0) break;
        } else if (const auto* b1 = std::get_if<Box>(&prev.items[j])) {
          if (spp[j].lo + spp[j].lo_n > p + m) break;
          ++nboxes;
          (void)b1;
        } else {
          break;  // cup/cap legs cannot plug a box
        }
        sources.push_back(j);
        covered += spp[j].lo_n;
        if (covered == m) {
          ok = true;
          break;
        }
      }
      if (!ok || nboxes == 0) continue;
      // merged value: b2 after the tensor of the sources
      Morphism tens;
      std::vector<CBase> dom_f;
      bool have = false;
      for (std::size_t j : sources) {
        Morphism v;
        if (const auto* w = std::get_if<Wire>(&prev.items[j])) {
          v = model.identity(w->obj.base);
          dom_f.push_back(w->obj.base);
        } else {
          const Box& b1 = std::get<Box>(prev.items[j]);
          v = b1.value;
          dom_f.insert(dom_f.end(), b1.dom_factors.begin(), b1.dom_factors.end());
        }
        tens = have ? model.tensor(tens, v) : std::move(v);
        have = true;
      }
      Morphism merged = model.compose(b2->value, tens);
      emit(trace, "MergeSequential", s, i);
      d.slices[s].items[i] = Box{std::move(merged), dom_f, b2->cod_factors};
      // sources become plain wires over their own inputs
      for (auto it = sources.rbegin(); it != sources.rend(); ++it) {
        if (std::holds_alternative<Wire>(prev.items[*it])) continue;
        const Box b1 = std::get<Box>(prev.items[*it]);
        std::vector<Item> wires;
        for (const CBase& f : b1.dom_factors) wires.push_back(Wire{{f, 0}});
        prev.items.erase(prev.items.begin() + static_cast<long>(*it));
        prev.items.insert(prev.items.begin() + static_cast<long>(*it),
                          wires.begin(), wires.end());
      }
      return true;
    }
  }
  return false;
}

}  // namespace rw

// --------------------------------------------------------------------------

inline Diagram normalize(Diagram d, const CategoryModel& model,
                         RewriteTrace* trace = nullptr,
                         std::size_t max_steps = static_cast<std::size_t>(-1)) {
  std::size_t steps = 0;
  bool changed = true;
  while (changed && steps < max_steps) {
    changed = false;
    auto run = [&](bool applied) {
      if (applied) {
        ++steps;
        changed = true;
      }
      return applied && steps < max_steps;
    };
    while (steps < max_steps && run(rw::try_yank(d, trace))) {}
    while (steps < max_steps && run(rw::try_drop_identity(d, model, trace))) {}
    while (steps < max_steps &&
           run(rw::try_interchange(d, trace) || rw::drop_wire_slices(d, trace))) {}
    while (steps < max_steps && run(rw::try_merge(d, model, trace))) {}
  }
  return d;
}

// Structural comparison of (already normalized) diagrams, consulting the
// model for box values.
inline bool diagrams_match(const Diagram& a, const Diagram& b,
                           const CategoryModel& model) {
  if (!(a.dom == b.dom) || a.slices.size() != b.slices.size()) return false;
  for (std::size_t k = 0; k < a.slices.size(); ++k) {
    const auto& ia = a.slices[k].items;
    const auto& ib = b.slices[k].items;
    if (ia.size() != ib.size()) return false;
    for (std::size_t j = 0; j < ia.size(); ++j) {
      const auto* ba = std::get_if<Box>(&ia[j]);
      const auto* bb = std::get_if<Box>(&ib[j]);
      if (!ba != !bb) return false;
      if (!ba) {
        if (!(ia[j] == ib[j])) return false;
        continue;
      }
      if (!(ba->dom_factors == bb->dom_factors) ||
          !(ba->cod_factors == bb->cod_factors))
        return false;
      if (ba->value == bb->value) continue;
      if (!(ba->value.dom == bb->value.dom) || !(ba->value.cod == bb->value.cod))
        return false;
      if (model.equal(ba->value, bb->value) != TriState::Equal) return false;
    }
  }
  return true;
}

// Normal-form comparison without the evaluation fallback; equal() in
// functors.hpp layers refutation-by-evaluation on top of this.
inline TriState equal_structural(const Diagram& d1, const Diagram& d2,
                                 const CategoryModel& model) {
  if (!(d1.dom == d2.dom) || !(d1.cod() == d2.cod())) return TriState::NotEqual;
  Diagram n1 = normalize(d1, model);
  Diagram n2 = normalize(d2, model);
  return diagrams_match(n1, n2, model) ? TriState::Equal : TriState::Unknown;
}

}  // namespace autocat
