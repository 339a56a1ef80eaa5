// Model-specific morphism payloads and the type that carries them together
// with domain/codomain bookkeeping.
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "autocat/matrix.hpp"
#include "autocat/object.hpp"

namespace autocat {

enum class TriState { Equal, NotEqual, Unknown };

inline std::string to_string(TriState t) {
  switch (t) {
    case TriState::Equal: return "EQUAL";
    case TriState::NotEqual: return "NOT_EQUAL";
    default: return "UNKNOWN";
  }
}

// --- free signature terms -------------------------------------------------

struct FreeTerm;
using FreeTermPtr = std::shared_ptr<const FreeTerm>;

// Terms over generators, identities, formal compose and formal tensor.
struct FreeTerm {
  enum class Kind { Gen, Id, Compose, Tensor };
  Kind kind;
  std::string name;      // Gen
  CBase obj;             // Id
  FreeTermPtr lhs, rhs;  // Compose: lhs after rhs; Tensor: lhs left of rhs

  static FreeTermPtr gen(std::string n) {
    return std::make_shared<FreeTerm>(FreeTerm{Kind::Gen, std::move(n), {}, {}, {}});
  }
  static FreeTermPtr id(CBase obj) {
    return std::make_shared<FreeTerm>(FreeTerm{Kind::Id, {}, std::move(obj), {}, {}});
  }
  static FreeTermPtr compose(FreeTermPtr g, FreeTermPtr f) {
    return std::make_shared<FreeTerm>(
        FreeTerm{Kind::Compose, {}, {}, std::move(g), std::move(f)});
  }
  static FreeTermPtr tensor(FreeTermPtr l, FreeTermPtr r) {
    return std::make_shared<FreeTerm>(
        FreeTerm{Kind::Tensor, {}, {}, std::move(l), std::move(r)});
  }
};

inline bool term_equal(const FreeTermPtr& a, const FreeTermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FreeTerm::Kind::Gen: return a->name == b->name;
    case FreeTerm::Kind::Id: return a->obj == b->obj;
    default: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
  }
}

inline bool term_is_identity(const FreeTermPtr& t) {
  if (!t) return false;
  switch (t->kind) {
    case FreeTerm::Kind::Id: return true;
    case FreeTerm::Kind::Gen: return false;
    default: return term_is_identity(t->lhs) && term_is_identity(t->rhs);
  }
}

inline std::string to_string(const FreeTermPtr& t) {
  switch (t->kind) {
    case FreeTerm::Kind::Gen: return t->name;
    case FreeTerm::Kind::Id: return "id(" + to_string(t->obj) + ")";
    case FreeTerm::Kind::Compose:
      return "(" + to_string(t->lhs) + " . " + to_string(t->rhs) + ")";
    default:
      return "(" + to_string(t->lhs) + " x " + to_string(t->rhs) + ")";
  }
}

// --- affine maps ----------------------------------------------------------

// x |-> linear * x + offset, over exact rationals.
struct AffMap {
  RatMatrix linear;
  RatVector offset;

  bool operator==(const AffMap& o) const {
    return linear == o.linear && offset == o.offset;
  }

  RatVector apply(const RatVector& x) const {
    RatVector out = apply_matrix(linear, x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i];
    return out;
  }
};

// --- sigma-network pipelines ----------------------------------------------

enum class Activation { Sigmoid, Tanh, Relu };

inline std::string to_string(Activation a) {
  switch (a) {
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Tanh: return "tanh";
    default: return "relu";
  }
}

// Dense affine stage over doubles.
struct AffineD {
  std::size_t rows = 0, cols = 0;
  std::vector<double> m;  // row-major, rows x cols
  std::vector<double> b;  // length rows

  static AffineD identity(std::size_t n) {
    AffineD a{n, n, std::vector<double>(n * n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) a.m[i * n + i] = 1.0;
    return a;
  }
  bool operator==(const AffineD& o) const {
    return rows == o.rows && cols == o.cols && m == o.m && b == o.b;
  }
};

// Componentwise activation applied to a block of coordinates.
struct ActBlock {
  Activation kind = Activation::Sigmoid;
  long dim = 0;
  bool operator==(const ActBlock& o) const {
    return kind == o.kind && dim == o.dim;
  }
};

using NetPiece = std::variant<AffineD, ActBlock>;

// Horizontal juxtaposition of pieces; layers apply sequentially.
struct NetLayer {
  std::vector<NetPiece> pieces;
  bool operator==(const NetLayer& o) const { return pieces == o.pieces; }
};

using NetTerm = std::vector<NetLayer>;

// --- diagrams as morphism values ------------------------------------------

struct Diagram;

// Used when the generating category is itself a category of diagrams.
struct DiagramRef {
  std::shared_ptr<const Diagram> ptr;
  bool operator==(const DiagramRef& o) const;  // deep; defined with Diagram
};

// --------------------------------------------------------------------------

using MorValue = std::variant<FreeTermPtr, RatMatrix, AffMap, NetTerm, DiagramRef>;

struct Morphism {
  CBase dom, cod;
  MorValue value;
};

bool operator==(const Morphism& a, const Morphism& b);  // defined with Diagram
inline bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

}  // namespace autocat
