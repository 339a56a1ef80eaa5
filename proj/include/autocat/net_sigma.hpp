// Networks generated by affine maps and a pointwise activation, under the
// direct sum. Equality is syntactic-first, then sampled: only NotEqual is a
// semantic claim.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "autocat/model.hpp"

namespace autocat {

inline double activate(Activation kind, double x) {
  switch (kind) {
    case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-x));
    case Activation::Tanh: return std::tanh(x);
    default: return x > 0.0 ? x : 0.0;  // relu: unbounded, outside the usual hypotheses
  }
}

class NetSigmaModel : public CategoryModel {
 public:
  explicit NetSigmaModel(Activation activation = Activation::Sigmoid,
                         std::map<std::string, long> dims = {})
      : activation_(activation), dims_(std::move(dims)) {}

  std::string name() const override { return "net-sigma"; }
  Activation activation() const { return activation_; }

  CBase unit() const override { return CBase::dim(0); }
  CBase tensor_obj(const CBase& a, const CBase& b) const override {
    return CBase::dim(dim_of(a) + dim_of(b));
  }

  CBase object(const std::string& basic) const override {
    auto it = dims_.find(basic);
    if (it != dims_.end()) return CBase::dim(it->second);
    if (!basic.empty() && basic.find_first_not_of("0123456789") == std::string::npos)
      return CBase::dim(std::stol(basic));
    throw std::invalid_argument("net-sigma: no dimension for object '" + basic + "'");
  }

  Morphism identity(const CBase& obj) const override {
    dim_of(obj);
    return {obj, obj, NetTerm{}};
  }

  Morphism compose(const Morphism& g, const Morphism& f) const override {
    require_composable(g, f);
    NetTerm out = net(f);
    const NetTerm& gt = net(g);
    out.insert(out.end(), gt.begin(), gt.end());
    return {f.dom, g.cod, std::move(out)};
  }

  Morphism tensor(const Morphism& f, const Morphism& g) const override {
    const NetTerm& ft = net(f);
    const NetTerm& gt = net(g);
    std::size_t depth = std::max(ft.size(), gt.size());
    NetTerm out;
    out.reserve(depth);
    for (std::size_t k = 0; k < depth; ++k) {
      NetLayer layer;
      append_or_pad(layer, ft, k, dim_of(f.cod));
      append_or_pad(layer, gt, k, dim_of(g.cod));
      out.push_back(normalize_layer(std::move(layer)));
    }
    return {tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), std::move(out)};
  }

  TriState equal(const Morphism& f, const Morphism& g) const override {
    require_comparable(f, g);
    if (net(f) == net(g)) return TriState::Equal;
    long d = dim_of(f.dom);
    for (const auto& x : sample_points(d)) {
      auto yf = apply_net(f, x);
      auto yg = apply_net(g, x);
      for (std::size_t i = 0; i < yf.size(); ++i)
        if (std::abs(yf[i] - yg[i]) > kTolerance) return TriState::NotEqual;
    }
    return TriState::Unknown;
  }

  bool is_identity(const Morphism& f) const override {
    if (!(f.dom == f.cod)) return false;
    for (const auto& layer : net(f)) {
      if (layer.pieces.size() != 1) return false;
      const auto* a = std::get_if<AffineD>(&layer.pieces[0]);
      if (!a || !(*a == AffineD::identity(a->rows))) return false;
    }
    return true;
  }

  std::vector<double> apply_net(const Morphism& f, std::vector<double> x) const {
    if (x.size() != static_cast<std::size_t>(dim_of(f.dom)))
      throw std::invalid_argument("net-sigma: input dimension mismatch");
    for (const auto& layer : net(f)) {
      std::vector<double> y;
      std::size_t pos = 0;
      for (const auto& piece : layer.pieces) {
        if (const auto* a = std::get_if<AffineD>(&piece)) {
          for (std::size_t i = 0; i < a->rows; ++i) {
            double acc = a->b[i];
            for (std::size_t j = 0; j < a->cols; ++j)
              acc += a->m[i * a->cols + j] * x[pos + j];
            y.push_back(acc);
          }
          pos += a->cols;
        } else {
          const auto& act = std::get<ActBlock>(piece);
          for (long i = 0; i < act.dim; ++i)
            y.push_back(activate(act.kind, x[pos + static_cast<std::size_t>(i)]));
          pos += static_cast<std::size_t>(act.dim);
        }
      }
      if (pos != x.size())
        throw std::invalid_argument("net-sigma: malformed pipeline layer");
      x = std::move(y);
    }
    return x;
  }

  Morphism from_affine(AffineD a) const {
    CBase dom = CBase::dim(static_cast<long>(a.cols));
    CBase cod = CBase::dim(static_cast<long>(a.rows));
    return {dom, cod, NetTerm{NetLayer{{NetPiece{std::move(a)}}}}};
  }

  Morphism activation_stage(long dim) const {
    CBase obj = CBase::dim(dim);
    return {obj, obj, NetTerm{NetLayer{{NetPiece{ActBlock{activation_, dim}}}}}};
  }

  static const NetTerm& net(const Morphism& m) {
    if (!std::holds_alternative<NetTerm>(m.value))
      throw std::invalid_argument("net-sigma: morphism from another model");
    return std::get<NetTerm>(m.value);
  }

  static long dim_of(const CBase& obj) {
    if (!obj.is_dim())
      throw std::invalid_argument("net-sigma: object is not a dimension");
    return obj.dim_value();
  }

  static constexpr double kTolerance = 1e-9;
  static constexpr int kSampleCount = 16;

  static std::vector<std::vector<double>> sample_points(long dim) {
    std::mt19937 rng(0x5e7u);  // fixed: the point set is part of the contract
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<std::vector<double>> pts(kSampleCount);
    for (auto& p : pts) {
      p.resize(static_cast<std::size_t>(dim));
      for (auto& c : p) c = dist(rng);
    }
    return pts;
  }

 private:
  static void append_or_pad(NetLayer& layer, const NetTerm& t, std::size_t k,
                            long cod_dim) {
    if (k < t.size()) {
      layer.pieces.insert(layer.pieces.end(), t[k].pieces.begin(),
                          t[k].pieces.end());
    } else {
      layer.pieces.push_back(AffineD::identity(static_cast<std::size_t>(cod_dim)));
    }
  }

  // Merge adjacent affine pieces and same-kind activation blocks, drop
  // zero-width pieces; tensor bracketing then cannot be observed.
  static NetLayer normalize_layer(NetLayer layer) {
    NetLayer out;
    for (auto& piece : layer.pieces) {
      if (const auto* a = std::get_if<AffineD>(&piece)) {
        if (a->rows == 0 && a->cols == 0) continue;
        if (!out.pieces.empty()) {
          if (auto* prev = std::get_if<AffineD>(&out.pieces.back())) {
            *prev = direct_sum(*prev, *a);
            continue;
          }
        }
      } else {
        const auto& act = std::get<ActBlock>(piece);
        if (act.dim == 0) continue;
        if (!out.pieces.empty()) {
          if (auto* prev = std::get_if<ActBlock>(&out.pieces.back());
              prev && prev->kind == act.kind) {
            prev->dim += act.dim;
            continue;
          }
        }
      }
      out.pieces.push_back(std::move(piece));
    }
    return out;
  }

  static AffineD direct_sum(const AffineD& a, const AffineD& b) {
    AffineD out{a.rows + b.rows, a.cols + b.cols,
                std::vector<double>((a.rows + b.rows) * (a.cols + b.cols), 0.0),
                std::vector<double>()};
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j)
        out.m[i * out.cols + j] = a.m[i * a.cols + j];
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j)
        out.m[(a.rows + i) * out.cols + (a.cols + j)] = b.m[i * b.cols + j];
    out.b = a.b;
    out.b.insert(out.b.end(), b.b.begin(), b.b.end());
    return out;
  }

  Activation activation_;
  std::map<std::string, long> dims_;
};

}  // namespace autocat
