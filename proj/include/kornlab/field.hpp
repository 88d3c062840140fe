// Copyright (c) the kornlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "kornlab/grid.hpp"
#include "kornlab/tensor.hpp"

namespace kornlab {

/// Nodal sample of a vector field, node-major layout [node][component].
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(const GridDomain& g)
      : dim_(g.dim()), nodes_(g.node_count()), data_(dim_ * nodes_, 0.0) {}

  std::size_t dim() const { return dim_; }
  std::size_t node_count() const { return nodes_; }

  double& at(std::size_t node, std::size_t k) { return data_[node * dim_ + k]; }
  double at(std::size_t node, std::size_t k) const { return data_[node * dim_ + k]; }

  VecN value(std::size_t node) const {
    return VecN(data_.begin() + static_cast<std::ptrdiff_t>(node * dim_),
                data_.begin() + static_cast<std::ptrdiff_t>((node + 1) * dim_));
  }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::size_t nodes_ = 0;
  std::vector<double> data_;
};

/// Nodal sample of an n x n tensor field, row-major per node.
class MatrixField {
 public:
  MatrixField() = default;
  explicit MatrixField(const GridDomain& g)
      : dim_(g.dim()), nodes_(g.node_count()), data_(dim_ * dim_ * nodes_, 0.0) {}

  std::size_t dim() const { return dim_; }
  std::size_t node_count() const { return nodes_; }

  double& at(std::size_t node, std::size_t i, std::size_t j) {
    return data_[(node * dim_ + i) * dim_ + j];
  }
  double at(std::size_t node, std::size_t i, std::size_t j) const {
    return data_[(node * dim_ + i) * dim_ + j];
  }

  MatN value(std::size_t node) const {
    MatN m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = at(node, i, j);
    return m;
  }

  void set_value(std::size_t node, const MatN& m) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) at(node, i, j) = m(i, j);
  }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::size_t nodes_ = 0;
  std::vector<double> data_;
};

/// Nodal sample of an so(n)-valued field in packed storage.
class SkewField {
 public:
  SkewField() = default;
  explicit SkewField(const GridDomain& g)
      : dim_(g.dim()),
        packed_(PackedSkew::packed_size(g.dim())),
        nodes_(g.node_count()),
        data_(packed_ * nodes_, 0.0) {}

  std::size_t dim() const { return dim_; }
  std::size_t packed_size() const { return packed_; }
  std::size_t node_count() const { return nodes_; }

  double& at(std::size_t node, std::size_t m) { return data_[node * packed_ + m]; }
  double at(std::size_t node, std::size_t m) const { return data_[node * packed_ + m]; }

  PackedSkew value(std::size_t node) const {
    PackedSkew a(dim_);
    for (std::size_t m = 0; m < packed_; ++m) a.packed(m) = at(node, m);
    return a;
  }

  void set_value(std::size_t node, const PackedSkew& a) {
    for (std::size_t m = 0; m < packed_; ++m) at(node, m) = a.packed(m);
  }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::size_t packed_ = 0;
  std::size_t nodes_ = 0;
  std::vector<double> data_;
};

/// Nodal sample of a field valued in so(n) x R^n: n packed skew blocks per
/// node. Used both for the generalized Curl of a matrix field (block k is
/// the curl of row k) and for the per-axis derivatives of a skew field
/// (block d is d/dx_d A).
class ThirdOrderField {
 public:
  ThirdOrderField() = default;
  explicit ThirdOrderField(const GridDomain& g)
      : dim_(g.dim()),
        packed_(PackedSkew::packed_size(g.dim())),
        nodes_(g.node_count()),
        data_(dim_ * packed_ * nodes_, 0.0) {}

  std::size_t dim() const { return dim_; }
  std::size_t packed_size() const { return packed_; }
  std::size_t node_count() const { return nodes_; }

  double& at(std::size_t node, std::size_t block, std::size_t m) {
    return data_[(node * dim_ + block) * packed_ + m];
  }
  double at(std::size_t node, std::size_t block, std::size_t m) const {
    return data_[(node * dim_ + block) * packed_ + m];
  }

  ThirdOrderCross value(std::size_t node) const {
    ThirdOrderCross t(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t m = 0; m < packed_; ++m)
        t.block(k).packed(m) = at(node, k, m);
    return t;
  }

  void set_value(std::size_t node, const ThirdOrderCross& t) {
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t m = 0; m < packed_; ++m)
        at(node, k, m) = t.block(k).packed(m);
  }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::size_t packed_ = 0;
  std::size_t nodes_ = 0;
  std::vector<double> data_;
};

using CurlField = ThirdOrderField;

namespace detail {

inline void require_lp_range(double p) {
  require(p > 1.0 && std::isfinite(p), "p must satisfy 1 < p < ∞");
}

template <class FrobAt>
double lp_norm_impl(const GridDomain& g, double p, FrobAt&& frob_at) {
  require_lp_range(p);
  double acc = 0.0;
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    const double f = frob_at(x);
    if (f > 0.0) acc += g.weight(x) * std::pow(f, p);
  }
  return std::pow(acc, 1.0 / p);
}

}  // namespace detail

/// Discrete L^p norm: trapezoidal nodal quadrature of the pointwise
/// Frobenius norm. Exact on constants; rejects p <= 1.
inline double lp_norm(const GridDomain& g, const VectorField& v, double p) {
  return detail::lp_norm_impl(g, p, [&](std::size_t x) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.dim(); ++k) s += v.at(x, k) * v.at(x, k);
    return std::sqrt(s);
  });
}

inline double lp_norm(const GridDomain& g, const MatrixField& f, double p) {
  return detail::lp_norm_impl(g, p, [&](std::size_t x) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j) s += f.at(x, i, j) * f.at(x, i, j);
    return std::sqrt(s);
  });
}

inline double lp_norm(const GridDomain& g, const SkewField& f, double p) {
  return detail::lp_norm_impl(g, p, [&](std::size_t x) {
    double s = 0.0;
    for (std::size_t m = 0; m < f.packed_size(); ++m) s += f.at(x, m) * f.at(x, m);
    return std::sqrt(2.0 * s);
  });
}

inline double lp_norm(const GridDomain& g, const ThirdOrderField& f, double p) {
  return detail::lp_norm_impl(g, p, [&](std::size_t x) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.dim(); ++k)
      for (std::size_t m = 0; m < f.packed_size(); ++m)
        s += f.at(x, k, m) * f.at(x, k, m);
    return std::sqrt(2.0 * s);
  });
}

/// Pointwise symmetric part of a matrix field.
inline MatrixField sym_field(const GridDomain& g, const MatrixField& f) {
  MatrixField s(g);
  for (std::size_t x = 0; x < g.node_count(); ++x)
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j)
        s.at(x, i, j) = 0.5 * (f.at(x, i, j) + f.at(x, j, i));
  return s;
}

/// Pointwise unpacking of a skew field into a full matrix field.
inline MatrixField unpack_field(const GridDomain& g, const SkewField& a) {
  MatrixField m(g);
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i + 1; j < a.dim(); ++j) {
        const double v = a.at(x, PackedSkew::packed_index(a.dim(), i, j));
        m.at(x, i, j) = v;
        m.at(x, j, i) = -v;
      }
  }
  return m;
}

}  // namespace kornlab
