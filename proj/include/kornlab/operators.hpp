// Copyright (c) the kornlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "kornlab/field.hpp"
#include "kornlab/grid.hpp"
#include "kornlab/parallel.hpp"

namespace kornlab {
namespace detail {

/// Start nodes of all grid lines along `axis` (nodes with i_axis = 0).
inline std::vector<std::size_t> line_bases(const GridDomain& g,
                                           std::size_t axis) {
  std::vector<std::size_t> bases;
  bases.reserve(g.node_count() / g.points()[axis]);
  for (std::size_t x = 0; x < g.node_count(); ++x)
    if (g.coord(x, axis) == 0) bases.push_back(x);
  return bases;
}

}  // namespace detail

/// out = d/dx_axis of x, applied to ncomp interleaved components per node.
/// Second-order central differences inside, second-order one-sided
/// three-point stencils on the two boundary layers.
inline void axis_derivative(const GridDomain& g, std::size_t axis,
                            std::span<const double> x, std::span<double> out,
                            std::size_t ncomp) {
  const std::size_t m = g.points()[axis];
  const std::size_t stride = g.stride(axis) * ncomp;
  const double inv2h = 1.0 / (2.0 * g.spacing()[axis]);
  const auto bases = detail::line_bases(g, axis);
  parallel_for(bases.size(), [&](std::size_t li) {
    const std::size_t base = bases[li] * ncomp;
    for (std::size_t c = 0; c < ncomp; ++c) {
      const std::size_t b = base + c;
      out[b] = (-3.0 * x[b] + 4.0 * x[b + stride] - x[b + 2 * stride]) * inv2h;
      for (std::size_t t = 1; t + 1 < m; ++t)
        out[b + t * stride] =
            (x[b + (t + 1) * stride] - x[b + (t - 1) * stride]) * inv2h;
      const std::size_t e = b + (m - 1) * stride;
      out[e] = (3.0 * x[e] - 4.0 * x[e - stride] + x[e - 2 * stride]) * inv2h;
    }
  });
}

/// out += (d/dx_axis)^T x, the Euclidean transpose of axis_derivative.
inline void axis_derivative_transpose(const GridDomain& g, std::size_t axis,
                                      std::span<const double> x,
                                      std::span<double> out,
                                      std::size_t ncomp) {
  const std::size_t m = g.points()[axis];
  const std::size_t stride = g.stride(axis) * ncomp;
  const double inv2h = 1.0 / (2.0 * g.spacing()[axis]);
  const auto bases = detail::line_bases(g, axis);
  parallel_for(bases.size(), [&](std::size_t li) {
    const std::size_t base = bases[li] * ncomp;
    for (std::size_t c = 0; c < ncomp; ++c) {
      const std::size_t b = base + c;
      // row 0: (-3, 4, -1) / 2h
      out[b] += -3.0 * inv2h * x[b];
      out[b + stride] += 4.0 * inv2h * x[b];
      out[b + 2 * stride] += -inv2h * x[b];
      // interior rows t: (-1 at t-1, +1 at t+1) / 2h
      for (std::size_t t = 1; t + 1 < m; ++t) {
        const double v = x[b + t * stride] * inv2h;
        out[b + (t - 1) * stride] -= v;
        out[b + (t + 1) * stride] += v;
      }
      // row m-1: (1, -4, 3) / 2h at (m-3, m-2, m-1)
      const std::size_t e = b + (m - 1) * stride;
      out[e] += 3.0 * inv2h * x[e - 0];
      out[e - stride] += -4.0 * inv2h * x[e];
      out[e - 2 * stride] += inv2h * x[e];
    }
  });
}

/// Gradient of a vector field: (Dv)_kj = d_j v_k.
inline MatrixField grad_vector(const GridDomain& g, const VectorField& v) {
  const std::size_t n = g.dim();
  MatrixField out(g);
  std::vector<double> tmp(v.raw().size());
  for (std::size_t j = 0; j < n; ++j) {
    axis_derivative(g, j, v.raw(), tmp, n);
    for (std::size_t x = 0; x < g.node_count(); ++x)
      for (std::size_t k = 0; k < n; ++k)
        out.at(x, k, j) = tmp[x * n + k];
  }
  return out;
}

/// Euclidean transpose of grad_vector: (G^T Z)_k = Sum_j d_j^T Z_kj.
inline VectorField grad_vector_transpose(const GridDomain& g,
                                         const MatrixField& z) {
  const std::size_t n = g.dim();
  VectorField out(g);
  std::vector<double> col(g.node_count() * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t x = 0; x < g.node_count(); ++x)
      for (std::size_t k = 0; k < n; ++k) col[x * n + k] = z.at(x, k, j);
    axis_derivative_transpose(g, j, col, out.raw(), n);
  }
  return out;
}

/// Generalized curl of a vector field: the skew field with components
/// (curl v)_ij = d_i v_j - d_j v_i, equal to -2 skew(Dv).
inline SkewField curl_vector(const GridDomain& g, const VectorField& v) {
  const std::size_t n = g.dim();
  const std::size_t packed = PackedSkew::packed_size(n);
  SkewField out(g);
  std::vector<double> tmp(v.raw().size());
  for (std::size_t d = 0; d < n; ++d) {
    axis_derivative(g, d, v.raw(), tmp, n);
    for (std::size_t x = 0; x < g.node_count(); ++x) {
      double* o = out.raw().data() + x * packed;
      const double* t = tmp.data() + x * n;
      for (std::size_t j = d + 1; j < n; ++j)
        o[PackedSkew::packed_index(n, d, j)] += t[j];
      for (std::size_t i = 0; i < d; ++i)
        o[PackedSkew::packed_index(n, i, d)] -= t[i];
    }
  }
  return out;
}

/// Generalized Curl of a matrix field, row-wise: block k holds the curl of
/// row k, components (Curl P)_ijk = d_i P_kj - d_j P_ki.
inline CurlField curl_matrix(const GridDomain& g, const MatrixField& p) {
  const std::size_t n = g.dim();
  const std::size_t packed = PackedSkew::packed_size(n);
  CurlField out(g);
  std::vector<double> tmp(p.raw().size());
  for (std::size_t d = 0; d < n; ++d) {
    axis_derivative(g, d, p.raw(), tmp, n * n);
    for (std::size_t x = 0; x < g.node_count(); ++x)
      for (std::size_t k = 0; k < n; ++k) {
        double* o = out.raw().data() + (x * n + k) * packed;
        const double* t = tmp.data() + (x * n + k) * n;
        for (std::size_t j = d + 1; j < n; ++j)
          o[PackedSkew::packed_index(n, d, j)] += t[j];
        for (std::size_t i = 0; i < d; ++i)
          o[PackedSkew::packed_index(n, i, d)] -= t[i];
      }
  }
  return out;
}

/// Euclidean transpose of curl_matrix with respect to the packed layout.
inline MatrixField curl_matrix_transpose(const GridDomain& g,
                                         const CurlField& z) {
  const std::size_t n = g.dim();
  const std::size_t packed = PackedSkew::packed_size(n);
  MatrixField out(g);
  std::vector<double> gathered(g.node_count() * n * n);
  for (std::size_t d = 0; d < n; ++d) {
    std::fill(gathered.begin(), gathered.end(), 0.0);
    for (std::size_t x = 0; x < g.node_count(); ++x)
      for (std::size_t k = 0; k < n; ++k) {
        const double* zb = z.raw().data() + (x * n + k) * packed;
        double* gb = gathered.data() + (x * n + k) * n;
        for (std::size_t j = d + 1; j < n; ++j)
          gb[j] = zb[PackedSkew::packed_index(n, d, j)];
        for (std::size_t i = 0; i < d; ++i)
          gb[i] = -zb[PackedSkew::packed_index(n, i, d)];
      }
    axis_derivative_transpose(g, d, gathered, out.raw(), n * n);
  }
  return out;
}

/// Generalized divergence of a matrix field, row-wise:
/// (Div P)_k = Sum_j d_j P_kj.
inline VectorField div_matrix(const GridDomain& g, const MatrixField& p) {
  const std::size_t n = g.dim();
  VectorField out(g);
  std::vector<double> col(g.node_count() * n);
  std::vector<double> tmp(col.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t x = 0; x < g.node_count(); ++x)
      for (std::size_t k = 0; k < n; ++k) col[x * n + k] = p.at(x, k, j);
    axis_derivative(g, j, col, tmp, n);
    for (std::size_t i = 0; i < tmp.size(); ++i) out.raw()[i] += tmp[i];
  }
  return out;
}

/// Reconstructs the per-axis derivatives of a skew field from its Curl:
/// (d_d A)_ij = -(C_dij - C_dji + C_jid) / 2. Pointwise algebra; exact for
/// skew fields of polynomial degree matching the stencil order.
inline ThirdOrderField grad_skew_from_curl(const GridDomain& g,
                                           const CurlField& c) {
  const std::size_t n = g.dim();
  ThirdOrderField out(g);
  parallel_for(g.node_count(), [&](std::size_t x) {
    const ThirdOrderCross t = c.value(x);
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          out.at(x, d, PackedSkew::packed_index(n, i, j)) =
              -0.5 * crucial_combination(t, i, j, d);
  });
  return out;
}

}  // namespace kornlab
