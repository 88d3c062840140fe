// Copyright (c) the kornlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "kornlab/tensor.hpp"

namespace kornlab {

/// One of the 2n faces of the box: axis d, positive or negative end.
struct Face {
  std::size_t axis = 0;
  bool positive = true;

  friend bool operator==(const Face& a, const Face& b) {
    return a.axis == b.axis && a.positive == b.positive;
  }
};

/// Ordered set of box faces. Parsed from labels "+x1", "-x2", ... (1-based
/// axis numbers) or the word "all".
class FaceSet {
 public:
  FaceSet() = default;

  static FaceSet all(std::size_t dim) {
    FaceSet s;
    for (std::size_t d = 0; d < dim; ++d) {
      s.faces_.push_back({d, false});
      s.faces_.push_back({d, true});
    }
    return s;
  }

  static FaceSet parse(const std::string& text, std::size_t dim) {
    if (text == "all") return all(dim);
    FaceSet s;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      const std::string tok = text.substr(pos, comma - pos);
      pos = comma + 1;
      if (tok.empty()) continue;
      detail::require(tok.size() >= 3 && (tok[0] == '+' || tok[0] == '-') &&
                          tok[1] == 'x',
                      "face label must look like +x1 or -x2, got '" + tok + "'");
      const long axis = std::stol(tok.substr(2)) - 1;
      detail::require(axis >= 0 && static_cast<std::size_t>(axis) < dim,
                      "face label axis out of range: '" + tok + "'");
      s.add({static_cast<std::size_t>(axis), tok[0] == '+'});
    }
    return s;
  }

  void add(Face f) {
    if (!contains(f)) faces_.push_back(f);
  }

  bool contains(Face f) const {
    return std::find(faces_.begin(), faces_.end(), f) != faces_.end();
  }

  bool empty() const { return faces_.empty(); }
  std::size_t size() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }

  std::string to_string() const {
    std::string out;
    for (const Face& f : faces_) {
      if (!out.empty()) out += ',';
      out += f.positive ? '+' : '-';
      out += 'x';
      out += std::to_string(f.axis + 1);
    }
    return out;
  }

 private:
  std::vector<Face> faces_;
};

/// Axis-aligned box grid: tensor product of 1-D point sets with
/// trapezoidal quadrature. Nodes are enumerated lexicographically over the
/// multi-index, last axis fastest. Immutable after construction.
class GridDomain {
 public:
  GridDomain() = default;

  GridDomain(std::vector<double> extents, std::vector<std::size_t> points)
      : extents_(std::move(extents)), points_(std::move(points)) {
    detail::require(extents_.size() >= 2, "grid dimension must be >= 2");
    detail::require(extents_.size() == points_.size(),
                    "extents and points must have matching length");
    const std::size_t n = extents_.size();
    spacing_.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
      detail::require(points_[d] >= 3,
                      "resolution too low: need >= 3 points per axis");
      detail::require(extents_[d] > 0.0, "extents must be positive");
      spacing_[d] = extents_[d] / static_cast<double>(points_[d] - 1);
    }
    strides_.assign(n, 1);
    for (std::size_t d = n; d-- > 1;)
      strides_[d - 1] = strides_[d] * points_[d];
    node_count_ = strides_[0] * points_[0];

    weights_.resize(node_count_);
    for (std::size_t x = 0; x < node_count_; ++x) {
      double w = 1.0;
      for (std::size_t d = 0; d < n; ++d) w *= axis_weight(d, coord(x, d));
      weights_[x] = w;
    }
  }

  std::size_t dim() const { return extents_.size(); }
  std::size_t node_count() const { return node_count_; }
  const std::vector<double>& extents() const { return extents_; }
  const std::vector<std::size_t>& points() const { return points_; }
  const std::vector<double>& spacing() const { return spacing_; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

  /// i_d of the node's multi-index.
  std::size_t coord(std::size_t node, std::size_t axis) const {
    return (node / strides_[axis]) % points_[axis];
  }

  VecN position(std::size_t node) const {
    VecN x(dim());
    for (std::size_t d = 0; d < dim(); ++d)
      x[d] = static_cast<double>(coord(node, d)) * spacing_[d];
    return x;
  }

  /// 1-D trapezoidal weight along one axis (includes the spacing factor).
  double axis_weight(std::size_t axis, std::size_t i) const {
    const bool end = (i == 0 || i + 1 == points_[axis]);
    return spacing_[axis] * (end ? 0.5 : 1.0);
  }

  /// Volume quadrature weight of a node.
  double weight(std::size_t node) const { return weights_[node]; }
  const std::vector<double>& weights() const { return weights_; }

  double volume() const {
    double v = 1.0;
    for (double e : extents_) v *= e;
    return v;
  }

  bool on_boundary(std::size_t node) const {
    for (std::size_t d = 0; d < dim(); ++d) {
      const std::size_t i = coord(node, d);
      if (i == 0 || i + 1 == points_[d]) return true;
    }
    return false;
  }

  /// Faces the node lies on (empty for interior nodes).
  std::vector<Face> faces_of(std::size_t node) const {
    std::vector<Face> f;
    for (std::size_t d = 0; d < dim(); ++d) {
      const std::size_t i = coord(node, d);
      if (i == 0) f.push_back({d, false});
      if (i + 1 == points_[d]) f.push_back({d, true});
    }
    return f;
  }

 private:
  std::vector<double> extents_;
  std::vector<std::size_t> points_;
  std::vector<double> spacing_;
  std::vector<std::size_t> strides_;
  std::vector<double> weights_;
  std::size_t node_count_ = 0;
};

inline GridDomain build_grid(std::size_t dim, std::vector<double> extents,
                             std::vector<std::size_t> points) {
  detail::require(dim >= 2, "grid dimension must be >= 2");
  detail::require(extents.size() == dim && points.size() == dim,
                  "extents/points length must equal the dimension");
  return GridDomain(std::move(extents), std::move(points));
}

inline VecN face_normal(std::size_t dim, Face f) {
  VecN nu(dim, 0.0);
  nu[f.axis] = f.positive ? 1.0 : -1.0;
  return nu;
}

/// Boundary node with its outward normal data. Nodes on exactly one face
/// carry that face's normal and the canonical tangent frame; nodes on two
/// or more faces keep the full list of adjacent face normals instead of an
/// averaged pseudo-normal.
struct BoundaryFacet {
  enum class Class { face, edge_or_corner };

  std::size_t node = 0;
  Class facet_class = Class::face;
  std::vector<Face> faces;
  VecN outward_normal;               // face-class only
  std::vector<VecN> tangent_frame;   // face-class only, the n-1 axes != d
  std::vector<VecN> adjacent_normals;
};

inline std::vector<BoundaryFacet> classify_boundary(const GridDomain& g) {
  std::vector<BoundaryFacet> out;
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    auto faces = g.faces_of(x);
    if (faces.empty()) continue;
    BoundaryFacet f;
    f.node = x;
    f.faces = faces;
    for (const Face& face : faces)
      f.adjacent_normals.push_back(face_normal(g.dim(), face));
    if (faces.size() == 1) {
      f.facet_class = BoundaryFacet::Class::face;
      f.outward_normal = f.adjacent_normals.front();
      for (std::size_t m = 0; m < g.dim(); ++m)
        if (m != faces.front().axis)
          f.tangent_frame.push_back(unit_vector(g.dim(), m));
    } else {
      f.facet_class = BoundaryFacet::Class::edge_or_corner;
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// Nodes lying on a given face, in grid enumeration order.
inline std::vector<std::size_t> face_nodes(const GridDomain& g, Face f) {
  std::vector<std::size_t> nodes;
  const std::size_t fixed = f.positive ? g.points()[f.axis] - 1 : 0;
  for (std::size_t x = 0; x < g.node_count(); ++x)
    if (g.coord(x, f.axis) == fixed) nodes.push_back(x);
  return nodes;
}

/// Surface quadrature weight of a node within one face: the trapezoidal
/// product over the face's tangential axes. Edge nodes shared between
/// faces enter each face's sum with their own (halved) weights.
inline double face_weight(const GridDomain& g, Face f, std::size_t node) {
  double w = 1.0;
  for (std::size_t d = 0; d < g.dim(); ++d)
    if (d != f.axis) w *= g.axis_weight(d, g.coord(node, d));
  return w;
}

}  // namespace kornlab
