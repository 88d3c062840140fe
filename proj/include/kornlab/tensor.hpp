// Copyright (c) the kornlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kornlab {

/// Vector in R^n with runtime dimension.
using VecN = std::vector<double>;

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

inline double dot(const VecN& a, const VecN& b) {
  detail::require(a.size() == b.size(), "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const VecN& a) { return std::sqrt(dot(a, a)); }

inline VecN unit_vector(std::size_t n, std::size_t k) {
  VecN e(n, 0.0);
  e.at(k) = 1.0;
  return e;
}

/// Dense square matrix with runtime dimension n >= 2, row-major storage.
class MatN {
 public:
  MatN() = default;
  explicit MatN(std::size_t n) : n_(n), e_(n * n, 0.0) {
    detail::require(n >= 2, "MatN: dimension must be >= 2");
  }

  static MatN identity(std::size_t n) {
    MatN m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Dyadic product a (x) b.
  static MatN outer(const VecN& a, const VecN& b) {
    detail::require(a.size() == b.size(), "outer: dimension mismatch");
    MatN m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
  }

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  VecN row(std::size_t k) const {
    VecN r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = e_[k * n_ + j];
    return r;
  }

  MatN transposed() const {
    MatN t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  MatN& operator+=(const MatN& o) {
    detail::require(n_ == o.n_, "MatN +=: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  MatN& operator-=(const MatN& o) {
    detail::require(n_ == o.n_, "MatN -=: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  MatN& operator*=(double c) {
    for (auto& v : e_) v *= c;
    return *this;
  }

  friend MatN operator+(MatN a, const MatN& b) { return a += b; }
  friend MatN operator-(MatN a, const MatN& b) { return a -= b; }
  friend MatN operator*(double c, MatN a) { return a *= c; }

 private:
  std::size_t n_ = 0;
  std::vector<double> e_;
};

inline MatN sym(const MatN& p) {
  MatN s(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      s(i, j) = 0.5 * (p(i, j) + p(j, i));
  return s;
}

inline MatN skew(const MatN& p) {
  MatN s(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      s(i, j) = 0.5 * (p(i, j) - p(j, i));
  return s;
}

inline double inner(const MatN& a, const MatN& b) {
  detail::require(a.dim() == b.dim(), "inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * b(i, j);
  return s;
}

inline double frobenius_norm(const MatN& a) { return std::sqrt(inner(a, a)); }

inline VecN apply(const MatN& a, const VecN& x) {
  detail::require(a.dim() == x.size(), "apply: dimension mismatch");
  VecN y(a.dim(), 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

/// Element of so(n): a skew-symmetric matrix stored as its strict upper
/// triangle, lexicographic over (i, j) with i < j. Component m holds A_ij.
class PackedSkew {
 public:
  PackedSkew() = default;
  explicit PackedSkew(std::size_t n)
      : n_(n), c_(packed_size(n), 0.0) {
    detail::require(n >= 2, "PackedSkew: dimension must be >= 2");
  }

  static std::size_t packed_size(std::size_t n) { return n * (n - 1) / 2; }

  /// Position of A_ij (i < j) in the packed layout.
  static std::size_t packed_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return c_.size(); }

  double& packed(std::size_t m) { return c_[m]; }
  double packed(std::size_t m) const { return c_[m]; }

  /// A_ij for arbitrary i, j; sign and diagonal handled by the packing.
  double entry(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    if (i < j) return c_[packed_index(n_, i, j)];
    return -c_[packed_index(n_, j, i)];
  }

  double& upper(std::size_t i, std::size_t j) {
    return c_[packed_index(n_, i, j)];
  }

  PackedSkew& operator+=(const PackedSkew& o) {
    detail::require(n_ == o.n_, "PackedSkew +=: dimension mismatch");
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
    return *this;
  }
  PackedSkew& operator-=(const PackedSkew& o) {
    detail::require(n_ == o.n_, "PackedSkew -=: dimension mismatch");
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] -= o.c_[m];
    return *this;
  }
  PackedSkew& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend PackedSkew operator+(PackedSkew a, const PackedSkew& b) { return a += b; }
  friend PackedSkew operator-(PackedSkew a, const PackedSkew& b) { return a -= b; }
  friend PackedSkew operator*(double s, PackedSkew a) { return a *= s; }

 private:
  std::size_t n_ = 0;
  std::vector<double> c_;
};

/// Expands the packing into the full skew-symmetric matrix.
inline MatN unpack(const PackedSkew& a) {
  MatN m(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const double v = a.entry(i, j);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

/// Reads the strict upper triangle of an exactly skew-symmetric matrix.
/// pack_exact(unpack(a)) reproduces a bit for bit.
inline PackedSkew pack_exact(const MatN& m) {
  PackedSkew a(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) a.upper(i, j) = m(i, j);
  return a;
}

/// Packs the skew-symmetric part (M - M^T)/2 of an arbitrary matrix.
inline PackedSkew pack_skew_part(const MatN& m) {
  PackedSkew a(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      a.upper(i, j) = 0.5 * (m(i, j) - m(j, i));
  return a;
}

inline double inner(const PackedSkew& a, const PackedSkew& b) {
  detail::require(a.dim() == b.dim(), "inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) s += a.packed(m) * b.packed(m);
  return 2.0 * s;  // both triangles of the full matrix
}

inline double frobenius_norm(const PackedSkew& a) {
  return std::sqrt(inner(a, a));
}

/// Pairing of a skew matrix with an arbitrary matrix, Sum_ij A_ij Q_ij.
inline double inner(const PackedSkew& a, const MatN& q) {
  detail::require(a.dim() == q.dim(), "inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      s += a.entry(i, j) * (q(i, j) - q(j, i));
  return s;
}

/// Third-order tensor T_ijk antisymmetric in (i, j), stored as n packed
/// skew blocks; block k collects the (i, j) plane for row index k. This is
/// the value type of the cross product of a matrix with a vector and of
/// the generalized Curl.
class ThirdOrderCross {
 public:
  ThirdOrderCross() = default;
  explicit ThirdOrderCross(std::size_t n)
      : n_(n), blocks_(n, PackedSkew(n)) {}

  std::size_t dim() const { return n_; }

  PackedSkew& block(std::size_t k) { return blocks_.at(k); }
  const PackedSkew& block(std::size_t k) const { return blocks_.at(k); }

  /// T_ijk with full index freedom (antisymmetry in i, j applied).
  double entry(std::size_t i, std::size_t j, std::size_t k) const {
    return blocks_.at(k).entry(i, j);
  }

 private:
  std::size_t n_ = 0;
  std::vector<PackedSkew> blocks_;
};

inline double frobenius_norm(const ThirdOrderCross& t) {
  double s = 0.0;
  for (std::size_t k = 0; k < t.dim(); ++k)
    for (std::size_t m = 0; m < t.block(k).size(); ++m) {
      const double v = t.block(k).packed(m);
      s += v * v;
    }
  return std::sqrt(2.0 * s);
}

/// Generalized cross product of two vectors: the skew matrix
/// a (x) b - b (x) a, with components a_i b_j - a_j b_i.
inline PackedSkew generalized_cross(const VecN& a, const VecN& b) {
  detail::require(a.size() == b.size(),
                  "generalized_cross: dimension mismatch");
  detail::require(a.size() >= 2, "generalized_cross: dimension must be >= 2");
  PackedSkew r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      r.upper(i, j) = a[i] * b[j] - a[j] * b[i];
  return r;
}

/// axl: so(3) -> R^3, fixed by A b = axl(A) x b for every A in so(3).
/// Componentwise this reads axl(A) = (-A_23, A_13, -A_12) in 1-based
/// indices; the convention is pinned by the defining identity.
inline VecN axl(const PackedSkew& a) {
  detail::require(a.dim() == 3, "axl: defined for so(3) only");
  return VecN{-a.entry(1, 2), a.entry(0, 2), -a.entry(0, 1)};
}

/// Classical cross product at n = 3, recovered as -axl(a x_ b).
inline VecN axl_cross_compat(const VecN& a, const VecN& b) {
  detail::require(a.size() == 3 && b.size() == 3,
                  "axl_cross_compat: requires n = 3");
  VecN v = axl(generalized_cross(a, b));
  for (auto& c : v) c = -c;
  return v;
}

/// Row-wise cross product of a matrix with a vector:
/// (P x_ b)_ijk = P_ki b_j - P_kj b_i; block k is row_k(P) x_ b.
inline ThirdOrderCross matrix_cross(const MatN& p, const VecN& b) {
  detail::require(p.dim() == b.size(), "matrix_cross: dimension mismatch");
  ThirdOrderCross t(p.dim());
  for (std::size_t k = 0; k < p.dim(); ++k)
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = i + 1; j < p.dim(); ++j)
        t.block(k).upper(i, j) = p(k, i) * b[j] - p(k, j) * b[i];
  return t;
}

/// The combination T_kij - T_kji + T_jik. When T = A x_ b with A skew,
/// it collapses to 2 A_ij b_k, which is what makes the packing invertible.
inline double crucial_combination(const ThirdOrderCross& t, std::size_t i,
                                  std::size_t j, std::size_t k) {
  detail::require(i < t.dim() && j < t.dim() && k < t.dim(),
                  "crucial_combination: index out of range");
  return t.entry(k, i, j) - t.entry(k, j, i) + t.entry(j, i, k);
}

/// Inverts T = A x_ b back to A, dividing by the largest-magnitude
/// component of b to keep the amplification minimal. The identity holds
/// for every k with b_k != 0; the pivot choice is ours.
inline PackedSkew recover_skew(const ThirdOrderCross& t, const VecN& b) {
  detail::require(t.dim() == b.size(), "recover_skew: dimension mismatch");
  std::size_t pivot = 0;
  double best = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (std::abs(b[k]) > best) {
      best = std::abs(b[k]);
      pivot = k;
    }
  detail::require(best > 0.0, "recover_skew: degenerate input b = 0");
  PackedSkew a(t.dim());
  const double inv = 1.0 / (2.0 * b[pivot]);
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      a.upper(i, j) = crucial_combination(t, i, j, pivot) * inv;
  return a;
}

/// True iff the generalized cross product vanishes relative to the input
/// scales; zero vectors count as parallel.
inline bool is_parallel(const VecN& a, const VecN& b, double tol) {
  detail::require(a.size() == b.size(), "is_parallel: dimension mismatch");
  return frobenius_norm(generalized_cross(a, b)) <= tol * norm(a) * norm(b);
}

enum class SkewRankCheck { zero, nonzero_violation };

/// Checks the reduction behind the pointwise trace equivalence: if every
/// row of a skew matrix is parallel to nu then rank A <= 1, and since the
/// rank of a skew-symmetric matrix is even, A = 0 (within tol).
inline SkewRankCheck skew_rank_bound(const PackedSkew& a, const VecN& nu,
                                     double tol) {
  detail::require(a.dim() == nu.size(), "skew_rank_bound: dimension mismatch");
  detail::require(norm(nu) > 0.0, "skew_rank_bound: nu must be nonzero");
  const MatN m = unpack(a);
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!is_parallel(m.row(k), nu, tol)) return SkewRankCheck::nonzero_violation;
  return SkewRankCheck::zero;
}

}  // namespace kornlab
