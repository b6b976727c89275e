// SPDX-License-Identifier: Apache-2.0
//
// Projective matrices and closures of finite matrix groups.

#ifndef EQUISOLID_MATRIX_GROUP_HPP_
#define EQUISOLID_MATRIX_GROUP_HPP_

#include <string>
#include <vector>

#include "equisolid/finite_group.hpp"
#include "equisolid/linalg.hpp"

namespace equisolid {

/// A class in PGL_n, stored with its first nonzero entry (row-major) equal to 1.
class ProjMat {
 public:
  ProjMat() = default;
  /// Throws if m is singular or not square.
  explicit ProjMat(const Mat& m);
  /// Skips the invertibility check (for products of checked values).
  static ProjMat trusted(const Mat& m);
  static ProjMat identity(std::size_t n) { return trusted(Mat::identity(n)); }

  const Mat& mat() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  ProjMat inverse() const;
  bool is_identity() const { return m_.is_identity(); }

  friend ProjMat operator*(const ProjMat& a, const ProjMat& b) { return trusted(a.m_ * b.m_); }
  friend bool operator==(const ProjMat& a, const ProjMat& b) { return a.m_ == b.m_; }
  friend bool operator!=(const ProjMat& a, const ProjMat& b) { return !(a == b); }
  std::size_t hash() const { return m_.hash(); }
  std::string str() const { return m_.str(); }

 private:
  Mat m_;
};

using ProjGroup = ConcreteGroup<ProjMat>;
using LinearGroup = ConcreteGroup<Mat>;

constexpr std::size_t kDefaultCap = 1024;

ProjGroup close_projective(const std::vector<ProjMat>& gens, std::size_t cap = kDefaultCap);
/// Closure under exact matrix equality; throws CapExceeded.
LinearGroup close_linear(const std::vector<Mat>& gens, std::size_t cap = kDefaultCap);

/// A finite linear group projecting onto the projective closure of gens.
/// Raw closure is tried first; otherwise every generator is scaled to
/// determinant 1 and the closure retried.
LinearGroup lift_closure(const std::vector<Mat>& gens, std::size_t cap = kDefaultCap);

/// Scalar multiple of m with determinant 1, if the root is constructible.
Mat unimodular_rescale(const Mat& m);

}  // namespace equisolid

#endif  // EQUISOLID_MATRIX_GROUP_HPP_
