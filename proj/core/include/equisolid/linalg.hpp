// SPDX-License-Identifier: Apache-2.0
//
// Dense exact linear algebra over cyclotomic numbers.

#ifndef EQUISOLID_LINALG_HPP_
#define EQUISOLID_LINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "equisolid/cyclo.hpp"

namespace equisolid {

using cyclo::CycNum;
using Vec = std::vector<CycNum>;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<CycNum>> rows);
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Mat transpose() const;
  Mat scaled(const CycNum& s) const;
  Mat pow(long e) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  bool is_identity() const;
  bool is_scalar() const;
  std::size_t hash() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> a_;
};

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
CycNum det(const Mat& m);
/// Throws DivisionByZero for singular input.
Mat inverse(const Mat& m);
/// Basis of {v : m v = 0}.
std::vector<Vec> kernel(const Mat& m);
/// Basis of the column space, in reduced form.
std::vector<Vec> column_space(const Mat& m);
/// Basis of the intersection of two subspaces given by spanning sets.
std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                 std::size_t dim);

bool is_zero(const Vec& v);
/// Projective normal form: first nonzero entry becomes 1.
Vec canonical_scale(Vec v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const CycNum& s);
std::string vec_str(const Vec& v);
std::size_t vec_hash(const Vec& v);

}  // namespace equisolid

#endif  // EQUISOLID_LINALG_HPP_
