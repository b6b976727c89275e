// SPDX-License-Identifier: Apache-2.0

#include "equisolid/linalg.hpp"

#include <sstream>

#include "equisolid/error.hpp"

namespace equisolid {

Mat::Mat(std::initializer_list<std::initializer_list<CycNum>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail("ragged row list");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) fail("ragged column list");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::scaled(const CycNum& s) const {
  Mat m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

Mat Mat::pow(long e) const {
  if (!square()) fail("power of a non-square matrix");
  if (e < 0) return inverse(*this).pow(-e);
  Mat result = identity(rows_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) fail("matrix shape mismatch in product");
  Mat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& y = b(k, j);
        if (y.is_zero()) continue;
        m(i, j) += x * y;
      }
    }
  return m;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) fail("matrix-vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("matrix shape mismatch in sum");
  Mat m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("matrix shape mismatch in difference");
  Mat m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

bool Mat::is_identity() const { return square() && *this == identity(rows_); }

bool Mat::is_scalar() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c) {
        if ((*this)(r, c) != (*this)(0, 0)) return false;
      } else if (!(*this)(r, c).is_zero()) {
        return false;
      }
    }
  return true;
}

std::size_t Mat::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& x : a_) h = h * 1000003u ^ x.hash();
  return h;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << (*this)(r, c).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    CycNum inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      CycNum f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

CycNum det(const Mat& in) {
  if (!in.square()) fail("determinant of a non-square matrix");
  Mat m = in;
  const std::size_t n = m.rows();
  CycNum d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return CycNum();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    CycNum inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      CycNum f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& in) {
  if (!in.square()) fail("inverse of a non-square matrix");
  const std::size_t n = in.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = in(r, c);
    aug(r, n + r) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DivisionByZero();
  Mat out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::vector<Vec> kernel(const Mat& in) {
  Mat m = in;
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> column_space(const Mat& m) {
  Mat t = m.transpose();
  auto piv = rref(t);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < piv.size(); ++i) basis.push_back(t.row(i));
  return basis;
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                 std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // solve sum x_i a_i - sum y_j b_j = 0
  Mat m(dim, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) m(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m(r, a.size() + j) = -b[j][r];
  std::vector<Vec> out;
  for (const auto& k : kernel(m)) {
    Vec v(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!k[i].is_zero()) v = add(v, scale(a[i], k[i]));
    out.push_back(v);
  }
  if (out.empty()) return out;
  return column_space(Mat::from_cols(out));
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec canonical_scale(Vec v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (v[i].is_one()) return v;
    CycNum inv = v[i].inverse();
    for (std::size_t j = i; j < v.size(); ++j)
      if (!v[j].is_zero()) v[j] *= inv;
    return v;
  }
  fail("zero vector has no projective normal form");
}

Vec add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec scale(const Vec& a, const CycNum& s) {
  Vec out = a;
  for (auto& x : out) x *= s;
  return out;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ":";
    s += v[i].str();
  }
  return s + ")";
}

std::size_t vec_hash(const Vec& v) {
  std::size_t h = v.size();
  for (const auto& x : v) h = h * 1000003u ^ x.hash();
  return h;
}

}  // namespace equisolid
