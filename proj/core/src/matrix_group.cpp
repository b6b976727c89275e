// SPDX-License-Identifier: Apache-2.0

#include "equisolid/matrix_group.hpp"

namespace equisolid {

namespace {

Mat normalize(const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const CycNum& x = m(r, c);
      if (x.is_zero()) continue;
      if (x.is_one()) return m;
      return m.scaled(x.inverse());
    }
  fail("zero matrix is not projective");
}

}  // namespace

ProjMat::ProjMat(const Mat& m) {
  if (!m.square() || m.rows() == 0) fail("projective matrix must be square");
  if (det(m).is_zero()) fail("singular matrix " + m.str());
  m_ = normalize(m);
}

ProjMat ProjMat::trusted(const Mat& m) {
  ProjMat p;
  p.m_ = normalize(m);
  return p;
}

ProjMat ProjMat::inverse() const { return trusted(equisolid::inverse(m_)); }

ProjGroup close_projective(const std::vector<ProjMat>& gens, std::size_t cap) {
  if (gens.empty()) fail("closure needs at least one generator");
  return close_group<ProjMat>(
      ProjMat::identity(gens[0].dim()), gens,
      [](const ProjMat& a, const ProjMat& b) { return a * b; },
      [](const ProjMat& a) { return a.hash(); },
      [](const ProjMat& a, const ProjMat& b) { return a == b; }, cap);
}

LinearGroup close_linear(const std::vector<Mat>& gens, std::size_t cap) {
  if (gens.empty()) fail("closure needs at least one generator");
  return close_group<Mat>(
      Mat::identity(gens[0].rows()), gens, [](const Mat& a, const Mat& b) { return a * b; },
      [](const Mat& a) { return a.hash(); }, [](const Mat& a, const Mat& b) { return a == b; },
      cap);
}

Mat unimodular_rescale(const Mat& m) {
  const CycNum d = det(m);
  if (d.is_zero()) fail("singular matrix " + m.str());
  auto root = cyclo::cyc_root(d, static_cast<int>(m.rows()));
  if (!root) fail("cannot extract a root of the determinant " + d.str());
  return m.scaled(root->inverse());
}

LinearGroup lift_closure(const std::vector<Mat>& gens, std::size_t cap) {
  if (gens.empty()) fail("closure needs at least one generator");
  bool unit_dets = true;
  for (const auto& g : gens) {
    const CycNum d = det(g);
    if (d.is_zero()) fail("singular matrix " + g.str());
    if (!cyclo::cyc_as_root_of_unity(d)) unit_dets = false;
  }
  if (unit_dets) {
    try {
      return close_linear(gens, cap);
    } catch (const CapExceeded&) {
    }
  }
  std::vector<Mat> scaled;
  for (const auto& g : gens) scaled.push_back(unimodular_rescale(g));
  try {
    return close_linear(scaled, cap);
  } catch (const CapExceeded&) {
    fail("lift does not close after rescaling: not closed within cap " + std::to_string(cap));
  }
}

}  // namespace equisolid
