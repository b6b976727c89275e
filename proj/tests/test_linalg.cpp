// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "equisolid/error.hpp"
#include "equisolid/linalg.hpp"
#include "equisolid/matrix_group.hpp"

using namespace equisolid;
using cyclo::parse_scalar;

namespace {

CycNum z(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

Mat random_mat(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) m(r, k) = CycNum(c(rng)) + CycNum(c(rng)) * z(3);
  return m;
}

}  // namespace

TEST(Linalg, DeterminantAndInverse) {
  Mat a{{1, 2}, {1, -1}};
  EXPECT_EQ(det(a), CycNum(-3));
  EXPECT_TRUE((a * inverse(a)).is_identity());
  Mat s{{1, 2}, {2, 4}};
  EXPECT_TRUE(det(s).is_zero());
  EXPECT_THROW(inverse(s), DivisionByZero);
}

TEST(Linalg, RandomInverses) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(rng, 3);
    if (det(m).is_zero()) continue;
    EXPECT_TRUE((m * inverse(m)).is_identity());
    EXPECT_EQ(det(m * m), det(m) * det(m));
  }
}

TEST(Linalg, KernelAndRank) {
  Mat m{{1, 1, 1}, {1, z(3), z(3, 2)}};
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(m * k[0]));
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(Mat(3, 3)), 0u);
  EXPECT_EQ(kernel(Mat::identity(3)).size(), 0u);
}

TEST(Linalg, IntersectSpans) {
  std::vector<Vec> a{{1, 0, 0}, {0, 1, 0}};
  std::vector<Vec> b{{0, 1, 0}, {0, 0, 1}};
  auto c = intersect_spans(a, b, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(canonical_scale(c[0]), (Vec{0, 1, 0}));
}

TEST(Linalg, CanonicalScale) {
  Vec v{0, CycNum(2) * z(4), 4};
  Vec c = canonical_scale(v);
  EXPECT_TRUE(c[1].is_one());
  EXPECT_EQ(c[2], -CycNum(2) * z(4));
  EXPECT_THROW(canonical_scale(Vec{0, 0}), Error);
}

TEST(MatrixGroup, ProjectiveCanonicalForm) {
  ProjMat a(Mat{{0, 2}, {2, 0}});
  ProjMat b(Mat{{0, 1}, {1, 0}});
  EXPECT_EQ(a, b);
  EXPECT_THROW(ProjMat(Mat{{1, 1}, {1, 1}}), Error);
}

TEST(MatrixGroup, ClosureOfTheExampleGroups) {
  Mat A{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Mat B{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  Mat C{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  auto g = close_projective({ProjMat(A), ProjMat(B), ProjMat(C)});
  EXPECT_EQ(g.order(), 24u);
  Mat M{{1, 0, 0}, {0, z(5), 0}, {0, 0, z(5, 4)}};
  Mat N{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  EXPECT_EQ(close_projective({ProjMat(M)}).order(), 5u);
  EXPECT_EQ(close_projective({ProjMat(M), ProjMat(N)}).order(), 10u);
}

TEST(MatrixGroup, CapIsReported) {
  Mat t{{1, 1}, {0, 1}};
  try {
    close_projective({ProjMat(t)}, 50);
    FAIL() << "expected cap error";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 50u);
    EXPECT_NE(std::string(e.what()).find("not closed within cap 50"), std::string::npos);
  }
}

TEST(MatrixGroup, LiftClosure) {
  Mat A{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Mat B{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  Mat C{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  auto lift = lift_closure({A, B, C});
  // brute-force oracle: signed permutation matrices generated here are all 48
  EXPECT_EQ(lift.order(), 48u);
  auto proj = close_projective({ProjMat(A), ProjMat(B), ProjMat(C)});
  std::vector<char> hit(proj.order(), 0);
  for (const auto& m : lift.elements) {
    auto k = proj.find(ProjMat(m));
    ASSERT_TRUE(k);
    hit[*k] = 1;
  }
  for (char h : hit) EXPECT_TRUE(h);
  EXPECT_EQ(lift_closure({Mat::identity(3)}).order(), 1u);
}

TEST(MatrixGroup, LiftOfFootnotePairNeedsRescaling) {
  Mat u{{1, 0}, {0, z(3)}};
  Mat v{{1, 2}, {1, -1}};
  auto lift = lift_closure({u, v});
  EXPECT_EQ(48u % lift.order(), 0u);
  auto proj = close_projective({ProjMat(u), ProjMat(v)});
  EXPECT_EQ(proj.order(), 12u);
  for (const auto& m : lift.elements) EXPECT_TRUE(cyclo::cyc_as_root_of_unity(det(m)));
  EXPECT_EQ(lift.order() % proj.order(), 0u);
}
