// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "equisolid/cyclo.hpp"
#include "equisolid/error.hpp"

using namespace equisolid;
using namespace equisolid::cyclo;

namespace {

CycNum z(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

CycNum random_value(std::mt19937& rng) {
  static const int conductors[] = {1, 3, 4, 5, 8, 12, 15, 7};
  std::uniform_int_distribution<int> pick(0, 7), coef(-4, 4), den(1, 3);
  const int n = conductors[pick(rng)];
  CycNum v;
  for (int k = 0; k < n; ++k) {
    int c = coef(rng);
    if (c == 0) continue;
    v += CycNum(c, den(rng)) * z(n, k);
  }
  return v;
}

}  // namespace

TEST(Cyclo, RootOfUnityExamples) {
  EXPECT_TRUE(z(1, 0).is_one());
  CycNum i = z(4, 1);
  EXPECT_EQ(i * i, CycNum(-1));
  CycNum m5 = z(5);
  CycNum s = 1 + m5 + m5.pow(2) + m5.pow(3) + m5.pow(4);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(z(5).conductor(), 5);
}

TEST(Cyclo, RootOfUnityOrder) {
  for (int n = 1; n <= 24; ++n)
    for (int k = 0; k < n; ++k) {
      CycNum x = z(n, k);
      int ord = n / std::gcd(n, k);
      EXPECT_TRUE(x.pow(ord).is_one()) << n << " " << k;
      for (int d = 1; d < ord; ++d)
        if (ord % d == 0) EXPECT_FALSE(x.pow(d).is_one());
    }
}

TEST(Cyclo, ConductorsAreCanonical) {
  EXPECT_EQ(z(2).conductor(), 1);
  EXPECT_EQ(z(2), CycNum(-1));
  EXPECT_EQ(z(6).conductor(), 3);
  EXPECT_EQ(z(6), -z(3, 2));
  EXPECT_EQ(z(12, 4), z(3));
  EXPECT_EQ(z(10), -z(5, 3));
  CycNum w = z(8) + z(8, 7);  // sqrt 2
  EXPECT_EQ(w.conductor(), 8);
  EXPECT_EQ(w * w, CycNum(2));
  CycNum real = z(15) + z(15, 14) + z(15, 4) + z(15, 11);
  EXPECT_LE(real.conductor(), 15);
  EXPECT_EQ((z(3) - z(3)).conductor(), 1);
}

TEST(Cyclo, ArithExamples) {
  EXPECT_TRUE(cyc_arith(z(3), z(3, 2), ArithOp::Mul).is_one());
  EXPECT_EQ(cyc_arith(z(4), z(4), ArithOp::Add), CycNum(2) * z(4));
  CycNum rel = 1 + z(5) + z(5, 2) + z(5, 3) + z(5, 4);
  EXPECT_EQ(cyc_arith(rel, 1, ArithOp::Sub), CycNum(-1));
  EXPECT_THROW(cyc_arith(1, 0, ArithOp::Div), DivisionByZero);
  EXPECT_THROW(z(7).pow(0) / (z(7) - z(7)), DivisionByZero);
}

TEST(Cyclo, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    CycNum a = random_value(rng), b = random_value(rng), c = random_value(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Cyclo, PromotionRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    CycNum a = random_value(rng);
    for (int mult : {2, 3, 4, 5}) {
      int m = a.conductor() * mult;
      if (m % 4 == 2) continue;
      EXPECT_EQ(CycNum::from_coeffs(m, a.promoted(m)), a);
    }
  }
}

TEST(Cyclo, GaloisAndConjugation) {
  EXPECT_EQ(z(5).conj(), z(5, 4));
  EXPECT_EQ(z(5).galois(2), z(5, 2));
  CycNum s = cyc_sqrt_rational(5);
  EXPECT_EQ(s.conj(), s);
  EXPECT_EQ(s.galois(2), -s);
}

TEST(Cyclo, SqrtExamples) {
  EXPECT_TRUE(cyc_sqrt_rational(1).is_one());
  EXPECT_EQ(cyc_sqrt_rational(-1), z(4));
  // independent oracle: 2 cos(pi/6)
  CycNum oracle = z(12) + z(12, 11);
  EXPECT_EQ(oracle * oracle, CycNum(3));
  EXPECT_EQ(cyc_sqrt_rational(3), oracle);
  EXPECT_EQ(cyc_sqrt_rational(2), z(8) + z(8, 7));
  EXPECT_EQ(cyc_sqrt_rational(mpq_class(9, 4)), CycNum(3, 2));
  CycNum m3 = cyc_sqrt_rational(-3);
  EXPECT_EQ(m3, z(3) - z(3, 2));
}

TEST(Cyclo, SqrtSquaresBackOnRandomRationals) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 12);
  int done = 0;
  while (done < 200) {
    int p = num(rng);
    if (p == 0) continue;
    Rat d(p, den(rng));
    d.canonicalize();
    CycNum s = cyc_sqrt_rational(d);
    ASSERT_EQ(s * s, CycNum(d)) << d.get_str();
    if (sgn(d) > 0) EXPECT_EQ(s.conj(), s);
    ++done;
  }
}

TEST(Cyclo, AsRootOfUnity) {
  auto a = cyc_as_root_of_unity(-1);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, std::make_pair(2, 1));
  auto b = cyc_as_root_of_unity(z(6, 2));
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, std::make_pair(3, 1));
  EXPECT_FALSE(cyc_as_root_of_unity(2));
  EXPECT_FALSE(cyc_as_root_of_unity(cyc_sqrt_rational(2)));
  auto c = cyc_as_root_of_unity(-z(5));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->first, 10);
  EXPECT_EQ(z(10, c->second), -z(5));
  auto one = cyc_as_root_of_unity(1);
  ASSERT_TRUE(one);
  EXPECT_EQ(*one, std::make_pair(1, 0));
}

TEST(Cyclo, Roots) {
  auto r = cyc_root(z(3), 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, z(3));
  auto c = cyc_root(CycNum(-8) * z(4), 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->pow(3), CycNum(-8) * z(4));
  auto q = cyc_root(CycNum(-3), 2);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q * *q, CycNum(-3));
  EXPECT_FALSE(cyc_root(CycNum(2), 3));
  EXPECT_FALSE(cyc_root(1 + z(5), 2));
  auto f = cyc_root(CycNum(4), 4);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->pow(4), CycNum(4));
}

TEST(Cyclo, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(totient(12), 4);
  EXPECT_EQ(totient(105), 48);
  EXPECT_EQ(cyclotomic_polynomial(105).size(), 49u);
}

TEST(Cyclo, ParseScalar) {
  EXPECT_EQ(parse_scalar("z5^2"), z(5, 2));
  EXPECT_EQ(parse_scalar("-1/2 + z3"), CycNum(-1, 2) + z(3));
  EXPECT_EQ(parse_scalar("i"), z(4));
  EXPECT_EQ(parse_scalar("(1+i)^2"), CycNum(2) * z(4));
  EXPECT_EQ(parse_scalar("z8^-1"), z(8, 7));
  EXPECT_EQ(parse_scalar(" 3 * -2 "), CycNum(-6));
  EXPECT_EQ(parse_scalar("-z3^2"), -z(3, 2));
}

TEST(Cyclo, ParseErrorsCarryPositions) {
  try {
    parse_scalar("z5^^");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_scalar(""), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("(1+2"), ParseError);
  EXPECT_THROW(parse_scalar("z"), ParseError);
  EXPECT_THROW(parse_scalar("2 x"), ParseError);
}

TEST(Cyclo, StrRoundTrips) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    CycNum a = random_value(rng);
    EXPECT_EQ(parse_scalar(a.str()), a) << a.str();
  }
}

TEST(Cyclo, HashMatchesEquality) {
  CycNum a = z(12, 4), b = z(3);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(std::hash<CycNum>{}(a), std::hash<CycNum>{}(b));
}
