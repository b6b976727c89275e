// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in cyclotomic fields Q(zeta_n).

#ifndef EQUISOLID_CYCLO_HPP_
#define EQUISOLID_CYCLO_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equisolid::cyclo {

using Rat = mpq_class;
using Int = mpz_class;

/// An element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}.
///
/// Values are always stored at their minimal conductor, so two values are
/// equal exactly when their conductors and coefficient vectors coincide. A
/// rational number has conductor 1. Conductors are never 2 mod 4.
class CycNum {
 public:
  CycNum() : n_(1), c_(1) {}
  CycNum(long v) : n_(1), c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rat& q) : n_(1), c_{q} {  // NOLINT(google-explicit-constructor)
    c_[0].canonicalize();
  }
  CycNum(long num, long den);

  /// zeta_n^k, canonical.
  static CycNum root_of_unity(int n, long k);

  /// Builds a value of conductor n from power-basis coefficients (length
  /// phi(n), or length n in which case the vector is reduced first).
  static CycNum from_coeffs(int n, std::vector<Rat> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }
  bool is_one() const { return n_ == 1 && c_[0] == 1; }
  bool is_rational() const { return n_ == 1; }
  /// Throws if the value is not rational.
  const Rat& rational() const;

  /// Coefficients of this value written in Q(zeta_m), n | m.
  std::vector<Rat> promoted(int m) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inverse() const;
  CycNum pow(long e) const;

  /// Galois automorphism zeta -> zeta^k (gcd(k, conductor) = 1).
  CycNum galois(long k) const;
  /// Complex conjugation.
  CycNum conj() const { return galois(-1); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  /// Total order on canonical forms (not a field order).
  friend bool structural_less(const CycNum& a, const CycNum& b);

  std::size_t hash() const;

  /// Renders in the scalar grammar accepted by parse_scalar.
  std::string str() const;

 private:
  int n_;
  std::vector<Rat> c_;

  void canonicalize();
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic; division by zero throws DivisionByZero.
CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op);

inline CycNum cyc_root_of_unity(int n, long k) {
  return CycNum::root_of_unity(n, k);
}

/// A square root of a nonzero rational inside a cyclotomic field, built from
/// quadratic Gauss sums. For d > 0 the positive real root is returned.
CycNum cyc_sqrt_rational(const Rat& d);

/// If a is a root of unity, the minimal (order, exponent) with a = zeta_order^k.
std::optional<std::pair<int, int>> cyc_as_root_of_unity(const CycNum& a);

/// A k-th root of x for x = (rational) * (root of unity), when one exists in
/// a cyclotomic field with the available constructions (square roots of
/// rationals, exact rational k-th roots). Empty otherwise.
std::optional<CycNum> cyc_root(const CycNum& x, int k);

/// Parses the scalar grammar: integers, p/q, i, z<n>, ^ (integer exponent),
/// *, /, +, -, parentheses. Throws ParseError with the offending position.
CycNum parse_scalar(std::string_view text);

/// Euler's totient.
int totient(int n);
/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int n);

}  // namespace equisolid::cyclo

template <>
struct std::hash<equisolid::cyclo::CycNum> {
  std::size_t operator()(const equisolid::cyclo::CycNum& v) const noexcept {
    return v.hash();
  }
};

#endif  // EQUISOLID_CYCLO_HPP_
