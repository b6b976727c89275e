// SPDX-License-Identifier: Apache-2.0

#include "equisolid/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "equisolid/error.hpp"

namespace equisolid::cyclo {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Per-conductor tables. pow[e] holds zeta_n^e in the power basis.
struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<std::vector<long>> pow;
  std::vector<int> primes;
};

// Data for recognising Q(zeta_d) inside Q(zeta_n) when n = p*d, p prime,
// p not dividing d.
struct SubfieldData {
  int d = 1;
  long galois_gen = 1;
  std::vector<int> pivots;           // phi(d) rows of the embedding
  std::vector<std::vector<Rat>> inv;  // inverse of the pivot block
  std::vector<std::vector<long>> embed;  // phi(n) x phi(d)
};

std::vector<long> poly_divide_exact(std::vector<long> num,
                                    const std::vector<long>& den) {
  // den monic; returns quotient of num / den.
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

class Tables {
 public:
  static Tables& instance() {
    static Tables t;
    return t;
  }

  const std::vector<long>& cyclotomic(int n) {
    {
      std::shared_lock lock(mu_);
      auto it = polys_.find(n);
      if (it != polys_.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) num = poly_divide_exact(num, cyclotomic(d));
    std::unique_lock lock(mu_);
    return polys_.emplace(n, std::move(num)).first->second;
  }

  const FieldData& field(int n) {
    {
      std::shared_lock lock(mu_);
      auto it = fields_.find(n);
      if (it != fields_.end()) return *it->second;
    }
    auto fd = std::make_unique<FieldData>();
    fd->n = n;
    const std::vector<long>& poly = cyclotomic(n);
    fd->phi = static_cast<int>(poly.size()) - 1;
    fd->primes = prime_divisors(n);
    const int phi = fd->phi;
    fd->pow.assign(n, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    for (int e = 0; e < n; ++e) {
      fd->pow[e] = cur;
      // multiply by zeta: shift up, reduce the top coefficient
      long top = cur[phi - 1];
      for (int k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      if (top != 0)
        for (int k = 0; k < phi; ++k) cur[k] -= top * poly[k];
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = fields_.emplace(n, std::move(fd));
    return *it->second;
  }

  const SubfieldData& subfield(int n, int p) {
    const long key = static_cast<long>(n) * 100003L + p;
    {
      std::shared_lock lock(mu_);
      auto it = subs_.find(key);
      if (it != subs_.end()) return *it->second;
    }
    const FieldData& big = field(n);
    const int d = n / p;
    const FieldData& small = field(d);
    auto sd = std::make_unique<SubfieldData>();
    sd->d = d;
    // generator of Gal(Q(zeta_n)/Q(zeta_d)): k = 1 mod d, k = g mod p
    int g = 2;
    if (p > 2) {
      for (g = 2; g < p; ++g) {
        bool prim = true;
        for (int q : prime_divisors(p - 1)) {
          long r = 1;
          for (int i = 0; i < (p - 1) / q; ++i) r = r * g % p;
          if (r == 1) {
            prim = false;
            break;
          }
        }
        if (prim) break;
      }
    } else {
      g = 1;
    }
    long k = 1;
    while (k % p != g % p) k += d;
    sd->galois_gen = k;
    sd->embed.assign(big.phi, std::vector<long>(small.phi, 0));
    for (int j = 0; j < small.phi; ++j) {
      const auto& col = big.pow[mod(static_cast<long>(j) * p, n)];
      for (int i = 0; i < big.phi; ++i) sd->embed[i][j] = col[i];
    }
    // choose pivot rows by elimination on the transpose
    std::vector<std::vector<Rat>> rows;
    std::vector<int> chosen;
    std::vector<std::vector<Rat>> basis;  // reduced copies for rank test
    std::vector<int> lead;
    for (int i = 0; i < big.phi && static_cast<int>(chosen.size()) < small.phi;
         ++i) {
      std::vector<Rat> v(small.phi);
      for (int j = 0; j < small.phi; ++j) v[j] = sd->embed[i][j];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (sgn(v[lead[b]]) == 0) continue;
        Rat f = v[lead[b]] / basis[b][lead[b]];
        for (int j = 0; j < small.phi; ++j) v[j] -= f * basis[b][j];
      }
      int l = -1;
      for (int j = 0; j < small.phi; ++j)
        if (sgn(v[j]) != 0) {
          l = j;
          break;
        }
      if (l < 0) continue;
      basis.push_back(v);
      lead.push_back(l);
      chosen.push_back(i);
    }
    if (static_cast<int>(chosen.size()) != small.phi)
      fail("internal: subfield embedding is not of full rank");
    sd->pivots = chosen;
    // invert the square block
    const int m = small.phi;
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(2 * m));
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < m; ++j) a[r][j] = sd->embed[chosen[r]][j];
      a[r][m + r] = 1;
    }
    for (int col = 0; col < m; ++col) {
      int piv = col;
      while (sgn(a[piv][col]) == 0) ++piv;
      std::swap(a[piv], a[col]);
      Rat f = 1 / a[col][col];
      for (auto& x : a[col]) x *= f;
      for (int r = 0; r < m; ++r) {
        if (r == col || sgn(a[r][col]) == 0) continue;
        Rat h = a[r][col];
        for (int j = 0; j < 2 * m; ++j) a[r][j] -= h * a[col][j];
      }
    }
    sd->inv.assign(m, std::vector<Rat>(m));
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < m; ++j) sd->inv[r][j] = a[r][m + j];
    std::unique_lock lock(mu_);
    auto [it, inserted] = subs_.emplace(key, std::move(sd));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<int, std::vector<long>> polys_;
  std::map<int, std::unique_ptr<FieldData>> fields_;
  std::map<long, std::unique_ptr<SubfieldData>> subs_;
};

// Reduces a length-n exponent vector to the power basis.
std::vector<Rat> reduce_exponents(const FieldData& fd, const std::vector<Rat>& acc) {
  std::vector<Rat> out(fd.phi);
  for (int e = 0; e < fd.n; ++e) {
    if (sgn(acc[e]) == 0) continue;
    if (e < fd.phi) {
      out[e] += acc[e];
      continue;
    }
    const auto& pw = fd.pow[e];
    for (int k = 0; k < fd.phi; ++k)
      if (pw[k] != 0) out[k] += acc[e] * pw[k];
  }
  return out;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

int totient(int n) {
  int r = n;
  for (int p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) fail("cyclotomic polynomial needs n >= 1");
  return Tables::instance().cyclotomic(n);
}

CycNum::CycNum(long num, long den) : n_(1), c_(1) {
  if (den == 0) throw DivisionByZero();
  c_[0] = Rat(num, den);
  c_[0].canonicalize();
}

CycNum CycNum::root_of_unity(int n, long k) {
  if (n < 1) fail("root of unity needs n >= 1");
  k = mod(k, n);
  if (n % 4 == 2) {
    // zeta_{2d} = -zeta_d^{(d+1)/2} for odd d
    const int d = n / 2;
    CycNum base = CycNum::root_of_unity(d, (d + 1) / 2);
    base = -base;
    return base.pow(k);
  }
  const FieldData& fd = Tables::instance().field(n);
  CycNum r;
  r.n_ = n;
  r.c_.assign(fd.phi, Rat(0));
  for (int j = 0; j < fd.phi; ++j) r.c_[j] = fd.pow[k][j];
  r.canonicalize();
  return r;
}

CycNum CycNum::from_coeffs(int n, std::vector<Rat> coeffs) {
  if (n < 1) fail("conductor must be positive");
  for (auto& q : coeffs) q.canonicalize();
  if (n % 4 == 2) {
    // rewrite through the odd half
    CycNum z = root_of_unity(n, 1);
    CycNum acc;
    CycNum zp(1);
    for (const auto& q : coeffs) {
      acc += CycNum(q) * zp;
      zp *= z;
    }
    return acc;
  }
  const FieldData& fd = Tables::instance().field(n);
  CycNum r;
  r.n_ = n;
  if (static_cast<int>(coeffs.size()) == fd.phi) {
    r.c_ = std::move(coeffs);
  } else if (static_cast<int>(coeffs.size()) == n) {
    r.c_ = reduce_exponents(fd, coeffs);
  } else {
    fail("coefficient vector must have length phi(n) or n");
  }
  r.canonicalize();
  return r;
}

const Rat& CycNum::rational() const {
  if (n_ != 1) fail("value " + str() + " is not rational");
  return c_[0];
}

std::vector<Rat> CycNum::promoted(int m) const {
  if (m % n_ != 0) fail("promotion target must be a multiple of the conductor");
  if (m == n_) return c_;
  const FieldData& fd = Tables::instance().field(m);
  std::vector<Rat> out(fd.phi);
  const long step = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const auto& pw = fd.pow[static_cast<long>(i) * step % m];
    for (int k = 0; k < fd.phi; ++k)
      if (pw[k] != 0) out[k] += c_[i] * pw[k];
  }
  return out;
}

void CycNum::canonicalize() {
  for (;;) {
    if (n_ == 1) {
      c_.resize(1);
      return;
    }
    bool rational = true;
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (sgn(c_[k]) != 0) {
        rational = false;
        break;
      }
    if (rational) {
      n_ = 1;
      c_.resize(1);
      return;
    }
    const FieldData& fd = Tables::instance().field(n_);
    bool descended = false;
    // p^2 | n: Phi_n(x) = Phi_{n/p}(x^p), so the subfield is spanned by
    // the basis powers divisible by p.
    for (int p : fd.primes) {
      if ((n_ / p) % p != 0) continue;
      bool inside = true;
      for (std::size_t k = 0; k < c_.size(); ++k)
        if (k % p != 0 && sgn(c_[k]) != 0) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::vector<Rat> y;
      y.reserve(c_.size() / p);
      for (std::size_t k = 0; k < c_.size(); k += p) y.push_back(c_[k]);
      n_ /= p;
      c_ = std::move(y);
      descended = true;
      break;
    }
    if (descended) continue;
    for (int p : fd.primes) {
      if ((n_ / p) % p == 0) continue;
      const int d = n_ / p;
      if (d % 4 == 2) continue;  // never a canonical conductor
      const SubfieldData& sd = Tables::instance().subfield(n_, p);
      if (p > 2 && galois(sd.galois_gen).c_ != c_) continue;
      const int m = static_cast<int>(sd.pivots.size());
      std::vector<Rat> y(m);
      for (int r = 0; r < m; ++r)
        for (int j = 0; j < m; ++j)
          if (sgn(sd.inv[r][j]) != 0) y[r] += sd.inv[r][j] * c_[sd.pivots[j]];
      bool ok = true;
      for (int i = 0; i < fd.phi && ok; ++i) {
        Rat s = 0;
        for (int j = 0; j < m; ++j)
          if (sd.embed[i][j] != 0) s += y[j] * sd.embed[i][j];
        ok = (s == c_[i]);
      }
      if (!ok) continue;
      n_ = d;
      c_ = std::move(y);
      descended = true;
      break;
    }
    if (!descended) return;
  }
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (n_ == o.n_) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  } else {
    const int m = lcm_int(n_, o.n_);
    std::vector<Rat> a = promoted(m);
    std::vector<Rat> b = o.promoted(m);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    n_ = m;
    c_ = std::move(a);
  }
  canonicalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.n_ == 1) {
    if (sgn(o.c_[0]) == 0) return *this = CycNum();
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    const Rat s = c_[0];
    *this = o;
    if (sgn(s) == 0) return *this = CycNum();
    for (auto& q : c_) q *= s;
    return *this;
  }
  const int m = lcm_int(n_, o.n_);
  const FieldData& fd = Tables::instance().field(m);
  std::vector<Rat> a = promoted(m);
  std::vector<Rat> b = o.promoted(m);
  std::vector<Rat> acc(m);
  for (int i = 0; i < fd.phi; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < fd.phi; ++j) {
      if (sgn(b[j]) == 0) continue;
      acc[(i + j) % m] += a[i] * b[j];
    }
  }
  n_ = m;
  c_ = reduce_exponents(fd, acc);
  canonicalize();
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) return CycNum(Rat(1) / c_[0]);
  // Solve (x * y = 1) with the multiplication matrix of x.
  const FieldData& fd = Tables::instance().field(n_);
  const int phi = fd.phi;
  std::vector<std::vector<Rat>> a(phi, std::vector<Rat>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    // column j: x * zeta^j
    std::vector<Rat> acc(n_);
    for (int i = 0; i < phi; ++i)
      if (sgn(c_[i]) != 0) acc[(i + j) % n_] += c_[i];
    std::vector<Rat> col = reduce_exponents(fd, acc);
    for (int i = 0; i < phi; ++i) a[i][j] = col[i];
  }
  a[0][phi] = 1;
  for (int col = 0; col < phi; ++col) {
    int piv = col;
    while (piv < phi && sgn(a[piv][col]) == 0) ++piv;
    if (piv == phi) throw DivisionByZero();
    std::swap(a[piv], a[col]);
    Rat f = 1 / a[col][col];
    for (auto& v : a[col]) v *= f;
    for (int r = 0; r < phi; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rat h = a[r][col];
      for (int j = col; j <= phi; ++j) a[r][j] -= h * a[col][j];
    }
  }
  CycNum r;
  r.n_ = n_;
  r.c_.resize(phi);
  for (int i = 0; i < phi; ++i) r.c_[i] = a[i][phi];
  r.canonicalize();
  return r;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNum CycNum::galois(long k) const {
  if (n_ == 1) return *this;
  if (std::gcd(mod(k, n_), static_cast<long>(n_)) != 1)
    fail("galois exponent must be coprime to the conductor");
  const FieldData& fd = Tables::instance().field(n_);
  std::vector<Rat> acc(n_);
  for (int i = 0; i < fd.phi; ++i)
    if (sgn(c_[i]) != 0) acc[mod(static_cast<long>(i) * k, n_)] += c_[i];
  CycNum r;
  r.n_ = n_;
  r.c_ = reduce_exponents(fd, acc);
  return r;  // same conductor, already canonical
}

bool structural_less(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t CycNum::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& q : c_) {
    std::size_t a = mpz_fdiv_ui(q.get_num_mpz_t(), 4294967291UL);
    if (sgn(q) < 0) a = ~a;
    std::size_t b = mpz_fdiv_ui(q.get_den_mpz_t(), 4294967279UL);
    h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycNum::str() const {
  if (n_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rat& q = c_[k];
    if (sgn(q) == 0) continue;
    Rat a = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    if (n_ == 4)
      os << "i";
    else
      os << "z" << n_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return a / b;
  }
  fail("unknown arithmetic operation");
}

CycNum cyc_sqrt_rational(const Rat& d_in) {
  Rat d = d_in;
  d.canonicalize();
  if (sgn(d) == 0) fail("square root of zero requested");
  // sqrt(p/q) = sqrt(p*q)/q
  Int m = abs(d.get_num()) * d.get_den();
  Int square = 1;
  Int free = 1;
  for (Int p = 2; p * p <= m; ++p) {
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) free *= p;
  }
  free *= m;
  Rat scale(square, d.get_den());
  scale.canonicalize();
  Int sf = sgn(d) < 0 ? Int(-free) : free;
  if (sf == 1) return CycNum(scale);
  // fundamental discriminant of Q(sqrt(sf))
  Int rem = sf % 4;
  if (rem < 0) rem += 4;
  Int disc = (rem == 1) ? sf : Int(4 * sf);
  Int absd = abs(disc);
  if (!absd.fits_sint_p() || absd > 100000)
    fail("square root needs conductor " + absd.get_str() + ", too large");
  const int n = static_cast<int>(absd.get_si());
  // Gauss sum of the Kronecker character: sqrt(disc) (principal branch)
  std::vector<Rat> acc(n);
  for (int a = 1; a < n; ++a) {
    int chi = mpz_kronecker_si(disc.get_mpz_t(), a);
    if (chi != 0) acc[a] = chi;
  }
  CycNum g = CycNum::from_coeffs(n, acc);
  if (disc != sf) g *= CycNum(1, 2);
  return g * CycNum(scale);
}

std::optional<std::pair<int, int>> cyc_as_root_of_unity(const CycNum& a) {
  if (a.is_zero()) return std::nullopt;
  if (!(a * a.conj()).is_one()) return std::nullopt;
  const int n = a.conductor();
  const int big = (n % 2 == 1) ? 2 * n : n;
  for (int k = 0; k < big; ++k) {
    if (CycNum::root_of_unity(big, k) == a) {
      const int g = std::gcd(k, big);
      if (k == 0) return std::make_pair(1, 0);
      return std::make_pair(big / g, k / g);
    }
  }
  return std::nullopt;
}

namespace {

// Exact rational k-th root, if it exists.
std::optional<Rat> rational_root(const Rat& q, int k) {
  if (sgn(q) < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = rational_root(-q, k);
    if (!r) return std::nullopt;
    return Rat(-*r);
  }
  Int num, den;
  if (!mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), k)) return std::nullopt;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<CycNum> cyc_root(const CycNum& x, int k) {
  if (k < 1) fail("root degree must be positive");
  if (x.is_zero()) return CycNum();
  if (k == 1) return x;
  // |x|^2 must be a rational square so that x = q * (root of unity)
  CycNum norm2 = x * x.conj();
  if (!norm2.is_rational()) return std::nullopt;
  auto q = rational_root(norm2.rational(), 2);
  if (!q) return std::nullopt;
  CycNum unit = x / CycNum(*q);
  auto ru = cyc_as_root_of_unity(unit);
  if (!ru) return std::nullopt;
  CycNum mag;
  if (k == 2) {
    mag = cyc_sqrt_rational(*q);
  } else {
    auto r = rational_root(*q, k);
    if (!r) {
      if (k % 2 == 0) {
        auto half = cyc_root(CycNum(*q), k / 2);
        if (!half) return std::nullopt;
        auto s = cyc_root(*half, 2);
        if (!s) return std::nullopt;
        mag = *s;
      } else {
        return std::nullopt;
      }
    } else {
      mag = CycNum(*r);
    }
  }
  return mag * CycNum::root_of_unity(ru->first * k, ru->second);
}

// ---- scalar grammar ----

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  CycNum parse() {
    CycNum v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool digit_here() {
    skip();
    return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9';
  }
  Int digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  CycNum expr() {
    CycNum v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  CycNum term() {
    CycNum v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        CycNum d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }
  CycNum unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }
  CycNum power() {
    CycNum base = atom();
    if (!peek('^')) return base;
    ++pos_;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    if (!digit_here()) throw ParseError("expected integer exponent", pos_);
    std::size_t at = pos_;
    Int e = digits();
    if (!e.fits_slong_p() || e > 100000)
      throw ParseError("exponent too large", at);
    long ev = e.get_si();
    if (neg && base.is_zero()) throw ParseError("zero to a negative power", at);
    return base.pow(neg ? -ev : ev);
  }
  CycNum atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CycNum v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (c == 'i') {
      ++pos_;
      return CycNum::root_of_unity(4, 1);
    }
    if (c == 'z') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9')
        throw ParseError("expected conductor after 'z'", pos_);
      std::size_t at = pos_;
      Int n = digits();
      if (n < 1 || n > 10000) throw ParseError("conductor out of range", at);
      return CycNum::root_of_unity(static_cast<int>(n.get_si()), 1);
    }
    if (c >= '0' && c <= '9') return CycNum(Rat(digits()));
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace

CycNum parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace equisolid::cyclo
