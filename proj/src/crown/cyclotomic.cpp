#include "crown/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace crown {

namespace {

using Poly = std::vector<Rat>;  // constant term first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Division by a monic divisor; returns quotient, leaves remainder in a.
Poly poly_divmod_monic(Poly& a, const Poly& d) {
  trim(a);
  if (a.size() < d.size()) return Poly{Rat(0)};
  Poly q(a.size() - d.size() + 1, Rat(0));
  for (size_t i = a.size(); i-- >= d.size();) {
    Rat f = a[i];
    if (f != 0) {
      q[i - d.size() + 1] = f;
      for (size_t j = 0; j < d.size(); ++j) a[i - d.size() + 1 + j] -= f * d[j];
    }
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return q;
}

Poly poly_mod_monic(Poly a, const Poly& d) {
  poly_divmod_monic(a, d);
  return a;
}

bool poly_is_zero(const Poly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

// Extended Euclid over Q[x]: returns (g, u) with u*a + v*m = g, g a nonzero
// constant when gcd(a, m) = 1 (m = Phi_N is irreducible over Q).
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly m) {
  Poly u0{Rat(1)}, u1{Rat(0)};
  trim(a);
  trim(m);
  while (!poly_is_zero(m)) {
    // Make m monic for the division helper, tracking the scale.
    Rat lead = m.back();
    Poly mm = m;
    for (auto& c : mm) c /= lead;
    Poly rem = a;
    Poly q = poly_divmod_monic(rem, mm);
    for (auto& c : q) c /= lead;  // a = q*m + rem
    // (a, m) <- (m, rem); (u0, u1) <- (u1, u0 - q*u1)
    Poly qu = poly_mul(q, u1);
    Poly nu = u0;
    if (nu.size() < qu.size()) nu.resize(qu.size(), Rat(0));
    for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    trim(nu);
    a = m;
    m = rem;
    u0 = u1;
    u1 = nu;
  }
  return {a, u0};
}

struct CycTable {
  long order = 1;
  long phi = 1;
  Poly modulus;                  // Phi_N, monic, degree phi
  std::vector<Poly> red;         // red[t] = x^{phi+t} mod Phi_N, t in [0, phi-2]
  std::vector<Poly> zeta_table;  // zeta_table[k] = x^k mod Phi_N, k in [0, N)
};

const CycTable& cyc_table(long order) {
  static std::mutex mu;
  static std::map<long, CycTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  if (order < 1) throw PrecondError("cyclotomic order must be positive");
  CycTable t;
  t.order = order;
  Poly phi_poly;
  {
    std::vector<Rat> p = cyclotomic_poly(order);
    phi_poly.assign(p.begin(), p.end());
  }
  t.modulus = phi_poly;
  t.phi = static_cast<long>(phi_poly.size()) - 1;
  for (long k = 0; k + 2 <= t.phi; ++k) {
    Poly x(static_cast<size_t>(t.phi + k) + 1, Rat(0));
    x.back() = 1;
    t.red.push_back(poly_mod_monic(std::move(x), t.modulus));
  }
  for (long k = 0; k < order; ++k) {
    Poly x(static_cast<size_t>(k) + 1, Rat(0));
    x.back() = 1;
    t.zeta_table.push_back(poly_mod_monic(std::move(x), t.modulus));
  }
  return cache.emplace(order, std::move(t)).first->second;
}

std::vector<Rat> padded(const Poly& p, long len) {
  std::vector<Rat> r(p.begin(), p.end());
  r.resize(static_cast<size_t>(len), Rat(0));
  return r;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rat> cyclotomic_poly(long n) {
  static std::mutex mu;
  static std::map<long, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n < 1) throw PrecondError("cyclotomic order must be positive");
  Poly result;
  if (n == 1) {
    result = Poly{Rat(-1), Rat(1)};
  } else {
    Poly num(static_cast<size_t>(n) + 1, Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;  // x^n - 1
    for (long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      Poly phi_d = cyclotomic_poly(d);
      num = poly_divmod_monic(num, phi_d);
    }
    result = num;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, result);
  return result;
}

CycScalar CycScalar::zero(long order) {
  const CycTable& t = cyc_table(order);
  return CycScalar(order, std::vector<Rat>(static_cast<size_t>(t.phi), Rat(0)));
}

CycScalar CycScalar::one(long order) { return of(Rat(1), order); }

CycScalar CycScalar::of(const Rat& r, long order) {
  CycScalar s = zero(order);
  s.c_[0] = r;
  s.c_[0].canonicalize();
  return s;
}

CycScalar CycScalar::of_int(long v, long order) { return of(Rat(v), order); }

CycScalar CycScalar::zeta(long order) { return zeta_pow(order, 1); }

CycScalar CycScalar::zeta_pow(long order, long k) {
  const CycTable& t = cyc_table(order);
  long kk = k % order;
  if (kk < 0) kk += order;
  return CycScalar(order, padded(t.zeta_table[static_cast<size_t>(kk)], t.phi));
}

CycScalar CycScalar::root_of_unity(long order, long num, long den) {
  if (den <= 0 || order % den != 0)
    throw PrecondError("root of unity of order " + std::to_string(den) +
                       " is not contained in Q(zeta_" + std::to_string(order) + ")");
  long num_mod = num % den;
  if (num_mod < 0) num_mod += den;
  return zeta_pow(order, num_mod * (order / den));
}

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycScalar::rational_part() const {
  if (!is_rational()) throw PrecondError("scalar is not rational");
  return c_[0];
}

CycScalar CycScalar::promote(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw PrecondError("cannot promote Q(zeta_" + std::to_string(order_) +
                       ") into Q(zeta_" + std::to_string(new_order) + ")");
  long step = new_order / order_;
  CycScalar r = zero(new_order);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    CycScalar term = zeta_pow(new_order, static_cast<long>(k) * step);
    for (auto& x : term.c_) x *= c_[k];
    r = r + term;
  }
  return r;
}

void CycScalar::match(CycScalar& a, CycScalar& b) {
  if (a.order_ == b.order_) return;
  long l = std::lcm(a.order_, b.order_);
  a = a.promote(l);
  b = b.promote(l);
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar a = *this, b = o;
  match(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycScalar CycScalar::operator-(const CycScalar& o) const { return *this + (-o); }

CycScalar CycScalar::operator*(const CycScalar& o) const {
  CycScalar a = *this, b = o;
  match(a, b);
  const CycTable& t = cyc_table(a.order_);
  size_t phi = static_cast<size_t>(t.phi);
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (size_t i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (size_t i = conv.size(); i-- > phi;) {
    if (conv[i] == 0) continue;
    const Poly& row = t.red[i - phi];
    for (size_t j = 0; j < row.size(); ++j) conv[j] += conv[i] * row[j];
    conv[i] = 0;
  }
  conv.resize(phi);
  return CycScalar(a.order_, std::move(conv));
}

CycScalar CycScalar::operator/(const CycScalar& o) const { return *this * o.inverse(); }

bool CycScalar::operator==(const CycScalar& o) const {
  CycScalar a = *this, b = o;
  match(a, b);
  return a.c_ == b.c_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw PrecondError("division by zero scalar");
  const CycTable& t = cyc_table(order_);
  Poly a(c_.begin(), c_.end());
  auto [g, u] = poly_half_ext_gcd(a, t.modulus);
  // g is a nonzero constant since Phi_N is irreducible over Q.
  Rat g0 = g[0];
  Poly inv = poly_mod_monic(u, t.modulus);
  for (auto& x : inv) x /= g0;
  return CycScalar(order_, padded(inv, t.phi));
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar base = *this;
  CycScalar acc = one(order_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<long> CycScalar::zeta_exponent() const {
  for (long s = 0; s < order_; ++s)
    if (*this == zeta_pow(order_, s)) return s;
  return std::nullopt;
}

bool CycScalar::lex_less(const CycScalar& a, const CycScalar& b) {
  CycScalar x = a, y = b;
  match(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

// Exact rational n-th roots: all q with q^n = r, each of the form +-|q|.
std::vector<Rat> rational_nth_roots(const Rat& r, long n) {
  std::vector<Rat> out;
  if (r == 0) {
    out.emplace_back(0);
    return out;
  }
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  bool neg = num < 0;
  mpz_class anum = abs(num);
  mpz_class rnum, rden;
  int exact_num = mpz_root(rnum.get_mpz_t(), anum.get_mpz_t(), static_cast<unsigned long>(n));
  int exact_den = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  if (!exact_num || !exact_den) return out;
  Rat mag(rnum, rden);
  mag.canonicalize();
  if (n % 2 == 0) {
    if (!neg) {
      out.push_back(mag);
      out.push_back(-mag);
    }
  } else {
    out.push_back(neg ? -mag : mag);
  }
  return out;
}

}  // namespace

CycScalar nth_root_cyclotomic(const CycScalar& c, long n) {
  if (n < 1) throw PrecondError("root exponent must be positive");
  if (n == 1 || c.is_zero()) return c;
  long N = c.order();
  std::optional<CycScalar> best;
  for (long s = 0; s < N; ++s) {
    CycScalar u = c * CycScalar::zeta_pow(N, -n * s);
    if (!u.is_rational()) continue;
    for (const Rat& q : rational_nth_roots(u.rational_part(), n)) {
      CycScalar cand = CycScalar::of(q, N) * CycScalar::zeta_pow(N, s);
      if (!(cand.pow(n) == c)) continue;
      if (!best || CycScalar::lex_less(*best, cand)) best = cand;
    }
  }
  if (!best)
    throw EnlargeCyclotomic("no " + std::to_string(n) +
                            "-th root found in Q(zeta_" + std::to_string(N) +
                            "); enlarge the cyclotomic order");
  return *best;
}

}  // namespace crown
