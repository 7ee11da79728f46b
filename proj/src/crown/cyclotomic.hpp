#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "crown/errors.hpp"

namespace crown {

using Rat = mpq_class;

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, constant term first, monic.
std::vector<Rat> cyclotomic_poly(long n);

// Element of Q(zeta_N), stored as a polynomial in zeta_N reduced mod Phi_N.
// The coefficient vector always has length phi(N).
class CycScalar {
 public:
  CycScalar() : order_(1), c_(1, Rat(0)) {}

  static CycScalar zero(long order);
  static CycScalar one(long order);
  static CycScalar of(const Rat& r, long order);
  static CycScalar of_int(long v, long order);
  static CycScalar zeta(long order);
  // zeta_order^k for any integer k.
  static CycScalar zeta_pow(long order, long k);
  // zeta_den^num as an element of Q(zeta_order); requires den | order.
  static CycScalar root_of_unity(long order, long num, long den);

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // pre: is_rational()

  // Reinterpret inside Q(zeta_new_order); requires order() | new_order.
  CycScalar promote(long new_order) const;

  CycScalar operator-() const;
  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar operator/(const CycScalar& o) const;
  bool operator==(const CycScalar& o) const;
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  CycScalar inverse() const;  // pre: nonzero
  CycScalar pow(long e) const;

  // If *this equals zeta_order^s for some s, return s in [0, order).
  std::optional<long> zeta_exponent() const;

  // Deterministic total order on same-order scalars (coefficient-wise).
  static bool lex_less(const CycScalar& a, const CycScalar& b);

 private:
  CycScalar(long order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
  static void match(CycScalar& a, CycScalar& b);

  long order_;
  std::vector<Rat> c_;
};

// The lexicographically-greatest b in Q(zeta_N) with b^n = c, where N is
// c.order(), so sqrt(4) = 2 and sqrt(-1) = zeta_4.  Complete for c of the
// shape rational * root of unity (every value the constructions here
// produce); throws EnlargeCyclotomic when no such root exists in Q(zeta_N).
CycScalar nth_root_cyclotomic(const CycScalar& c, long n);

}  // namespace crown
