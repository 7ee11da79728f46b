#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "crown/cyclotomic.hpp"
#include "crown/errors.hpp"

namespace crown {

// Extended integer: a finite value or +infinity.  Used for precisions.
struct XInt {
  long long v = 0;
  bool infinite = false;

  static XInt inf() { return XInt{0, true}; }
  static XInt fin(long long x) { return XInt{x, false}; }

  bool operator==(const XInt& o) const {
    return infinite == o.infinite && (infinite || v == o.v);
  }
  bool operator!=(const XInt& o) const { return !(*this == o); }
  bool operator<(const XInt& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return v < o.v;
  }
  bool operator<=(const XInt& o) const { return *this < o || *this == o; }

  XInt operator+(const XInt& o) const {
    if (infinite || o.infinite) return inf();
    return fin(v + o.v);
  }
  XInt operator+(long long x) const { return *this + fin(x); }
  XInt scaled(long k) const { return infinite ? inf() : fin(v * k); }

  std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

inline XInt min(const XInt& a, const XInt& b) { return a < b ? a : b; }

// Codegree of a truncated element: either a definite minimal exponent, exactly
// zero, or "zero as far as the element is known" (all terms below P vanish).
struct Codeg {
  enum Kind { Finite, ZeroExact, ZeroAtPrec } kind = ZeroExact;
  long long value = 0;  // exponent (Finite) or precision bound (ZeroAtPrec)

  bool is_finite() const { return kind == Finite; }
  std::string str() const {
    switch (kind) {
      case Finite: return std::to_string(value);
      case ZeroExact: return "inf";
      default: return "zero-at-prec(" + std::to_string(value) + ")";
    }
  }
};

// Truncated element of k_n = C((eps^{1/n})) with cyclotomic coefficients.
// A stored exponent j stands for eps^{j/ram}.  All exponents < prec; terms at
// exponents >= prec are unknown; prec = inf means the element is exact.
class Puiseux {
 public:
  Puiseux() : ram_(1), zord_(1), prec_(XInt::inf()) {}

  static Puiseux zero(long ram, long zord = 1);
  static Puiseux zero_at(XInt prec, long ram, long zord = 1);
  static Puiseux constant(const CycScalar& c, long ram);
  static Puiseux monomial(const CycScalar& c, long long expo, long ram);
  static Puiseux rational(const Rat& r, long ram, long zord = 1);
  static Puiseux integer(long v, long ram, long zord = 1);
  static Puiseux eps(long ram, long zord = 1);                  // eps itself
  static Puiseux eps_pow(long long j, long ram, long zord = 1); // eps^{j/ram}

  long ram() const { return ram_; }
  long zord() const { return zord_; }
  const std::map<long long, CycScalar>& terms() const { return terms_; }
  XInt prec() const { return prec_; }

  bool is_exact() const { return prec_.infinite; }
  bool is_zero_exact() const { return terms_.empty() && is_exact(); }
  bool has_known_term() const { return !terms_.empty(); }
  Codeg codeg() const;
  CycScalar leading_coeff() const;  // pre: has_known_term()
  CycScalar coeff_at(long long expo) const;

  Puiseux with_prec(XInt p) const;  // truncate: intersect with current prec
  Puiseux operator-() const;
  Puiseux operator+(const Puiseux& o) const;
  Puiseux operator-(const Puiseux& o) const;
  Puiseux operator*(const Puiseux& o) const;
  // Equality after embedding both sides into k_lcm(ram, o.ram); precisions
  // must agree on the common lattice.
  bool operator==(const Puiseux& o) const;
  bool operator!=(const Puiseux& o) const { return !(*this == o); }

  Puiseux scale(const CycScalar& c) const;
  Puiseux shift(long long j) const;  // multiply by eps^{j/ram}

  // Galois action: sigma_ram^j, fixing coefficients and multiplying the term
  // at exponent l by zeta_ram^{j l}.
  Puiseux sigma(long j) const;

  Puiseux embed_to(long new_ram) const;     // ram | new_ram
  Puiseux restrict_to(long new_ram) const;  // new_ram | ram, support permitting

  // Multiplicative inverse.  Exact for monomials; otherwise a geometric
  // series computed with `series_prec` known relative exponents.
  Puiseux invert(long series_prec) const;
  Puiseux pow(long e, long series_prec) const;

  // Orbit of x under sigma_ram has full size ram.  Requires an exact element.
  bool is_generic() const;

  std::string describe() const;  // grammar text plus an O(...) tail if inexact

 private:
  void normalize();

  long ram_;
  long zord_;
  std::map<long long, CycScalar> terms_;
  XInt prec_;
};

// a = b^n * eps^{m/ram} with 0 <= m < n, m = codeg(a) mod n, computed on a's
// own exponent lattice.  `rel_prec` bounds how many relative coefficients of
// b are produced; the leading coefficient of b is searched inside
// Q(zeta_{lcm(a.zord, zeta_order)}).
std::pair<Puiseux, long> nth_root(const Puiseux& a, long n, long rel_prec,
                                  long zeta_order = 1);

}  // namespace crown
