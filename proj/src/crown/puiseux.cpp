#include "crown/puiseux.hpp"

#include <numeric>
#include <vector>

namespace crown {

namespace {

// Effective codegree for the precision rule of products.
XInt ecodeg(const Puiseux& x) {
  Codeg c = x.codeg();
  switch (c.kind) {
    case Codeg::Finite: return XInt::fin(c.value);
    case Codeg::ZeroExact: return XInt::inf();
    default: return XInt::fin(c.value);
  }
}

}  // namespace

Puiseux Puiseux::zero(long ram, long zord) {
  Puiseux p;
  p.ram_ = ram;
  p.zord_ = zord;
  return p;
}

Puiseux Puiseux::zero_at(XInt prec, long ram, long zord) {
  Puiseux p = zero(ram, zord);
  p.prec_ = prec;
  return p;
}

Puiseux Puiseux::constant(const CycScalar& c, long ram) {
  return monomial(c, 0, ram);
}

Puiseux Puiseux::monomial(const CycScalar& c, long long expo, long ram) {
  Puiseux p = zero(ram, c.order());
  if (!c.is_zero()) p.terms_[expo] = c;
  return p;
}

Puiseux Puiseux::rational(const Rat& r, long ram, long zord) {
  return monomial(CycScalar::of(r, zord), 0, ram);
}

Puiseux Puiseux::integer(long v, long ram, long zord) {
  return rational(Rat(v), ram, zord);
}

Puiseux Puiseux::eps(long ram, long zord) { return eps_pow(ram, ram, zord); }

Puiseux Puiseux::eps_pow(long long j, long ram, long zord) {
  return monomial(CycScalar::one(zord), j, ram);
}

void Puiseux::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || !(XInt::fin(it->first) < prec_)) {
      it = terms_.erase(it);
    } else {
      if (it->second.order() != zord_) it->second = it->second.promote(zord_);
      ++it;
    }
  }
}

Codeg Puiseux::codeg() const {
  if (!terms_.empty()) return Codeg{Codeg::Finite, terms_.begin()->first};
  if (prec_.infinite) return Codeg{Codeg::ZeroExact, 0};
  return Codeg{Codeg::ZeroAtPrec, prec_.v};
}

CycScalar Puiseux::leading_coeff() const {
  if (terms_.empty()) throw PrecondError("element has no known term");
  return terms_.begin()->second;
}

CycScalar Puiseux::coeff_at(long long expo) const {
  auto it = terms_.find(expo);
  if (it != terms_.end()) return it->second;
  return CycScalar::zero(zord_);
}

Puiseux Puiseux::with_prec(XInt p) const {
  Puiseux r = *this;
  r.prec_ = min(r.prec_, p);
  r.normalize();
  return r;
}

Puiseux Puiseux::operator-() const {
  Puiseux r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Puiseux Puiseux::operator+(const Puiseux& o) const {
  long rm = std::lcm(ram_, o.ram_);
  if (ram_ != rm || o.ram_ != rm) return embed_to(rm) + o.embed_to(rm);
  Puiseux r = zero(ram_, std::lcm(zord_, o.zord_));
  r.prec_ = min(prec_, o.prec_);
  r.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end())
      r.terms_[e] = c;
    else
      it->second = it->second + c;
  }
  r.normalize();
  return r;
}

Puiseux Puiseux::operator-(const Puiseux& o) const { return *this + (-o); }

Puiseux Puiseux::operator*(const Puiseux& o) const {
  long rm = std::lcm(ram_, o.ram_);
  if (ram_ != rm || o.ram_ != rm) return embed_to(rm) * o.embed_to(rm);
  Puiseux r = zero(ram_, std::lcm(zord_, o.zord_));
  if (is_zero_exact() || o.is_zero_exact()) return r;
  r.prec_ = min(prec_ + ecodeg(o), o.prec_ + ecodeg(*this));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      if (!(XInt::fin(e1 + e2) < r.prec_)) continue;
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end())
        r.terms_[e1 + e2] = c1 * c2;
      else
        it->second = it->second + c1 * c2;
    }
  }
  r.normalize();
  return r;
}

bool Puiseux::operator==(const Puiseux& o) const {
  long r = std::lcm(ram_, o.ram_);
  if (ram_ != r || o.ram_ != r) return embed_to(r) == o.embed_to(r);
  if (prec_ != o.prec_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it1 = terms_.begin();
  auto it2 = o.terms_.begin();
  for (; it1 != terms_.end(); ++it1, ++it2) {
    if (it1->first != it2->first) return false;
    if (!(it1->second == it2->second)) return false;
  }
  return true;
}

Puiseux Puiseux::scale(const CycScalar& c) const {
  Puiseux r = *this;
  if (c.is_zero()) {
    // Scaling by exact zero keeps only the precision information.
    r.terms_.clear();
    return r;
  }
  r.zord_ = std::lcm(zord_, c.order());
  for (auto& [e, x] : r.terms_) x = x * c;
  r.normalize();
  return r;
}

Puiseux Puiseux::shift(long long j) const {
  Puiseux r = zero(ram_, zord_);
  r.prec_ = prec_ + j;
  for (const auto& [e, c] : terms_) r.terms_[e + j] = c;
  return r;
}

Puiseux Puiseux::sigma(long j) const {
  long zo = std::lcm(zord_, ram_);
  Puiseux r = zero(ram_, zo);
  r.prec_ = prec_;
  for (const auto& [e, c] : terms_) {
    long rot = static_cast<long>(((j * (e % ram_)) % ram_ + ram_) % ram_);
    r.terms_[e] = c.promote(zo) * CycScalar::root_of_unity(zo, rot, ram_);
  }
  r.normalize();
  return r;
}

Puiseux Puiseux::embed_to(long new_ram) const {
  if (new_ram % ram_ != 0)
    throw PrecondError("cannot embed k_" + std::to_string(ram_) + " into k_" +
                       std::to_string(new_ram));
  long k = new_ram / ram_;
  Puiseux r = zero(new_ram, zord_);
  r.prec_ = prec_.scaled(k);
  for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
  return r;
}

Puiseux Puiseux::restrict_to(long new_ram) const {
  if (ram_ % new_ram != 0)
    throw PrecondError("k_" + std::to_string(new_ram) + " is not a subfield of k_" +
                       std::to_string(ram_));
  long k = ram_ / new_ram;
  Puiseux r = zero(new_ram, zord_);
  if (prec_.infinite)
    r.prec_ = XInt::inf();
  else
    // Conservative: exponents e with e*k < prec are known.
    r.prec_ = XInt::fin(prec_.v >= 0 ? (prec_.v + k - 1) / k : prec_.v / k);
  for (const auto& [e, c] : terms_) {
    if (e % k != 0)
      throw PrecondError("element does not lie in the subfield k_" +
                         std::to_string(new_ram));
    r.terms_[e / k] = c;
  }
  r.normalize();
  return r;
}

Puiseux Puiseux::invert(long series_prec) const {
  Codeg c = codeg();
  if (!c.is_finite())
    throw PrecondError("cannot invert an element indistinguishable from zero");
  long long l = c.value;
  CycScalar lead = leading_coeff();
  if (terms_.size() == 1) {
    Puiseux r = monomial(lead.inverse(), -l, ram_);
    if (!prec_.infinite) r = r.with_prec(XInt::fin(prec_.v - 2 * l));
    return r;
  }
  // u = x * eps^{-l} / lead has leading term 1; invert by geometric series.
  long long rel = prec_.infinite ? series_prec : prec_.v - l;
  Puiseux u = shift(-l).scale(lead.inverse()).with_prec(XInt::fin(rel));
  Puiseux one = constant(CycScalar::one(zord_), ram_);
  Puiseux rterm = (one - u).with_prec(XInt::fin(rel));
  Puiseux s = one;
  Puiseux p = rterm;
  while (p.has_known_term()) {
    s = s + p;
    p = (p * rterm).with_prec(XInt::fin(rel));
  }
  Puiseux r = s.scale(lead.inverse()).shift(-l);
  return r.with_prec(XInt::fin(rel - l));
}

Puiseux Puiseux::pow(long e, long series_prec) const {
  if (e < 0) return invert(series_prec).pow(-e, series_prec);
  Puiseux acc = constant(CycScalar::one(zord_), ram_);
  Puiseux base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Puiseux::is_generic() const {
  if (!is_exact())
    throw PrecondError("genericity is only decidable for exact elements");
  if (terms_.empty()) return ram_ == 1;
  long long g = 0;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e < 0 ? -e : e);
  return std::gcd(static_cast<long long>(ram_), g) == 1;
}

std::pair<Puiseux, long> nth_root(const Puiseux& a, long n, long rel_prec,
                                  long zeta_order) {
  if (n < 1) throw PrecondError("root exponent must be positive");
  Codeg cd = a.codeg();
  if (!cd.is_finite())
    throw PrecondError("nth_root of an element indistinguishable from zero");
  long long c0 = cd.value;
  long m = static_cast<long>(((c0 % n) + n) % n);
  long long q = (c0 - m) / n;
  long search_order = std::lcm(a.zord(), zeta_order);

  if (a.terms().size() == 1 && a.is_exact()) {
    CycScalar b0 = nth_root_cyclotomic(a.leading_coeff().promote(search_order), n);
    return {Puiseux::monomial(b0, q, a.ram()), m};
  }

  long long rel_in = a.prec().infinite ? rel_prec : a.prec().v - c0;
  long long R = std::min<long long>(rel_prec, rel_in);
  if (R < 1)
    throw PrecisionExhausted("no relative precision available for nth_root");
  std::vector<CycScalar> ac(static_cast<size_t>(R), CycScalar::zero(search_order));
  for (const auto& [e, c] : a.terms()) {
    long long i = e - c0;
    if (i < R) ac[static_cast<size_t>(i)] = c.promote(search_order);
  }
  std::vector<CycScalar> bc;
  bc.reserve(static_cast<size_t>(R));
  bc.push_back(nth_root_cyclotomic(ac[0], n));
  CycScalar nscal = CycScalar::of_int(n, search_order);
  for (long long j = 0; j + 1 < R; ++j) {
    // n (j+1) a_0 b_{j+1} = sum_{i+l=j} (i+1) a_{i+1} b_l
    //                       - n sum_{l<j} (l+1) b_{l+1} a_{j-l}
    CycScalar rhs = CycScalar::zero(search_order);
    for (long long i = 0; i + 1 <= j + 1; ++i) {
      long long l = j - i;
      if (l < static_cast<long long>(bc.size()) && i + 1 < R)
        rhs = rhs + CycScalar::of_int(static_cast<long>(i + 1), search_order) *
                        ac[static_cast<size_t>(i + 1)] * bc[static_cast<size_t>(l)];
    }
    for (long long l = 0; l < j; ++l) {
      if (l + 1 < static_cast<long long>(bc.size()) && j - l < R)
        rhs = rhs - nscal *
                        CycScalar::of_int(static_cast<long>(l + 1), search_order) *
                        bc[static_cast<size_t>(l + 1)] * ac[static_cast<size_t>(j - l)];
    }
    CycScalar denom =
        nscal * CycScalar::of_int(static_cast<long>(j + 1), search_order) * ac[0];
    bc.push_back(rhs / denom);
  }
  Puiseux b = Puiseux::zero(a.ram(), search_order);
  for (long long j = 0; j < static_cast<long long>(bc.size()); ++j)
    b = b + Puiseux::monomial(bc[static_cast<size_t>(j)], q + j, a.ram());
  b = b.with_prec(XInt::fin(q + R));
  return {b, m};
}

}  // namespace crown
