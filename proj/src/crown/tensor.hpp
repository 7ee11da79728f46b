#pragma once

#include <vector>

#include "crown/puiseux.hpp"
#include "crown/report.hpp"

namespace crown {

// Element of k_d (x)_k k_n on the k_d-basis {1 (x) eps^{l/n} : 0 <= l < n}:
// coords[l] lies in k_d and multiplies 1 (x) eps^{l/n}.  Requires n | d.
struct TensorElement {
  long d = 1;
  long n = 1;
  std::vector<Puiseux> coords;

  static TensorElement zero(long d, long n);
  static TensorElement unit(long d, long n);                 // 1 (x) 1
  static TensorElement basis_vector(long d, long n, long l); // 1 (x) eps^{l/n}

  bool is_exact() const;
  std::string describe() const;
};

TensorElement operator+(const TensorElement& x, const TensorElement& y);
TensorElement operator-(const TensorElement& x, const TensorElement& y);
TensorElement operator-(const TensorElement& x);
bool operator==(const TensorElement& x, const TensorElement& y);
bool operator!=(const TensorElement& x, const TensorElement& y);

// Product in k_d (x) k_n: coordinate convolution where eps^{l/n} * eps^{l'/n}
// overflows into the left factor as a power of eps when l + l' >= n.
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);
TensorElement operator*(const TensorElement& x, const TensorElement& y);

TensorElement scale_left(const TensorElement& x, const Puiseux& c);
TensorElement scale_left(const TensorElement& x, const CycScalar& c);

// c (x) 1 for c in k_d.
TensorElement left_embed(const Puiseux& c, long d, long n);
// 1 (x) a for exact a in k_n, splitting each eps^{e/n} into an integral
// eps-power times a basis monomial.
TensorElement right_embed(const Puiseux& a, long d);

// sigma_d (x) id.
TensorElement sigma_tensor(const TensorElement& x, long j = 1);
// id (x) sigma_n.
TensorElement sigma_right(const TensorElement& x, long j = 1);

// The idempotents beta_1..beta_n of k_d (x) k_n (returned in index order):
// beta_j has coords[l] = (1/n) zeta_n^{(j-1)l} eps^{-l/n}.
std::vector<TensorElement> beta_basis(long d, long n);

// Element of k_d (x) Lambda_n in block coordinates
//   [ t11  (t12a, t12b) ]
//   [  0       t22      ]
// where the (1,2) entry lives in k_n (+) twisted k_n; the twisted summand
// carries the left action through id (x) sigma_n.
struct LambdaTensorElement {
  TensorElement t11, t22, t12a, t12b;

  static LambdaTensorElement zero(long d, long n);
  static LambdaTensorElement unit(long d, long n);

  bool is_exact() const;
  std::string describe() const;
};

LambdaTensorElement operator+(const LambdaTensorElement& x,
                              const LambdaTensorElement& y);
LambdaTensorElement operator-(const LambdaTensorElement& x,
                              const LambdaTensorElement& y);
LambdaTensorElement operator-(const LambdaTensorElement& x);
bool operator==(const LambdaTensorElement& x, const LambdaTensorElement& y);
bool operator!=(const LambdaTensorElement& x, const LambdaTensorElement& y);

LambdaTensorElement lambda_mul(const LambdaTensorElement& x,
                               const LambdaTensorElement& y);
LambdaTensorElement operator*(const LambdaTensorElement& x,
                              const LambdaTensorElement& y);

LambdaTensorElement scale_left(const LambdaTensorElement& x, const Puiseux& c);
LambdaTensorElement sigma_tensor(const LambdaTensorElement& x, long j = 1);

// The four families of Eq.-4 style basis elements of k_d (x) Lambda_n:
// b1[j-1] = beta_{j1} (t11 block), b2[j-1] = beta_{j2} (t12a block),
// b3[j-1] = beta'_{j1} (t12b block), b4[j-1] = beta'_{j2} (t22 block).
struct LambdaBasis {
  std::vector<LambdaTensorElement> b1, b2, b3, b4;
};
LambdaBasis lambda_basis(long d, long n);

// Exhaustive 4n x 4n multiplication table of the lambda basis against the
// crown path algebra under beta_{j1} -> e_j, beta_{j2} -> a_j,
// beta'_{j1} -> b_j, beta'_{j2} -> e_{j'}.
VerificationReport verify_theorem_3_2(long d, long n);

// Closed forms for (id (x) f_a) and (id (x) g_a) on beta_j against the direct
// tensor computation; a must be exact, 1 <= j <= a.ram().
VerificationReport lemma_3_3_check(const Puiseux& a, long j);

}  // namespace crown
