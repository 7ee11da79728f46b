#pragma once

#include <string>

#include "crown/report.hpp"
#include "crown/reps.hpp"

namespace crown {

// One descent datum: a representation M over k_d together with a morphism
// f : M -> twist(M, 1) whose sigma-composite of length `order` is the
// identity.  Solutions of the descent equation live over the fixed field.
struct DescentDatum {
  Representation m;
  RepHom f;     // at_u[i-1] at source i, at_w[i-1] at sink i'
  long order = 1;
};

// Lambda_n datum (k^mp, k^m, A, B): two rational matrices of shape m x mp.
struct LambdaRep {
  long n = 1;
  long mp = 0;  // source dimension
  long m = 0;   // sink dimension
  MatK a, b;
};

std::string lambda_to_text(const LambdaRep& l);
LambdaRep lambda_from_text(const std::string& text);

// Cyclic shift: (p,q) entry 1 iff p = q+1 mod size; rational, ram 1.
MatK shift_matrix(long size);

// One-dimensional band representation over k_d: every vertex carries k_d,
// a_1 acts by a, every other arrow by 1.  Requires a known nonzero a.
Representation rep_M_a(const Puiseux& a, long n, long d);

// String representations over k (ram 1).  rep_family_M(j): sources and sinks
// 1..j carry k, arrows a_1..a_j and b_2..b_j act by 1, the rest vanish.
// rep_family_N(j): sources 1..j and sinks 2..j+1 (mod n) carry k, arrows
// a_2..a_j and b_2..b_{j+1} act by 1.  1 <= j <= n.
Representation rep_family_M(long j, long n);
Representation rep_family_N(long j, long n);

// twist(nrep, 0) + twist(nrep, 1) + ... + twist(nrep, m-1).
Representation orbit_sum(const Representation& nrep, long m);

// Entrywise embedding into a larger coefficient field.
MatK mat_embed(const MatK& m, long ram);
Representation rep_embed(const Representation& r, long d);

// Solve prod_{t=0}^{d/m - 1} sigma_d^{mt}(w) = kappa for w in k_d.  Root
// searches run inside Q(zeta_N); N = 0 tries d, 2d, 4d, 8d in turn.
Puiseux norm_solve(const Puiseux& kappa, long m, long d, long series_prec,
                   long zeta_order = 0);

// Descent datum of order m for orbit_sum(nrep, m) when twist(nrep, m) equals
// nrep on the nose: blockwise slot shift with identity blocks.
DescentDatum build_cocycle_shift(const Representation& nrep, long m);

// Descent datum of order n for the n-fold orbit of a string family member.
enum class StringFamily { M, N };
DescentDatum build_cocycle_string(long j, long n, StringFamily which);

// Descent datum of order d = lcm(n, m) for the m-fold twist orbit of the
// band representation of a, where a is exact and generic in k_m.  Covers
// m = n, m < n and m > n uniformly; the slot-1 correction solves a norm
// equation in k_d.
DescentDatum build_cocycle_band(const Puiseux& a, long m, long n,
                                long series_prec = 24, long zeta_order = 0);

// Named special cases of build_cocycle_band.
DescentDatum build_cocycle_equal(const Puiseux& a, long n,
                                 long series_prec = 24, long zeta_order = 0);
DescentDatum build_cocycle_small(const Puiseux& a, long m, long n,
                                 long series_prec = 24, long zeta_order = 0);
DescentDatum build_cocycle_large(const Puiseux& a, long m, long n,
                                 long series_prec = 24, long zeta_order = 0);

// Machine check of a descent datum: f is a morphism M -> twist(M, 1), every
// vertex matrix is invertible, and the sigma-composite of length `order` is
// the identity at each vertex.
VerificationReport verify_cocycle(const DescentDatum& dd,
                                  long series_prec = 24);

// Companion-style m x m matrix: superdiagonal ones, x in the bottom-left
// corner.  alpha_matrix(1, x) = (x).
MatK alpha_matrix(long m, const Puiseux& x);

// Representation of the n-crown over k_d induced by a Lambda_n datum: arm i
// carries sigma_d^i(A) on a_i and sigma_d^i(B) on b_i.  For data with
// rational entries all arms coincide and the result is twist-invariant.
Representation base_change(const LambdaRep& l, long d);

// Checks that nrep is regular (defect 0), endo-simple (End = k_d at the
// working precision) and has smallest twist period m.
VerificationReport certify_regular_simple(const Representation& nrep, long m,
                                          long series_prec = 24);

// Normal form attached to a generic x with x^n generic in k_m: A is the
// companion matrix of the minimal polynomial of x over k (for monomial x
// this is the alpha-pattern with corner x^m), B = id_m.  The base change of
// the datum decomposes into the m-fold twist orbit of the band of x^n.
LambdaRep normal_form_homogeneous(const Puiseux& x, long n, long m);

// Normal forms with one nilpotent block N of size j (subdiagonal ones):
// variant MB is (id, N), variant BM is (N, id).
enum class NormalFormVariant { MB, BM };
LambdaRep normal_form_nonhomogeneous(long j, long n, NormalFormVariant which);

// Invertible A over k_m with alpha_matrix(m, x^m) A = A diag(x, sigma(x),
// ..., sigma^{m-1}(x)), found by valuation-aware kernel computation of the
// Sylvester system.  Requires an exact generic x of ram m.
MatK intertwiner_alpha_diag(const Puiseux& x, long series_prec = 24);

// Companion matrix of prod_{t<n} (y - sigma^t(a)) for exact generic a of
// ram n; the coefficients are checked to be rational in eps.
MatK companion_from_orbit(const Puiseux& a, long n, long series_prec = 24);

// Vandermonde of the conjugates: row p, column q entry sigma^{p-1}(a)^{q-1}.
MatK vandermonde(const Puiseux& a, long n);

// Omnibus Kronecker (n = 1 crown) check for a generic a of ram n: companion
// conjugation, orbit cocycles, and certification of the induced module.
VerificationReport verify_kronecker(const Puiseux& a, long n,
                                    long series_prec = 24);

}  // namespace crown
