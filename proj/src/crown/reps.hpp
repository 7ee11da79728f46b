#pragma once

#include <string>
#include <vector>

#include "crown/matrix.hpp"
#include "crown/quiver.hpp"

namespace crown {

// k_d-linear representation of the n-crown quiver.  a_mat[i-1] is the matrix
// of a_i : i -> i' (shape dim_w[i-1] x dim_u[i-1]); b_mat[i-1] the matrix of
// b_i : (i-1) -> i' (shape dim_w[i-1] x dim at the wrapped source).
struct Representation {
  long n = 1;
  long d = 1;
  std::vector<long> dim_u, dim_w;
  std::vector<MatK> a_mat, b_mat;

  static Representation empty(long n, long d);

  long dim_at(const Vertex& v) const;
  const MatK& mat(const Arrow& r) const;
  MatK& mat(const Arrow& r);
  DimVector dim_vector() const;
  void validate() const;
};

bool operator==(const Representation& x, const Representation& y);
bool operator!=(const Representation& x, const Representation& y);

// M(S): basis z_0..z_len indexed along the trail; each arrow acts by the
// 0/1 incidence rule (direct letter t+1 sends z_t to z_{t+1}, inverse letter
// t+1 sends z_{t+1} to z_t).
Representation string_module(const StringWord& s, long d = 1);

// M(S', phi) for the crown band: every vertex carries one copy of the phi
// space, arrow a_1 acts by phi, every other arrow by the identity.
Representation band_module(const BandWord& s, const MatK& phi,
                           long series_prec = 24);

Representation direct_sum(const Representation& x, const Representation& y);

// gamma_{d,n}^r: vertex spaces pulled back along the reverse shift, arrow
// matrices Galois-twisted entrywise.
Representation twist(const Representation& m, long r);

// One morphism M -> N: a matrix per vertex, sources then sinks.
struct RepHom {
  std::vector<MatK> at_u, at_w;
};

struct HomSpace {
  std::vector<RepHom> basis;
  long dim = 0;
  XInt cert_prec = XInt::inf();  // in 1/d exponent units; inf = exact
  std::string precision_note;
};

HomSpace hom_space(const Representation& m, const Representation& nn,
                   long series_prec = 24);

// Residuals N_a f_{t(a)} - f_{h(a)} M_a for every arrow.
std::vector<MatK> hom_residuals(const Representation& m,
                                const Representation& nn, const RepHom& f);

enum class Tri { no, yes, undecided };

// Deterministic isomorphism search through weighted sums of a hom basis;
// `no` is certified (dimension or hom-space obstruction), `undecided` means
// no invertible combination was found.
Tri is_isomorphic(const Representation& m, const Representation& nn,
                  long series_prec = 24);

Tri is_ii(const Representation& m, long series_prec = 24);

// Smallest r >= 1 with twist(m, r) isomorphic to m; bounded by d when n | d.
long smallest_twist_period(const Representation& m, long series_prec = 24);

std::string rep_to_text(const Representation& m);
Representation rep_from_text(const std::string& text);

}  // namespace crown
