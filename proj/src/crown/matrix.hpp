#pragma once

#include <string>
#include <vector>

#include "crown/puiseux.hpp"

namespace crown {

// Dense matrix over a common k_d; entries are truncated Puiseux elements all
// embedded to the matrix ram on construction.
struct MatK {
  long rows = 0;
  long cols = 0;
  long ram = 1;
  std::vector<Puiseux> e;  // row-major, rows*cols entries

  static MatK zero(long rows, long cols, long ram);
  static MatK identity(long k, long ram);
  static MatK scalar(long k, const Puiseux& x);  // x * identity
  static MatK of(long rows, long cols, long ram,
                 const std::vector<Puiseux>& entries);

  const Puiseux& at(long r, long c) const { return e[r * cols + c]; }
  void set(long r, long c, const Puiseux& x);

  bool is_exact() const;
  MatK transpose() const;
  MatK sigma(long j) const;       // entrywise Galois action
  MatK with_prec(XInt p) const;   // entrywise truncation
  std::string text() const;       // rows ';', entries ','
};

MatK operator+(const MatK& x, const MatK& y);
MatK operator-(const MatK& x, const MatK& y);
MatK operator-(const MatK& x);
MatK operator*(const MatK& x, const MatK& y);
MatK operator*(const Puiseux& c, const MatK& x);
bool operator==(const MatK& x, const MatK& y);
bool operator!=(const MatK& x, const MatK& y);

// Entries in the element grammar, embedded into k_ram; rows ';', entries ','.
// A matrix with zero rows or columns is written as the empty string.
MatK parse_matrix(const std::string& text, long rows, long cols, long ram);

// Result of valuation-aware Gauss-Jordan elimination.  Pivots are chosen
// with minimal certain codegree, so `rank` counts provably nonzero pivots.
// Columns whose remaining entries are all zero only at finite precision are
// declared free; cert_prec records the weakest such bound (infinite when
// every decision was exact).
struct Elim {
  long rank = 0;
  XInt cert_prec = XInt::inf();
  std::vector<long> pivot_cols;
  MatK rref;
  MatK kernel;  // columns form the kernel basis
};

Elim row_reduce(const MatK& m, long series_prec = 24);

// rank == min(rows, cols) with every pivot decision exact or certified.
bool is_invertible(const MatK& m, long series_prec = 24);

// Inverse of a square matrix via elimination against the identity.
// Throws PrecisionExhausted when a pivot cannot be certified.
MatK inverse(const MatK& m, long series_prec = 24);

}  // namespace crown
