#pragma once

#include <string>
#include <vector>

#include "crown/errors.hpp"

namespace crown {

// Vertex of the n-crown: source "i" (1..n) or sink "i'" (1..n).
struct Vertex {
  long i = 1;
  bool sink = false;

  bool operator==(const Vertex& o) const { return i == o.i && sink == o.sink; }
  bool operator!=(const Vertex& o) const { return !(*this == o); }
  bool operator<(const Vertex& o) const {
    if (sink != o.sink) return !sink;
    return i < o.i;
  }
};

// Arrow a_i : i -> i' or b_i : (i-1) -> i' (source index mod n, so b_1 : n -> 1').
// For n = 1 both arrows run 1 -> 1', the 2-Kronecker quiver.
struct Arrow {
  long i = 1;
  bool b = false;

  bool operator==(const Arrow& o) const { return i == o.i && b == o.b; }
  bool operator!=(const Arrow& o) const { return !(*this == o); }
  bool operator<(const Arrow& o) const {
    if (b != o.b) return !b;
    return i < o.i;
  }
};

struct Letter {
  Arrow arrow;
  bool inverse = false;

  bool operator==(const Letter& o) const {
    return arrow == o.arrow && inverse == o.inverse;
  }
};

struct StringWord {
  long n = 1;
  std::vector<Letter> letters;
};

struct BandWord {
  long n = 1;
  std::vector<Letter> letters;  // cyclic
};

class CrownQuiver {
 public:
  explicit CrownQuiver(long n);

  long n() const { return n_; }
  std::vector<Vertex> vertices() const;  // 1..n then 1'..n'
  std::vector<Arrow> arrows() const;     // a_1..a_n then b_1..b_n

  Vertex source(const Arrow& r) const;
  Vertex target(const Arrow& r) const;

  // Reverse shift: gamma(i) = i-1, gamma(1) = n, same on sinks and on arrow
  // indices; any integer power.
  Vertex gamma_vertex(const Vertex& v, long power = 1) const;
  Arrow gamma_arrow(const Arrow& r, long power = 1) const;

  // Rows/columns ordered 1..n, 1'..n'.
  std::vector<std::vector<long>> cartan_matrix() const;

 private:
  long n_;
  long rot(long i, long power) const;  // 1-based index shift by -power
};

// Dimension vector (signed entries allowed for root-lattice operations).
struct DimVector {
  std::vector<long> u, w;  // u[i-1] at source i, w[i-1] at sink i'

  explicit DimVector(long n = 0) : u(static_cast<size_t>(n), 0), w(static_cast<size_t>(n), 0) {}

  long n() const { return static_cast<long>(u.size()); }
  long at(const Vertex& v) const;
  long& at(const Vertex& v);

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector scaled(long k) const;
  bool operator==(const DimVector& o) const { return u == o.u && w == o.w; }
  bool operator!=(const DimVector& o) const { return !(*this == o); }

  std::string str() const;  // "(u1,..,un | w1,..,wn)"
};

DimVector unit_vector(const CrownQuiver& q, const Vertex& v);
DimVector minimal_imaginary_root(const CrownQuiver& q);

// <a,b> = sum_v a_v b_v - sum_{rho: s->t} a_s b_t
long euler_form(const CrownQuiver& q, const DimVector& a, const DimVector& b);
// Symmetric form (a,b) = <a,b> + <b,a>.
long sym_form(const CrownQuiver& q, const DimVector& a, const DimVector& b);
DimVector reflect(const CrownQuiver& q, const DimVector& a, const Vertex& v);
long defect(const CrownQuiver& q, const DimVector& a);

Vertex letter_start(const CrownQuiver& q, const Letter& l);
Vertex letter_end(const CrownQuiver& q, const Letter& l);

// s_{i',j} (start a sink) or s_{i,j} (start a source); 1 <= j <= 2n-1.
StringWord string_word(const CrownQuiver& q, const Vertex& start, long j);
BandWord the_band(const CrownQuiver& q);

// Vertex trail u(0..j) of a valid word; throws PrecondError when the letters
// do not compose or an immediate backtrack s_i = s_{i-1}^{-1} occurs.
std::vector<Vertex> string_trail(const CrownQuiver& q, const StringWord& s);
bool is_valid_string(const CrownQuiver& q, const StringWord& s);
// Band validity: trail closes up, word is not a proper power, and the square
// still composes (so every positive power is a string).
bool is_valid_band(const CrownQuiver& q, const BandWord& s);

DimVector dim_vector_of_trail(const CrownQuiver& q, const std::vector<Vertex>& trail);

std::string vertex_name(const Vertex& v);
std::string arrow_name(const Arrow& r);
std::string letter_name(const Letter& l);  // "a2" or "a2^-1"
std::string word_name(const std::vector<Letter>& letters);

}  // namespace crown
