#include "crown/quiver.hpp"

namespace crown {

CrownQuiver::CrownQuiver(long n) : n_(n) {
  if (n < 1) throw PrecondError("crown quiver needs n >= 1");
}

std::vector<Vertex> CrownQuiver::vertices() const {
  std::vector<Vertex> vs;
  for (long i = 1; i <= n_; ++i) vs.push_back({i, false});
  for (long i = 1; i <= n_; ++i) vs.push_back({i, true});
  return vs;
}

std::vector<Arrow> CrownQuiver::arrows() const {
  std::vector<Arrow> as;
  for (long i = 1; i <= n_; ++i) as.push_back({i, false});
  for (long i = 1; i <= n_; ++i) as.push_back({i, true});
  return as;
}

long CrownQuiver::rot(long i, long power) const {
  long r = (i - 1 - power) % n_;
  if (r < 0) r += n_;
  return r + 1;
}

Vertex CrownQuiver::source(const Arrow& r) const {
  if (!r.b) return {r.i, false};
  return {rot(r.i, 1), false};  // i-1 mod n
}

Vertex CrownQuiver::target(const Arrow& r) const { return {r.i, true}; }

Vertex CrownQuiver::gamma_vertex(const Vertex& v, long power) const {
  return {rot(v.i, power), v.sink};
}

Arrow CrownQuiver::gamma_arrow(const Arrow& r, long power) const {
  return {rot(r.i, power), r.b};
}

std::vector<std::vector<long>> CrownQuiver::cartan_matrix() const {
  size_t m = static_cast<size_t>(2 * n_);
  std::vector<std::vector<long>> c(m, std::vector<long>(m, 0));
  for (size_t i = 0; i < m; ++i) c[i][i] = 2;
  for (const Arrow& r : arrows()) {
    size_t s = static_cast<size_t>(source(r).i - 1);
    size_t t = static_cast<size_t>(n_ + target(r).i - 1);
    c[s][t] -= 1;
    c[t][s] -= 1;
  }
  return c;
}

long DimVector::at(const Vertex& v) const {
  return v.sink ? w[static_cast<size_t>(v.i - 1)] : u[static_cast<size_t>(v.i - 1)];
}

long& DimVector::at(const Vertex& v) {
  return v.sink ? w[static_cast<size_t>(v.i - 1)] : u[static_cast<size_t>(v.i - 1)];
}

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector r = *this;
  for (size_t i = 0; i < u.size(); ++i) r.u[i] += o.u[i];
  for (size_t i = 0; i < w.size(); ++i) r.w[i] += o.w[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  return *this + o.scaled(-1);
}

DimVector DimVector::scaled(long k) const {
  DimVector r = *this;
  for (auto& x : r.u) x *= k;
  for (auto& x : r.w) x *= k;
  return r;
}

std::string DimVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  s += " | ";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

DimVector unit_vector(const CrownQuiver& q, const Vertex& v) {
  DimVector d(q.n());
  d.at(v) = 1;
  return d;
}

DimVector minimal_imaginary_root(const CrownQuiver& q) {
  DimVector d(q.n());
  for (auto& x : d.u) x = 1;
  for (auto& x : d.w) x = 1;
  return d;
}

long euler_form(const CrownQuiver& q, const DimVector& a, const DimVector& b) {
  long s = 0;
  for (const Vertex& v : q.vertices()) s += a.at(v) * b.at(v);
  for (const Arrow& r : q.arrows()) s -= a.at(q.source(r)) * b.at(q.target(r));
  return s;
}

long sym_form(const CrownQuiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVector reflect(const CrownQuiver& q, const DimVector& a, const Vertex& v) {
  return a - unit_vector(q, v).scaled(sym_form(q, a, unit_vector(q, v)));
}

long defect(const CrownQuiver& q, const DimVector& a) {
  return euler_form(q, minimal_imaginary_root(q), a);
}

Vertex letter_start(const CrownQuiver& q, const Letter& l) {
  return l.inverse ? q.target(l.arrow) : q.source(l.arrow);
}

Vertex letter_end(const CrownQuiver& q, const Letter& l) {
  return l.inverse ? q.source(l.arrow) : q.target(l.arrow);
}

StringWord string_word(const CrownQuiver& q, const Vertex& start, long j) {
  long n = q.n();
  if (j < 1 || j > 2 * n - 1)
    throw PrecondError("string length must lie in [1, 2n-1]");
  StringWord s;
  s.n = n;
  long shift = start.i - 1;  // gamma^{-(i-1)} sends index k to k + (i-1)
  for (long t = 1; t <= j; ++t) {
    Arrow r;
    if (start.sink) {
      if (t % 2 == 1)
        r = {(t + 1) / 2, false};  // a_{(t+1)/2} inverted
      else
        r = {(t + 2) / 2, true};  // b_{(t+2)/2}
    } else {
      if (t % 2 == 1)
        r = {(t + 3) / 2, true};  // b_{(t+3)/2}
      else
        r = {(t + 2) / 2, false};  // a_{(t+2)/2} inverted
    }
    r = q.gamma_arrow(r, -shift);
    bool inv = start.sink ? (t % 2 == 1) : (t % 2 == 0);
    s.letters.push_back({r, inv});
  }
  return s;
}

BandWord the_band(const CrownQuiver& q) {
  long n = q.n();
  BandWord b;
  b.n = n;
  b.letters.push_back({{1, true}, true});  // b_1^{-1}
  for (long i = n; i >= 1; --i) {
    b.letters.push_back({{i, false}, false});           // a_i
    if (i > 1) b.letters.push_back({{i, true}, true});  // b_i^{-1}
  }
  return b;
}

std::vector<Vertex> string_trail(const CrownQuiver& q, const StringWord& s) {
  if (s.letters.empty()) throw PrecondError("empty string word");
  std::vector<Vertex> trail;
  trail.push_back(letter_start(q, s.letters[0]));
  for (size_t t = 0; t < s.letters.size(); ++t) {
    const Letter& l = s.letters[t];
    if (letter_start(q, l) != trail.back())
      throw PrecondError("letters do not compose at position " + std::to_string(t + 1));
    if (t > 0) {
      const Letter& p = s.letters[t - 1];
      if (p.arrow == l.arrow && p.inverse != l.inverse)
        throw PrecondError("immediate backtrack at position " + std::to_string(t + 1));
    }
    trail.push_back(letter_end(q, l));
  }
  return trail;
}

bool is_valid_string(const CrownQuiver& q, const StringWord& s) {
  try {
    string_trail(q, s);
    return true;
  } catch (const PrecondError&) {
    return false;
  }
}

bool is_valid_band(const CrownQuiver& q, const BandWord& s) {
  size_t len = s.letters.size();
  if (len == 0) return false;
  StringWord twice;
  twice.n = s.n;
  twice.letters = s.letters;
  twice.letters.insert(twice.letters.end(), s.letters.begin(), s.letters.end());
  if (!is_valid_string(q, twice)) return false;
  std::vector<Vertex> trail = string_trail(q, twice);
  if (trail[len] != trail[0]) return false;
  // Proper-power test: the word equals no rotation of itself by 0 < r < len.
  for (size_t r = 1; r < len; ++r) {
    if (len % r != 0) continue;
    bool same = true;
    for (size_t t = 0; t < len && same; ++t)
      same = s.letters[t] == s.letters[(t + r) % len];
    if (same) return false;
  }
  return true;
}

DimVector dim_vector_of_trail(const CrownQuiver& q, const std::vector<Vertex>& trail) {
  DimVector d(q.n());
  for (const Vertex& v : trail) d.at(v) += 1;
  return d;
}

std::string vertex_name(const Vertex& v) {
  return std::to_string(v.i) + (v.sink ? "'" : "");
}

std::string arrow_name(const Arrow& r) {
  return (r.b ? "b" : "a") + std::to_string(r.i);
}

std::string letter_name(const Letter& l) {
  return arrow_name(l.arrow) + (l.inverse ? "^-1" : "");
}

std::string word_name(const std::vector<Letter>& letters) {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i)
    s += (i ? " " : "") + letter_name(letters[i]);
  return s;
}

}  // namespace crown
