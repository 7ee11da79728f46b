#include "crown/matrix.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "crown/parse.hpp"

namespace crown {

MatK MatK::zero(long rows, long cols, long ram) {
  if (rows < 0 || cols < 0 || ram < 1) throw PrecondError("bad matrix shape");
  MatK m;
  m.rows = rows;
  m.cols = cols;
  m.ram = ram;
  m.e.assign(static_cast<size_t>(rows) * cols, Puiseux::zero(ram));
  return m;
}

MatK MatK::identity(long k, long ram) {
  MatK m = zero(k, k, ram);
  for (long i = 0; i < k; ++i) m.set(i, i, Puiseux::integer(1, ram));
  return m;
}

MatK MatK::scalar(long k, const Puiseux& x) {
  MatK m = zero(k, k, x.ram());
  for (long i = 0; i < k; ++i) m.set(i, i, x);
  return m;
}

MatK MatK::of(long rows, long cols, long ram,
              const std::vector<Puiseux>& entries) {
  if (static_cast<long>(entries.size()) != rows * cols)
    throw PrecondError("entry count does not match matrix shape");
  MatK m = zero(rows, cols, ram);
  for (long i = 0; i < rows * cols; ++i)
    m.e[i] = entries[i].ram() == ram ? entries[i] : entries[i].embed_to(ram);
  return m;
}

void MatK::set(long r, long c, const Puiseux& x) {
  e[r * cols + c] = x.ram() == ram ? x : x.embed_to(ram);
}

bool MatK::is_exact() const {
  for (const auto& x : e)
    if (!x.is_exact()) return false;
  return true;
}

MatK MatK::transpose() const {
  MatK m = zero(cols, rows, ram);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.set(c, r, at(r, c));
  return m;
}

MatK MatK::sigma(long j) const {
  MatK m = *this;
  for (auto& x : m.e) x = x.sigma(j);
  return m;
}

MatK MatK::with_prec(XInt p) const {
  MatK m = *this;
  for (auto& x : m.e) x = x.with_prec(p);
  return m;
}

std::string MatK::text() const {
  std::ostringstream out;
  for (long r = 0; r < rows; ++r) {
    if (r) out << "; ";
    for (long c = 0; c < cols; ++c) {
      if (c) out << ", ";
      if (!at(r, c).is_exact())
        throw PrecondError("matrix text requires exact entries");
      out << print_element(at(r, c));
    }
  }
  return out.str();
}

MatK operator+(const MatK& x, const MatK& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw PrecondError("matrix shapes differ");
  MatK m = MatK::zero(x.rows, x.cols, std::lcm(x.ram, y.ram));
  for (long i = 0; i < x.rows * x.cols; ++i) {
    Puiseux s = x.e[i] + y.e[i];
    m.e[i] = s.ram() == m.ram ? s : s.embed_to(m.ram);
  }
  return m;
}

MatK operator-(const MatK& x) {
  MatK m = x;
  for (auto& v : m.e) v = -v;
  return m;
}

MatK operator-(const MatK& x, const MatK& y) { return x + (-y); }

MatK operator*(const MatK& x, const MatK& y) {
  if (x.cols != y.rows) throw PrecondError("matrix shapes do not compose");
  MatK m = MatK::zero(x.rows, y.cols, std::lcm(x.ram, y.ram));
  for (long r = 0; r < x.rows; ++r) {
    for (long c = 0; c < y.cols; ++c) {
      Puiseux acc = Puiseux::zero(m.ram);
      for (long k = 0; k < x.cols; ++k) acc = acc + x.at(r, k) * y.at(k, c);
      m.set(r, c, acc);
    }
  }
  return m;
}

MatK operator*(const Puiseux& c, const MatK& x) {
  MatK m = MatK::zero(x.rows, x.cols, std::lcm(x.ram, c.ram()));
  for (long i = 0; i < x.rows * x.cols; ++i) {
    Puiseux s = c * x.e[i];
    m.e[i] = s.ram() == m.ram ? s : s.embed_to(m.ram);
  }
  return m;
}

bool operator==(const MatK& x, const MatK& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (long i = 0; i < x.rows * x.cols; ++i)
    if (x.e[i] != y.e[i]) return false;
  return true;
}

bool operator!=(const MatK& x, const MatK& y) { return !(x == y); }

MatK parse_matrix(const std::string& text, long rows, long cols, long ram) {
  // split on ';' then ','; blank text encodes an empty matrix
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> row;
  std::string cur;
  bool any = false;
  for (char ch : text) {
    if (ch == ';' || ch == ',') {
      row.push_back(cur);
      cur.clear();
      any = true;
      if (ch == ';') {
        cells.push_back(row);
        row.clear();
      }
    } else {
      cur += ch;
      if (!isspace(static_cast<unsigned char>(ch))) any = true;
    }
  }
  row.push_back(cur);
  cells.push_back(row);

  if (!any) {
    if (rows * cols != 0)
      throw ParseError("empty matrix text for a nonempty shape", 1, 1);
    return MatK::zero(rows, cols, ram);
  }
  if (static_cast<long>(cells.size()) != rows)
    throw ParseError("expected " + std::to_string(rows) + " matrix rows, got " +
                         std::to_string(cells.size()),
                     1, 1);
  MatK m = MatK::zero(rows, cols, ram);
  for (long r = 0; r < rows; ++r) {
    if (static_cast<long>(cells[r].size()) != cols)
      throw ParseError("row " + std::to_string(r + 1) + " has " +
                           std::to_string(cells[r].size()) + " entries, want " +
                           std::to_string(cols),
                       1, 1);
    for (long c = 0; c < cols; ++c) {
      Puiseux x = parse_element(cells[r][c]);
      if (ram % x.ram() != 0)
        throw ParseError("entry (" + std::to_string(r + 1) + "," +
                             std::to_string(c + 1) + ") needs ramification " +
                             std::to_string(x.ram()) +
                             ", not a divisor of " + std::to_string(ram),
                         1, 1);
      m.set(r, c, x);
    }
  }
  return m;
}

Elim row_reduce(const MatK& m, long series_prec) {
  Elim out;
  MatK w = m;
  long r0 = 0;
  std::vector<long> free_cols;
  for (long col = 0; col < w.cols; ++col) {
    long best = -1;
    long long best_v = 0;
    XInt uncertain = XInt::inf();
    for (long r = r0; r < w.rows; ++r) {
      Codeg cd = w.at(r, col).codeg();
      if (cd.kind == Codeg::Finite) {
        if (best < 0 || cd.value < best_v) {
          best = r;
          best_v = cd.value;
        }
      } else if (cd.kind == Codeg::ZeroAtPrec) {
        uncertain = min(uncertain, XInt::fin(cd.value));
      }
    }
    if (best < 0) {
      out.cert_prec = min(out.cert_prec, uncertain);
      free_cols.push_back(col);
      continue;
    }
    if (best != r0)
      for (long c = 0; c < w.cols; ++c) std::swap(w.e[best * w.cols + c],
                                                  w.e[r0 * w.cols + c]);
    Puiseux inv = w.at(r0, col).invert(series_prec);
    for (long c = 0; c < w.cols; ++c) w.set(r0, c, w.at(r0, c) * inv);
    for (long r = 0; r < w.rows; ++r) {
      if (r == r0) continue;
      Puiseux f = w.at(r, col);
      if (!f.has_known_term()) continue;
      for (long c = 0; c < w.cols; ++c)
        w.set(r, c, w.at(r, c) - f * w.at(r0, c));
    }
    out.pivot_cols.push_back(col);
    ++r0;
  }
  out.rank = r0;
  out.rref = w;
  out.kernel = MatK::zero(w.cols, static_cast<long>(free_cols.size()), w.ram);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    out.kernel.set(free_cols[k], static_cast<long>(k),
                   Puiseux::integer(1, w.ram));
    for (size_t i = 0; i < out.pivot_cols.size(); ++i)
      out.kernel.set(out.pivot_cols[i], static_cast<long>(k),
                     -w.at(static_cast<long>(i), free_cols[k]));
  }
  return out;
}

bool is_invertible(const MatK& m, long series_prec) {
  return m.rows == m.cols && row_reduce(m, series_prec).rank == m.rows;
}

MatK inverse(const MatK& m, long series_prec) {
  if (m.rows != m.cols) throw PrecondError("inverse requires a square matrix");
  long k = m.rows;
  MatK aug = MatK::zero(k, 2 * k, m.ram);
  for (long r = 0; r < k; ++r) {
    for (long c = 0; c < k; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, k + r, Puiseux::integer(1, m.ram));
  }
  Elim el = row_reduce(aug, series_prec);
  bool clean = el.rank >= k;
  for (long i = 0; i < k && clean; ++i) clean = el.pivot_cols[i] == i;
  if (!clean) {
    if (el.cert_prec.infinite) throw PrecondError("matrix is singular");
    throw PrecisionExhausted("inverse undecided at precision " +
                             el.cert_prec.str());
  }
  MatK inv = MatK::zero(k, k, m.ram);
  for (long r = 0; r < k; ++r)
    for (long c = 0; c < k; ++c) inv.set(r, c, el.rref.at(r, k + c));
  return inv;
}

}  // namespace crown
