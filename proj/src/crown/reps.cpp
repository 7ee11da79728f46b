#include "crown/reps.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace crown {

Representation Representation::empty(long n, long d) {
  if (n < 1 || d < 1) throw PrecondError("bad representation parameters");
  Representation m;
  m.n = n;
  m.d = d;
  m.dim_u.assign(n, 0);
  m.dim_w.assign(n, 0);
  m.a_mat.assign(n, MatK::zero(0, 0, d));
  m.b_mat.assign(n, MatK::zero(0, 0, d));
  return m;
}

long Representation::dim_at(const Vertex& v) const {
  return v.sink ? dim_w[v.i - 1] : dim_u[v.i - 1];
}

const MatK& Representation::mat(const Arrow& r) const {
  return r.b ? b_mat[r.i - 1] : a_mat[r.i - 1];
}

MatK& Representation::mat(const Arrow& r) {
  return r.b ? b_mat[r.i - 1] : a_mat[r.i - 1];
}

DimVector Representation::dim_vector() const {
  DimVector dv(n);
  dv.u = dim_u;
  dv.w = dim_w;
  return dv;
}

void Representation::validate() const {
  CrownQuiver q(n);
  if (static_cast<long>(dim_u.size()) != n ||
      static_cast<long>(dim_w.size()) != n ||
      static_cast<long>(a_mat.size()) != n ||
      static_cast<long>(b_mat.size()) != n)
    throw PrecondError("representation arrays do not match n");
  for (long v = 0; v < n; ++v)
    if (dim_u[v] < 0 || dim_w[v] < 0)
      throw PrecondError("negative dimension");
  for (const Arrow& r : q.arrows()) {
    const MatK& mm = mat(r);
    if (mm.rows != dim_at(q.target(r)) || mm.cols != dim_at(q.source(r)))
      throw PrecondError("matrix of " + arrow_name(r) +
                         " does not match its endpoints");
    if (d % mm.ram != 0)
      throw PrecondError("matrix of " + arrow_name(r) +
                         " has ramification outside k_d");
  }
}

bool operator==(const Representation& x, const Representation& y) {
  if (x.n != y.n || x.dim_u != y.dim_u || x.dim_w != y.dim_w) return false;
  for (long i = 0; i < x.n; ++i)
    if (x.a_mat[i] != y.a_mat[i] || x.b_mat[i] != y.b_mat[i]) return false;
  return true;
}

bool operator!=(const Representation& x, const Representation& y) {
  return !(x == y);
}

Representation string_module(const StringWord& s, long d) {
  CrownQuiver q(s.n);
  if (!is_valid_string(q, s)) throw PrecondError("invalid string word");
  std::vector<Vertex> trail = string_trail(q, s);
  long len = static_cast<long>(s.letters.size());

  Representation m = Representation::empty(s.n, d);
  // local basis index of z_t inside its vertex space
  std::vector<long> local(len + 1, 0);
  for (long t = 0; t <= len; ++t) {
    long& dim = trail[t].sink ? m.dim_w[trail[t].i - 1] : m.dim_u[trail[t].i - 1];
    local[t] = dim;
    ++dim;
  }
  for (const Arrow& r : q.arrows())
    m.mat(r) = MatK::zero(m.dim_at(q.target(r)), m.dim_at(q.source(r)), d);
  for (long t = 0; t < len; ++t) {
    const Letter& lt = s.letters[t];
    MatK& mm = m.mat(lt.arrow);
    if (lt.inverse)
      mm.set(local[t], local[t + 1], Puiseux::integer(1, d));
    else
      mm.set(local[t + 1], local[t], Puiseux::integer(1, d));
  }
  return m;
}

Representation band_module(const BandWord& s, const MatK& phi,
                           long series_prec) {
  CrownQuiver q(s.n);
  if (!is_valid_band(q, s)) throw PrecondError("invalid band word");
  if (phi.rows != phi.cols) throw PrecondError("phi must be square");
  Elim el = row_reduce(phi, series_prec);
  if (el.rank < phi.rows) {
    if (el.cert_prec.infinite) throw PrecondError("phi is singular");
    throw PrecisionExhausted("phi invertibility undecided at precision " +
                             el.cert_prec.str());
  }

  StringWord once;
  once.n = s.n;
  once.letters = s.letters;
  std::vector<Vertex> trail = string_trail(q, once);
  long len = static_cast<long>(s.letters.size());
  std::vector<int> seen(2 * s.n, 0);
  for (long t = 0; t < len; ++t) {
    int idx = static_cast<int>((trail[t].i - 1) + (trail[t].sink ? s.n : 0));
    if (seen[idx]++)
      throw PrecondError("band revisits a vertex; only the crown band shape is supported");
  }

  long k = phi.rows;
  long d = phi.ram;
  Representation m = Representation::empty(s.n, d);
  m.dim_u.assign(s.n, k);
  m.dim_w.assign(s.n, k);
  MatK id = MatK::identity(k, d);
  for (long t = 0; t < len; ++t) {
    const Letter& lt = s.letters[t];
    bool last = t == len - 1;
    m.mat(lt.arrow) = last ? (lt.inverse ? inverse(phi, series_prec) : phi) : id;
  }
  return m;
}

Representation direct_sum(const Representation& x, const Representation& y) {
  if (x.n != y.n || x.d != y.d)
    throw PrecondError("direct sum requires matching quiver and ram");
  CrownQuiver q(x.n);
  Representation m = Representation::empty(x.n, x.d);
  for (long i = 0; i < x.n; ++i) {
    m.dim_u[i] = x.dim_u[i] + y.dim_u[i];
    m.dim_w[i] = x.dim_w[i] + y.dim_w[i];
  }
  for (const Arrow& r : q.arrows()) {
    const MatK& xa = x.mat(r);
    const MatK& ya = y.mat(r);
    MatK block = MatK::zero(xa.rows + ya.rows, xa.cols + ya.cols, x.d);
    for (long i = 0; i < xa.rows; ++i)
      for (long j = 0; j < xa.cols; ++j) block.set(i, j, xa.at(i, j));
    for (long i = 0; i < ya.rows; ++i)
      for (long j = 0; j < ya.cols; ++j)
        block.set(xa.rows + i, xa.cols + j, ya.at(i, j));
    m.mat(r) = block;
  }
  return m;
}

Representation twist(const Representation& m, long r) {
  CrownQuiver q(m.n);
  Representation t = Representation::empty(m.n, m.d);
  for (long i = 1; i <= m.n; ++i) {
    t.dim_u[i - 1] = m.dim_at(q.gamma_vertex(Vertex{i, false}, -r));
    t.dim_w[i - 1] = m.dim_at(q.gamma_vertex(Vertex{i, true}, -r));
  }
  for (const Arrow& a : q.arrows()) t.mat(a) = m.mat(q.gamma_arrow(a, -r)).sigma(r);
  return t;
}

namespace {

std::vector<Vertex> vertex_order(long n) {
  CrownQuiver q(n);
  return q.vertices();  // sources 1..n then sinks 1..n
}

}  // namespace

HomSpace hom_space(const Representation& m, const Representation& nn,
                   long series_prec) {
  if (m.n != nn.n || m.d != nn.d)
    throw PrecondError("hom space requires matching quiver and ram");
  CrownQuiver q(m.n);
  std::vector<Vertex> verts = vertex_order(m.n);

  // unknowns: entries of f_v (shape dim_N(v) x dim_M(v)), vertex by vertex
  std::map<std::pair<long, bool>, long> base;
  long total = 0;
  for (const Vertex& v : verts) {
    base[{v.i, v.sink}] = total;
    total += nn.dim_at(v) * m.dim_at(v);
  }
  auto var = [&](const Vertex& v, long r, long c) {
    return base.at({v.i, v.sink}) + r * m.dim_at(v) + c;
  };

  long eqs = 0;
  for (const Arrow& a : q.arrows())
    eqs += nn.dim_at(q.target(a)) * m.dim_at(q.source(a));

  MatK sys = MatK::zero(eqs, total, m.d);
  long row = 0;
  for (const Arrow& a : q.arrows()) {
    Vertex tail = q.source(a), head = q.target(a);
    const MatK& ma = m.mat(a);
    const MatK& na = nn.mat(a);
    for (long r = 0; r < nn.dim_at(head); ++r) {
      for (long c = 0; c < m.dim_at(tail); ++c) {
        // (N_a f_tail - f_head M_a)[r,c] = 0
        for (long k = 0; k < nn.dim_at(tail); ++k)
          sys.set(row, var(tail, k, c),
                  sys.at(row, var(tail, k, c)) + na.at(r, k));
        for (long k = 0; k < m.dim_at(head); ++k)
          sys.set(row, var(head, r, k),
                  sys.at(row, var(head, r, k)) - ma.at(k, c));
        ++row;
      }
    }
  }

  Elim el = row_reduce(sys, series_prec);
  HomSpace h;
  h.dim = el.kernel.cols;
  h.cert_prec = el.cert_prec;
  for (long kcol = 0; kcol < el.kernel.cols; ++kcol) {
    RepHom f;
    for (long i = 1; i <= m.n; ++i) {
      Vertex v{i, false};
      MatK fv = MatK::zero(nn.dim_at(v), m.dim_at(v), m.d);
      for (long r = 0; r < fv.rows; ++r)
        for (long c = 0; c < fv.cols; ++c)
          fv.set(r, c, el.kernel.at(var(v, r, c), kcol));
      f.at_u.push_back(fv);
    }
    for (long i = 1; i <= m.n; ++i) {
      Vertex v{i, true};
      MatK fv = MatK::zero(nn.dim_at(v), m.dim_at(v), m.d);
      for (long r = 0; r < fv.rows; ++r)
        for (long c = 0; c < fv.cols; ++c)
          fv.set(r, c, el.kernel.at(var(v, r, c), kcol));
      f.at_w.push_back(fv);
    }
    h.basis.push_back(f);
  }

  // re-substitution certificate
  for (const RepHom& f : h.basis) {
    for (const MatK& res : hom_residuals(m, nn, f)) {
      for (const auto& x : res.e) {
        if (x.has_known_term())
          throw PrecisionExhausted("hom kernel residual has a surviving term");
        if (!x.is_zero_exact()) h.cert_prec = min(h.cert_prec, x.prec());
      }
    }
  }
  h.precision_note =
      h.cert_prec.infinite
          ? "exact"
          : "certified to O(e^(" + h.cert_prec.str() + "/" +
                std::to_string(m.d) + "))";
  return h;
}

std::vector<MatK> hom_residuals(const Representation& m,
                                const Representation& nn, const RepHom& f) {
  CrownQuiver q(m.n);
  auto fv = [&](const Vertex& v) -> const MatK& {
    return v.sink ? f.at_w[v.i - 1] : f.at_u[v.i - 1];
  };
  std::vector<MatK> out;
  for (const Arrow& a : q.arrows()) {
    Vertex tail = q.source(a), head = q.target(a);
    out.push_back(nn.mat(a) * fv(tail) - fv(head) * m.mat(a));
  }
  return out;
}

namespace {

bool hom_invertible(const RepHom& f, long series_prec) {
  for (const MatK& x : f.at_u)
    if (x.rows && !is_invertible(x, series_prec)) return false;
  for (const MatK& x : f.at_w)
    if (x.rows && !is_invertible(x, series_prec)) return false;
  return true;
}

bool find_invertible_combination(const Representation& m,
                                 const Representation& nn, const HomSpace& h,
                                 long series_prec) {
  for (long lam = 1; lam <= 16; ++lam) {
    RepHom f;
    for (long i = 0; i < m.n; ++i) {
      f.at_u.push_back(MatK::zero(nn.dim_u[i], m.dim_u[i], m.d));
      f.at_w.push_back(MatK::zero(nn.dim_w[i], m.dim_w[i], m.d));
    }
    long long w = 1;
    for (const RepHom& b : h.basis) {
      Puiseux c = Puiseux::integer(w, m.d);
      for (long i = 0; i < m.n; ++i) {
        f.at_u[i] = f.at_u[i] + c * b.at_u[i];
        f.at_w[i] = f.at_w[i] + c * b.at_w[i];
      }
      w *= lam;
    }
    if (hom_invertible(f, series_prec)) return true;
  }
  return false;
}

// Certified obstruction: a one-dimensional hom space whose generator has an
// exactly singular vertex matrix contains no isomorphism.
bool line_of_singulars(const HomSpace& h, long series_prec) {
  if (h.dim != 1 || !h.cert_prec.infinite) return false;
  auto exactly_singular = [&](const MatK& x) {
    if (x.rows != x.cols) return true;
    if (x.rows == 0) return false;
    Elim el = row_reduce(x, series_prec);
    return el.cert_prec.infinite && el.rank < x.rows;
  };
  for (const MatK& x : h.basis[0].at_u)
    if (exactly_singular(x)) return true;
  for (const MatK& x : h.basis[0].at_w)
    if (exactly_singular(x)) return true;
  return false;
}

}  // namespace

Tri is_isomorphic(const Representation& m, const Representation& nn,
                  long series_prec) {
  if (m.n != nn.n || m.d != nn.d)
    throw PrecondError("isomorphism test requires matching quiver and ram");
  if (m.dim_u != nn.dim_u || m.dim_w != nn.dim_w) return Tri::no;

  HomSpace h = hom_space(m, nn, series_prec);
  if (h.dim == 0) return Tri::no;
  if (find_invertible_combination(m, nn, h, series_prec)) return Tri::yes;
  if (line_of_singulars(h, series_prec)) return Tri::no;

  HomSpace back = hom_space(nn, m, series_prec);
  if (back.dim == 0) return Tri::no;
  if (find_invertible_combination(nn, m, back, series_prec)) return Tri::yes;
  if (line_of_singulars(back, series_prec)) return Tri::no;
  return Tri::undecided;
}

Tri is_ii(const Representation& m, long series_prec) {
  return is_isomorphic(m, twist(m, 1), series_prec);
}

long smallest_twist_period(const Representation& m, long series_prec) {
  for (long r = 1; r <= m.d; ++r) {
    Tri t = is_isomorphic(m, twist(m, r), series_prec);
    if (t == Tri::yes) return r;
    if (t == Tri::undecided)
      throw PrecisionExhausted("twist period undecided at r=" +
                               std::to_string(r));
  }
  throw PrecondError("no twist period found up to d");
}

std::string rep_to_text(const Representation& m) {
  std::ostringstream out;
  out << "n " << m.n << "\n";
  out << "d " << m.d << "\n";
  out << "u";
  for (long x : m.dim_u) out << " " << x;
  out << "\nw";
  for (long x : m.dim_w) out << " " << x;
  out << "\n";
  for (long i = 0; i < m.n; ++i)
    out << "a" << (i + 1) << ": " << m.a_mat[i].text() << "\n";
  for (long i = 0; i < m.n; ++i)
    out << "b" << (i + 1) << ": " << m.b_mat[i].text() << "\n";
  return out.str();
}

namespace {

struct LineReader {
  std::vector<std::string> lines;
  size_t next = 0;

  explicit LineReader(const std::string& text) {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  bool done() {
    while (next < lines.size()) {
      bool blank = true;
      for (char c : lines[next])
        if (!isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) return false;
      ++next;
    }
    return true;
  }

  std::pair<std::string, int> take() {
    if (done()) throw ParseError("unexpected end of representation text",
                                 static_cast<int>(lines.size()), 1);
    ++next;
    return {lines[next - 1], static_cast<int>(next)};
  }
};

long parse_header_int(const std::string& line, const std::string& key,
                      int lineno) {
  std::istringstream in(line);
  std::string k;
  long v;
  if (!(in >> k) || k != key || !(in >> v))
    throw ParseError("expected '" + key + " <integer>'", lineno, 1);
  std::string rest;
  if (in >> rest) throw ParseError("trailing text after " + key, lineno, 1);
  return v;
}

std::vector<long> parse_header_dims(const std::string& line,
                                    const std::string& key, long n,
                                    int lineno) {
  std::istringstream in(line);
  std::string k;
  if (!(in >> k) || k != key)
    throw ParseError("expected '" + key + " <dims>'", lineno, 1);
  std::vector<long> dims;
  long v;
  while (in >> v) dims.push_back(v);
  if (static_cast<long>(dims.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " dimensions after '" +
                         key + "'",
                     lineno, 1);
  return dims;
}

}  // namespace

Representation rep_from_text(const std::string& text) {
  LineReader in(text);
  auto [ln, pos_n] = in.take();
  long n = parse_header_int(ln, "n", pos_n);
  auto [ld, pos_d] = in.take();
  long d = parse_header_int(ld, "d", pos_d);
  if (n < 1 || d < 1)
    throw ParseError("n and d must be positive", pos_d, 1);
  auto [lu, pos_u] = in.take();
  std::vector<long> du = parse_header_dims(lu, "u", n, pos_u);
  auto [lw, pos_w] = in.take();
  std::vector<long> dw = parse_header_dims(lw, "w", n, pos_w);

  Representation m = Representation::empty(n, d);
  m.dim_u = du;
  m.dim_w = dw;
  CrownQuiver q(n);
  std::vector<bool> have(2 * n, false);
  for (long count = 0; count < 2 * n; ++count) {
    auto [line, lineno] = in.take();
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected '<arrow>: <matrix>'", lineno, 1);
    std::string label = line.substr(0, colon);
    while (!label.empty() && isspace(static_cast<unsigned char>(label.back())))
      label.pop_back();
    if (label.size() < 2 || (label[0] != 'a' && label[0] != 'b'))
      throw ParseError("unknown arrow label '" + label + "'", lineno, 1);
    long idx = 0;
    for (size_t i = 1; i < label.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(label[i])))
        throw ParseError("unknown arrow label '" + label + "'", lineno, 1);
      idx = idx * 10 + (label[i] - '0');
    }
    if (idx < 1 || idx > n)
      throw ParseError("arrow index out of range in '" + label + "'", lineno, 1);
    Arrow r{idx, label[0] == 'b'};
    long slot = (r.b ? n : 0) + idx - 1;
    if (have[slot])
      throw ParseError("duplicate matrix for " + arrow_name(r), lineno, 1);
    have[slot] = true;
    long rows_want = m.dim_at(q.target(r));
    long cols_want = m.dim_at(q.source(r));
    try {
      m.mat(r) = parse_matrix(line.substr(colon + 1), rows_want, cols_want, d);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      size_t cut = msg.rfind(" (line ");
      if (cut != std::string::npos) msg.resize(cut);
      throw ParseError(msg, lineno, e.col);
    }
  }
  if (!in.done()) {
    auto [line, lineno] = in.take();
    throw ParseError("unexpected extra line", lineno, 1);
  }
  m.validate();
  return m;
}

}  // namespace crown
