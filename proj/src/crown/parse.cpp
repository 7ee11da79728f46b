#include "crown/parse.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace crown {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const char* w) {
    size_t p = pos;
    for (const char* q = w; *q; ++q, ++p)
      if (p >= s.size() || s[p] != *q) return false;
    pos = p;
    return true;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    if (peek() == '+' || peek() == '-') ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected an integer");
    return mpz_class(s.substr(start, pos - start));
  }

  Rat rational() {
    mpz_class num = integer();
    if (eat('/')) {
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }
};

struct RawTerm {
  CycScalar coeff;
  mpz_class expo_num;
  long expo_den = 1;  // 1 when no e-part
};

// coeff := rational | rational '*' z-part | z-part | '(' sum ')'
CycScalar parse_coeff(Cursor& c);

CycScalar parse_zpart(Cursor& c) {
  c.expect('z');
  mpz_class ordz = c.integer();
  if (ordz <= 0 || !ordz.fits_slong_p()) c.fail("bad root-of-unity order");
  long order = ordz.get_si();
  long k = 1;
  if (c.eat('^')) {
    mpz_class kk = c.integer();
    mpz_class kmod = kk % order;
    if (kmod < 0) kmod += order;
    k = kmod.get_si();
  }
  return CycScalar::zeta_pow(order, k);
}

CycScalar parse_atom(Cursor& c) {
  c.skip_ws();
  if (c.peek() == '(') {
    c.expect('(');
    CycScalar acc = parse_coeff(c);
    c.skip_ws();
    while (c.peek() == '+' || c.peek() == '-') {
      bool minus = c.peek() == '-';
      ++c.pos;
      CycScalar next = parse_coeff(c);
      acc = minus ? acc - next : acc + next;
      c.skip_ws();
    }
    c.expect(')');
    return acc;
  }
  if (c.peek() == 'z') return parse_zpart(c);
  Rat r = c.rational();
  // optional '*zN^k' (but not '*e...', which belongs to the term)
  c.skip_ws();
  size_t save = c.pos;
  if (c.eat('*')) {
    c.skip_ws();
    if (c.peek() == 'z') {
      CycScalar z = parse_zpart(c);
      CycScalar rs = CycScalar::of(r, z.order());
      return rs * z;
    }
    c.pos = save;
  }
  return CycScalar::of(r, 1);
}

CycScalar parse_coeff(Cursor& c) {
  c.skip_ws();
  return parse_atom(c);
}

RawTerm parse_term(Cursor& c) {
  RawTerm t;
  c.skip_ws();
  if (c.peek() == 'e') {
    t.coeff = CycScalar::one(1);
  } else {
    t.coeff = parse_coeff(c);
    size_t save = c.pos;
    c.skip_ws();
    if (!c.eat('*')) {
      c.pos = save;
      return t;
    }
    c.skip_ws();
    if (c.peek() != 'e') c.fail("expected 'e^(' after '*'");
  }
  if (!c.eat_word("e^(")) c.fail("expected 'e^('");
  t.expo_num = c.integer();
  c.skip_ws();
  c.expect('/');
  mpz_class den = c.integer();
  c.skip_ws();
  c.expect(')');
  if (den <= 0 || !den.fits_slong_p()) c.fail("exponent denominator must be positive");
  t.expo_den = den.get_si();
  return t;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool is_negative_rational(const Rat& r) { return sgn(r) < 0; }

// Single nonzero component (k, coeff) of a cyclotomic scalar in canonical
// text, with |coeff| and a separate sign flag so callers can use ' - '.
struct CompText {
  bool negative;
  std::string text;  // text of the absolute value
};

CompText component_text(long order, long k, const Rat& c) {
  Rat a = c;
  bool neg = is_negative_rational(a);
  if (neg) a = -a;
  std::string body;
  if (k == 0) {
    body = rat_str(a);
  } else {
    std::string z = "z" + std::to_string(order) + "^" + std::to_string(k);
    body = (a == 1) ? z : rat_str(a) + "*" + z;
  }
  return {neg, body};
}

}  // namespace

Puiseux parse_element(const std::string& text) {
  Cursor c{text};
  if (c.done()) c.fail("empty element");
  struct Signed {
    bool minus;
    RawTerm term;
  };
  std::vector<Signed> terms;
  bool first_minus = false;
  c.skip_ws();
  if (c.peek() == '-') {
    // A leading sign is part of the first rational where possible; a bare
    // leading '-' before '(', 'z' or 'e' negates the first term.
    size_t save = c.pos;
    ++c.pos;
    c.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(c.peek())))
      c.pos = save;
    else
      first_minus = true;
  }
  terms.push_back({first_minus, parse_term(c)});
  while (!c.done()) {
    c.skip_ws();
    char op = c.peek();
    if (op != '+' && op != '-') c.fail("expected '+' or '-' between terms");
    ++c.pos;
    terms.push_back({op == '-', parse_term(c)});
  }

  long ram = 1;
  for (const auto& t : terms) ram = std::lcm(ram, t.term.expo_den);
  Puiseux acc = Puiseux::zero(ram);
  for (const auto& t : terms) {
    mpz_class scaled = t.term.expo_num * (ram / t.term.expo_den);
    if (!scaled.fits_slong_p()) throw ParseError("exponent out of range", 1, 1);
    Puiseux mono = Puiseux::monomial(t.term.coeff, scaled.get_si(), ram);
    acc = t.minus ? acc - mono : acc + mono;
  }
  return acc;
}

std::string print_coeff(const CycScalar& c) {
  long order = c.order();
  std::vector<std::pair<long, Rat>> comps;
  for (size_t k = 0; k < c.coeffs().size(); ++k)
    if (c.coeffs()[k] != 0) comps.emplace_back(static_cast<long>(k), c.coeffs()[k]);
  if (comps.empty()) return "0";
  // Prefer the q*zN^k form whenever c is a rational multiple of a root of
  // unity (smallest such k wins); covers every single-component value too.
  for (long k = 0; k < order; ++k) {
    CycScalar u = c * CycScalar::zeta_pow(order, -k);
    if (!u.is_rational()) continue;
    CompText ct = component_text(order, k, u.rational_part());
    return ct.negative ? "-" + ct.text : ct.text;
  }
  std::string out = "(";
  for (size_t i = 0; i < comps.size(); ++i) {
    CompText ct = component_text(order, comps[i].first, comps[i].second);
    if (i == 0)
      out += ct.negative ? "-" + ct.text : ct.text;
    else
      out += (ct.negative ? " - " : " + ") + ct.text;
  }
  out += ")";
  return out;
}

std::string print_element(const Puiseux& x) {
  if (x.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    std::string coeff = print_coeff(c);
    bool pulled_minus = false;
    std::string body;
    if (!coeff.empty() && coeff[0] == '-' ) {
      pulled_minus = true;
      body = coeff.substr(1);
    } else {
      body = coeff;
    }
    std::string term = body;
    if (e != 0) {
      std::string epart = "e^(" + std::to_string(e) + "/" + std::to_string(x.ram()) + ")";
      term = (body == "1") ? epart : body + "*" + epart;
    }
    if (first) {
      out += (pulled_minus ? "-" : "") + term;
      first = false;
    } else {
      out += (pulled_minus ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string Puiseux::describe() const {
  std::string out = print_element(*this);
  if (!prec_.infinite)
    out += (terms_.empty() ? std::string("O(") : std::string(" + O(")) + "e^(" +
           std::to_string(prec_.v) + "/" + std::to_string(ram_) + "))";
  if (terms_.empty() && prec_.infinite) return "0";
  if (terms_.empty() && !prec_.infinite) {
    // "0" would overstate what is known.
    return "O(e^(" + std::to_string(prec_.v) + "/" + std::to_string(ram_) + "))";
  }
  return out;
}

}  // namespace crown
