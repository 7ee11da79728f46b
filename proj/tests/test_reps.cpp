#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crown/parse.hpp"
#include "crown/reps.hpp"

using namespace crown;

namespace {

Puiseux pe(const std::string& s) { return parse_element(s); }

MatK pm(const std::string& text, long rows, long cols, long ram) {
  return parse_matrix(text, rows, cols, ram);
}

StringWord reverse_word(const StringWord& s) {
  StringWord r;
  r.n = s.n;
  for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it)
    r.letters.push_back(Letter{it->arrow, !it->inverse});
  return r;
}

// n = 1 (Kronecker) module: a_1 acts by a, b_1 by the identity.
Representation kron(const Puiseux& a, long d) {
  Representation m = Representation::empty(1, d);
  m.dim_u = {1};
  m.dim_w = {1};
  m.a_mat[0] = MatK::of(1, 1, d, {a});
  m.b_mat[0] = MatK::identity(1, d);
  return m;
}

}  // namespace

TEST_CASE("row reduction") {
  Elim el = row_reduce(pm("1, 2; 2, 4", 2, 2, 1));
  CHECK(el.rank == 1);
  CHECK(el.pivot_cols == std::vector<long>{0});
  CHECK(el.cert_prec.infinite);
  CHECK(el.kernel.cols == 1);
  CHECK(el.kernel.at(0, 0) == pe("-2"));
  CHECK(el.kernel.at(1, 0) == pe("1"));
  CHECK(el.rref.at(0, 0) == pe("1"));
  CHECK(el.rref.at(0, 1) == pe("2"));
  CHECK(el.rref.at(1, 0).is_zero_exact());
  CHECK(el.rref.at(1, 1).is_zero_exact());

  // the unit entry must be preferred as pivot over the epsilon entry
  Elim vp = row_reduce(pm("e^(1/1), 1; 1, e^(1/1)", 2, 2, 1));
  CHECK(vp.rank == 2);
  CHECK(vp.kernel.cols == 0);
  CHECK(vp.cert_prec.infinite);
  CHECK(is_invertible(pm("e^(1/1), 1; 1, e^(1/1)", 2, 2, 1)));

  Elim z = row_reduce(MatK::zero(2, 3, 1));
  CHECK(z.rank == 0);
  CHECK(z.cert_prec.infinite);
  CHECK(z.kernel == MatK::identity(3, 1));

  // a column that is only zero at finite precision cannot be certified
  MatK u = MatK::zero(1, 1, 1);
  u.set(0, 0, Puiseux::zero_at(XInt::fin(5), 1, 1));
  Elim eu = row_reduce(u);
  CHECK(eu.rank == 0);
  CHECK(!eu.cert_prec.infinite);
  CHECK(eu.cert_prec == XInt::fin(5));
  CHECK(!is_invertible(u));
}

TEST_CASE("matrix inverse") {
  MatK v = pm("1, 1; e^(1/2), -e^(1/2)", 2, 2, 2);
  MatK vi = inverse(v);
  CHECK(vi.is_exact());
  CHECK(v * vi == MatK::identity(2, 2));
  CHECK(vi * v == MatK::identity(2, 2));
  CHECK(vi.at(0, 0) == pe("1/2"));
  CHECK(vi.at(0, 1) == pe("1/2*e^(-1/2)"));
  CHECK(vi.at(1, 1) == pe("-1/2*e^(-1/2)"));

  // non-monomial pivots only invert to truncated precision
  MatK m = pm("e^(1/1), 1; 1, e^(1/1)", 2, 2, 1);
  MatK mi = inverse(m, 30);
  XInt p = XInt::fin(20);
  CHECK((mi * m).with_prec(p) == MatK::identity(2, 1).with_prec(p));
  CHECK((m * mi).with_prec(p) == MatK::identity(2, 1).with_prec(p));

  CHECK_THROWS_AS(inverse(pm("1, 2; 2, 4", 2, 2, 1)), PrecondError);
  CHECK_THROWS_AS(inverse(MatK::zero(2, 3, 1)), PrecondError);

  MatK u = MatK::zero(1, 1, 1);
  u.set(0, 0, Puiseux::zero_at(XInt::fin(5), 1, 1));
  CHECK_THROWS_AS(inverse(u), PrecisionExhausted);
}

TEST_CASE("matrix text round trip") {
  MatK m = pm("1 + e^(1/2), -2/3; 0, e^(-1/1) + z4*e^(1/1)", 2, 2, 4);
  CHECK(parse_matrix(m.text(), 2, 2, 4) == m);
  CHECK(m.transpose().transpose() == m);

  MatK empty = MatK::zero(0, 3, 2);
  CHECK(empty.text() == "");
  CHECK(parse_matrix("", 0, 3, 2) == empty);
  CHECK(parse_matrix("  ", 0, 0, 1) == MatK::zero(0, 0, 1));

  CHECK_THROWS_AS(parse_matrix("1, 2; 3", 2, 2, 1), ParseError);
  CHECK_THROWS_AS(parse_matrix("1; 2; 3", 2, 1, 1), ParseError);
  CHECK_THROWS_AS(parse_matrix("", 1, 1, 1), ParseError);
  CHECK_THROWS_AS(parse_matrix("e^(1/2)", 1, 1, 3), ParseError);

  MatK trunc = MatK::identity(1, 1).with_prec(XInt::fin(4));
  CHECK_THROWS_AS(trunc.text(), PrecondError);
}

TEST_CASE("string modules") {
  CrownQuiver q(3);

  Representation m = string_module(string_word(q, Vertex{1, true}, 1));
  CHECK(m.n == 3);
  CHECK(m.d == 1);
  CHECK(m.dim_u == std::vector<long>{1, 0, 0});
  CHECK(m.dim_w == std::vector<long>{1, 0, 0});
  CHECK(m.a_mat[0] == MatK::identity(1, 1));
  CHECK(m.b_mat[0].rows == 1);
  CHECK(m.b_mat[0].cols == 0);
  CHECK_NOTHROW(m.validate());
  CHECK(defect(q, m.dim_vector()) == 0);

  Representation s11 = string_module(string_word(q, Vertex{1, false}, 1));
  CHECK(s11.dim_u == std::vector<long>{1, 0, 0});
  CHECK(s11.dim_w == std::vector<long>{0, 1, 0});
  CHECK(s11.b_mat[1] == MatK::identity(1, 1));
  CHECK(defect(q, s11.dim_vector()) == 0);

  Representation s13 = string_module(string_word(q, Vertex{1, true}, 3));
  CHECK(s13.dim_u == std::vector<long>{1, 1, 0});
  CHECK(s13.dim_w == std::vector<long>{1, 1, 0});
  CHECK(s13.a_mat[0] == MatK::identity(1, 1));
  CHECK(s13.a_mat[1] == MatK::identity(1, 1));
  CHECK(s13.b_mat[1] == MatK::identity(1, 1));
  CHECK(s13.a_mat[2].rows == 0);
  CHECK_NOTHROW(s13.validate());

  // over a larger coefficient field the entries embed into k_d
  Representation wide = string_module(string_word(q, Vertex{1, true}, 3), 4);
  CHECK(wide.d == 4);
  CHECK(wide.a_mat[0].ram == 4);
  CHECK_NOTHROW(wide.validate());

  StringWord bad;
  bad.n = 3;
  bad.letters = {Letter{Arrow{1, false}, false}, Letter{Arrow{1, false}, true}};
  CHECK_THROWS_AS(string_module(bad), PrecondError);
}

TEST_CASE("string equivalence dichotomy") {
  for (long n = 2; n <= 3; ++n) {
    CrownQuiver q(n);
    std::vector<Representation> mods;
    for (long i = 1; i <= n; ++i) {
      for (long j = 1; j <= n; ++j) {
        mods.push_back(string_module(string_word(q, Vertex{i, false}, j)));
        mods.push_back(string_module(string_word(q, Vertex{i, true}, j)));
      }
    }
    for (size_t x = 0; x < mods.size(); ++x) {
      CHECK(is_isomorphic(mods[x], mods[x]) == Tri::yes);
      for (size_t y = x + 1; y < mods.size(); ++y)
        CHECK(is_isomorphic(mods[x], mods[y]) == Tri::no);
    }
    // a word and its reverse present the same module
    for (long i = 1; i <= n; ++i) {
      StringWord s = string_word(q, Vertex{i, true}, n);
      StringWord r = reverse_word(s);
      REQUIRE(is_valid_string(q, r));
      CHECK(is_isomorphic(string_module(s), string_module(r)) == Tri::yes);
    }
  }
}

TEST_CASE("band modules") {
  CrownQuiver q(2);
  BandWord b = the_band(q);

  Representation m = band_module(b, pm("e^(1/1)", 1, 1, 1));
  CHECK(m.dim_u == std::vector<long>{1, 1});
  CHECK(m.dim_w == std::vector<long>{1, 1});
  CHECK(m.a_mat[0] == pm("e^(1/1)", 1, 1, 1));
  CHECK(m.a_mat[1] == MatK::identity(1, 1));
  CHECK(m.b_mat[0] == MatK::identity(1, 1));
  CHECK(m.b_mat[1] == MatK::identity(1, 1));
  CHECK(defect(q, m.dim_vector()) == 0);
  CHECK_NOTHROW(m.validate());

  Representation k2 = band_module(b, pm("0, 1; 1, 0", 2, 2, 1));
  CHECK(k2.dim_vector() == minimal_imaginary_root(q).scaled(2));
  CHECK(k2.a_mat[0] == pm("0, 1; 1, 0", 2, 2, 1));
  CHECK(k2.b_mat[1] == MatK::identity(2, 1));

  Representation over = band_module(b, pm("e^(1/2)", 1, 1, 2));
  CHECK(over.d == 2);
  CHECK_NOTHROW(over.validate());

  CHECK_THROWS_AS(band_module(b, pm("1, 1; 1, 1", 2, 2, 1)), PrecondError);
  MatK u = MatK::zero(1, 1, 1);
  u.set(0, 0, Puiseux::zero_at(XInt::fin(3), 1, 1));
  CHECK_THROWS_AS(band_module(b, u), PrecisionExhausted);

  BandWord doubled;
  doubled.n = 2;
  doubled.letters = b.letters;
  doubled.letters.insert(doubled.letters.end(), b.letters.begin(),
                         b.letters.end());
  CHECK_THROWS_AS(band_module(doubled, MatK::identity(2, 1)), PrecondError);
}

TEST_CASE("direct sums") {
  CrownQuiver q(3);
  Representation x = string_module(string_word(q, Vertex{1, true}, 3));
  Representation y = string_module(string_word(q, Vertex{2, false}, 2));

  Representation s = direct_sum(x, y);
  CHECK(s.dim_vector() == x.dim_vector() + y.dim_vector());
  CHECK(defect(q, s.dim_vector()) ==
        defect(q, x.dim_vector()) + defect(q, y.dim_vector()));
  CHECK_NOTHROW(s.validate());
  CHECK(direct_sum(x, Representation::empty(3, 1)) == x);

  Representation e1 = string_module(string_word(q, Vertex{1, true}, 1));
  CHECK(hom_space(e1, e1).dim == 1);
  CHECK(hom_space(e1, direct_sum(e1, e1)).dim == 2);
  CHECK(hom_space(direct_sum(e1, e1), direct_sum(e1, e1)).dim == 4);
  CHECK(hom_space(e1, direct_sum(x, y)).dim ==
        hom_space(e1, x).dim + hom_space(e1, y).dim);

  CHECK_THROWS_AS(direct_sum(x, Representation::empty(2, 1)), PrecondError);
}

TEST_CASE("twist") {
  CrownQuiver q(3);
  Representation m = string_module(string_word(q, Vertex{1, true}, 1));

  // the reverse shift moves the support one step against the cycle
  CHECK(twist(m, 1) == string_module(string_word(q, Vertex{3, true}, 1)));
  CHECK(twist(m, 2) == string_module(string_word(q, Vertex{2, true}, 1)));
  CHECK(twist(twist(m, 1), 1) == twist(m, 2));
  CHECK(twist(m, 3) == m);

  Representation m3 = string_module(string_word(q, Vertex{1, true}, 2), 3);
  CHECK(twist(twist(m3, 1), 2) == twist(m3, 3));
  CHECK(twist(m3, 3) == m3);
  CHECK_NOTHROW(twist(m3, 1).validate());

  // Galois part acts on the entries
  Representation k = kron(pe("e^(1/2)"), 2);
  CHECK(twist(k, 1).a_mat[0].at(0, 0) == pe("-e^(1/2)"));
  CHECK(twist(k, 1).b_mat[0] == MatK::identity(1, 2));
  CHECK(twist(k, 2) == k);
}

TEST_CASE("hom spaces") {
  CrownQuiver q(3);
  Representation e1 = string_module(string_word(q, Vertex{1, true}, 1));
  HomSpace h = hom_space(e1, e1);
  CHECK(h.dim == 1);
  CHECK(h.cert_prec.infinite);
  CHECK(h.precision_note == "exact");
  for (const MatK& r : hom_residuals(e1, e1, h.basis[0]))
    for (const auto& x : r.e) CHECK(x.is_zero_exact());

  Representation s11 = string_module(string_word(q, Vertex{1, false}, 1));
  CHECK(hom_space(e1, s11).dim == 0);
  CHECK(hom_space(s11, e1).dim == 0);

  // finite-precision input degrades the certificate, not the answer
  Representation ka = kron(Puiseux::eps(2).with_prec(XInt::fin(5)), 2);
  HomSpace hk = hom_space(ka, ka);
  CHECK(hk.dim == 1);
  CHECK(hk.cert_prec == XInt::fin(5));
  CHECK(hk.precision_note == "certified to O(e^(5/2))");

  CHECK_THROWS_AS(hom_space(e1, kron(pe("e^(1/1)"), 1)), PrecondError);
}

TEST_CASE("isomorphism and twist period") {
  Representation a = kron(pe("e^(1/2)"), 2);
  Representation b = kron(pe("-e^(1/2)"), 2);
  CHECK(is_isomorphic(a, a) == Tri::yes);
  CHECK(is_isomorphic(a, b) == Tri::no);
  CHECK(is_isomorphic(a, kron(pe("e^(1/2)+e^(1/1)"), 2)) == Tri::no);
  CHECK(is_isomorphic(a, twist(a, 1)) == Tri::no);
  CHECK(is_isomorphic(a, twist(a, 2)) == Tri::yes);
  CHECK(smallest_twist_period(a) == 2);
  CHECK(is_ii(a) == Tri::no);

  CrownQuiver q2(2);
  Representation ones = band_module(the_band(q2), MatK::identity(1, 1));
  CHECK(is_ii(ones) == Tri::yes);
  CHECK(smallest_twist_period(ones) == 1);

  CHECK_THROWS_AS(is_isomorphic(a, kron(pe("e^(1/1)"), 4)), PrecondError);
}

TEST_CASE("representation text") {
  CrownQuiver q(3);
  Representation m = string_module(string_word(q, Vertex{1, true}, 3), 2);
  CHECK(rep_from_text(rep_to_text(m)) == m);

  Representation band = band_module(the_band(CrownQuiver(2)),
                                    pm("e^(1/2)", 1, 1, 2));
  CHECK(rep_from_text(rep_to_text(band)) == band);

  Representation k = kron(pe("e^(1/2) + 2*e^(1/1)"), 2);
  CHECK(rep_from_text(rep_to_text(k)) == k);
  CHECK(rep_to_text(kron(pe("e^(1/1)"), 1)) ==
        "n 1\nd 1\nu 1\nw 1\na1: e^(1/1)\nb1: 1\n");

  // arrow lines may come in any order
  CHECK(rep_from_text("n 1\nd 1\nu 1\nw 1\nb1: 1\na1: e^(1/1)\n") ==
        kron(pe("e^(1/1)"), 1));

  CHECK_THROWS_AS(rep_from_text(""), ParseError);
  CHECK_THROWS_AS(rep_from_text("n 1\nd 1\nu 1 2\nw 1\na1: e^(1/1)\nb1: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(rep_from_text("n 1\nd 1\nu 1\nw 1\na1: e^(1/1)\na1: e^(1/1)\n"),
                  ParseError);
  CHECK_THROWS_AS(rep_from_text("n 1\nd 1\nu 1\nw 1\nc1: e^(1/1)\nb1: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(rep_from_text("n 1\nd 1\nu 1\nw 1\na1: e^(1/1)\n"), ParseError);
  CHECK_THROWS_AS(rep_from_text("n 1\nd 1\nu 1\nw 1\na1: e^(1/1)\nb1: 1\nx\n"),
                  ParseError);
  CHECK_THROWS_AS(rep_from_text("n 1\nd 1\nu 1\nw 1\na1: e^(1/1), e^(1/1)\nb1: 1\n"),
                  ParseError);

  try {
    rep_from_text("n 1\nd 1\nu 1\nw 1\na1: ???\nb1: 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
  }
  try {
    rep_from_text("n 1\nd 1\nu 1\nw 1\na1: e^(1/1)\nb1: 1\nextra: 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 7);
  }
}
