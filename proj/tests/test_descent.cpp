#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <string>
#include <vector>

#include "crown/descent.hpp"
#include "crown/errors.hpp"
#include "crown/parse.hpp"
#include "crown/reps.hpp"

using namespace crown;

namespace {

Puiseux pe(const std::string& s) { return parse_element(s); }

bool mat_zero(const MatK& m) {
  for (const Puiseux& x : m.e)
    if (x.has_known_term()) return false;
  return true;
}

}  // namespace

TEST_CASE("shift matrix cycles basis vectors") {
  MatK e2 = shift_matrix(2);
  CHECK(e2.text() == "0, 1; 1, 0");
  MatK e3 = shift_matrix(3);
  CHECK(e3.text() == "0, 0, 1; 1, 0, 0; 0, 1, 0");
  MatK p = e3 * e3 * e3;
  CHECK(p == MatK::identity(3, 1));
  CHECK(shift_matrix(1) == MatK::identity(1, 1));
}

TEST_CASE("alpha matrix powers to a scalar") {
  Puiseux x = pe("e^(1/2)");
  MatK a1 = alpha_matrix(1, x);
  CHECK(a1.rows == 1);
  CHECK(a1.at(0, 0) == x);
  MatK a3 = alpha_matrix(3, pe("7"));
  MatK cube = a3 * a3 * a3;
  CHECK(cube == MatK::scalar(3, pe("7")));
  CHECK(alpha_matrix(2, x).text() == "0, 1; e^(1/2), 0");
}

TEST_CASE("lambda text round trip") {
  LambdaRep l;
  l.n = 3;
  l.m = 2;
  l.mp = 2;
  l.a = parse_matrix("1, 0; e^(1/2), 1", 2, 2, 2);
  l.b = MatK::identity(2, 1);
  std::string text = lambda_to_text(l);
  CHECK(text.rfind("lambda-rep n=3 m=2 mp=2\n", 0) == 0);
  LambdaRep back = lambda_from_text(text);
  CHECK(back.n == 3);
  CHECK(back.m == 2);
  CHECK(back.mp == 2);
  CHECK(back.a.ram == 2);
  CHECK(back.b.ram == 1);
  CHECK(mat_embed(back.a, 2) == mat_embed(l.a, 2));
  CHECK(back.b == l.b);
  CHECK(lambda_to_text(back) == text);
}

TEST_CASE("lambda text rejects malformed input") {
  CHECK_THROWS_AS(lambda_from_text("A: 1\nB: 1\n"), ParseError);
  CHECK_THROWS_AS(lambda_from_text("lambda-rep n=2 m=1 mp=1\nA: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(lambda_from_text("lambda-rep n=2 mp=1\nA: 1\nB: 1\n"),
                  ParseError);
  CHECK_THROWS_AS(
      lambda_from_text("lambda-rep n=2 m=1 mp=1\nA: 1\nB: 1\nC: 1\n"),
      ParseError);
}

TEST_CASE("band representation over one parameter") {
  Representation m = rep_M_a(pe("e^(1/2)"), 3, 6);
  CHECK(m.n == 3);
  CHECK(m.d == 6);
  CHECK(m.dim_vector() == minimal_imaginary_root(CrownQuiver(3)));
  CHECK(m.a_mat[0].at(0, 0) == pe("e^(1/2)").embed_to(6));
  CHECK(m.a_mat[1] == MatK::identity(1, 6));
  CHECK(m.b_mat[0] == MatK::identity(1, 6));
  CHECK_THROWS_AS(rep_M_a(pe("e^(1/2)"), 3, 3), PrecondError);
  CHECK_THROWS_AS(rep_M_a(Puiseux::zero(1), 3, 3), PrecondError);
}

TEST_CASE("string family dimensions") {
  Representation m2 = rep_family_M(2, 3);
  CHECK(m2.dim_u == std::vector<long>({1, 1, 0}));
  CHECK(m2.dim_w == std::vector<long>({1, 1, 0}));
  CHECK(m2.a_mat[0].at(0, 0) == Puiseux::integer(1, 1));
  CHECK(m2.b_mat[1].at(0, 0) == Puiseux::integer(1, 1));
  CHECK(mat_zero(m2.b_mat[0]));

  Representation n2 = rep_family_N(2, 3);
  CHECK(n2.dim_u == std::vector<long>({1, 1, 0}));
  CHECK(n2.dim_w == std::vector<long>({0, 1, 1}));
  CHECK(n2.a_mat[1].at(0, 0) == Puiseux::integer(1, 1));
  CHECK(n2.b_mat[1].at(0, 0) == Puiseux::integer(1, 1));
  CHECK(n2.b_mat[2].at(0, 0) == Puiseux::integer(1, 1));

  // full-length string: every vertex carried, one arrow missing
  Representation m3 = rep_family_M(3, 3);
  CHECK(m3.dim_u == std::vector<long>({1, 1, 1}));
  CHECK(mat_zero(m3.b_mat[0]));
  Representation n3 = rep_family_N(3, 3);
  CHECK(n3.dim_w == std::vector<long>({1, 1, 1}));
  CHECK(mat_zero(n3.a_mat[0]));

  CHECK_THROWS_AS(rep_family_M(4, 3), PrecondError);
  CHECK_THROWS_AS(rep_family_N(0, 3), PrecondError);
}

TEST_CASE("orbit sum stacks twists in ascending order") {
  Representation m = rep_M_a(pe("e^(1/2)"), 2, 2);
  Representation big = orbit_sum(m, 2);
  CHECK(big.dim_u == std::vector<long>({2, 2}));
  CHECK(big.a_mat[0].at(0, 0) == pe("e^(1/2)"));
  CHECK(big.a_mat[0].at(1, 1) == Puiseux::integer(1, 2));
  CHECK(big.a_mat[1].at(0, 0) == Puiseux::integer(1, 2));
  CHECK(big.a_mat[1].at(1, 1) == pe("e^(1/2)").sigma(1));
  CHECK(mat_zero(big.a_mat[0] - big.a_mat[0].transpose().transpose()));
  CHECK(orbit_sum(m, 1) == m);
}

TEST_CASE("slot shift cocycle for the one-point pair") {
  Representation fam = rep_embed(rep_family_M(1, 1), 2);
  DescentDatum dd = build_cocycle_shift(fam, 2);
  CHECK(dd.order == 2);
  MatK swap2 = mat_embed(shift_matrix(2), 2);
  CHECK(dd.f.at_u[0] == swap2);
  CHECK(dd.f.at_w[0] == swap2);
  VerificationReport rep = verify_cocycle(dd);
  CHECK(rep.passed());
  CHECK(rep.params.at("order") == "2");
}

TEST_CASE("slot shift cocycle needs a fixed representation") {
  Representation m = rep_M_a(pe("e^(1/2)"), 2, 2);
  CHECK_THROWS_AS(build_cocycle_shift(m, 1), PrecondError);
}

TEST_CASE("string cocycles verify exactly") {
  for (long n = 2; n <= 4; ++n)
    for (long j = 1; j <= n; ++j) {
      DescentDatum dm = build_cocycle_string(j, n, StringFamily::M);
      VerificationReport rm = verify_cocycle(dm);
      INFO("M family j=", j, " n=", n, "\n", rm.to_text());
      CHECK(rm.passed());
      DescentDatum dn = build_cocycle_string(j, n, StringFamily::N);
      VerificationReport rn = verify_cocycle(dn);
      INFO("N family j=", j, " n=", n, "\n", rn.to_text());
      CHECK(rn.passed());
      CHECK(dm.order == n);
      for (const CheckDetail& det : rm.details)
        CHECK((det.precision.empty() || det.precision == "exact"));
    }
}

TEST_CASE("band cocycle with equal ramification") {
  DescentDatum dd = build_cocycle_equal(pe("e^(1/2)"), 2);
  CHECK(dd.order == 2);
  CHECK(dd.m.d == 2);
  MatK swap2 = mat_embed(shift_matrix(2), 2);
  CHECK(dd.f.at_u[0] == swap2);
  CHECK(dd.f.at_u[1] == swap2);
  VerificationReport rep = verify_cocycle(dd);
  INFO(rep.to_text());
  CHECK(rep.passed());

  for (long n = 3; n <= 4; ++n) {
    DescentDatum de = build_cocycle_equal(pe("e^(1/" + std::to_string(n) + ")"), n);
    VerificationReport re = verify_cocycle(de);
    INFO("n=", n, "\n", re.to_text());
    CHECK(re.passed());
  }
}

TEST_CASE("band cocycle with smaller ramification") {
  Puiseux a = pe("e^(1/2)");
  DescentDatum dd = build_cocycle_small(a, 2, 3);
  CHECK(dd.order == 6);
  CHECK(dd.m.d == 6);

  // slot scaling: f_1 = diag(w, a) * shift, f_2 = f_3 = diag(w, 1) * shift
  Puiseux w = dd.f.at_u[0].at(0, 1);
  CHECK(dd.f.at_u[0].at(1, 0) == a.embed_to(6));
  CHECK(dd.f.at_u[1].at(0, 1) == w);
  CHECK(dd.f.at_u[1].at(1, 0) == Puiseux::integer(1, 6));
  CHECK(dd.f.at_u[2] == dd.f.at_u[1]);

  // w solves the norm equation  w sigma^2(w) sigma^4(w) = sigma(a)^{-1}
  Puiseux nm = w * w.sigma(2) * w.sigma(4);
  Puiseux target = a.embed_to(6).sigma(1).invert(24);
  CHECK(!(nm - target).has_known_term());

  VerificationReport rep = verify_cocycle(dd);
  INFO(rep.to_text());
  CHECK(rep.passed());

  CHECK_THROWS_AS(build_cocycle_small(a, 3, 3), PrecondError);
}

TEST_CASE("band cocycle suite across ramification splits") {
  struct Fix {
    long m, n;
  };
  std::vector<Fix> fixtures = {{2, 3}, {2, 4}, {2, 5}, {3, 4},
                               {3, 2}, {4, 2}, {4, 3}, {5, 2}};
  for (const Fix& fx : fixtures) {
    Puiseux a = pe("e^(1/" + std::to_string(fx.m) + ")");
    DescentDatum dd = build_cocycle_band(a, fx.m, fx.n);
    CHECK(dd.order == std::lcm(fx.m, fx.n));
    VerificationReport rep = verify_cocycle(dd);
    INFO("m=", fx.m, " n=", fx.n, "\n", rep.to_text());
    CHECK(rep.passed());
  }
}

TEST_CASE("band cocycle with a nonmonomial parameter") {
  DescentDatum dd = build_cocycle_equal(pe("e^(1/2) + e^(1/1)"), 2, 40);
  VerificationReport rep = verify_cocycle(dd, 40);
  INFO(rep.to_text());
  CHECK(rep.passed());
}

TEST_CASE("large ramification needs m > n") {
  CHECK_THROWS_AS(build_cocycle_large(pe("e^(1/2)"), 2, 3), PrecondError);
  DescentDatum dd = build_cocycle_large(pe("e^(1/3)"), 3, 2);
  CHECK(verify_cocycle(dd).passed());
}

TEST_CASE("scaled cocycle fails the composite condition") {
  DescentDatum dd = build_cocycle_equal(pe("e^(1/2)"), 2);
  Puiseux two = Puiseux::integer(2, 2);
  for (MatK& f : dd.f.at_u) f = two * f;
  for (MatK& f : dd.f.at_w) f = two * f;
  VerificationReport rep = verify_cocycle(dd);
  CHECK(!rep.passed());
  CHECK(rep.status() == CheckState::Fail);
  bool morphism_ok = true, composite_bad = false;
  for (const CheckDetail& det : rep.details) {
    if (det.item.rfind("morphism", 0) == 0 && det.state != CheckState::Pass)
      morphism_ok = false;
    if (det.item.rfind("composite", 0) == 0 && det.state == CheckState::Fail)
      composite_bad = true;
  }
  CHECK(morphism_ok);
  CHECK(composite_bad);
}

TEST_CASE("wrong order fails cleanly") {
  DescentDatum dd = build_cocycle_small(pe("e^(1/2)"), 2, 3);
  dd.order -= 1;
  VerificationReport rep = verify_cocycle(dd);
  CHECK(rep.status() == CheckState::Fail);
}

TEST_CASE("norm equation solutions") {
  Puiseux w = norm_solve(pe("e^(3/1)"), 1, 3, 24);
  Puiseux nm = w * w.sigma(1) * w.sigma(2);
  CHECK(!(nm - pe("e^(3/1)").embed_to(3)).has_known_term());

  Puiseux v = norm_solve(pe("-e^(-1/2)"), 2, 6, 24);
  Puiseux nv = v * v.sigma(2) * v.sigma(4);
  CHECK(!(nv - pe("-e^(-1/2)").embed_to(6)).has_known_term());

  CHECK(norm_solve(pe("e^(1/2)"), 2, 2, 24) == pe("e^(1/2)"));
  CHECK_THROWS_AS(norm_solve(pe("e^(1/2)"), 4, 6, 24), PrecondError);
}

TEST_CASE("companion matrix of a galois orbit") {
  MatK c2 = companion_from_orbit(pe("e^(1/2)"), 2);
  CHECK(c2.text() == "0, e^(1/1); 1, 0");
  CHECK(c2.transpose() == alpha_matrix(2, pe("e^(1/1)")));

  MatK c3 = companion_from_orbit(pe("e^(1/3)"), 3);
  CHECK(c3.transpose() == alpha_matrix(3, pe("e^(1/1)")));

  // minimal polynomial of e^(1/2) + e is y^2 - 2e y + (e^2 - e)
  MatK q = companion_from_orbit(pe("e^(1/2) + e^(1/1)"), 2);
  CHECK(q.at(0, 0).is_zero_exact());
  CHECK(q.at(1, 0) == Puiseux::integer(1, 1));
  CHECK(q.at(0, 1) == pe("e^(1/1) - e^(2/1)"));
  CHECK(q.at(1, 1) == pe("2*e^(1/1)"));

  CHECK_THROWS_AS(companion_from_orbit(pe("e^(1/1)"), 2), PrecondError);
}

TEST_CASE("vandermonde conjugates the companion to the orbit diagonal") {
  for (long n = 2; n <= 3; ++n) {
    Puiseux a = pe("e^(1/" + std::to_string(n) + ")");
    MatK v = vandermonde(a, n);
    MatK c = companion_from_orbit(a, n);
    MatK d = MatK::zero(n, n, n);
    for (long t = 0; t < n; ++t) d.set(t, t, a.sigma(t));
    CHECK(mat_zero(v * mat_embed(c, n) - d * v));
    CHECK(is_invertible(v));
  }
  MatK v2 = vandermonde(pe("e^(1/2)"), 2);
  CHECK(v2.at(0, 0) == Puiseux::integer(1, 2));
  CHECK(v2.at(0, 1) == pe("e^(1/2)"));
  CHECK(v2.at(1, 1) == pe("-e^(1/2)"));
}

TEST_CASE("intertwiner between corner and diagonal form") {
  Puiseux x = pe("e^(1/2)");
  MatK a = intertwiner_alpha_diag(x);
  CHECK(is_invertible(a));
  MatK d = MatK::zero(2, 2, 2);
  d.set(0, 0, x);
  d.set(1, 1, x.sigma(1));
  CHECK(mat_zero(alpha_matrix(2, pe("e^(1/1)")) * a - a * d));

  // the classical solution is also an intertwiner
  MatK h = parse_matrix("1, 1; e^(1/2), -e^(1/2)", 2, 2, 2);
  CHECK(mat_zero(alpha_matrix(2, pe("e^(1/1)")) * h - h * d));

  Puiseux y = pe("e^(1/3)");
  MatK a3 = intertwiner_alpha_diag(y);
  CHECK(is_invertible(a3));
  MatK d3 = MatK::zero(3, 3, 3);
  for (long t = 0; t < 3; ++t) d3.set(t, t, y.sigma(t));
  CHECK(mat_zero(alpha_matrix(3, pe("e^(1/1)")) * a3 - a3 * d3));
}

TEST_CASE("base change spreads a datum over the crown") {
  LambdaRep l;
  l.n = 2;
  l.m = 1;
  l.mp = 1;
  l.a = parse_matrix("e^(1/2)", 1, 1, 2);
  l.b = MatK::identity(1, 1);
  Representation r = base_change(l, 2);
  CHECK(r.n == 2);
  CHECK(r.d == 2);
  CHECK(r.a_mat[0].at(0, 0) == pe("e^(1/2)").sigma(1));
  CHECK(r.a_mat[1].at(0, 0) == pe("e^(1/2)"));
  CHECK_THROWS_AS(base_change(l, 3), PrecondError);
}

TEST_CASE("certification of band summands") {
  Puiseux a = pe("e^(1/2)");
  VerificationReport rep = certify_regular_simple(rep_M_a(a.embed_to(2), 3, 6), 2);
  INFO(rep.to_text());
  CHECK(rep.passed());

  VerificationReport bad =
      certify_regular_simple(orbit_sum(rep_M_a(a, 2, 2), 2), 2);
  CHECK(!bad.passed());
}

TEST_CASE("certification of string families") {
  for (long n = 2; n <= 3; ++n)
    for (long j = 1; j <= n; ++j) {
      VerificationReport rm =
          certify_regular_simple(rep_embed(rep_family_M(j, n), n), n);
      INFO("M family j=", j, " n=", n, "\n", rm.to_text());
      CHECK(rm.passed());
      VerificationReport rn =
          certify_regular_simple(rep_embed(rep_family_N(j, n), n), n);
      INFO("N family j=", j, " n=", n, "\n", rn.to_text());
      CHECK(rn.passed());
    }
}

TEST_CASE("homogeneous normal form decomposes into a twist orbit") {
  struct Fix {
    long n, m;
    std::string x;
  };
  std::vector<Fix> fixtures = {
      {2, 2, "e^(1/2) + e^(1/1)"}, {2, 3, "e^(1/3)"}, {3, 2, "e^(1/2)"}};
  for (const Fix& fx : fixtures) {
    Puiseux x = pe(fx.x);
    LambdaRep l = normal_form_homogeneous(x, fx.n, fx.m);
    CHECK(l.b == MatK::identity(fx.m, 1));
    if (x.terms().size() == 1)
      CHECK(l.a == alpha_matrix(fx.m, x.pow(fx.m, 24).restrict_to(1)));
    long d = std::lcm(fx.n, fx.m);
    Representation bc = base_change(l, d);
    INFO("n=", fx.n, " m=", fx.m, " x=", fx.x);
    CHECK(defect(CrownQuiver(fx.n), bc.dim_vector()) == 0);

    Puiseux xn = x.embed_to(fx.m).pow(fx.n, 24).embed_to(d);
    Representation summand = rep_M_a(xn, fx.n, d);
    VerificationReport cert = certify_regular_simple(summand, fx.m);
    INFO(cert.to_text());
    CHECK(cert.passed());
    CHECK(is_isomorphic(bc, orbit_sum(summand, fx.m)) == Tri::yes);

    HomSpace ends = hom_space(bc, bc);
    CHECK(ends.dim == fx.m);
    CHECK(is_isomorphic(bc, twist(bc, 1)) == Tri::yes);
  }
}

TEST_CASE("nonhomogeneous normal forms match the string orbits") {
  for (long n = 2; n <= 3; ++n)
    for (long j = 1; j <= n; ++j) {
      LambdaRep mb = normal_form_nonhomogeneous(j, n, NormalFormVariant::MB);
      LambdaRep bm = normal_form_nonhomogeneous(j, n, NormalFormVariant::BM);
      Representation bc_mb = base_change(mb, n);
      Representation bc_bm = base_change(bm, n);
      Representation om = orbit_sum(rep_embed(rep_family_M(j, n), n), n);
      Representation on = orbit_sum(rep_embed(rep_family_N(j, n), n), n);
      INFO("j=", j, " n=", n);
      CHECK(is_isomorphic(bc_mb, om) == Tri::yes);
      CHECK(is_isomorphic(bc_bm, on) == Tri::yes);
      CHECK(is_isomorphic(bc_mb, on) == Tri::no);
    }
}

TEST_CASE("kronecker specialization verifies") {
  for (long n = 2; n <= 3; ++n) {
    Puiseux a = pe("e^(1/" + std::to_string(n) + ")");
    VerificationReport rep = verify_kronecker(a, n);
    INFO(rep.to_text());
    CHECK(rep.passed());
  }
}
