#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "crown/tensor.hpp"

using namespace crown;

namespace {

std::mt19937_64 rng(0x7e45041ULL);

Rat rand_rat() {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Puiseux rand_elem(long ram) {
  std::uniform_int_distribution<int> nter(1, 3);
  std::uniform_int_distribution<long long> expo(-4, 4);
  std::uniform_int_distribution<long> zk(0, ram - 1);
  Puiseux p = Puiseux::zero(ram);
  int k = nter(rng);
  for (int t = 0; t < k; ++t) {
    CycScalar c = CycScalar::of(rand_rat(), 1) * CycScalar::zeta_pow(ram, zk(rng));
    p = p + Puiseux::monomial(c, expo(rng), ram);
  }
  return p;
}

TensorElement rand_tensor(long d, long n) {
  TensorElement t = TensorElement::zero(d, n);
  for (long l = 0; l < n; ++l) t.coords[l] = rand_elem(d);
  return t;
}

LambdaTensorElement rand_lambda(long d, long n) {
  LambdaTensorElement x;
  x.t11 = rand_tensor(d, n);
  x.t22 = rand_tensor(d, n);
  x.t12a = rand_tensor(d, n);
  x.t12b = rand_tensor(d, n);
  return x;
}

}  // namespace

TEST_CASE("tensor ring axioms") {
  TensorElement sq = tensor_mul(TensorElement::basis_vector(2, 2, 1),
                                TensorElement::basis_vector(2, 2, 1));
  CHECK(sq == left_embed(Puiseux::eps(2), 2, 2));

  for (auto [d, n] : {std::pair<long, long>{2, 2}, {4, 2}, {3, 3}}) {
    TensorElement one = TensorElement::unit(d, n);
    for (int t = 0; t < 20; ++t) {
      TensorElement x = rand_tensor(d, n), y = rand_tensor(d, n),
                    z = rand_tensor(d, n);
      CHECK(tensor_mul(tensor_mul(x, y), z) == tensor_mul(x, tensor_mul(y, z)));
      CHECK(tensor_mul(x, y) == tensor_mul(y, x));
      CHECK(tensor_mul(one, x) == x);
      CHECK(tensor_mul(x, y + z) == tensor_mul(x, y) + tensor_mul(x, z));
    }
  }

  CHECK_THROWS_AS(tensor_mul(TensorElement::unit(2, 2), TensorElement::unit(4, 2)),
                  PrecondError);
  CHECK_THROWS_AS(TensorElement::zero(3, 2), PrecondError);
  CHECK(TensorElement::unit(4, 2).is_exact());
}

TEST_CASE("beta idempotent system") {
  for (long n = 2; n <= 6; ++n) {
    for (long d : {n, 2 * n}) {
      std::vector<TensorElement> betas = beta_basis(d, n);
      REQUIRE(betas.size() == static_cast<size_t>(n));
      TensorElement sum = TensorElement::zero(d, n);
      for (long j = 0; j < n; ++j) {
        CHECK(betas[j].is_exact());
        sum = sum + betas[j];
        for (long l = 0; l < n; ++l) {
          TensorElement prod = tensor_mul(betas[j], betas[l]);
          if (j == l)
            CHECK(prod == betas[j]);
          else
            CHECK(prod == TensorElement::zero(d, n));
        }
      }
      CHECK(sum == TensorElement::unit(d, n));
    }
  }

  std::vector<TensorElement> b2 = beta_basis(2, 2);
  CHECK(b2[0].coords[0] == Puiseux::rational(Rat(1, 2), 2));
  CHECK(b2[0].coords[1] == Puiseux::monomial(CycScalar::of(Rat(1, 2), 1), -1, 2));
  CHECK(tensor_mul(b2[0], b2[1]) == TensorElement::zero(2, 2));

  CHECK_THROWS_AS(beta_basis(3, 2), PrecondError);
}

TEST_CASE("sigma on tensors") {
  std::vector<TensorElement> b3 = beta_basis(3, 3);
  CHECK(sigma_tensor(b3[1]) == b3[0]);
  CHECK(sigma_tensor(b3[0]) == b3[2]);
  for (long j = 0; j < 3; ++j) {
    CHECK(sigma_right(b3[j]) == b3[(j + 1) % 3]);
    CHECK(sigma_tensor(b3[j], 3) == b3[j]);
  }

  std::vector<TensorElement> b63 = beta_basis(6, 3);
  CHECK(sigma_tensor(b63[1]) == b63[0]);

  for (int t = 0; t < 20; ++t) {
    TensorElement x = rand_tensor(4, 2), y = rand_tensor(4, 2);
    CHECK(sigma_tensor(tensor_mul(x, y)) ==
          tensor_mul(sigma_tensor(x), sigma_tensor(y)));
    CHECK(sigma_tensor(x + y) == sigma_tensor(x) + sigma_tensor(y));
    CHECK(sigma_tensor(x, 4) == x);
  }

  LambdaBasis lb = lambda_basis(3, 3);
  for (long j = 0; j < 3; ++j) {
    CHECK(sigma_tensor(lb.b2[j]) == lb.b2[(j + 2) % 3]);
    CHECK(sigma_tensor(lb.b3[j]) == lb.b3[(j + 2) % 3]);
  }
}

TEST_CASE("lambda algebra") {
  LambdaTensorElement one = LambdaTensorElement::unit(2, 2);
  for (int t = 0; t < 15; ++t) {
    LambdaTensorElement x = rand_lambda(2, 2), y = rand_lambda(2, 2),
                        z = rand_lambda(2, 2);
    CHECK(lambda_mul(lambda_mul(x, y), z) == lambda_mul(x, lambda_mul(y, z)));
    CHECK(lambda_mul(one, x) == x);
    CHECK(lambda_mul(x, one) == x);
    CHECK(lambda_mul(x, y + z) == lambda_mul(x, y) + lambda_mul(x, z));
  }

  LambdaBasis lb = lambda_basis(3, 3);
  LambdaTensorElement zero = LambdaTensorElement::zero(3, 3);
  for (long j = 0; j < 3; ++j) {
    CHECK(lambda_mul(lb.b1[j], lb.b1[j]) == lb.b1[j]);
    for (long i = 0; i < 3; ++i) CHECK(lambda_mul(lb.b2[j], lb.b1[i]) == zero);
  }
}

TEST_CASE("theorem table") {
  VerificationReport r22 = verify_theorem_3_2(2, 2);
  CHECK(r22.passed());
  CHECK(r22.details.size() == 65);
  long products = 0;
  for (const auto& d : r22.details)
    if (d.item.find(" * ") != std::string::npos) ++products;
  CHECK(products == 64);

  CHECK(verify_theorem_3_2(4, 2).passed());
  CHECK(verify_theorem_3_2(3, 3).passed());

  CHECK_THROWS_AS(verify_theorem_3_2(2, 4), PrecondError);
}

TEST_CASE("action formulas on the idempotent basis") {
  CHECK(lemma_3_3_check(Puiseux::eps_pow(1, 2), 1).passed());
  CHECK(lemma_3_3_check(Puiseux::eps(2), 1).passed());
  CHECK(lemma_3_3_check(Puiseux::eps(2), 2).passed());
  CHECK(lemma_3_3_check(Puiseux::eps_pow(1, 3), 3).passed());

  for (long n : {2L, 3L, 4L}) {
    for (int t = 0; t < 10; ++t) {
      Puiseux a = rand_elem(n);
      for (long j = 1; j <= n; ++j) CHECK(lemma_3_3_check(a, j).passed());
    }
  }

  CHECK_THROWS_AS(lemma_3_3_check(Puiseux::eps(2).with_prec(XInt::fin(3)), 1),
                  PrecondError);
  CHECK_THROWS_AS(lemma_3_3_check(Puiseux::eps(2), 0), PrecondError);
  CHECK_THROWS_AS(lemma_3_3_check(Puiseux::eps(2), 3), PrecondError);
}

TEST_CASE("report round trip") {
  VerificationReport r;
  r.check_id = "thm-0.0";
  r.params["n"] = "2";
  r.params["a"] = "e^(1/2)";
  r.record_eq("first", "x", "x");
  r.record_eq("second", "x", "y", "24");
  r.record_undecided("third", "0", "O(e^(5/2))", "5");
  CHECK(r.status() == CheckState::Fail);
  CHECK(!r.passed());
  std::string text = r.to_text();
  CHECK(text.find("[ok] first") != std::string::npos);
  CHECK(text.find("[FAIL] second") != std::string::npos);
  CHECK(text.find("[??] third") != std::string::npos);
  CHECK(text.find("status: fail") != std::string::npos);

  std::string js = r.to_json();
  VerificationReport back = report_from_json(js);
  CHECK(back.to_json() == js);
  CHECK(back.to_text() == text);

  VerificationReport u;
  u.check_id = "x";
  u.record_undecided("only", "a", "b");
  CHECK(u.status() == CheckState::Undecided);
  VerificationReport e;
  e.check_id = "y";
  CHECK(e.status() == CheckState::Pass);

  CHECK_THROWS_AS(report_from_json("not json"), ParseError);
}
