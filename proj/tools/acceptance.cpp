// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "crown/checks.hpp"
#include "crown/descent.hpp"
#include "crown/parse.hpp"
#include "crown/puiseux.hpp"
#include "crown/quiver.hpp"
#include "crown/reps.hpp"
#include "crown/tensor.hpp"

using namespace crown;

namespace {

struct Ac {
  bool ok = true;
  std::string why;
  long count = 0;

  void expect(bool cond, const std::string& detail) {
    ++count;
    if (!cond && ok) {
      ok = false;
      why = detail;
    }
  }
  void expect_check(const std::string& id, const ParamMap& p, long prec = 24) {
    VerificationReport r = run_check(id, p, prec);
    std::string label = id;
    for (const auto& [k, v] : p) label += " " + k + "=" + v;
    if (r.status() == CheckState::Pass) {
      expect(true, label);
      return;
    }
    for (const CheckDetail& det : r.details)
      if (det.state != CheckState::Pass) {
        expect(false, label + ": " + det.item + " expected " + det.expected +
                          ", got " + det.got);
        return;
      }
    expect(false, label + ": no detail rows");
  }
};

long ri(std::minstd_rand& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() %
                                static_cast<unsigned long>(hi - lo + 1));
}

Rat rat_coeff(std::minstd_rand& rng) {
  long numc = ri(rng, -5, 5);
  if (numc == 0) numc = 1;
  Rat r(numc, ri(rng, 1, 3));
  r.canonicalize();
  return r;
}

// Finitely supported element of ramification exactly n (last exponent is
// congruent to 1 mod n, so the support does not collapse to a coarser grid).
Puiseux sample_full_ram(std::minstd_rand& rng, long n) {
  long e = ri(rng, -4, 8);
  Puiseux a = Puiseux::zero(n);
  long terms = ri(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    a = a + Puiseux::monomial(CycScalar::of(rat_coeff(rng), 1), e, n);
    e += ri(rng, 1, 4);
  }
  long f = e + 1;
  f += ((1 - f) % n + n) % n;
  return a + Puiseux::monomial(CycScalar::of_int(1, 1), f, n);
}

// Monic-leading sample: unit leading coefficient so n-th roots stay rational.
Puiseux sample_root_input(std::minstd_rand& rng) {
  long ram = ri(rng, 1, 3);
  long e = ri(rng, -6, 10);
  Puiseux a = Puiseux::eps_pow(e, ram);
  long extra = ri(rng, 0, 4);
  for (long t = 0; t < extra; ++t) {
    e += ri(rng, 1, 5);
    a = a + Puiseux::monomial(CycScalar::of(rat_coeff(rng), 1), e, ram);
  }
  return a;
}

void ac1(Ac& a) {
  for (long n = 2; n <= 6; ++n)
    for (long d : {n, 2 * n})
      a.expect_check("eq-3", {{"n", std::to_string(n)},
                              {"d", std::to_string(d)}});
}

void ac2(Ac& a) {
  for (auto [n, d] : std::vector<std::pair<long, long>>{
           {2, 2}, {2, 4}, {3, 3}, {3, 6}, {4, 4}})
    a.expect_check("thm-3.2", {{"n", std::to_string(n)},
                               {"d", std::to_string(d)}});
}

void ac3(Ac& a) {
  for (long n : {2, 3, 4}) {
    std::minstd_rand rng(static_cast<unsigned>(100 + n));
    for (int t = 0; t < 50; ++t) {
      Puiseux x = sample_full_ram(rng, n);
      for (long j = 1; j <= x.ram(); ++j) {
        VerificationReport r = lemma_3_3_check(x, j);
        a.expect(r.status() == CheckState::Pass,
                 "closed form at a=" + print_element(x) + " j=" +
                     std::to_string(j));
      }
    }
  }
}

void ac4(Ac& a) {
  for (long n = 2; n <= 6; ++n) {
    a.expect_check("lemma-2.2", {{"n", std::to_string(n)}});
    a.expect_check("lemma-2.3", {{"n", std::to_string(n)}});
  }
}

void ac5(Ac& a) {
  for (long n : {2, 3, 4})
    a.expect_check("prop-3.12", {{"n", std::to_string(n)}});
  for (auto [m, n] : std::vector<std::pair<long, long>>{
           {2, 3}, {2, 4}, {2, 5}, {3, 4}})
    a.expect_check("prop-3.13", {{"m", std::to_string(m)},
                                 {"n", std::to_string(n)}});
  for (auto [m, n] : std::vector<std::pair<long, long>>{
           {3, 2}, {4, 2}, {4, 3}, {5, 2}})
    a.expect_check("prop-3.14", {{"m", std::to_string(m)},
                                 {"n", std::to_string(n)}});
  for (long n = 1; n <= 5; ++n) {
    a.expect_check("lemma-3.17", {{"n", std::to_string(n)}});
    a.expect_check("lemma-3.18", {{"n", std::to_string(n)}});
  }
}

void ac6(Ac& a) {
  for (long n : {2, 3, 4})
    a.expect_check("negative-controls", {{"n", std::to_string(n)}});
}

void ac7(Ac& a) {
  for (long n : {2, 3, 4}) {
    std::minstd_rand rng(static_cast<unsigned>(700 + n));
    for (int t = 0; t < 100; ++t) {
      Puiseux x = sample_root_input(rng);
      long long cd = x.codeg().value;
      auto [b, mrem] = nth_root(x, n, 24, 1);
      a.expect(mrem >= 0 && mrem < n,
               "remainder out of range for a=" + print_element(x));
      a.expect(((mrem % n) + n) % n == ((cd % n) + n) % n,
               "remainder misses codegree class for a=" + print_element(x));
      Puiseux recon = b.pow(n, 28);
      recon = recon * Puiseux::eps_pow(mrem, x.ram(), recon.zord());
      Codeg diff = (x - recon).codeg();
      a.expect(diff.kind == Codeg::ZeroExact || diff.value >= cd + 20,
               "reconstruction too coarse for a=" + print_element(x) +
                   " (diff " + diff.str() + ")");
    }
  }
}

void certify_expect(Ac& a, const Representation& summand, long m,
                    const std::string& label) {
  VerificationReport r = certify_regular_simple(summand, m, 24);
  if (r.status() == CheckState::Pass) {
    a.expect(true, label);
    return;
  }
  for (const CheckDetail& det : r.details)
    if (det.state != CheckState::Pass) {
      a.expect(false, label + ": " + det.item + " expected " + det.expected +
                          ", got " + det.got);
      return;
    }
  a.expect(false, label + ": no detail rows");
}

void ac8(Ac& a) {
  for (long n = 1; n <= 4; ++n)
    for (long j = 1; j <= n; ++j) {
      certify_expect(a, rep_embed(rep_family_M(j, n), n), n,
                     "first string family n=" + std::to_string(n) +
                         " j=" + std::to_string(j));
      certify_expect(a, rep_embed(rep_family_N(j, n), n), n,
                     "second string family n=" + std::to_string(n) +
                         " j=" + std::to_string(j));
    }
  struct Hom {
    long n, m;
    const char* x;
  };
  for (const Hom& h : {Hom{2, 2, "e^(1/2)+e^(1/1)"}, Hom{2, 3, "e^(1/3)"},
                       Hom{3, 2, "e^(1/2)"}}) {
    Puiseux x = parse_element(h.x);
    long d = std::lcm(h.n, h.m);
    Representation s = rep_M_a(x.pow(h.n, 24).embed_to(d), h.n, d);
    certify_expect(a, s, h.m,
                   "homogeneous summand n=" + std::to_string(h.n) +
                       " m=" + std::to_string(h.m));
  }
  for (long n : {2, 3})
    certify_expect(a, rep_M_a(Puiseux::eps_pow(1, n), 1, n), n,
                   "Kronecker band summand n=" + std::to_string(n));
}

void ac9(Ac& a) {
  for (long n = 2; n <= 5; ++n)
    a.expect_check("remark-3.19", {{"n", std::to_string(n)}});
  a.expect_check("remark-3.16", {{"n", "7"}});
}

void ac10(Ac& a) {
  a.expect_check("prop-3.22", {{"a", "e^(1/2)"}});
  a.expect_check("prop-3.22", {{"a", "e^(1/3)"}});
  for (long n : {2, 3})
    a.expect_check("vandermonde", {{"n", std::to_string(n)}});
}

void ac11(Ac& a) {
  auto sweep = [] {
    std::string all;
    for (const CheckInfo& info : check_registry()) {
      all += run_check(info.id, {}, 24).to_json();
      all += "\n";
    }
    return all;
  };
  std::string first = sweep();
  std::string second = sweep();
  a.expect(!first.empty() && first == second,
           "repeated sweeps differ in machine format");
}

struct Criterion {
  const char* label;
  void (*fn)(Ac&);
  long limit_ms;
};

}  // namespace

int main() {
  const std::vector<Criterion> table = {
      {"idempotent relations across cyclic extensions", ac1, 1000},
      {"multiplication table sweep", ac2, 5000},
      {"bimodule action closed forms on sampled elements", ac3, 0},
      {"string and band defect parity", ac4, 0},
      {"cocycle suite across all splits", ac5, 30000},
      {"perturbed cocycles are rejected", ac6, 0},
      {"root extraction reconstructs sampled elements", ac7, 0},
      {"certification of all constructed summand families", ac8, 60000},
      {"string normal form identities", ac9, 0},
      {"intertwiner and companion conjugation", ac10, 0},
      {"byte-identical machine reports on repeat", ac11, 0},
  };
  int failures = 0;
  for (size_t k = 0; k < table.size(); ++k) {
    Ac ac;
    auto start = std::chrono::steady_clock::now();
    try {
      table[k].fn(ac);
    } catch (const std::exception& e) {
      ac.expect(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (table[k].limit_ms > 0 && ms > table[k].limit_ms && ac.ok) {
      ac.ok = false;
      ac.why = "took " + std::to_string(ms) + " ms, limit " +
               std::to_string(table[k].limit_ms);
    }
    std::printf("AC%02zu %s %s [%ld checks, %lld ms]%s%s\n", k + 1,
                ac.ok ? "PASS" : "FAIL", table[k].label, ac.count,
                static_cast<long long>(ms), ac.ok ? "" : ": ",
                ac.ok ? "" : ac.why.c_str());
    if (!ac.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
