#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crown/checks.hpp"
#include "crown/errors.hpp"
#include "crown/report.hpp"

using namespace crown;

TEST_CASE("registry is sorted and consistent") {
  const auto& reg = check_registry();
  CHECK(reg.size() == 35);
  for (size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  for (const CheckInfo& info : reg) {
    CHECK(has_check(info.id));
    CHECK(check_info(info.id).summary == info.summary);
  }
  CHECK_FALSE(has_check("thm-9.9"));
}

TEST_CASE("every check passes on its default parameters") {
  for (const CheckInfo& info : check_registry()) {
    CAPTURE(info.id);
    VerificationReport r = run_check(info.id, {});
    CHECK(r.check_id == info.id);
    CHECK(r.params.count("prec") == 1);
    CHECK(r.status() == CheckState::Pass);
    CHECK(!r.details.empty());
    if (!r.passed()) MESSAGE(r.to_text());
  }
}

TEST_CASE("spec-pinned invocations") {
  CHECK(run_check("thm-3.2", {{"n", "2"}, {"d", "4"}}).passed());

  VerificationReport l22 = run_check("lemma-2.2", {{"n", "5"}});
  CHECK(l22.passed());
  bool fifty = false;
  for (const CheckDetail& d : l22.details)
    if (d.got == "50 of 50") fifty = true;
  CHECK(fifty);

  CHECK(run_check("prop-3.13", {{"m", "2"}, {"n", "3"}, {"a", "e^(1/2)"}}, 24)
            .passed());
  CHECK(run_check("prop-3.14", {{"m", "3"}, {"n", "2"}, {"a", "e^(1/3)"}}, 24)
            .passed());
}

TEST_CASE("degenerate cocycle splits are exact") {
  VerificationReport r =
      run_check("prop-3.13", {{"m", "2"}, {"n", "4"}, {"a", "e^(1/2)"}});
  CHECK(r.passed());
  VerificationReport r2 =
      run_check("prop-3.14", {{"m", "4"}, {"n", "2"}, {"a", "e^(1/4)"}});
  CHECK(r2.passed());
}

TEST_CASE("unknown ids and parameters are errors, not failures") {
  CHECK_THROWS_AS(run_check("thm-9.9", {}), PrecondError);
  CHECK_THROWS_AS(run_check("eq-1", {{"q", "3"}}), PrecondError);
  CHECK_THROWS_AS(run_check("eq-1", {{"n", "abc"}}), PrecondError);
  CHECK_THROWS_AS(run_check("eq-1", {{"n", "3x"}}), PrecondError);
  CHECK_THROWS_AS(run_check("eq-1", {{"n", "999"}}), PrecondError);
  CHECK_THROWS_AS(run_check("eq-1", {}, 0), PrecondError);
  CHECK_THROWS_AS(run_check("eq-1", {}, 24, -1), PrecondError);
  CHECK_THROWS_AS(run_check("eq-3", {{"n", "2"}, {"d", "3"}}), PrecondError);
  CHECK_THROWS_AS(run_check("prop-3.13", {{"m", "3"}, {"n", "3"}}),
                  PrecondError);
  CHECK_THROWS_AS(run_check("lemma-3.10", {{"a", "e^("}}), ParseError);
  CHECK_THROWS_AS(
      run_check("prop-3.12", {{"n", "2"}, {"a", "e^(1/3)"}}), PrecondError);
}

TEST_CASE("reports are deterministic and round-trip through json") {
  for (const std::string& id :
       {std::string("eq-2"), std::string("prop-3.12"),
        std::string("thm-3.26"), std::string("negative-controls")}) {
    VerificationReport a = run_check(id, {});
    VerificationReport b = run_check(id, {});
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
    VerificationReport back = report_from_json(a.to_json());
    CHECK(back.to_json() == a.to_json());
    CHECK(back.to_text() == a.to_text());
  }
}

TEST_CASE("failing sub-results surface both sides") {
  VerificationReport r = run_check("negative-controls", {});
  CHECK(r.passed());
  for (const CheckDetail& d : r.details) {
    CHECK(d.expected == "fail");
    CHECK(d.got == "fail");
  }
}

TEST_CASE("parameter echo includes effective values") {
  VerificationReport r = run_check("prop-3.13", {}, 30, 6);
  CHECK(r.params.at("prec") == "30");
  CHECK(r.params.at("zeta-order") == "6");
  CHECK(r.params.at("m") == "2");
  CHECK(r.params.at("n") == "3");
}
