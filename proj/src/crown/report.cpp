#include "crown/report.hpp"

#include <sstream>

#include "crown/errors.hpp"
#include "json.hpp"

namespace crown {

std::string check_state_name(CheckState s) {
  switch (s) {
    case CheckState::Pass: return "pass";
    case CheckState::Fail: return "fail";
    default: return "undecided";
  }
}

void VerificationReport::record_eq(const std::string& item,
                                   const std::string& expected,
                                   const std::string& got,
                                   const std::string& precision) {
  CheckState st = (expected == got) ? CheckState::Pass : CheckState::Fail;
  details.push_back({item, expected, got, precision, st});
}

void VerificationReport::record_ok(const std::string& item, bool ok,
                                   const std::string& expected,
                                   const std::string& got,
                                   const std::string& precision) {
  CheckState st = ok ? CheckState::Pass : CheckState::Fail;
  details.push_back({item, expected, got, precision, st});
}

void VerificationReport::record_undecided(const std::string& item,
                                          const std::string& expected,
                                          const std::string& got,
                                          const std::string& precision) {
  details.push_back({item, expected, got, precision, CheckState::Undecided});
}

CheckState VerificationReport::status() const {
  CheckState st = CheckState::Pass;
  for (const auto& d : details) {
    if (d.state == CheckState::Fail) return CheckState::Fail;
    if (d.state == CheckState::Undecided) st = CheckState::Undecided;
  }
  return st;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "check: " << check_id << "\n";
  if (!params.empty()) {
    out << "params:";
    for (const auto& [k, v] : params) out << " " << k << "=" << v;
    out << "\n";
  }
  for (const auto& d : details) {
    const char* tag = d.state == CheckState::Pass   ? "[ok]"
                      : d.state == CheckState::Fail ? "[FAIL]"
                                                    : "[??]";
    out << tag << " " << d.item;
    if (!d.expected.empty() || !d.got.empty())
      out << ": expected " << d.expected << ", got " << d.got;
    if (!d.precision.empty()) out << " (prec " << d.precision << ")";
    out << "\n";
  }
  out << "status: " << status_name() << "\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_id;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["status"] = status_name();
  j["details"] = nlohmann::ordered_json::array();
  for (const auto& d : details) {
    nlohmann::ordered_json e;
    e["item"] = d.item;
    e["expected"] = d.expected;
    e["got"] = d.got;
    e["precision"] = d.precision;
    e["state"] = check_state_name(d.state);
    j["details"].push_back(e);
  }
  return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad report json: ") + e.what(), 1, 1);
  }
  VerificationReport r;
  r.check_id = j.at("check").get<std::string>();
  for (const auto& [k, v] : j.at("params").items())
    r.params[k] = v.get<std::string>();
  for (const auto& e : j.at("details")) {
    CheckDetail d;
    d.item = e.at("item").get<std::string>();
    d.expected = e.at("expected").get<std::string>();
    d.got = e.at("got").get<std::string>();
    d.precision = e.at("precision").get<std::string>();
    std::string st = e.at("state").get<std::string>();
    d.state = st == "pass"   ? CheckState::Pass
              : st == "fail" ? CheckState::Fail
                             : CheckState::Undecided;
    r.details.push_back(d);
  }
  return r;
}

}  // namespace crown
