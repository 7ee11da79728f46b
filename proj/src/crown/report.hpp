#pragma once

#include <map>
#include <string>
#include <vector>

namespace crown {

enum class CheckState { Pass, Fail, Undecided };

std::string check_state_name(CheckState s);

struct CheckDetail {
  std::string item;
  std::string expected;
  std::string got;
  std::string precision;  // empty when not applicable
  CheckState state = CheckState::Pass;
};

// Outcome of one named verification.  Overall status is derived from the
// details: any failing item makes the report fail, otherwise any undecided
// item leaves it undecided.
struct VerificationReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  std::vector<CheckDetail> details;

  // state = (expected == got) ? Pass : Fail
  void record_eq(const std::string& item, const std::string& expected,
                 const std::string& got, const std::string& precision = "");
  void record_ok(const std::string& item, bool ok, const std::string& expected,
                 const std::string& got, const std::string& precision = "");
  void record_undecided(const std::string& item, const std::string& expected,
                        const std::string& got,
                        const std::string& precision = "");

  CheckState status() const;
  bool passed() const { return status() == CheckState::Pass; }
  std::string status_name() const { return check_state_name(status()); }

  std::string to_text() const;
  std::string to_json() const;  // deterministic: params and keys sorted
};

VerificationReport report_from_json(const std::string& text);

}  // namespace crown
