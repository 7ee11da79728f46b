#pragma once

#include <map>
#include <string>
#include <vector>

#include "crown/report.hpp"

namespace crown {

using ParamMap = std::map<std::string, std::string>;

struct CheckInfo {
  std::string id;
  std::string summary;
  std::vector<std::string> keys;  // recognized parameter names
};

// All registered checks, ordered by id.
const std::vector<CheckInfo>& check_registry();

bool has_check(const std::string& id);
const CheckInfo& check_info(const std::string& id);

// Runs one registered check.  Unknown ids, unknown parameter names and
// malformed parameter values throw (PrecondError / ParseError); a
// mathematical failure is reported in the returned report, never thrown.
// zeta_order = 0 lets root searches pick their own cyclotomic order.
VerificationReport run_check(const std::string& id, const ParamMap& params,
                             long series_prec = 24, long zeta_order = 0);

}  // namespace crown
