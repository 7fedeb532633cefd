#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilcollect {

struct ClaimRecord {
  std::string id;
  std::string summary;
  bool heavy = false;
  std::string verdict;  // "pass" | "fail" | "skipped"
  nlohmann::json evidence;
  double runtime_s = 0.0;
};

struct ClaimDef {
  std::string id;
  std::string summary;
  bool heavy = false;
  // Sets rec.verdict and rec.evidence; exceptions are recorded as failures.
  std::function<void(ClaimRecord& rec)> run;
};

const std::vector<ClaimDef>& claim_registry();

/// Shell-style glob on claim ids ('*' and '?').
bool glob_match(const std::string& pattern, const std::string& text);

/// Runs every claim whose id matches the pattern; heavy claims are skipped
/// unless include_heavy. Records come back in registry order.
std::vector<ClaimRecord> run_claims(const std::string& pattern, bool include_heavy);

}  // namespace nilcollect
