#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuchsia {

struct CheckOptions {
  uint64_t seed = 1729;
  int draws = 5;
  int trunc = 40;
  double tol = 1e-8;
};

struct CheckResult {
  std::string id;
  int criterion = 0;
  bool pass = false;
  double ms = 0;
  std::string details;  // short human-readable summary
};

struct CheckInfo {
  std::string id;
  int criterion;
  std::string title;
};

const std::vector<CheckInfo>& check_list();
bool known_check(const std::string& id);
CheckResult run_check(const std::string& id, const CheckOptions& opt);
std::vector<CheckResult> run_all(const CheckOptions& opt);

// versioned JSON certificate; deterministic for a fixed seed apart from
// the timestamp field
std::string certificate_json(const std::vector<CheckResult>& results,
                             const CheckOptions& opt, bool pretty);

}  // namespace fuchsia
