#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "heckecentre/symmetric.hpp"

namespace hc {

struct AcceptanceLimits {
  int max_e = 4;
  std::uint64_t max_group = 5040;
};

/// Frozen reference values keyed by name ("disc.e4" -> "c=1/1,k=12", ...).
using Expectations = std::map<std::string, std::string>;

Expectations default_expectations();
/// Overrides defaults; throws InvalidInput on keys the suite does not know.
Expectations merge_expectations(Expectations base, const Expectations& overrides);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Nothing left to run under the limits.
  bool skipped = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

constexpr int kCriteriaCount = 8;

CriterionResult run_criterion(int id, const AcceptanceLimits& limits, const Expectations& expect);
std::vector<CriterionResult> run_acceptance(const AcceptanceLimits& limits, const Expectations& expect);

/// "PASS  [1] name (0.12s / 10s): detail"
std::string format_result(const CriterionResult& r);

/// Block-size multisets (entries >= 2, descending) with prod e_i! <= limit,
/// each also with one and two trailing blocks of size 1, plus (1) and (1,1).
std::vector<BlockShape> shapes_up_to(std::uint64_t max_group);

}  // namespace hc
