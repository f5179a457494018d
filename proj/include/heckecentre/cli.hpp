#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "heckecentre/acceptance.hpp"
#include "heckecentre/error.hpp"
#include "heckecentre/fiber.hpp"
#include "heckecentre/symmetric.hpp"

namespace hc::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class PairsMode { Diagonal, All };

struct ScanConfig {
  std::uint64_t count = 0;
  std::uint64_t seed = 1;
};

struct RunConfig {
  std::optional<BlockShape> shape;
  std::optional<FiberPoint> roots;
  Rat q = 2;
  LinkageMode mode = LinkageMode::WithinBlock;
  ScanConfig scan;
  AcceptanceLimits limits;
  PairsMode pairs = PairsMode::All;
  std::optional<std::string> expect_path;
  std::optional<std::string> report_path;
};

/// "2,3"
BlockShape parse_shape(std::string_view text);
/// "2,3;5,7,11" (blocks separated by ';')
FiberPoint parse_roots(std::string_view text);
LinkageMode parse_mode(std::string_view text);
PairsMode parse_pairs(std::string_view text);
/// "max_e=2,max_group=5040"; unspecified keys keep their value in `base`.
AcceptanceLimits parse_limits(std::string_view text, AcceptanceLimits base = {});
/// Decimal 64-bit unsigned.
std::uint64_t parse_seed(std::string_view text);

/// Applies the keys of a JSON config object on top of `cfg`. Throws
/// ParseError on unknown keys or malformed values.
void apply_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);

Json config_to_json(const RunConfig& cfg);

struct Report {
  Json body;
  int exit_code = 0;
};

Report cmd_fiber(const RunConfig& cfg);
Report cmd_artin(const RunConfig& cfg);
Report cmd_hecke(const RunConfig& cfg);
Report cmd_mult(const RunConfig& cfg);
Report cmd_selftest(const RunConfig& cfg);

/// Dispatches by name and turns library errors into exit codes:
/// 0 consistent, 1 falsified, 2 input error.
Report run_command(const std::string& name, const RunConfig& cfg);

/// Exit-2 report for a config that failed to load or parse.
Report config_error_report(const std::string& name, const Error& e);

/// Copy of a report without its "timings" member (golden comparisons).
Json strip_timings(Json report);

}  // namespace hc::cli
