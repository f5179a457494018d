#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "heckecentre/cli.hpp"
#include "heckecentre/error.hpp"

namespace {

struct Flags {
  std::optional<std::string> shape, roots, q, mode, seed, report, config, limits, pairs, expect;
  std::optional<std::uint64_t> scan;
  std::optional<int> e;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--shape", f.shape, "block sizes, e.g. 2,3");
  app->add_option("--e", f.e, "single block of this size (same as --shape N)")->excludes("--shape");
  app->add_option("--roots", f.roots, "roots per block, e.g. 2,3;5,7,11");
  app->add_option("--q", f.q, "Hecke parameter (rational)");
  app->add_option("--mode", f.mode, "linkage test: within | all");
  app->add_option("--scan", f.scan, "number of sampled points");
  app->add_option("--seed", f.seed, "sampling seed");
  app->add_option("--report", f.report, "also write the JSON report here");
  app->add_option("--config", f.config, "JSON config file; flags override it");
  app->add_option("--limits", f.limits, "max_e=N,max_group=M");
  app->add_option("--pairs", f.pairs, "idempotent pairs: all | diag");
  app->add_option("--expect", f.expect, "JSON expectations overriding the defaults");
}

hc::cli::RunConfig build_config(const Flags& f) {
  using namespace hc::cli;
  RunConfig cfg = f.config ? load_config_file(*f.config) : RunConfig{};
  if (f.shape) cfg.shape = parse_shape(*f.shape);
  if (f.e) cfg.shape = parse_shape(std::to_string(*f.e));
  if (f.roots) cfg.roots = parse_roots(*f.roots);
  if (f.q) cfg.q = hc::parse_rat(*f.q);
  if (f.mode) cfg.mode = parse_mode(*f.mode);
  if (f.scan) cfg.scan.count = *f.scan;
  if (f.seed) cfg.scan.seed = parse_seed(*f.seed);
  if (f.limits) cfg.limits = parse_limits(*f.limits, cfg.limits);
  if (f.pairs) cfg.pairs = parse_pairs(*f.pairs);
  if (f.expect) cfg.expect_path = *f.expect;
  if (f.report) cfg.report_path = *f.report;
  return cfg;
}

int emit(const hc::cli::Report& r, const std::optional<std::string>& path) {
  const std::string text = r.body.dump(2);
  std::cout << text << '\n';
  if (path) {
    std::ofstream out(*path);
    if (!out) {
      std::cerr << "hcverify: cannot write " << *path << '\n';
      return 2;
    }
    out << text << '\n';
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch verifier for centres of affine Hecke algebras and their fibres", "hcverify"};
  app.set_version_flag("--version", std::string(hc::cli::kToolVersion));
  app.require_subcommand(1);

  Flags flags;
  const char* commands[][2] = {
      {"fiber", "regularity, dense-set test, orbit and splitting at a point"},
      {"artin", "Artin basis, trace form and discriminant for one block"},
      {"hecke", "sandwich dimensions and simplicity of a specialized algebra"},
      {"mult", "multiplicity table of partition functions"},
      {"selftest", "run the acceptance criteria"},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c[0], c[1]), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  hc::cli::RunConfig cfg;
  try {
    cfg = build_config(flags);
  } catch (const hc::Error& e) {
    return emit(hc::cli::config_error_report(name, e), flags.report);
  }
  return emit(hc::cli::run_command(name, cfg), cfg.report_path);
}
