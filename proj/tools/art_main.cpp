#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "art/oracle.hpp"
#include "art/report.hpp"
#include "art/synth.hpp"

namespace {

using namespace art;

// Exit codes: 0 success, 1 usage/config, 2 data, 3 internal invariant violation.
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("ART_CACHE_DIR")) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::filesystem::path(xdg) / "art";
  if (const char* home = std::getenv("HOME")) return std::filesystem::path(home) / ".cache" / "art";
  return ".art-cache";
}

std::filesystem::path limits_cache_path(const LimitConfig& cfg) {
  std::ostringstream name;
  name << "limits-m" << cfg.m << "-g" << cfg.g << "-"
       << (cfg.mode == RasterMode::EqualWidth ? "w" : "f") << ".json";
  return cache_dir() / name.str();
}

UpperLimitTable cached_limits(const AnalysisConfig& cfg, int depth) {
  const auto path = limits_cache_path(cfg.limit_config());
  std::filesystem::create_directories(path.parent_path());
  return UpperLimitTable::load_or_compute(path.string(), cfg.limit_config(), depth);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
}

struct CommonOptions {
  RunConfig run;
  std::string mode = "equal-width";

  void attach(CLI::App* cmd) {
    cmd->add_option("-g,--grid", run.analysis.g, "Grid size per axis")->check(CLI::Range(2, 4096));
    cmd->add_option("--mode", mode, "Rasterization mode: equal-width or equal-frequency")
        ->check(CLI::IsMember({"equal-width", "equal-frequency"}));
    cmd->add_option("--epsilon", run.analysis.epsilon, "ARTMCN slack")->check(CLI::Range(1e-9, 0.999999));
    cmd->add_option("--q", run.analysis.q, "ARTLRD depth exponent")->check(CLI::Range(1e-9, 0.499999));
    cmd->add_option("--m", run.analysis.canonical_m, "Canonical linear sample size")->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--seed", run.seed, "Random seed");
  }

  RunConfig resolve() {
    run.analysis.mode = mode == "equal-width" ? RasterMode::EqualWidth : RasterMode::EqualFrequency;
    return run;
  }
};

struct GenOptions {
  std::string kind = "linear";
  int n = 1080;
  double noise = 0.0;
  int blocks = 4;

  void attach(CLI::App* cmd, bool as_source) {
    const char* flag = as_source ? "--gen" : "--kind";
    cmd->add_option(flag, kind, "Relationship kind")
        ->check(CLI::IsMember({"independent", "linear", "sine", "parabola", "circle", "local-random"}));
    cmd->add_option("-n,--n", n, "Sample size")->check(CLI::Range(2, 100000000));
    cmd->add_option("--noise", noise, "Perturbation level p (uniform on [-p, p])")->check(CLI::NonNegativeNumber);
    cmd->add_option("--blocks", blocks, "Block count for local-random")->check(CLI::PositiveNumber);
  }

  RelationshipSpec spec(std::uint64_t seed) const {
    return {rel_kind_from_name(kind), n, noise, blocks, seed};
  }
};

int cmd_gen(CommonOptions& common, const GenOptions& gen, const std::string& out_path) {
  const RunConfig run = common.resolve();
  const SamplePair sample = generate(gen.spec(run.seed));
  std::ostringstream out;
  write_csv(out, sample);
  write_output(out_path, out.str());
  return 0;
}

int cmd_stats(CommonOptions& common, const GenOptions& gen, bool use_gen, const std::string& input,
              std::vector<std::string> cols, bool with_matrices, const std::string& out_path) {
  const RunConfig run = common.resolve();

  SamplePair sample;
  if (use_gen) {
    sample = generate(gen.spec(run.seed));
  } else {
    if (input.empty()) throw ConfigError("either --input or --gen is required");
    const Table table = ingest_csv_file(input, cols);
    if (table.width() != 2) throw ConfigError("stats needs exactly two columns (use --cols A,B)");
    sample = table.pair(0, 1);
  }

  UpperLimitTable limits =
      cached_limits(run.analysis, static_cast<int>(depth_budget(static_cast<std::int64_t>(sample.size()))));
  CharMatrices matrices;
  const ArtStatistics stats = analyze_pair(sample, run.analysis, limits, &matrices);
  const Json report = stats_report(stats, run, with_matrices ? &matrices : nullptr);
  write_output(out_path, report.dump(2) + "\n");
  return 0;
}

int cmd_mine(CommonOptions& common, const std::string& input, std::vector<std::string> cols,
             std::vector<std::string> filter_texts, std::vector<std::string> dot_args,
             std::int64_t min_rows, const std::string& out_path) {
  const RunConfig run = common.resolve();
  const Table table = ingest_csv_file(input, cols);
  if (table.width() < 2) throw ConfigError("mine needs at least 2 columns");

  std::vector<FilterPredicate> filters;
  for (const auto& text : filter_texts) filters.push_back(parse_filter(text));

  UpperLimitTable limits = cached_limits(
      run.analysis, static_cast<int>(depth_budget(static_cast<std::int64_t>(table.rows()))));
  const auto records = analyze_all_pairs(table, run.analysis, limits, run.thresholds, min_rows);
  const auto kept = apply_filters(records, filters);
  write_output(out_path, mine_report(kept, run).dump(2) + "\n");

  if (!dot_args.empty()) {
    if (dot_args.size() != 2) throw ConfigError("--dot needs STAT and OUTPUT_PATH");
    stat_value(ArtStatistics{}, dot_args[0]);
    std::vector<std::string> names = table.names;
    std::sort(names.begin(), names.end());
    write_output(dot_args[1], dot_graph(names, kept, dot_args[0]));
  }
  return 0;
}

int cmd_limits(CommonOptions& common, int max_depth) {
  const RunConfig run = common.resolve();
  UpperLimitTable limits = cached_limits(run.analysis, max_depth);
  std::cout << limits.to_json_text();
  return 0;
}

int cmd_verify(int cases, int grid_max, int depth_max, std::uint64_t seed) {
  // The oracle refuses oversized requests up front rather than skipping.
  bool ok = true;
  const auto report = [&](const std::string& name, const VerifyResult& r, double tol) {
    const bool pass = r.max_abs_diff <= tol;
    ok = ok && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << ": " << r.cases
              << " cases, max |diff| = " << r.max_abs_diff << " (tolerance " << tol << ")\n";
  };
  report("oracle-equivalence", verify_oracle_equivalence(cases, grid_max, depth_max, seed), 1e-9);
  report("telescoping-identity", verify_telescoping(cases, grid_max, depth_max, seed + 1), 1e-9);
  return ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ART statistics: alternant recursive topology correlation mining"};
  app.require_subcommand(1);

  CommonOptions common;
  GenOptions gen;
  std::string input, out_path;
  std::vector<std::string> cols, filters, dot_args;
  bool with_matrices = false;
  bool use_gen = false;
  std::int64_t min_rows = 10;
  int max_depth = 8;
  int verify_cases = 200, verify_grid_max = 6, verify_depth_max = 4;

  auto* c_gen = app.add_subcommand("gen", "Generate a synthetic sample as 2-column CSV");
  common.attach(c_gen);
  gen.attach(c_gen, false);
  c_gen->add_option("-o,--out", out_path, "Output path (default stdout)");

  auto* c_stats = app.add_subcommand("stats", "ART statistics for one variable pair (JSON report)");
  common.attach(c_stats);
  gen.attach(c_stats, true);
  c_stats->get_option("--gen")->each([&](const std::string&) { use_gen = true; });
  c_stats->add_option("-i,--input", input, "Input CSV file");
  c_stats->add_option("--cols", cols, "Two column names or indices")->delimiter(',');
  c_stats->add_flag("--matrices", with_matrices, "Include the characteristic matrices");
  c_stats->add_option("-o,--out", out_path, "Output path (default stdout)");

  auto* c_mine = app.add_subcommand("mine", "ART statistics for every column pair of a CSV");
  common.attach(c_mine);
  c_mine->add_option("-i,--input", input, "Input CSV file")->required();
  c_mine->add_option("--cols", cols, "Column subset (names or indices)")->delimiter(',');
  c_mine->add_option("--filter", filters, "Filter predicate, e.g. artmic>=0.6 (repeatable)");
  c_mine->add_option("--dot", dot_args, "STAT OUTPUT_PATH: export a DOT graph of the kept pairs")
      ->expected(2);
  c_mine->add_option("--min-rows", min_rows, "Minimum effective rows to score a pair");
  c_mine->add_option("-o,--out", out_path, "Output path (default stdout)");

  auto* c_limits = app.add_subcommand("limits", "Compute and cache the upper-limit table");
  common.attach(c_limits);
  c_limits->add_option("--max-depth", max_depth, "Largest r + c to precompute")->check(CLI::Range(1, 16));

  auto* c_verify = app.add_subcommand("verify", "Run the oracle-equivalence and invariant suites");
  c_verify->add_option("--cases", verify_cases, "Random cases per suite")->check(CLI::PositiveNumber);
  c_verify->add_option("--grid-max", verify_grid_max, "Largest random grid dimension");
  c_verify->add_option("--depth-max", verify_depth_max, "Largest random depth budget r + c");
  c_verify->add_option("--seed", common.run.seed, "Random seed");

  try {
    app.parse(argc, argv);
    if (c_gen->parsed()) return cmd_gen(common, gen, out_path);
    if (c_stats->parsed()) return cmd_stats(common, gen, use_gen, input, cols, with_matrices, out_path);
    if (c_mine->parsed()) return cmd_mine(common, input, cols, filters, dot_args, min_rows, out_path);
    if (c_limits->parsed()) return cmd_limits(common, max_depth);
    if (c_verify->parsed()) return cmd_verify(verify_cases, verify_grid_max, verify_depth_max, common.run.seed);
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const art::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const art::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
