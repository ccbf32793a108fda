// Command-line front end: constructing, verifying, and searching for the
// matrices behind the doubling families, plus bit-exact file formats and
// run manifests.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsrg/errors.hpp"
#include "dsrg/family.hpp"
#include "dsrg/io.hpp"
#include "dsrg/manifest.hpp"
#include "dsrg/params.hpp"
#include "dsrg/search.hpp"
#include "dsrg/threading.hpp"
#include "dsrg/verify.hpp"
#include "dsrg/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitPrecheck = 3;
constexpr int kExitExhausted = 4;
constexpr int kExitInputError = 5;

constexpr const char* kExitHelp =
    "Exit codes:\n"
    "  0  ok / found\n"
    "  1  verification failed\n"
    "  2  search space exhausted without a witness (infeasible)\n"
    "  3  parameters rejected by the feasibility precheck\n"
    "  4  budget ran out before a proof either way\n"
    "  5  input error (bad arguments, unreadable or malformed files)";

struct BudgetFlags {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
  std::uint64_t rng_seed = 1;
  bool deterministic = true;
  bool progress = false;

  dsrg::SearchBudget to_budget() const {
    return {max_nodes, max_seconds, rng_seed, deterministic};
  }
};

void add_budget_flags(CLI::App* sub, BudgetFlags& b) {
  sub->add_option("--max-nodes", b.max_nodes,
                  "Stop after this many search nodes (0 = unlimited)");
  sub->add_option("--max-seconds", b.max_seconds,
                  "Stop after this much wall time (0 = unlimited)");
  sub->add_option("--rng-seed", b.rng_seed, "Seed for randomized restarts")
      ->capture_default_str();
  sub->add_flag("--deterministic,!--randomized", b.deterministic,
                "Fixed search order, reproducible node counts (default); "
                "--randomized enables seeded restarts");
  sub->add_flag("--progress", b.progress, "Report search progress on stderr");
}

unsigned g_threads = 0;
bool g_threads_set = false;

void add_thread_flag(CLI::App* sub) {
  sub->add_option("--threads", g_threads,
                  "Worker threads for matrix products (0 = all cores); "
                  "overrides DSRG_THREADS")
      ->each([](const std::string&) { g_threads_set = true; });
}

void apply_thread_flag() {
  if (g_threads_set) dsrg::set_thread_count(g_threads);
}

std::string g_command_line;

dsrg::ProgressFn progress_fn(const BudgetFlags& b) {
  if (!b.progress) return nullptr;
  return [](const dsrg::SearchStats& stats, std::size_t depth) {
    std::fprintf(stderr, "progress: nodes=%llu restarts=%llu depth=%zu elapsed=%.1fs\n",
                 static_cast<unsigned long long>(stats.nodes),
                 static_cast<unsigned long long>(stats.restarts), depth,
                 stats.wall_seconds);
  };
}

std::string format_seconds(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", seconds);
  return buffer;
}

dsrg::MatrixFileFormat parse_format(const std::string& name) {
  if (name == "text") return dsrg::MatrixFileFormat::text;
  if (name == "binary") return dsrg::MatrixFileFormat::binary;
  throw dsrg::IoError("unknown format '" + name + "' (expected text or binary)");
}

struct ManifestInput {
  std::string name;
  std::string path;
};

void write_run_manifest(const std::string& out_path, const dsrg::DsrgParams& params,
                        const std::vector<ManifestInput>& inputs,
                        const BudgetFlags* budget, const dsrg::SearchStats* stats,
                        const std::string& status, double wall_seconds) {
  dsrg::Manifest man;
  man.add("tool", "dsrg");
  man.add("version", dsrg::kVersion);
  man.add("command", g_command_line);
  man.add("params", params.str());
  if (budget) {
    man.add("rng-seed", std::to_string(budget->rng_seed));
    man.add("max-nodes", std::to_string(budget->max_nodes));
    man.add("max-seconds", format_seconds(budget->max_seconds));
    man.add("deterministic", budget->deterministic ? "true" : "false");
  }
  for (const auto& input : inputs) {
    man.add("input-" + input.name, input.path);
    man.add("input-" + input.name + "-sha256", dsrg::sha256_hex_of_file(input.path));
  }
  man.add("output", out_path);
  man.add("output-sha256", dsrg::sha256_hex_of_file(out_path));
  man.add("status", status);
  if (stats) {
    man.add("nodes", std::to_string(stats->nodes));
    man.add("restarts", std::to_string(stats->restarts));
  }
  man.add("wall-seconds", format_seconds(wall_seconds));
  man.write(dsrg::manifest_path_for(out_path));
}

void print_precheck(const std::vector<dsrg::PrecheckViolation>& violations) {
  for (const auto& violation : violations)
    std::cerr << "precheck: " << violation.message << '\n';
}

int status_exit_code(dsrg::SearchStatus status) {
  switch (status) {
    case dsrg::SearchStatus::found: return kExitOk;
    case dsrg::SearchStatus::infeasible: return kExitInfeasible;
    case dsrg::SearchStatus::infeasible_precheck: return kExitPrecheck;
    case dsrg::SearchStatus::exhausted: return kExitExhausted;
  }
  return kExitInputError;
}

nlohmann::json report_to_json(const dsrg::VerifyReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& w : report.failures) {
    failures.push_back({{"kind", dsrg::to_string(w.kind)},
                        {"i", w.i},
                        {"j", w.j},
                        {"expected", w.expected},
                        {"got", w.got}});
  }
  return {{"ok", report.ok},
          {"mode", dsrg::to_string(report.mode)},
          {"total_failures", report.total_failures},
          {"samples_checked", report.samples_checked},
          {"failures", failures}};
}

void print_report(const dsrg::VerifyReport& report, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << '\n';
    return;
  }
  std::cout << report.summary() << '\n';
  for (const auto& w : report.failures)
    std::cout << "witness: " << dsrg::to_string(w.kind) << " (" << w.i << ", " << w.j
              << "): expected " << w.expected << ", got " << w.got << '\n';
  if (report.total_failures > report.failures.size())
    std::cout << "(" << (report.total_failures - report.failures.size())
              << " further failures not shown)\n";
}

// ----- params -----

struct ParamsArgs {
  std::vector<std::uint64_t> seed;  // v k t lambda
  std::size_t family = 0;
  std::size_t n = 1;
  bool catalog = false;
};

int run_params(const ParamsArgs& args) {
  if (args.catalog) {
    auto rows = dsrg::seed_catalog();
    for (std::size_t i = 0; i < rows.size(); ++i)
      std::cout << (i + 1) << ": " << rows[i].str() << '\n';
    return kExitOk;
  }
  dsrg::DsrgParams seed = [&] {
    if (args.family > 0) {
      auto rows = dsrg::seed_catalog();
      if (args.family > rows.size())
        throw dsrg::IndexError("--family must be between 1 and " +
                               std::to_string(rows.size()));
      return rows[args.family - 1];
    }
    if (args.seed.size() != 4)
      throw dsrg::DimensionError("expected four values: v k t lambda");
    return dsrg::DsrgParams::family_seed(args.seed[0], args.seed[1], args.seed[2],
                                         args.seed[3]);
  }();
  if (seed.s() <= 0)
    throw dsrg::UnsupportedError("t must exceed lambda, got t = " +
                                 std::to_string(seed.t) + ", lambda = " +
                                 std::to_string(seed.lambda));
  std::cout << dsrg::family_params(seed, args.n).str() << '\n';
  return kExitOk;
}

// ----- search-seed -----

struct SearchSeedArgs {
  std::vector<std::uint64_t> params;  // v k t lambda mu
  std::size_t family = 0;
  std::string out;
  std::string format = "text";
  BudgetFlags budget;
  bool force = false;
};

int run_search_seed(const SearchSeedArgs& args) {
  dsrg::DsrgParams p = [&] {
    if (args.family > 0) {
      auto rows = dsrg::seed_catalog();
      if (args.family > rows.size())
        throw dsrg::IndexError("--family must be between 1 and " +
                               std::to_string(rows.size()));
      return rows[args.family - 1];
    }
    if (args.params.size() != 5)
      throw dsrg::DimensionError("expected five values: v k t lambda mu");
    return dsrg::DsrgParams::checked(args.params[0], args.params[1], args.params[2],
                                     args.params[3], args.params[4]);
  }();

  auto result = dsrg::find_seed_matrix(p, args.budget.to_budget(), args.force,
                                       progress_fn(args.budget));
  print_precheck(result.precheck);
  std::cout << "search-seed " << p.str() << ": " << dsrg::to_string(result.status)
            << " (nodes " << result.stats.nodes << ", restarts " << result.stats.restarts
            << ", " << format_seconds(result.stats.wall_seconds) << "s)\n";
  if (result.status == dsrg::SearchStatus::found && !args.out.empty()) {
    dsrg::write_matrix(args.out, *result.adjacency, parse_format(args.format));
    write_run_manifest(args.out, p, {}, &args.budget, &result.stats, "found",
                       result.stats.wall_seconds);
    std::cout << "wrote " << args.out << '\n';
  }
  return status_exit_code(result.status);
}

// ----- search-pair -----

struct SearchPairArgs {
  std::string seed_path;
  std::vector<std::uint64_t> tl;  // t lambda
  std::string out_b, out_c;
  std::string format = "text";
  BudgetFlags budget;
  bool force = false;
};

int run_search_pair(const SearchPairArgs& args) {
  dsrg::BinaryMatrix a = dsrg::read_matrix(args.seed_path);
  if (a.rows() == 0 || a.rows() != a.cols())
    throw dsrg::DimensionError("adjacency file must hold a square matrix");
  std::uint64_t t = args.tl[0], lambda = args.tl[1];
  dsrg::DsrgParams p = dsrg::DsrgParams::checked(a.rows(), a.row_sum(0), t, lambda, t);

  auto result = dsrg::find_seed_pair(a, p, args.budget.to_budget(), args.force,
                                     progress_fn(args.budget));
  print_precheck(result.precheck);
  std::cout << "search-pair " << p.str() << ": " << dsrg::to_string(result.status)
            << " (nodes " << result.stats.nodes << ", restarts " << result.stats.restarts
            << ", " << format_seconds(result.stats.wall_seconds) << "s)\n";
  if (result.status == dsrg::SearchStatus::found) {
    std::vector<ManifestInput> inputs = {{"adjacency", args.seed_path}};
    if (!args.out_b.empty()) {
      dsrg::write_matrix(args.out_b, *result.out_bridge, parse_format(args.format));
      write_run_manifest(args.out_b, p, inputs, &args.budget, &result.stats, "found",
                         result.stats.wall_seconds);
      std::cout << "wrote " << args.out_b << '\n';
    }
    if (!args.out_c.empty()) {
      dsrg::write_matrix(args.out_c, *result.in_bridge, parse_format(args.format));
      write_run_manifest(args.out_c, p, inputs, &args.budget, &result.stats, "found",
                         result.stats.wall_seconds);
      std::cout << "wrote " << args.out_c << '\n';
    }
  }
  return status_exit_code(result.status);
}

// ----- verify -----

struct VerifyArgs {
  std::string matrix_path;
  std::vector<std::uint64_t> params;  // v k t lambda mu
  std::string mode = "auto";
  std::uint64_t samples = 100000;
  std::uint64_t rng_seed = 1;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  dsrg::BinaryMatrix a = dsrg::read_matrix(args.matrix_path);
  dsrg::DsrgParams p = dsrg::DsrgParams::checked(args.params[0], args.params[1],
                                                 args.params[2], args.params[3],
                                                 args.params[4]);
  std::string mode = args.mode;
  if (mode == "auto") mode = (p.v <= 8192) ? "full" : "sampled";

  dsrg::VerifyReport report = [&] {
    if (mode == "full") return dsrg::verify_algebraic(a, p);
    if (mode == "combinatorial") return dsrg::verify_combinatorial(a, p);
    if (mode == "sampled") return dsrg::verify_sampled(a, p, args.samples, args.rng_seed);
    throw dsrg::UnsupportedError("unknown mode '" + args.mode +
                                 "' (expected auto, full, combinatorial, or sampled)");
  }();
  print_report(report, args.json);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

// ----- verify-pair -----

struct VerifyPairArgs {
  std::string seed_path, b_path, c_path;
  std::vector<std::uint64_t> tl;  // t lambda
  std::size_t n = 1;
  std::string mode = "full";
  bool json = false;
};

int run_verify_pair(const VerifyPairArgs& args) {
  dsrg::BinaryMatrix a = dsrg::read_matrix(args.seed_path);
  dsrg::BinaryMatrix b = dsrg::read_matrix(args.b_path);
  dsrg::BinaryMatrix c = dsrg::read_matrix(args.c_path);
  if (a.rows() == 0 || a.rows() != a.cols())
    throw dsrg::DimensionError("adjacency file must hold a square matrix");
  std::uint64_t t = args.tl[0], lambda = args.tl[1];
  dsrg::DsrgParams p = dsrg::DsrgParams::checked(a.rows(), a.row_sum(0), t, lambda, t);

  std::optional<dsrg::FamilySeed> seed;
  try {
    seed = dsrg::FamilySeed::validated(p, std::move(a), std::move(b), std::move(c));
  } catch (const dsrg::SeedContractError& e) {
    if (args.json) {
      std::cout << nlohmann::json({{"ok", false}, {"contract", e.what()}}).dump(2) << '\n';
    } else {
      std::cout << "seed contract violated: " << e.what() << '\n';
    }
    return kExitVerifyFailed;
  }

  if (args.mode != "structural" && args.mode != "full")
    throw dsrg::UnsupportedError("unknown mode '" + args.mode +
                                 "' (expected full or structural)");
  dsrg::VerifyReport report = (args.mode == "structural")
                                  ? dsrg::check_structure(*seed, args.n)
                                  : dsrg::check_block_system(*seed, args.n);
  if (args.json) {
    nlohmann::json out = report_to_json(report);
    out["contract"] = "ok";
    out["level"] = args.n;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "seed contract: ok\n";
    std::cout << "level " << args.n << ' ';
    print_report(report, false);
  }
  return report.ok ? kExitOk : kExitVerifyFailed;
}

// ----- build -----

struct BuildArgs {
  std::string seed_path, b_path, c_path;
  std::vector<std::uint64_t> tl;  // t lambda
  std::size_t n = 1;
  std::string out_dir;
  std::string format = "text";
  std::string verify_mode = "auto";
  std::uint64_t samples = 100000;
  std::uint64_t rng_seed = 1;
};

int run_build(const BuildArgs& args) {
  dsrg::BinaryMatrix a = dsrg::read_matrix(args.seed_path);
  dsrg::BinaryMatrix b = dsrg::read_matrix(args.b_path);
  dsrg::BinaryMatrix c = dsrg::read_matrix(args.c_path);
  if (a.rows() == 0 || a.rows() != a.cols())
    throw dsrg::DimensionError("adjacency file must hold a square matrix");
  std::uint64_t t = args.tl[0], lambda = args.tl[1];
  dsrg::DsrgParams p = dsrg::DsrgParams::checked(a.rows(), a.row_sum(0), t, lambda, t);

  if (args.verify_mode != "auto" && args.verify_mode != "full" &&
      args.verify_mode != "sampled" && args.verify_mode != "structural")
    throw dsrg::UnsupportedError("unknown verify mode '" + args.verify_mode +
                                 "' (expected auto, full, sampled, or structural)");

  dsrg::FamilySeed seed =
      dsrg::FamilySeed::validated(p, std::move(a), std::move(b), std::move(c));
  std::filesystem::create_directories(args.out_dir);

  std::vector<ManifestInput> inputs = {{"adjacency", args.seed_path},
                                       {"out-bridge", args.b_path},
                                       {"in-bridge", args.c_path}};
  dsrg::MatrixFileFormat format = parse_format(args.format);
  const char* ext = format == dsrg::MatrixFileFormat::text ? ".txt" : ".bin";

  bool all_ok = true;
  std::size_t first = (args.n == 1) ? 1 : 2;
  for (std::size_t level = first; level <= args.n; ++level) {
    auto level_start = std::chrono::steady_clock::now();
    dsrg::FamilyTerm term = [&] {
      try {
        return dsrg::family_term(seed, level);
      } catch (const dsrg::CapacityError& e) {
        throw dsrg::CapacityError("building level " + std::to_string(level) + ": " +
                                  e.what());
      }
    }();

    std::string out_path =
        (std::filesystem::path(args.out_dir) / ("term_" + std::to_string(level) + ext))
            .string();
    dsrg::write_matrix(out_path, term.adjacency, format);

    bool level_ok = true;
    std::string verification;
    if (args.verify_mode == "structural") {
      dsrg::VerifyReport structure = dsrg::check_structure(seed, level);
      level_ok = structure.ok;
      verification = structure.summary();
    } else {
      bool full = args.verify_mode == "full" ||
                  (args.verify_mode == "auto" && term.params.v <= 8192);
      dsrg::VerifyReport report =
          full ? dsrg::verify_algebraic(term.adjacency, term.params)
               : dsrg::verify_sampled(term.adjacency, term.params, args.samples,
                                      args.rng_seed);
      level_ok = report.ok;
      verification = report.summary();
      if (args.verify_mode == "auto") {
        dsrg::VerifyReport structure = dsrg::check_structure(seed, level);
        level_ok = level_ok && structure.ok;
        verification += "; " + structure.summary();
      }
    }
    all_ok = all_ok && level_ok;

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                level_start)
                      .count();
    dsrg::Manifest man;
    man.add("tool", "dsrg");
    man.add("version", dsrg::kVersion);
    man.add("command", g_command_line);
    man.add("level", std::to_string(level));
    man.add("params", term.params.str());
    for (const auto& input : inputs) {
      man.add("input-" + input.name, input.path);
      man.add("input-" + input.name + "-sha256", dsrg::sha256_hex_of_file(input.path));
    }
    man.add("output", out_path);
    man.add("output-sha256", dsrg::sha256_hex_of_file(out_path));
    man.add("verification", verification);
    man.add("status", level_ok ? "ok" : "verification-failed");
    man.add("wall-seconds", format_seconds(wall));
    man.write(dsrg::manifest_path_for(out_path));

    std::cout << "term " << level << ": " << term.params.str() << " -> " << out_path
              << " [" << verification << "]\n";
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

// ----- convert -----

struct ConvertArgs {
  std::string in_path, out_path;
  std::string format;
};

int run_convert(const ConvertArgs& args) {
  dsrg::BinaryMatrix m = dsrg::read_matrix(args.in_path);
  dsrg::write_matrix(args.out_path, m, parse_format(args.format));
  dsrg::Manifest man;
  man.add("tool", "dsrg");
  man.add("version", dsrg::kVersion);
  man.add("command", g_command_line);
  man.add("input", args.in_path);
  man.add("input-sha256", dsrg::sha256_hex_of_file(args.in_path));
  man.add("output", args.out_path);
  man.add("output-sha256", dsrg::sha256_hex_of_file(args.out_path));
  man.add("status", "ok");
  man.write(dsrg::manifest_path_for(args.out_path));
  std::cout << "wrote " << args.out_path << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_command_line += ' ';
    g_command_line += argv[i];
  }

  CLI::App app{"Directed strongly regular graph families: construction, "
               "verification, and seed search"};
  app.set_version_flag("--version", dsrg::kVersion);
  app.footer(kExitHelp);
  app.require_subcommand(1);

  ParamsArgs params_args;
  auto* params_cmd = app.add_subcommand(
      "params", "Print the parameter set of the n-th family member");
  params_cmd->add_option("seed", params_args.seed,
                         "Seed parameters: v k t lambda (mu = t implied)")
      ->expected(0, 4);
  params_cmd->add_option("--family", params_args.family,
                         "Catalog row (1-based) instead of explicit parameters");
  params_cmd->add_option("--n", params_args.n, "Family member index (1 = seed)")
      ->capture_default_str();
  params_cmd->add_flag("--catalog", params_args.catalog,
                       "List the built-in seed parameter catalog");
  add_thread_flag(params_cmd);

  SearchSeedArgs seed_args;
  auto* seed_cmd = app.add_subcommand(
      "search-seed", "Search for an adjacency matrix with the given parameters");
  seed_cmd->add_option("params", seed_args.params, "Parameters: v k t lambda mu")
      ->expected(0, 5);
  seed_cmd->add_option("--family", seed_args.family,
                       "Catalog row (1-based) instead of explicit parameters");
  seed_cmd->add_option("--out", seed_args.out, "Write the found matrix here");
  seed_cmd->add_option("--format", seed_args.format, "Output format: text or binary")
      ->capture_default_str();
  seed_cmd->add_flag("--force", seed_args.force,
                     "Skip the family feasibility precheck");
  add_budget_flags(seed_cmd, seed_args.budget);
  add_thread_flag(seed_cmd);

  SearchPairArgs pair_args;
  auto* pair_cmd = app.add_subcommand(
      "search-pair", "Search for the bridge pair completing a family seed");
  pair_cmd->add_option("--seed", pair_args.seed_path, "Adjacency matrix file")
      ->required();
  pair_cmd->add_option("tl", pair_args.tl, "Parameters: t lambda")->expected(2)->required();
  pair_cmd->add_option("--out-b", pair_args.out_b, "Write the out-bridge here");
  pair_cmd->add_option("--out-c", pair_args.out_c, "Write the in-bridge here");
  pair_cmd->add_option("--format", pair_args.format, "Output format: text or binary")
      ->capture_default_str();
  pair_cmd->add_flag("--force", pair_args.force,
                     "Skip the precheck and the adjacency verification "
                     "(for exhaustive infeasibility runs)");
  add_budget_flags(pair_cmd, pair_args.budget);
  add_thread_flag(pair_cmd);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check a matrix against the degree and two-path conditions");
  verify_cmd->add_option("--matrix", verify_args.matrix_path, "Matrix file")
      ->required();
  verify_cmd->add_option("params", verify_args.params, "Parameters: v k t lambda mu")
      ->expected(5)
      ->required();
  verify_cmd
      ->add_option("--mode", verify_args.mode,
                   "auto (full up to order 8192, sampled beyond), full, "
                   "combinatorial, or sampled")
      ->capture_default_str();
  verify_cmd->add_option("--samples", verify_args.samples, "Sampled-mode probe count")
      ->capture_default_str();
  verify_cmd->add_option("--rng-seed", verify_args.rng_seed, "Sampled-mode seed")
      ->capture_default_str();
  verify_cmd->add_flag("--json", verify_args.json, "Machine-readable report");
  add_thread_flag(verify_cmd);

  VerifyPairArgs vpair_args;
  auto* vpair_cmd = app.add_subcommand(
      "verify-pair", "Check a seed triple (adjacency + bridges) and its "
                     "level-n product identities");
  vpair_cmd->add_option("--seed", vpair_args.seed_path, "Adjacency matrix file")
      ->required();
  vpair_cmd->add_option("--b", vpair_args.b_path, "Out-bridge file")->required();
  vpair_cmd->add_option("--c", vpair_args.c_path, "In-bridge file")->required();
  vpair_cmd->add_option("tl", vpair_args.tl, "Parameters: t lambda")->expected(2)->required();
  vpair_cmd->add_option("--n", vpair_args.n, "Level to check")->capture_default_str();
  vpair_cmd
      ->add_option("--mode", vpair_args.mode,
                   "full (product identities) or structural (sum/block shape)")
      ->capture_default_str();
  vpair_cmd->add_flag("--json", vpair_args.json, "Machine-readable report");
  add_thread_flag(vpair_cmd);

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand(
      "build", "Build family members from a seed triple and verify them");
  build_cmd->add_option("--seed", build_args.seed_path, "Adjacency matrix file")
      ->required();
  build_cmd->add_option("--b", build_args.b_path, "Out-bridge file")->required();
  build_cmd->add_option("--c", build_args.c_path, "In-bridge file")->required();
  build_cmd->add_option("tl", build_args.tl, "Parameters: t lambda")->expected(2)->required();
  build_cmd->add_option("--n", build_args.n, "Highest member to build")
      ->capture_default_str();
  build_cmd->add_option("--out", build_args.out_dir, "Output directory")->required();
  build_cmd->add_option("--format", build_args.format, "Output format: text or binary")
      ->capture_default_str();
  build_cmd
      ->add_option("--verify", build_args.verify_mode,
                   "auto (full up to order 8192 then sampled, plus structure "
                   "checks), full, sampled, or structural")
      ->capture_default_str();
  build_cmd->add_option("--samples", build_args.samples, "Sampled-mode probe count")
      ->capture_default_str();
  build_cmd->add_option("--rng-seed", build_args.rng_seed, "Sampled-mode seed")
      ->capture_default_str();
  add_thread_flag(build_cmd);

  ConvertArgs convert_args;
  auto* convert_cmd =
      app.add_subcommand("convert", "Re-encode a matrix file between formats");
  convert_cmd->add_option("input", convert_args.in_path, "Input matrix file")
      ->required();
  convert_cmd->add_option("output", convert_args.out_path, "Output matrix file")
      ->required();
  convert_cmd->add_option("--format", convert_args.format,
                          "Output format: text or binary")
      ->required();
  add_thread_flag(convert_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    apply_thread_flag();
    if (*params_cmd) return run_params(params_args);
    if (*seed_cmd) return run_search_seed(seed_args);
    if (*pair_cmd) return run_search_pair(pair_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*vpair_cmd) return run_verify_pair(vpair_args);
    if (*build_cmd) return run_build(build_args);
    if (*convert_cmd) return run_convert(convert_args);
  } catch (const dsrg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
