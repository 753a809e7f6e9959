// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nbga/core/engine.hpp"
#include "nbga/experiment/config.hpp"
#include "nbga/experiment/experiment.hpp"
#include "nbga/ligand/chromosome.hpp"
#include "nbga/ligand/problem.hpp"
#include "nbga/tsp/operators.hpp"
#include "nbga/tsp/problem.hpp"
#include "nbga/tsp/stats.hpp"
#include "nbga/tsp/tsplib.hpp"
#include "../support/oracles.hpp"

namespace fs = std::filesystem;
using namespace nbga;

namespace {

// Pinned settings and tolerances.
constexpr int kTspPop = 100;
constexpr int kTspGenerations = 2000;
constexpr int kTspMaxRuns = 30;
constexpr double kTspRunSeconds = 60.0;
constexpr double kErrorDecimals = 1e4;  // compare at 4 d.p.
constexpr int kOracleInstances = 5;
constexpr int kOracleSeeds = 5;
constexpr int kOracleRequired = 4;
constexpr int kOraclePop = 50;
constexpr int kOracleGenerations = 500;
constexpr int kLigandPop = 100;
constexpr int kLigandGenerations = 100;
constexpr int kLigandSeeds = 10;
constexpr int kLigandStrictWins = 8;
constexpr int kPropertyApplications = 10000;

const fs::path kData = NBGA_TEST_DATA_DIR;
const fs::path kSampleSite = NBGA_SAMPLE_SITE;
const fs::path kSourceDir = NBGA_SOURCE_DIR;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const Outcome& outcome) {
  fmt::print("{} {}: {}\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail);
  std::fflush(stdout);
  if (!outcome.pass) ++failures;
}

void guarded(const std::string& name, const std::function<Outcome()>& check) {
  try {
    report(name, check());
  } catch (const std::exception& e) {
    report(name, {false, fmt::format("exception: {}", e.what())});
  }
}

double round4(double x) { return std::round(x * kErrorDecimals) / kErrorDecimals; }

Outcome error_fidelity() {
  struct Row {
    const char* name;
    double average, optimum, printed;
  };
  const Row rows[] = {{"gr24", 1272, 1272, 0.0000},
                      {"bayg29", 1610, 1610, 0.0000},
                      {"gr48", 5084, 5046, 0.7531},
                      {"eil51", 432, 426, 1.4084},
                      {"st70", 684, 675, 1.3333}};
  std::string detail;
  bool pass = true;
  for (const auto& row : rows) {
    const double got = round4(tsp::error_percent(row.average, row.optimum));
    const bool ok = got == row.printed;
    pass = pass && ok;
    detail += fmt::format("{}{} {:.4f}", detail.empty() ? "" : ", ", row.name, got);
    if (!ok) detail += fmt::format(" (printed {:.4f})", row.printed);
  }
  return {pass, detail};
}

std::optional<fs::path> find_instance(const std::string& name) {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("NBGA_INSTANCE_DIR")) dirs.emplace_back(env);
  dirs.push_back(kSourceDir / "instances");
  dirs.push_back(kData / "tsplib");
  for (const auto& dir : dirs) {
    const auto path = dir / (name + ".tsp");
    if (fs::exists(path)) return path;
  }
  return std::nullopt;
}

struct QualityTarget {
  std::string name;
  double target;  // best over the runs must be <= target
};

Outcome tsp_quality() {
  const QualityTarget targets[] = {{"gr24", 1272}, {"bayg29", 1610}, {"eil51", 433}, {"st70", 689}};
  bool pass = true;
  std::string detail;
  for (const auto& t : targets) {
    if (!detail.empty()) detail += "; ";
    const auto path = find_instance(t.name);
    if (!path) {
      pass = false;
      detail += fmt::format("{}: instance file missing (run `nbga fetch {} --dest instances`)",
                            t.name, t.name);
      continue;
    }
    auto instance = std::make_shared<const tsp::TspInstance>(tsp::load_tsplib(*path));
    const tsp::TspProblem problem(instance);
    const auto schedule = MutationSchedule::for_dimension(instance->size(), kTspGenerations);
    double best = 1e300;
    double slowest = 0.0;
    int runs = 0;
    for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(kTspMaxRuns); ++seed) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = evolve(problem, EngineConfig{kTspPop, kTspGenerations, seed, schedule});
      slowest = std::max(
          slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      best = std::min(best, result.best.objective);
      ++runs;
      if (best <= t.target) break;
    }
    const bool ok = best <= t.target && slowest <= kTspRunSeconds;
    pass = pass && ok;
    detail += fmt::format("{}: best {} (target <= {}) in {} run(s), slowest {:.2f}s{}", t.name, best,
                          t.target, runs, slowest, ok ? "" : " FAILED");
  }
  return {pass, detail};
}

Outcome brute_force_equivalence() {
  bool pass = true;
  std::string detail;
  for (int i = 0; i < kOracleInstances; ++i) {
    const std::size_t n = 6 + static_cast<std::size_t>(i % 3);
    auto instance = std::make_shared<const tsp::TspInstance>(
        oracle::random_instance(n, 1000 + static_cast<std::uint32_t>(i)));
    const double optimum = oracle::brute_force_optimum(*instance);
    const tsp::TspProblem problem(instance);
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(kOracleSeeds); ++seed) {
      const EngineConfig config{kOraclePop, kOracleGenerations, seed,
                                MutationSchedule::for_dimension(n, kOracleGenerations)};
      if (evolve(problem, config).best.objective == optimum) ++hits;
    }
    pass = pass && hits >= kOracleRequired;
    detail += fmt::format("{}n={} opt={} {}/{}", detail.empty() ? "" : ", ", n, optimum, hits,
                          kOracleSeeds);
  }
  return {pass, detail};
}

Outcome golden_crossover() {
  using ligand::Group;
  auto side = [](std::initializer_list<int> values) {
    std::array<Group, 10> out{};
    std::size_t i = 0;
    for (int v : values) out[i++] = ligand::group_from_int(v);
    return out;
  };
  const auto [s1, s2] = ligand::segment_crossover(side({1, 5, 2, 8, 8, 1, 5, 1, 4, 6}),
                                                  side({2, 7, 1, 8, 3, 2, 5, 8, 6, 2}), 3, 4, 6);
  const bool sons = s1 == side({1, 5, 2, 8, 5, 8, 6, 1, 4, 6}) &&
                    s2 == side({2, 7, 1, 8, 3, 2, 8, 1, 5, 2});

  ligand::LigandChromosome son;
  son.right = s1;
  son.left.fill(Group::Alkyl1C);
  const ligand::SideBounds bounds{ligand::length_bounds(18.9, 10), ligand::length_bounds(5.4, 7)};
  const auto repaired = ligand::correct(son, ligand::LengthMode::Variable, bounds,
                                        [](std::span<const Group>) { return Group::Alkyl3C; });
  const bool fixed = repaired.right == side({1, 5, 2, 8, 5, 2, 6, 1, 4, 6});
  return {sons && fixed, fmt::format("sons {}, repaired son {}", sons ? "match" : "differ",
                                     ligand::to_string(repaired))};
}

ExperimentConfig ligand_config(ProblemKind kind, Algorithm algorithm) {
  ExperimentConfig c;
  c.problem = kind;
  c.algorithm = algorithm;
  c.site = kSampleSite;
  c.runs = kLigandSeeds;
  c.pop = kLigandPop;
  c.generations = kLigandGenerations;
  c.seed = 1;
  return c;
}

struct LigandRuns {
  ExperimentReport classic, fixed, variable;
};

const LigandRuns& ligand_runs() {
  static const LigandRuns runs{
      run_experiment(ligand_config(ProblemKind::LigandFixed, Algorithm::Classic)),
      run_experiment(ligand_config(ProblemKind::LigandFixed, Algorithm::Nbga)),
      run_experiment(ligand_config(ProblemKind::LigandVariable, Algorithm::Nbga))};
  return runs;
}

Outcome ligand_ordering() {
  const auto& r = ligand_runs();
  int wins = 0;
  for (int i = 0; i < kLigandSeeds; ++i) {
    if (r.variable.runs[static_cast<std::size_t>(i)].best_objective <
        r.classic.runs[static_cast<std::size_t>(i)].best_objective) {
      ++wins;
    }
  }
  const double v = r.variable.stats.average;
  const double f = r.fixed.stats.average;
  const double g = r.classic.stats.average;
  const bool pass = v <= f && f <= g && wins >= kLigandStrictWins;
  return {pass, fmt::format("mean best E: variable {:.5f} <= fixed {:.5f} <= classic {:.5f}; "
                            "variable < classic in {}/{} seeds",
                            v, f, g, wins, kLigandSeeds)};
}

std::vector<std::pair<double, double>> read_trace(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  if (line != "generation,best_objective,fitness") throw std::runtime_error("bad trace header");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string g, e, f;
    std::getline(fields, g, ',');
    std::getline(fields, e, ',');
    std::getline(fields, f, ',');
    rows.emplace_back(std::stod(e), f.empty() ? 0.0 : std::stod(f));
  }
  return rows;
}

Outcome trace_monotonicity() {
  const auto dir = fs::temp_directory_path() / "nbga-acceptance-traces";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto& r = ligand_runs();
  int traces = 0;
  int violations = 0;
  for (const auto* report : {&r.classic, &r.fixed, &r.variable}) {
    for (const auto& run : report->runs) {
      const auto path = dir / fmt::format("{}-{}-{}.csv", to_string(report->config.algorithm),
                                          to_string(report->config.problem), run.seed);
      emit_trace(run.trace, path, report->config.energy);
      const auto rows = read_trace(path);
      ++traces;
      if (rows.size() != static_cast<std::size_t>(kLigandGenerations)) ++violations;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first > rows[i - 1].first || rows[i].second < rows[i - 1].second) ++violations;
      }
    }
  }
  fs::remove_all(dir);
  return {violations == 0,
          fmt::format("{} traces of {} generations, {} violations", traces, kLigandGenerations,
                      violations)};
}

Outcome operator_properties() {
  Rng rng{20240101};
  long violations = 0;
  long applications = 0;

  constexpr std::size_t n = 30;
  tsp::Tour a;
  a.cities.resize(n);
  std::iota(a.cities.begin(), a.cities.end(), 0);
  tsp::Tour b = a;
  shuffle<int>(b.cities, rng);
  auto check_tour = [&](const tsp::Tour& t) {
    ++applications;
    if (!tsp::is_valid_tour(t, n)) ++violations;
  };
  for (int i = 0; i < kPropertyApplications; ++i) {
    a = tsp::multiple_exchange_mutation(a, uniform_int<std::size_t>(rng, 2, n), rng);
    check_tour(a);
    a = tsp::random_inversion(a, rng);
    check_tour(a);
    a = tsp::random_displacement(a, rng);
    check_tour(a);
    a = tsp::multilevel_mutation(a, tsp::MultilevelVariant::ExchangeDisplacement, rng);
    check_tour(a);
    a = tsp::multilevel_mutation(a, tsp::MultilevelVariant::InversionDisplacement, rng);
    check_tour(a);
    auto [c1, c2] = tsp::random_order_crossover(a, b, rng);
    check_tour(c1);
    check_tour(c2);
    b = c1;
  }

  const auto site = ligand::load_site(kSampleSite);
  for (auto mode : {ligand::LengthMode::Fixed, ligand::LengthMode::Variable}) {
    const auto bounds = ligand::bounds_for(site, mode);
    const ligand::LigandProblem problem(std::make_shared<const ligand::ActiveSite>(site),
                                        ligand::EnergyParams{}, mode);
    const auto schedule = MutationSchedule::for_dimension(17, kPropertyApplications);
    auto check = [&](const ligand::LigandChromosome& c) {
      ++applications;
      if (!ligand::is_valid(c, mode, bounds)) ++violations;
    };
    auto x = problem.random_genome(rng);
    auto y = problem.random_genome(rng);
    for (int i = 0; i < kPropertyApplications; ++i) {
      x = ligand::group_mutation(x, 1 + i, schedule, mode, bounds, rng);
      check(x);
      auto [c1, c2] = ligand::random_segment_crossover(x, y, rng);
      c1 = ligand::correct(c1, mode, bounds, rng);
      c2 = ligand::correct(c2, mode, bounds, rng);
      check(c1);
      check(c2);
      y = c2;
    }
  }
  return {violations == 0,
          fmt::format("{} operator applications, {} violations", applications, violations)};
}

std::string outputs_of(ExperimentConfig config, const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  config.out = dir / "report.txt";
  config.trace = dir / "trace.csv";
  std::ostringstream unused;
  write_outputs(run_experiment(config), unused);
  std::string all;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    all += file.filename().string() + "\n" + text.str();
  }
  fs::remove_all(dir);
  return all;
}

Outcome determinism() {
  ExperimentConfig tsp_cfg;
  tsp_cfg.problem = ProblemKind::Tsp;
  tsp_cfg.instance = kData / "tsplib" / "eil51.tsp";
  tsp_cfg.runs = 4;
  tsp_cfg.pop = 50;
  tsp_cfg.generations = 300;
  tsp_cfg.seed = 11;

  auto lig_cfg = ligand_config(ProblemKind::LigandVariable, Algorithm::Nbga);
  lig_cfg.runs = 3;
  auto classic_cfg = ligand_config(ProblemKind::LigandFixed, Algorithm::Classic);
  classic_cfg.runs = 2;

  const auto base = fs::temp_directory_path() / "nbga-acceptance-determinism";
  int identical = 0;
  int compared = 0;
  for (auto config : {tsp_cfg, lig_cfg, classic_cfg}) {
    config.threads = 1;
    const auto first = outputs_of(config, base / "a");
    const auto second = outputs_of(config, base / "b");
    config.threads = 3;
    const auto threaded = outputs_of(config, base / "c");
    compared += 2;
    identical += (first == second) + (first == threaded);
  }
  return {identical == compared,
          fmt::format("{}/{} reruns byte-identical (reports and traces, 1 and 3 threads)",
                      identical, compared)};
}

}  // namespace

int main() {
  guarded("error-metric fidelity", error_fidelity);
  guarded("tsp quality", tsp_quality);
  guarded("brute-force oracle equivalence", brute_force_equivalence);
  guarded("golden segment crossover", golden_crossover);
  guarded("ligand energy ordering", ligand_ordering);
  guarded("trace monotonicity", trace_monotonicity);
  guarded("operator property suite", operator_properties);
  guarded("determinism", determinism);
  fmt::print("{} criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
