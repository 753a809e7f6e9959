#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbga/core/engine.hpp"
#include "nbga/experiment/config.hpp"
#include "nbga/tsp/stats.hpp"

namespace nbga {

struct RunSummary {
  std::uint64_t seed = 0;
  double best_objective = 0.0;
  std::string best_genome;
  std::vector<TracePoint> trace;
  double wall_seconds = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string problem_name;
  std::size_t dimension = 0;
  int generations = 0;
  std::optional<double> optimum;
  std::vector<RunSummary> runs;  // ordered by seed
  tsp::BenchmarkStats stats;

  bool is_ligand() const noexcept { return config.problem != ProblemKind::Tsp; }
};

/// Runs `config.runs` independent runs with seeds seed, seed+1, ... on up to
/// `config.threads` worker threads and aggregates them. Results do not depend
/// on the thread count. Input errors surface as ConfigError,
/// tsp::TsplibError or ligand::SiteError.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Structured text summary: header, one line per run, then the
/// Best / Average / Error block. Wall-clock times only when asked for, so the
/// default output is byte-for-byte reproducible.
void write_report(const ExperimentReport& report, std::ostream& out, bool include_timings = false);

/// Writes `generation,best_objective,fitness`, one row per generation. The
/// fitness column is k / E when `energy` is given and empty otherwise.
/// Throws std::runtime_error when the file cannot be written.
void emit_trace(std::span<const TracePoint> trace, const std::filesystem::path& path,
                const std::optional<ligand::EnergyParams>& energy = std::nullopt);

/// Path of the trace for one run of a multi-run experiment:
/// "trace.csv" -> "trace-seed7.csv".
std::filesystem::path trace_path_for(const std::filesystem::path& base, std::uint64_t seed);

/// Writes the report to `config.out` (or `fallback`) and every run's trace
/// when `config.trace` is set.
void write_outputs(const ExperimentReport& report, std::ostream& fallback,
                   bool include_timings = false);

/// One line per report in the comparison-table layout:
/// name, dimension, optimum, then Best / Average / Error.
void write_tsp_table(std::span<const ExperimentReport> reports, std::ostream& out);

/// Mean, best and per-seed best energies of several algorithm/mode reports
/// run on the same site.
void write_ligand_table(std::span<const ExperimentReport> reports, std::ostream& out);

}  // namespace nbga
