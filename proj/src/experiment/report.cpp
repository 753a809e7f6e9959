#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "nbga/experiment/experiment.hpp"

namespace nbga {

void write_report(const ExperimentReport& report, std::ostream& out, bool include_timings) {
  const auto& cfg = report.config;
  fmt::print(out, "# nbga experiment report\n");
  fmt::print(out, "problem: {}\n", to_string(cfg.problem));
  fmt::print(out, "name: {}\n", report.problem_name);
  fmt::print(out, "dimension: {}\n", report.dimension);
  fmt::print(out, "algorithm: {}\n", to_string(cfg.algorithm));
  fmt::print(out, "runs: {}\n", cfg.runs);
  fmt::print(out, "population: {}\n", cfg.pop);
  fmt::print(out, "generations: {}\n", report.generations);
  fmt::print(out, "base_seed: {}\n", cfg.seed);
  if (report.optimum) fmt::print(out, "optimum: {}\n", *report.optimum);
  if (report.is_ligand()) fmt::print(out, "fitness_k: {}\n", cfg.energy.k);
  fmt::print(out, "\n");

  const bool ligand = report.is_ligand();
  fmt::print(out, "run\tseed\tbest{}{}\tgenome\n", ligand ? "\tfitness" : "",
             include_timings ? "\tseconds" : "");
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const auto& run = report.runs[i];
    fmt::print(out, "{}\t{}\t{}", i + 1, run.seed, run.best_objective);
    if (ligand) fmt::print(out, "\t{}", ligand::fitness(run.best_objective, cfg.energy));
    if (include_timings) fmt::print(out, "\t{:.3f}", run.wall_seconds);
    fmt::print(out, "\t{}\n", run.best_genome);
  }

  fmt::print(out, "\nStatistics\tBest\tAverage\tError\n");
  fmt::print(out, "{}\t{}\t{:.6f}\t{}\n", report.problem_name, report.stats.best,
             report.stats.average,
             report.stats.error_percent ? fmt::format("{:.4f}", *report.stats.error_percent) : "-");
}

void emit_trace(std::span<const TracePoint> trace, const std::filesystem::path& path,
                const std::optional<ligand::EnergyParams>& energy) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write trace file '" + path.string() + "'");
  out << "generation,best_objective,fitness\n";
  for (const auto& point : trace) {
    if (energy) {
      fmt::print(out, "{},{},{}\n", point.generation, point.best_objective,
                 ligand::fitness(point.best_objective, *energy));
    } else {
      fmt::print(out, "{},{},\n", point.generation, point.best_objective);
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("failed while writing trace file '" + path.string() + "'");
}

std::filesystem::path trace_path_for(const std::filesystem::path& base, std::uint64_t seed) {
  auto path = base;
  path.replace_filename(fmt::format("{}-seed{}{}", base.stem().string(), seed,
                                    base.extension().string()));
  return path;
}

void write_outputs(const ExperimentReport& report, std::ostream& fallback, bool include_timings) {
  if (report.config.out) {
    std::ofstream out(*report.config.out, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write report '" + report.config.out->string() + "'");
    }
    write_report(report, out, include_timings);
  } else {
    write_report(report, fallback, include_timings);
  }

  if (!report.config.trace) return;
  const std::optional<ligand::EnergyParams> energy =
      report.is_ligand() ? std::optional(report.config.energy) : std::nullopt;
  if (report.runs.size() == 1) {
    emit_trace(report.runs.front().trace, *report.config.trace, energy);
    return;
  }
  for (const auto& run : report.runs) {
    emit_trace(run.trace, trace_path_for(*report.config.trace, run.seed), energy);
  }
}

void write_tsp_table(std::span<const ExperimentReport> reports, std::ostream& out) {
  fmt::print(out, "{:<12} {:>5} {:>8}  {:>10} {:>10} {:>8}\n", "Problem", "n", "Optimum", "Best",
             "Average", "Error");
  for (const auto& report : reports) {
    fmt::print(out, "{:<12} {:>5} {:>8}  {:>10} {:>10.2f} {:>8}\n", report.problem_name,
               report.dimension, report.optimum ? fmt::format("{}", *report.optimum) : "-",
               report.stats.best, report.stats.average,
               report.stats.error_percent ? fmt::format("{:.4f}", *report.stats.error_percent)
                                          : "-");
  }
}

void write_ligand_table(std::span<const ExperimentReport> reports, std::ostream& out) {
  fmt::print(out, "{:<24} {:>14} {:>14} {:>10}\n", "Algorithm", "Mean energy", "Best energy",
             "Fitness");
  for (const auto& report : reports) {
    const auto label = fmt::format("{} ({})", to_string(report.config.algorithm),
                                   report.config.problem == ProblemKind::LigandFixed ? "fixed"
                                                                                     : "variable");
    fmt::print(out, "{:<24} {:>14.5f} {:>14.5f} {:>10.4f}\n", label, report.stats.average,
               report.stats.best, ligand::fitness(report.stats.best, report.config.energy));
  }
}

}  // namespace nbga
