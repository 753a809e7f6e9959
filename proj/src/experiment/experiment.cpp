#include "nbga/experiment/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "nbga/experiment/classic_ga.hpp"
#include "nbga/ligand/problem.hpp"
#include "nbga/tsp/problem.hpp"
#include "nbga/tsp/tsplib.hpp"

namespace nbga {

namespace {

template <class Problem, class Describe>
RunSummary run_once(const Problem& problem, const ExperimentConfig& config,
                    const MutationSchedule& schedule, std::uint64_t seed, Describe describe) {
  const EngineConfig engine{config.pop, config.effective_generations(), seed, schedule};
  const auto start = std::chrono::steady_clock::now();
  const auto result = config.algorithm == Algorithm::Nbga
                          ? evolve(problem, engine)
                          : classic_ga(problem, engine, config.classic);
  const auto stop = std::chrono::steady_clock::now();
  return {seed, result.best.objective, describe(result.best.genome), result.best_trace,
          std::chrono::duration<double>(stop - start).count()};
}

// Fans run indices out to worker threads; slot i always holds seed + i.
template <class RunOne>
std::vector<RunSummary> run_all(const ExperimentConfig& config, RunOne run_one) {
  const auto total = static_cast<std::size_t>(config.runs);
  std::vector<RunSummary> runs(total);
  std::size_t workers = config.threads > 0 ? static_cast<std::size_t>(config.threads)
                                           : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        runs[i] = run_one(config.seed + i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return runs;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();

  ExperimentReport report;
  report.config = config;
  report.generations = config.effective_generations();

  if (config.problem == ProblemKind::Tsp) {
    auto instance = std::make_shared<tsp::TspInstance>(
        tsp::load_tsplib(config.instance, {config.rounding}));
    if (config.optimum) instance->set_known_optimum(config.optimum);
    report.problem_name = instance->name();
    report.dimension = instance->size();
    report.optimum = instance->known_optimum();

    const tsp::TspProblem problem(std::move(instance));
    const auto schedule = config.schedule_for(report.dimension);
    report.runs = run_all(config, [&](std::uint64_t seed) {
      const tsp::TspProblem own = problem;
      return run_once(own, config, schedule, seed, [](const tsp::Tour& tour) {
        std::string text;
        for (std::size_t i = 0; i < tour.size(); ++i) {
          if (i > 0) text += ' ';
          text += std::to_string(tour.cities[i] + 1);
        }
        return text;
      });
    });
  } else {
    auto site = std::make_shared<const ligand::ActiveSite>(ligand::load_site(config.site));
    const auto mode = config.problem == ProblemKind::LigandFixed ? ligand::LengthMode::Fixed
                                                                 : ligand::LengthMode::Variable;
    report.problem_name = config.site.stem().string();
    report.dimension = ligand::kRightSlots + ligand::kLeftSlots;
    report.optimum = config.optimum;

    const ligand::LigandProblem problem(std::move(site), config.energy, mode);
    const auto schedule = config.schedule_for(report.dimension);
    report.runs = run_all(config, [&](std::uint64_t seed) {
      const ligand::LigandProblem own = problem;
      return run_once(own, config, schedule, seed,
                      [](const ligand::LigandChromosome& c) { return ligand::to_string(c); });
    });
  }

  std::vector<double> bests;
  bests.reserve(report.runs.size());
  for (const auto& run : report.runs) bests.push_back(run.best_objective);
  report.stats = tsp::summarize(bests, report.optimum);
  return report;
}

}  // namespace nbga
