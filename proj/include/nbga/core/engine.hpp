#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "nbga/core/random.hpp"
#include "nbga/core/schedule.hpp"

namespace nbga {

/// A genome together with its cached objective (lower is better).
template <class Genome>
struct Individual {
  Genome genome;
  double objective = 0.0;
};

struct EngineConfig {
  int max_pop = 100;
  int max_generations = 100;
  std::uint64_t seed = 1;
  MutationSchedule schedule;

  /// Rejects max_pop < 3 and max_generations < 1 with std::invalid_argument.
  void validate() const;
};

struct TracePoint {
  int generation = 0;
  double best_objective = 0.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

template <class Genome>
struct RunResult {
  Individual<Genome> best;
  std::vector<TracePoint> best_trace;
  std::uint64_t seed = 0;
  int generations_run = 0;
};

// A problem bundle supplies genome generation, evaluation and variation.
// Operators receive the engine's generator and must draw only from it.
template <class P>
concept ProblemBundle = requires(const P& p, const typename P::genome_type& g, Rng& rng,
                                 int generation, const MutationSchedule& schedule) {
  typename P::genome_type;
  { p.random_genome(rng) } -> std::same_as<typename P::genome_type>;
  { p.objective(g) } -> std::convertible_to<double>;
  { p.mutate(g, generation, schedule, rng) } -> std::same_as<typename P::genome_type>;
  {
    p.crossover(g, g, rng)
  } -> std::same_as<std::pair<typename P::genome_type, typename P::genome_type>>;
};

template <class P>
concept RepairableProblem =
    ProblemBundle<P> && requires(const P& p, typename P::genome_type g, Rng& rng) {
      { p.repair(std::move(g), rng) } -> std::same_as<typename P::genome_type>;
    };

/// Called after every generation with the 1-based generation number and the
/// population as it enters the next generation.
template <class Genome>
using GenerationObserver = std::function<void(int, std::span<const Individual<Genome>>)>;

/// Cyclic parent pairs (order[j], order[j+1 mod m]). Throws on fewer than 3.
std::vector<std::pair<std::size_t, std::size_t>> ring_pairs(std::span<const std::size_t> order);

/// Lowest objective of the three; ties go to the parent, then the first son.
template <class Genome>
const Individual<Genome>& trio_select(const Individual<Genome>& parent,
                                      const Individual<Genome>& son1,
                                      const Individual<Genome>& son2) {
  const Individual<Genome>* best = &parent;
  if (son1.objective < best->objective) best = &son1;
  if (son2.objective < best->objective) best = &son2;
  return *best;
}

/// Keeps the mutant only if it is strictly better than the original.
template <class Genome, class Mutate>
  requires std::invocable<Mutate&, const Individual<Genome>&, int>
Individual<Genome> greedy_mutation_step(const Individual<Genome>& original, Mutate&& mutate,
                                        int generation) {
  Individual<Genome> mutant = std::invoke(mutate, original, generation);
  if (mutant.objective < original.objective) return mutant;
  return original;
}

namespace detail {

template <ProblemBundle P>
Individual<typename P::genome_type> finish(const P& problem, typename P::genome_type genome,
                                           Rng& rng) {
  if constexpr (RepairableProblem<P>) genome = problem.repair(std::move(genome), rng);
  const double objective = static_cast<double>(problem.objective(genome));
  return {std::move(genome), objective};
}

template <class Genome>
std::size_t best_index(std::span<const Individual<Genome>> population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].objective < population[best].objective) best = i;
  }
  return best;
}

}  // namespace detail

/// Runs the neighbourhood based GA for `config.max_generations` generations.
///
/// Per generation, in this order, all drawing from one generator seeded with
/// `config.seed`:
///   1. every member (slot order) is mutated once; the mutant replaces it only
///      if strictly better;
///   2. the slot order is shuffled;
///   3. consecutive slots of the shuffled order form a ring and each pair
///      (p_j, p_j+1) is crossed over, giving two sons;
///   4. slot p_j receives the best of {p_j, son1, son2}.
template <ProblemBundle P>
RunResult<typename P::genome_type> evolve(
    const P& problem, const EngineConfig& config,
    const GenerationObserver<typename P::genome_type>& observer = {}) {
  using Genome = typename P::genome_type;
  config.validate();

  Rng rng{config.seed};
  const auto pop_size = static_cast<std::size_t>(config.max_pop);

  std::vector<Individual<Genome>> population;
  population.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    population.push_back(detail::finish(problem, problem.random_genome(rng), rng));
  }

  RunResult<Genome> result;
  result.seed = config.seed;
  result.best = population[detail::best_index<Genome>(population)];
  result.best_trace.reserve(static_cast<std::size_t>(config.max_generations));

  auto mutate = [&](const Individual<Genome>& member, int generation) {
    return detail::finish(problem, problem.mutate(member.genome, generation, config.schedule, rng),
                          rng);
  };

  std::vector<std::size_t> order(pop_size);
  std::vector<Individual<Genome>> next(pop_size);

  for (int generation = 1; generation <= config.max_generations; ++generation) {
    for (auto& member : population) member = greedy_mutation_step<Genome>(member, mutate, generation);

    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle<std::size_t>(order, rng);

    for (const auto& [left, right] : ring_pairs(order)) {
      auto [son1, son2] = problem.crossover(population[left].genome, population[right].genome, rng);
      auto first = detail::finish(problem, std::move(son1), rng);
      auto second = detail::finish(problem, std::move(son2), rng);
      next[left] = trio_select(population[left], first, second);
    }
    population.swap(next);

    const auto& best = population[detail::best_index<Genome>(population)];
    if (best.objective < result.best.objective) result.best = best;
    result.best_trace.push_back({generation, result.best.objective});
    if (observer) observer(generation, std::span<const Individual<Genome>>(population));
  }

  result.generations_run = config.max_generations;
  return result;
}

}  // namespace nbga
