#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "nbga/core/engine.hpp"
#include "nbga/core/random.hpp"

namespace nbga {

struct ClassicGaOptions {
  double crossover_rate = 0.9;
  double mutation_rate = 0.2;
};

/// Plain generational GA used as the comparison baseline: roulette-wheel
/// parent selection on weight 1/objective, the problem's own crossover and
/// mutation, and the single best member copied unchanged (elitism of one).
/// No ring topology and no trio or greedy selection. Deterministic per seed.
template <ProblemBundle P>
RunResult<typename P::genome_type> classic_ga(
    const P& problem, const EngineConfig& config, const ClassicGaOptions& options = {},
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

  std::vector<double> cumulative(pop_size);
  std::vector<Individual<Genome>> next;
  next.reserve(pop_size);

  for (int generation = 1; generation <= config.max_generations; ++generation) {
    double total = 0.0;
    for (std::size_t i = 0; i < pop_size; ++i) {
      total += 1.0 / std::max(population[i].objective, 1e-12);
      cumulative[i] = total;
    }
    auto spin = [&]() -> const Individual<Genome>& {
      const double ticket = uniform_real(rng) * total;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), ticket);
      const auto index = std::min<std::size_t>(
          static_cast<std::size_t>(it - cumulative.begin()), pop_size - 1);
      return population[index];
    };

    next.clear();
    next.push_back(population[detail::best_index<Genome>(population)]);
    while (next.size() < pop_size) {
      const auto& mother = spin();
      const auto& father = spin();
      std::pair<Genome, Genome> children{mother.genome, father.genome};
      if (bernoulli(rng, options.crossover_rate)) {
        children = problem.crossover(mother.genome, father.genome, rng);
      }
      for (Genome* child : {&children.first, &children.second}) {
        if (next.size() == pop_size) break;
        if (bernoulli(rng, options.mutation_rate)) {
          *child = problem.mutate(*child, generation, config.schedule, rng);
        }
        next.push_back(detail::finish(problem, std::move(*child), rng));
      }
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
