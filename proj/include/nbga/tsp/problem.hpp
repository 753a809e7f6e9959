#pragma once

#include <memory>
#include <utility>

#include "nbga/core/random.hpp"
#include "nbga/core/schedule.hpp"
#include "nbga/tsp/instance.hpp"

namespace nbga::tsp {

/// Which single-step mutations the dispatcher chooses between (uniformly)
/// outside multilevel mode.
struct TspOperators {
  bool multiple_exchange = true;
  bool inversion = true;
  bool displacement = true;
};

/// TSP bundle for the engines: random tours, tour length, and the mutation /
/// order-crossover operators.
class TspProblem {
 public:
  using genome_type = Tour;

  explicit TspProblem(std::shared_ptr<const TspInstance> instance, TspOperators operators = {});

  const TspInstance& instance() const noexcept { return *instance_; }

  Tour random_genome(Rng& rng) const;
  double objective(const Tour& tour) const;

  /// With the schedule's multilevel probability (once active) a multilevel
  /// mutation of a uniformly chosen variant; otherwise one enabled operator
  /// chosen uniformly. Multiple exchange draws its breadth from [2, hi_at(gen)].
  Tour mutate(const Tour& tour, int generation, const MutationSchedule& schedule, Rng& rng) const;

  std::pair<Tour, Tour> crossover(const Tour& p1, const Tour& p2, Rng& rng) const;

 private:
  std::shared_ptr<const TspInstance> instance_;
  TspOperators operators_;
};

}  // namespace nbga::tsp
