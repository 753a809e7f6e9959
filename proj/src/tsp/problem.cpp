#include "nbga/tsp/problem.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "nbga/tsp/operators.hpp"

namespace nbga::tsp {

namespace {
enum class Step { MultipleExchange, Inversion, Displacement };
}

TspProblem::TspProblem(std::shared_ptr<const TspInstance> instance, TspOperators operators)
    : instance_(std::move(instance)), operators_(operators) {
  if (!instance_) throw std::invalid_argument("TspProblem needs an instance");
  if (!operators_.multiple_exchange && !operators_.inversion && !operators_.displacement) {
    throw std::invalid_argument("at least one TSP mutation operator must be enabled");
  }
}

Tour TspProblem::random_genome(Rng& rng) const {
  Tour tour{std::vector<int>(instance_->size())};
  std::iota(tour.cities.begin(), tour.cities.end(), 0);
  shuffle<int>(tour.cities, rng);
  return tour;
}

double TspProblem::objective(const Tour& tour) const { return tour_cost(tour, *instance_); }

Tour TspProblem::mutate(const Tour& tour, int generation, const MutationSchedule& schedule,
                        Rng& rng) const {
  if (schedule.multilevel_active(generation) && bernoulli(rng, schedule.multilevel_probability)) {
    const auto variant = uniform_index(rng, 2) == 0 ? MultilevelVariant::ExchangeDisplacement
                                                    : MultilevelVariant::InversionDisplacement;
    return multilevel_mutation(tour, variant, rng);
  }

  std::array<Step, 3> enabled{};
  std::size_t count = 0;
  if (operators_.multiple_exchange) enabled[count++] = Step::MultipleExchange;
  if (operators_.inversion) enabled[count++] = Step::Inversion;
  if (operators_.displacement) enabled[count++] = Step::Displacement;

  switch (enabled[uniform_index(rng, count)]) {
    case Step::MultipleExchange: {
      const int hi = hi_at(generation, tour.size(), schedule);
      const auto breadth = uniform_int<std::size_t>(rng, 2, static_cast<std::size_t>(hi));
      return multiple_exchange_mutation(tour, std::min(breadth, tour.size()), rng);
    }
    case Step::Inversion:
      return random_inversion(tour, rng);
    case Step::Displacement:
      return random_displacement(tour, rng);
  }
  return tour;
}

std::pair<Tour, Tour> TspProblem::crossover(const Tour& p1, const Tour& p2, Rng& rng) const {
  return random_order_crossover(p1, p2, rng);
}

}  // namespace nbga::tsp
