#include "nbga/core/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace nbga {

MutationSchedule MutationSchedule::for_dimension(std::size_t n, int generations) {
  MutationSchedule schedule;
  schedule.hi_start = std::max(2, static_cast<int>(n / 6));
  schedule.hi_floor = 2;
  schedule.decay_generations = std::max(1, generations / 2);
  schedule.multilevel_probability = 0.05;
  schedule.multilevel_start_generation = std::max(1, generations / 2);
  return schedule;
}

void MutationSchedule::validate() const {
  if (hi_floor < 2) throw std::invalid_argument("hi_floor must be at least 2");
  if (hi_start < hi_floor) throw std::invalid_argument("hi_start must not be below hi_floor");
  if (decay_generations < 1) throw std::invalid_argument("decay_generations must be positive");
  if (multilevel_probability < 0.0 || multilevel_probability > 1.0) {
    throw std::invalid_argument("multilevel_probability must lie in [0, 1]");
  }
  if (multilevel_start_generation < 0) {
    throw std::invalid_argument("multilevel_start_generation must be non-negative");
  }
}

int hi_at(int generation, std::size_t n, const MutationSchedule& schedule) {
  if (generation < 1) throw std::invalid_argument("generation is 1-based");
  const int floor = std::max(2, schedule.hi_floor);
  // hi stays below n/6; small problems degenerate to plain exchange.
  const int cap = std::max(floor, static_cast<int>(n / 6));
  const int start = std::clamp(schedule.hi_start, floor, cap);
  const int window = std::max(1, schedule.decay_generations);
  if (generation >= window) return floor;
  // floor + ceil((start - floor) * remaining / window)
  const long long span = static_cast<long long>(start - floor) * (window - generation);
  return floor + static_cast<int>((span + window - 1) / window);
}

}  // namespace nbga
