#include "nbga/core/engine.hpp"

#include <stdexcept>

namespace nbga {

void EngineConfig::validate() const {
  if (max_pop < 3) throw std::invalid_argument("max_pop must be at least 3 for the parent ring");
  if (max_generations < 1) throw std::invalid_argument("max_generations must be at least 1");
  schedule.validate();
}

std::vector<std::pair<std::size_t, std::size_t>> ring_pairs(std::span<const std::size_t> order) {
  if (order.size() < 3) throw std::invalid_argument("a parent ring needs at least 3 members");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    pairs.emplace_back(order[j], order[(j + 1) % order.size()]);
  }
  return pairs;
}

}  // namespace nbga
