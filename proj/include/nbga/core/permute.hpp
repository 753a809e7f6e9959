#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nbga/core/random.hpp"

namespace nbga {

/// values[positions[k]] <- old values[positions[sources[k]]] for every k.
/// `sources` must be a permutation of 0..positions.size()-1.
template <class T>
void exchange_positions(std::span<T> values, std::span<const std::size_t> positions,
                        std::span<const std::size_t> sources) {
  if (positions.size() != sources.size()) {
    throw std::invalid_argument("positions and sources differ in length");
  }
  std::vector<T> taken;
  taken.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= values.size()) throw std::out_of_range("exchange position out of range");
    taken.push_back(values[p]);
  }
  for (std::size_t k = 0; k < positions.size(); ++k) {
    values[positions[k]] = taken.at(sources[k]);
  }
}

/// Picks `count` distinct positions and permutes their contents uniformly at
/// random (fixed points allowed). Draws positions first, then the permutation.
template <class T>
void random_exchange(std::span<T> values, std::size_t count, Rng& rng) {
  if (count < 2 || count > values.size()) {
    throw std::invalid_argument("exchange breadth must lie in [2, size]");
  }
  const auto positions = sample_indices(values.size(), count, rng);
  std::vector<std::size_t> sources(count);
  for (std::size_t k = 0; k < count; ++k) sources[k] = k;
  shuffle<std::size_t>(sources, rng);
  exchange_positions<T>(values, positions, sources);
}

}  // namespace nbga
