#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "nbga/core/random.hpp"
#include "nbga/tsp/instance.hpp"

// Permutation operators. Positions are 0-based and segment bounds inclusive.
namespace nbga::tsp {

/// Multiple-exchange mutation: `breadth` random positions have their cities
/// permuted uniformly. breadth == 2 is the classic exchange (swap).
Tour multiple_exchange_mutation(Tour tour, std::size_t breadth, Rng& rng);

/// Deterministic core of the exchange: tour[positions[k]] <- tour[positions[sources[k]]].
Tour exchange(Tour tour, std::span<const std::size_t> positions,
              std::span<const std::size_t> sources);

/// Reverses [first, last]; requires first < last.
Tour simple_inversion_mutation(Tour tour, std::size_t first, std::size_t last);
Tour random_inversion(Tour tour, Rng& rng);

/// Removes [first, last] and reinserts it after the first `insert_after`
/// cities of the remainder; requires insert_after <= n - (last - first + 1).
Tour displacement_mutation(Tour tour, std::size_t first, std::size_t last,
                           std::size_t insert_after);
Tour random_displacement(Tour tour, Rng& rng);

enum class MultilevelVariant {
  ExchangeDisplacement,
  InversionDisplacement,
};

/// Exchange (or inversion) followed by displacement, each with its own draws
/// in that order.
Tour multilevel_mutation(Tour tour, MultilevelVariant variant, Rng& rng);

/// Order crossover. Each child keeps its first parent's segment [first, last]
/// and fills the remaining slots, starting after `last` and wrapping, with the
/// other parent's cities in that parent's order (read from after `last`),
/// skipping cities already present.
std::pair<Tour, Tour> order_crossover(const Tour& p1, const Tour& p2, std::size_t first,
                                      std::size_t last);

/// Order crossover with cut points drawn uniformly (first < last).
std::pair<Tour, Tour> random_order_crossover(const Tour& p1, const Tour& p2, Rng& rng);

/// Two distinct positions in [0, n), returned ascending.
std::pair<std::size_t, std::size_t> random_cut(std::size_t n, Rng& rng);

}  // namespace nbga::tsp
