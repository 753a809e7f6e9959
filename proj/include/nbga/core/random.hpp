#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace nbga {

/// The single generator type used by every stochastic routine. One instance is
/// owned per run; nothing in the library keeps hidden global state.
using Rng = std::mt19937_64;

template <std::integral T>
T uniform_int(Rng& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>{lo, hi}(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t size) {
  return uniform_int<std::size_t>(rng, 0, size - 1);
}

inline double uniform_real(Rng& rng) {
  return std::uniform_real_distribution<double>{0.0, 1.0}(rng);
}

inline bool bernoulli(Rng& rng, double p) {
  return std::bernoulli_distribution{p}(rng);
}

/// Fisher-Yates shuffle with a fixed draw order (back to front, one uniform_int
/// per slot). std::shuffle is avoided so the consumption pattern is documented.
template <class T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = uniform_index(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

/// Draws `count` distinct indices from [0, size) by a partial Fisher-Yates pass.
/// The returned order is the draw order (not sorted).
inline std::vector<std::size_t> sample_indices(std::size_t size, std::size_t count, Rng& rng) {
  std::vector<std::size_t> pool(size);
  for (std::size_t i = 0; i < size; ++i) pool[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_index(rng, size - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace nbga
