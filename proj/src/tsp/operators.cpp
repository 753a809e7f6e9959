#include "nbga/tsp/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "nbga/core/permute.hpp"

namespace nbga::tsp {

Tour multiple_exchange_mutation(Tour tour, std::size_t breadth, Rng& rng) {
  random_exchange<int>(tour.cities, breadth, rng);
  return tour;
}

Tour exchange(Tour tour, std::span<const std::size_t> positions,
              std::span<const std::size_t> sources) {
  exchange_positions<int>(tour.cities, positions, sources);
  return tour;
}

Tour simple_inversion_mutation(Tour tour, std::size_t first, std::size_t last) {
  if (first >= last || last >= tour.size()) {
    throw std::invalid_argument("inversion needs first < last < n");
  }
  std::reverse(tour.cities.begin() + static_cast<std::ptrdiff_t>(first),
               tour.cities.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return tour;
}

std::pair<std::size_t, std::size_t> random_cut(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("cannot cut fewer than 2 positions");
  const std::size_t a = uniform_index(rng, n);
  std::size_t b = uniform_index(rng, n - 1);
  if (b >= a) ++b;
  return std::minmax(a, b);
}

Tour random_inversion(Tour tour, Rng& rng) {
  const auto [first, last] = random_cut(tour.size(), rng);
  return simple_inversion_mutation(std::move(tour), first, last);
}

Tour displacement_mutation(Tour tour, std::size_t first, std::size_t last,
                           std::size_t insert_after) {
  const std::size_t n = tour.size();
  if (first > last || last >= n) throw std::invalid_argument("displacement needs first <= last < n");
  const std::size_t length = last - first + 1;
  if (insert_after > n - length) {
    throw std::invalid_argument("displacement insertion point out of range");
  }
  const auto begin = tour.cities.begin();
  std::vector<int> segment(begin + static_cast<std::ptrdiff_t>(first),
                           begin + static_cast<std::ptrdiff_t>(last) + 1);
  std::vector<int> rest;
  rest.reserve(n - length);
  rest.insert(rest.end(), begin, begin + static_cast<std::ptrdiff_t>(first));
  rest.insert(rest.end(), begin + static_cast<std::ptrdiff_t>(last) + 1, tour.cities.end());
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(insert_after), segment.begin(),
              segment.end());
  tour.cities = std::move(rest);
  return tour;
}

Tour random_displacement(Tour tour, Rng& rng) {
  const std::size_t n = tour.size();
  const std::size_t length = uniform_int<std::size_t>(rng, 1, n - 1);
  const std::size_t first = uniform_int<std::size_t>(rng, 0, n - length);
  const std::size_t insert_after = uniform_int<std::size_t>(rng, 0, n - length);
  return displacement_mutation(std::move(tour), first, first + length - 1, insert_after);
}

Tour multilevel_mutation(Tour tour, MultilevelVariant variant, Rng& rng) {
  switch (variant) {
    case MultilevelVariant::ExchangeDisplacement:
      tour = multiple_exchange_mutation(std::move(tour), 2, rng);
      break;
    case MultilevelVariant::InversionDisplacement:
      tour = random_inversion(std::move(tour), rng);
      break;
  }
  return random_displacement(std::move(tour), rng);
}

namespace {

Tour ox_child(const Tour& keep, const Tour& fill, std::size_t first, std::size_t last) {
  const std::size_t n = keep.size();
  Tour child{std::vector<int>(n, -1)};
  std::vector<bool> used(n, false);
  for (std::size_t i = first; i <= last; ++i) {
    child.cities[i] = keep.cities[i];
    used[static_cast<std::size_t>(keep.cities[i])] = true;
  }
  std::size_t slot = (last + 1) % n;
  for (std::size_t k = 0; k < n; ++k) {
    const int city = fill.cities[(last + 1 + k) % n];
    if (used[static_cast<std::size_t>(city)]) continue;
    child.cities[slot] = city;
    used[static_cast<std::size_t>(city)] = true;
    slot = (slot + 1) % n;
  }
  return child;
}

}  // namespace

std::pair<Tour, Tour> order_crossover(const Tour& p1, const Tour& p2, std::size_t first,
                                      std::size_t last) {
  if (p1.size() != p2.size()) throw std::invalid_argument("parents differ in length");
  if (first >= last || last >= p1.size()) {
    throw std::invalid_argument("order crossover needs first < last < n");
  }
  return {ox_child(p1, p2, first, last), ox_child(p2, p1, first, last)};
}

std::pair<Tour, Tour> random_order_crossover(const Tour& p1, const Tour& p2, Rng& rng) {
  const auto [first, last] = random_cut(p1.size(), rng);
  return order_crossover(p1, p2, first, last);
}

}  // namespace nbga::tsp
