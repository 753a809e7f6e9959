#include "nbga/tsp/instance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace nbga::tsp {

TspInstance::TspInstance(std::string name, std::size_t n, std::vector<double> costs)
    : name_(std::move(name)), n_(n), costs_(std::move(costs)) {}

TspInstance TspInstance::from_matrix(std::string name, std::size_t n, std::vector<double> costs) {
  if (n < 3) throw std::invalid_argument("a TSP instance needs at least 3 cities");
  if (costs.size() != n * n) throw std::invalid_argument("cost matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (costs[i * n + i] != 0.0) throw std::invalid_argument("cost matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      const double c = costs[i * n + j];
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("costs must be finite and non-negative");
      }
      if (c != costs[j * n + i]) {
        throw std::invalid_argument("cost matrix is not symmetric at (" + std::to_string(i + 1) +
                                    ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  return TspInstance(std::move(name), n, std::move(costs));
}

TspInstance TspInstance::from_coordinates(std::string name, std::vector<Point2> coords,
                                          Rounding rounding) {
  const std::size_t n = coords.size();
  std::vector<double> costs(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = euclid(coords[i], coords[j]);
      if (rounding == Rounding::Nearest) d = std::floor(d + 0.5);
      costs[i * n + j] = d;
      costs[j * n + i] = d;
    }
  }
  auto instance = from_matrix(std::move(name), n, std::move(costs));
  instance.coords_ = std::move(coords);
  return instance;
}

bool is_valid_tour(const Tour& tour, std::size_t n) {
  if (tour.cities.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int city : tour.cities) {
    if (city < 0 || static_cast<std::size_t>(city) >= n || seen[static_cast<std::size_t>(city)]) {
      return false;
    }
    seen[static_cast<std::size_t>(city)] = true;
  }
  return true;
}

double tour_cost(const Tour& tour, const TspInstance& instance) {
  const std::size_t n = instance.size();
  if (tour.size() != n) {
    throw std::invalid_argument("tour has " + std::to_string(tour.size()) +
                                " cities, instance has " + std::to_string(n));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto from = static_cast<std::size_t>(tour.cities[i]);
    const auto to = static_cast<std::size_t>(tour.cities[(i + 1) % n]);
    total += instance.cost(from, to);
  }
  return total;
}

std::optional<double> known_optimum_for(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, double>, 5> table{{
      {"gr24", 1272},
      {"bayg29", 1610},
      {"gr48", 5046},
      {"eil51", 426},
      {"st70", 675},
  }};
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  return std::nullopt;
}

}  // namespace nbga::tsp
