#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nbga/core/geometry.hpp"

namespace nbga::tsp {

/// Straight-line distance between two cities.
inline double euclid(Point2 a, Point2 b) { return distance(a, b); }

enum class Rounding {
  Nearest,  // TSPLIB nint(), integer costs
  None,
};

/// A symmetric TSP instance. Immutable once constructed.
class TspInstance {
 public:
  /// Builds from a row-major n x n matrix. Throws std::invalid_argument unless
  /// n >= 3 and the matrix is symmetric, non-negative, with a zero diagonal.
  static TspInstance from_matrix(std::string name, std::size_t n, std::vector<double> costs);

  /// Builds from planar coordinates with Euclidean costs.
  static TspInstance from_coordinates(std::string name, std::vector<Point2> coords,
                                      Rounding rounding = Rounding::Nearest);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  double cost(std::size_t i, std::size_t j) const noexcept { return costs_[i * n_ + j]; }
  const std::optional<std::vector<Point2>>& coords() const noexcept { return coords_; }

  const std::optional<double>& known_optimum() const noexcept { return known_optimum_; }
  void set_known_optimum(std::optional<double> optimum) { known_optimum_ = optimum; }

 private:
  TspInstance(std::string name, std::size_t n, std::vector<double> costs);

  std::string name_;
  std::size_t n_ = 0;
  std::vector<double> costs_;
  std::optional<std::vector<Point2>> coords_;
  std::optional<double> known_optimum_;
};

/// A closed tour: a permutation of 0..n-1.
struct Tour {
  std::vector<int> cities;

  std::size_t size() const noexcept { return cities.size(); }
  friend bool operator==(const Tour&, const Tour&) = default;
};

bool is_valid_tour(const Tour& tour, std::size_t n);

/// Sum of consecutive costs including the closing edge back to the start.
/// Throws std::invalid_argument on dimension mismatch.
double tour_cost(const Tour& tour, const TspInstance& instance);

/// Optimal tour lengths of the standard benchmark instances used in the
/// comparison table (gr24, bayg29, gr48, eil51, st70).
std::optional<double> known_optimum_for(std::string_view name);

}  // namespace nbga::tsp
