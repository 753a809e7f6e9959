#include "nbga/tsp/stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nbga::tsp {

double error_percent(double average, double optimum) {
  if (!(optimum > 0.0)) throw std::invalid_argument("optimum must be positive");
  return 100.0 * (average - optimum) / optimum;
}

BenchmarkStats summarize(std::span<const double> best_per_run, std::optional<double> optimum) {
  if (best_per_run.empty()) throw std::invalid_argument("no runs to summarize");
  BenchmarkStats stats;
  stats.runs = static_cast<int>(best_per_run.size());
  stats.best = *std::min_element(best_per_run.begin(), best_per_run.end());
  stats.average = std::accumulate(best_per_run.begin(), best_per_run.end(), 0.0) /
                  static_cast<double>(best_per_run.size());
  if (optimum) stats.error_percent = error_percent(stats.average, *optimum);
  return stats;
}

}  // namespace nbga::tsp
