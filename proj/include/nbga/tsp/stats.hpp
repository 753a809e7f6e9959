#pragma once

#include <optional>
#include <span>

namespace nbga::tsp {

/// Best / average / error summary over independent runs.
struct BenchmarkStats {
  double best = 0.0;
  double average = 0.0;
  std::optional<double> error_percent;
  int runs = 0;
};

/// 100 * (average - optimum) / optimum. Throws std::invalid_argument when
/// optimum <= 0.
double error_percent(double average, double optimum);

/// Throws std::invalid_argument on an empty sample.
BenchmarkStats summarize(std::span<const double> best_per_run, std::optional<double> optimum);

}  // namespace nbga::tsp
