#pragma once

#include <cstddef>

namespace nbga {

/// Generation-dependent mutation parameters.
///
/// The multiple-exchange breadth `hi` starts at `hi_start` and decays linearly
/// to `hi_floor` over the first `decay_generations` generations, after which
/// only plain two-position exchange is used. Multilevel (composed) mutation is
/// switched on from `multilevel_start_generation` with a small per-call
/// probability.
struct MutationSchedule {
  int hi_start = 2;
  int hi_floor = 2;
  int decay_generations = 1;
  double multilevel_probability = 0.05;
  int multilevel_start_generation = 0;

  /// Defaults for a problem of dimension `n` run for `generations`:
  /// hi_start = max(2, n/6), decay over the first half, multilevel in the
  /// second half with probability 0.05.
  static MutationSchedule for_dimension(std::size_t n, int generations);

  bool multilevel_active(int generation) const noexcept {
    return generation >= multilevel_start_generation;
  }

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Largest multiple-exchange breadth allowed at `generation` (1-based) for a
/// problem of dimension `n`. Never below the floor of 2.
int hi_at(int generation, std::size_t n, const MutationSchedule& schedule);

}  // namespace nbga
