#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbga/core/random.hpp"
#include "nbga/core/schedule.hpp"
#include "nbga/ligand/groups.hpp"
#include "nbga/ligand/topology.hpp"

namespace nbga::ligand {

inline constexpr std::size_t kRightSlots = 10;
inline constexpr std::size_t kLeftSlots = 7;

/// Group codes for the two trees on either side of the pharmacophore.
struct LigandChromosome {
  std::array<Group, kRightSlots> right{};
  std::array<Group, kLeftSlots> left{};

  std::span<Group> side(Side s) noexcept {
    return s == Side::Right ? std::span<Group>(right) : std::span<Group>(left);
  }
  std::span<const Group> side(Side s) const noexcept {
    return s == Side::Right ? std::span<const Group>(right) : std::span<const Group>(left);
  }

  friend bool operator==(const LigandChromosome&, const LigandChromosome&) = default;
};

/// Builds a chromosome from integer codes (throws on bad codes or lengths).
LigandChromosome make_chromosome(std::span<const int> right, std::span<const int> left);

/// "right=[1 5 2 ...] left=[...]"
std::string to_string(const LigandChromosome& chromosome);

enum class LengthMode { Fixed, Variable };

/// Bounds on the number of non-Nul groups of one side.
struct LengthBounds {
  int l_min = 1;
  int l_max = 1;
};

struct SideBounds {
  LengthBounds right;
  LengthBounds left;

  const LengthBounds& side(Side s) const noexcept { return s == Side::Right ? right : left; }
};

/// l_min = ceil(axis / longest bond), l_max = min(slots, floor(axis / shortest bond)).
/// Throws std::invalid_argument for a non-positive axis or when l_min exceeds
/// the slot count.
LengthBounds length_bounds(double major_axis, std::size_t slots);

/// Bounds that require every slot to be filled.
SideBounds full_bounds();

enum class ViolationKind {
  IllegalCode,   // Nul in fixed mode
  Polarity,      // polar group on an internal node with live descendants
  Connectivity,  // Nul internal node with live descendants
  TooShort,
  TooLong,
};

struct Violation {
  Side side;
  std::size_t position;  // 0-based; meaningless for length violations
  ViolationKind kind;
};

std::vector<Violation> find_violations(const LigandChromosome& chromosome, LengthMode mode,
                                       const SideBounds& bounds,
                                       const TreeTopology& topology = TreeTopology::standard());

inline bool is_valid(const LigandChromosome& chromosome, LengthMode mode, const SideBounds& bounds,
                     const TreeTopology& topology = TreeTopology::standard()) {
  return find_violations(chromosome, mode, bounds, topology).empty();
}

/// Source of the random group codes the repair needs; receives the admissible
/// codes and returns one of them.
using CodePicker = std::function<Group(std::span<const Group>)>;

/// Repairs a chromosome in a fixed sweep, right tree then left tree:
///  1. connectivity, root to leaf: a Nul internal node with live descendants
///     gets a random non-polar group;
///  2. polarity: a polar internal node with live descendants is remapped
///     3->1, 4->2, 7->6, 5->1;
///  3. (variable mode) while fewer than l_min groups are present, Nul slots
///     are filled deepest first with random non-Nul groups, then steps 1-2 are
///     repeated; beyond l_max the deepest terminal groups are removed.
/// A valid chromosome is returned unchanged without consuming any picks.
/// Throws std::invalid_argument on Nul in fixed mode.
LigandChromosome correct(LigandChromosome chromosome, LengthMode mode, const SideBounds& bounds,
                         const CodePicker& pick,
                         const TreeTopology& topology = TreeTopology::standard());

LigandChromosome correct(LigandChromosome chromosome, LengthMode mode, const SideBounds& bounds,
                         Rng& rng, const TreeTopology& topology = TreeTopology::standard());

/// Segment crossover on one side: child1 is p1 with p1[pos1, pos1+len) replaced
/// by p2[pos2, pos2+len); child2 is p2 with its segment replaced by p1's.
/// Children are returned unrepaired.
template <std::size_t N>
std::pair<std::array<Group, N>, std::array<Group, N>> segment_crossover(
    const std::array<Group, N>& p1, const std::array<Group, N>& p2, std::size_t length,
    std::size_t pos1, std::size_t pos2) {
  if (length == 0 || pos1 + length > N || pos2 + length > N) {
    throw std::out_of_range("crossover segment does not fit");
  }
  auto child1 = p1;
  auto child2 = p2;
  for (std::size_t k = 0; k < length; ++k) {
    child1[pos1 + k] = p2[pos2 + k];
    child2[pos2 + k] = p1[pos1 + k];
  }
  return {child1, child2};
}

/// Segment crossover on both sides with uniformly drawn length and positions
/// (right side first; length, then pos1, then pos2). Unrepaired.
std::pair<LigandChromosome, LigandChromosome> random_segment_crossover(const LigandChromosome& p1,
                                                                       const LigandChromosome& p2,
                                                                       Rng& rng);

struct GroupMutationOptions {
  /// Chance that the chosen positions are redrawn from the legal codes rather
  /// than permuted among themselves.
  double resample_probability = 0.5;
};

/// Multiple exchange on one side's code array (side drawn proportional to its
/// slot count, breadth from [2, hi_at(gen)]), or a redraw of those positions.
/// With the schedule's multilevel probability the step is applied twice.
/// Unrepaired.
LigandChromosome mutate_codes(LigandChromosome chromosome, int generation,
                              const MutationSchedule& schedule, LengthMode mode, Rng& rng,
                              const GroupMutationOptions& options = {});

/// mutate_codes followed by correct.
LigandChromosome group_mutation(const LigandChromosome& chromosome, int generation,
                                const MutationSchedule& schedule, LengthMode mode,
                                const SideBounds& bounds, Rng& rng,
                                const GroupMutationOptions& options = {});

}  // namespace nbga::ligand
