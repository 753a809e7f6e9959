#include "nbga/ligand/chromosome.hpp"

#include <algorithm>
#include <cmath>

#include "nbga/core/permute.hpp"

namespace nbga::ligand {

namespace {

constexpr double kRatioSlack = 1e-9;

bool has_live_descendant(std::span<const Group> codes, const SideTopology& topology,
                         std::size_t position) {
  const auto below = topology.descendants(position);
  return std::any_of(below.begin(), below.end(),
                     [&](std::size_t d) { return codes[d] != Group::Nul; });
}

int live_count(std::span<const Group> codes) {
  return static_cast<int>(
      std::count_if(codes.begin(), codes.end(), [](Group g) { return g != Group::Nul; }));
}

void repair_connectivity(std::span<Group> codes, const SideTopology& topology,
                         const CodePicker& pick) {
  for (std::size_t position : topology.root_to_leaf()) {
    if (codes[position] == Group::Nul && has_live_descendant(codes, topology, position)) {
      codes[position] = pick(kNonPolar);
    }
  }
}

void repair_polarity(std::span<Group> codes, const SideTopology& topology) {
  for (std::size_t position : topology.root_to_leaf()) {
    if (is_polar(codes[position]) && has_live_descendant(codes, topology, position)) {
      codes[position] = non_polar_counterpart(codes[position]);
    }
  }
}

// Slots ordered deepest first, then by position.
std::vector<std::size_t> deepest_first(const SideTopology& topology) {
  std::vector<std::size_t> order(topology.root_to_leaf().begin(), topology.root_to_leaf().end());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return topology.depth(a) > topology.depth(b);
  });
  return order;
}

void repair_side(std::span<Group> codes, const SideTopology& topology, LengthMode mode,
                 const LengthBounds& bounds, const CodePicker& pick) {
  repair_connectivity(codes, topology, pick);
  repair_polarity(codes, topology);
  if (mode == LengthMode::Fixed) return;

  int live = live_count(codes);
  if (live < bounds.l_min) {
    for (std::size_t position : deepest_first(topology)) {
      if (live >= bounds.l_min) break;
      if (codes[position] != Group::Nul) continue;
      codes[position] = pick(kLegalFixed);
      ++live;
    }
    repair_connectivity(codes, topology, pick);
    repair_polarity(codes, topology);
    live = live_count(codes);
  }
  if (live > bounds.l_max) {
    for (std::size_t position : deepest_first(topology)) {
      if (live <= bounds.l_max) break;
      if (codes[position] == Group::Nul || has_live_descendant(codes, topology, position)) continue;
      codes[position] = Group::Nul;
      --live;
    }
  }
}

}  // namespace

LigandChromosome make_chromosome(std::span<const int> right, std::span<const int> left) {
  if (right.size() != kRightSlots || left.size() != kLeftSlots) {
    throw std::invalid_argument("a ligand chromosome has 10 right and 7 left positions");
  }
  LigandChromosome chromosome;
  for (std::size_t i = 0; i < kRightSlots; ++i) chromosome.right[i] = group_from_int(right[i]);
  for (std::size_t i = 0; i < kLeftSlots; ++i) chromosome.left[i] = group_from_int(left[i]);
  return chromosome;
}

std::string to_string(const LigandChromosome& chromosome) {
  auto side = [](std::span<const Group> codes) {
    std::string text = "[";
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (i > 0) text += ' ';
      text += std::to_string(to_int(codes[i]));
    }
    return text + "]";
  };
  return "right=" + side(chromosome.right) + " left=" + side(chromosome.left);
}

LengthBounds length_bounds(double major_axis, std::size_t slots) {
  if (!(major_axis > 0.0)) throw std::invalid_argument("major axis must be positive");
  const int l_min = static_cast<int>(std::ceil(major_axis / max_bond_length() - kRatioSlack));
  const double by_shortest = std::floor(major_axis / min_bond_length() + kRatioSlack);
  const int l_max = static_cast<int>(std::min(static_cast<double>(slots), by_shortest));
  if (l_min > static_cast<int>(slots)) {
    throw std::invalid_argument("major axis too long for a tree of " + std::to_string(slots) +
                                " positions");
  }
  return {std::max(1, l_min), std::max({1, l_min, l_max})};
}

SideBounds full_bounds() {
  return {{static_cast<int>(kRightSlots), static_cast<int>(kRightSlots)},
          {static_cast<int>(kLeftSlots), static_cast<int>(kLeftSlots)}};
}

std::vector<Violation> find_violations(const LigandChromosome& chromosome, LengthMode mode,
                                       const SideBounds& bounds, const TreeTopology& topology) {
  std::vector<Violation> found;
  for (Side s : {Side::Right, Side::Left}) {
    const auto codes = chromosome.side(s);
    const auto& tree = topology.side(s);
    for (std::size_t position = 0; position < codes.size(); ++position) {
      if (mode == LengthMode::Fixed && codes[position] == Group::Nul) {
        found.push_back({s, position, ViolationKind::IllegalCode});
      }
      if (!has_live_descendant(codes, tree, position)) continue;
      if (codes[position] == Group::Nul) found.push_back({s, position, ViolationKind::Connectivity});
      if (is_polar(codes[position])) found.push_back({s, position, ViolationKind::Polarity});
    }
    const int live = live_count(codes);
    if (live < bounds.side(s).l_min) found.push_back({s, 0, ViolationKind::TooShort});
    if (live > bounds.side(s).l_max) found.push_back({s, 0, ViolationKind::TooLong});
  }
  return found;
}

LigandChromosome correct(LigandChromosome chromosome, LengthMode mode, const SideBounds& bounds,
                         const CodePicker& pick, const TreeTopology& topology) {
  for (Side s : {Side::Right, Side::Left}) {
    auto codes = chromosome.side(s);
    if (mode == LengthMode::Fixed &&
        std::find(codes.begin(), codes.end(), Group::Nul) != codes.end()) {
      throw std::invalid_argument("NUL group in a fixed-length chromosome");
    }
    repair_side(codes, topology.side(s), mode, bounds.side(s), pick);
  }
  return chromosome;
}

LigandChromosome correct(LigandChromosome chromosome, LengthMode mode, const SideBounds& bounds,
                         Rng& rng, const TreeTopology& topology) {
  const CodePicker pick = [&rng](std::span<const Group> options) {
    return options[uniform_index(rng, options.size())];
  };
  return correct(chromosome, mode, bounds, pick, topology);
}

namespace {

template <std::size_t N>
void cross_side(std::array<Group, N>& c1, std::array<Group, N>& c2, const std::array<Group, N>& p1,
                const std::array<Group, N>& p2, Rng& rng) {
  const std::size_t length = uniform_int<std::size_t>(rng, 1, N);
  const std::size_t pos1 = uniform_int<std::size_t>(rng, 0, N - length);
  const std::size_t pos2 = uniform_int<std::size_t>(rng, 0, N - length);
  std::tie(c1, c2) = segment_crossover(p1, p2, length, pos1, pos2);
}

}  // namespace

std::pair<LigandChromosome, LigandChromosome> random_segment_crossover(const LigandChromosome& p1,
                                                                       const LigandChromosome& p2,
                                                                       Rng& rng) {
  LigandChromosome c1;
  LigandChromosome c2;
  cross_side(c1.right, c2.right, p1.right, p2.right, rng);
  cross_side(c1.left, c2.left, p1.left, p2.left, rng);
  return {c1, c2};
}

namespace {

void mutate_once(LigandChromosome& chromosome, int generation, const MutationSchedule& schedule,
                 LengthMode mode, Rng& rng, const GroupMutationOptions& options) {
  constexpr std::size_t total = kRightSlots + kLeftSlots;
  const Side side = uniform_index(rng, total) < kRightSlots ? Side::Right : Side::Left;
  auto codes = chromosome.side(side);

  const int hi = hi_at(generation, total, schedule);
  const std::size_t breadth =
      std::min(codes.size(), uniform_int<std::size_t>(rng, 2, static_cast<std::size_t>(hi)));

  if (bernoulli(rng, options.resample_probability)) {
    const std::span<const Group> legal =
        mode == LengthMode::Fixed ? std::span<const Group>(kLegalFixed)
                                  : std::span<const Group>(kLegalVariable);
    for (std::size_t position : sample_indices(codes.size(), breadth, rng)) {
      codes[position] = legal[uniform_index(rng, legal.size())];
    }
  } else {
    random_exchange<Group>(codes, breadth, rng);
  }
}

}  // namespace

LigandChromosome mutate_codes(LigandChromosome chromosome, int generation,
                              const MutationSchedule& schedule, LengthMode mode, Rng& rng,
                              const GroupMutationOptions& options) {
  const bool multilevel =
      schedule.multilevel_active(generation) && bernoulli(rng, schedule.multilevel_probability);
  mutate_once(chromosome, generation, schedule, mode, rng, options);
  if (multilevel) mutate_once(chromosome, generation, schedule, mode, rng, options);
  return chromosome;
}

LigandChromosome group_mutation(const LigandChromosome& chromosome, int generation,
                                const MutationSchedule& schedule, LengthMode mode,
                                const SideBounds& bounds, Rng& rng,
                                const GroupMutationOptions& options) {
  return correct(mutate_codes(chromosome, generation, schedule, mode, rng, options), mode, bounds,
                 rng);
}

}  // namespace nbga::ligand
