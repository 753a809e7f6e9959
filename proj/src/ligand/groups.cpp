#include "nbga/ligand/groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nbga::ligand {

namespace {

constexpr std::array<FunctionalGroup, 8> kCatalogue{{
    {Group::Alkyl1C, "Alkyl-1C", 0.65, false},
    {Group::Alkyl3C, "Alkyl-3C", 1.75, false},
    {Group::Alkyl1CPolar, "Alkyl-1C-Polar", 1.1, true},
    {Group::Alkyl3CPolar, "Alkyl-3C-Polar", 2.2, true},
    {Group::Polar, "Polar", 0.01, true},
    {Group::Aromatic, "Aromatic", 1.9, false},
    {Group::AromaticPolar, "Aromatic-Polar", 2.7, true},
    {Group::Nul, "NUL", std::nullopt, false},
}};

}  // namespace

std::span<const FunctionalGroup, 8> catalogue() noexcept { return kCatalogue; }

const FunctionalGroup& describe(Group code) noexcept {
  return kCatalogue[static_cast<std::size_t>(code) - 1];
}

Group group_from_int(int code) {
  if (code < 1 || code > 8) {
    throw std::invalid_argument("functional group code " + std::to_string(code) +
                                " outside 1..8");
  }
  return static_cast<Group>(code);
}

bool is_polar(Group code) noexcept { return describe(code).polar; }

double bond_length(Group code) noexcept { return describe(code).bond_length_x.value_or(0.0); }

Group non_polar_counterpart(Group code) noexcept {
  switch (code) {
    case Group::Alkyl1CPolar: return Group::Alkyl1C;
    case Group::Alkyl3CPolar: return Group::Alkyl3C;
    case Group::AromaticPolar: return Group::Aromatic;
    case Group::Polar: return Group::Alkyl1C;
    default: return code;
  }
}

double max_bond_length() noexcept {
  double longest = 0.0;
  for (const auto& group : kCatalogue) longest = std::max(longest, group.bond_length_x.value_or(0.0));
  return longest;
}

double min_bond_length() noexcept {
  double shortest = max_bond_length();
  for (const auto& group : kCatalogue) {
    if (group.bond_length_x) shortest = std::min(shortest, *group.bond_length_x);
  }
  return shortest;
}

}  // namespace nbga::ligand
