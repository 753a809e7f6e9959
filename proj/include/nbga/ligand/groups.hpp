#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace nbga::ligand {

/// Functional group codes 1-8; Nul marks an empty tree position.
enum class Group : std::uint8_t {
  Alkyl1C = 1,
  Alkyl3C = 2,
  Alkyl1CPolar = 3,
  Alkyl3CPolar = 4,
  Polar = 5,
  Aromatic = 6,
  AromaticPolar = 7,
  Nul = 8,
};

struct FunctionalGroup {
  Group code;
  std::string_view name;
  std::optional<double> bond_length_x;  // projection on the x axis, in angstrom
  bool polar;
};

/// The eight groups in code order.
std::span<const FunctionalGroup, 8> catalogue() noexcept;

const FunctionalGroup& describe(Group code) noexcept;

inline int to_int(Group code) noexcept { return static_cast<int>(code); }

/// Throws std::invalid_argument outside 1..8.
Group group_from_int(int code);

bool is_polar(Group code) noexcept;

/// Zero for Nul.
double bond_length(Group code) noexcept;

/// Polar internal nodes are remapped to the non-polar group of similar size.
Group non_polar_counterpart(Group code) noexcept;

/// 2.7 and 0.01 angstrom over the non-Nul groups.
double max_bond_length() noexcept;
double min_bond_length() noexcept;

inline constexpr std::array<Group, 7> kLegalFixed{Group::Alkyl1C,      Group::Alkyl3C,
                                                  Group::Alkyl1CPolar, Group::Alkyl3CPolar,
                                                  Group::Polar,        Group::Aromatic,
                                                  Group::AromaticPolar};
inline constexpr std::array<Group, 8> kLegalVariable{
    Group::Alkyl1C, Group::Alkyl3C,  Group::Alkyl1CPolar,  Group::Alkyl3CPolar,
    Group::Polar,   Group::Aromatic, Group::AromaticPolar, Group::Nul};
inline constexpr std::array<Group, 3> kNonPolar{Group::Alkyl1C, Group::Alkyl3C, Group::Aromatic};

}  // namespace nbga::ligand
