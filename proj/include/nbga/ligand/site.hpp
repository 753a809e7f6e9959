#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nbga/core/geometry.hpp"

namespace nbga::ligand {

struct Residue {
  std::string name;
  Point2 position;  // angstrom
  bool polar = false;
};

/// 2D protein pocket: residues plus the two attachment points of the fixed
/// pharmacophore and the major-axis lengths available to each tree.
struct ActiveSite {
  std::vector<Residue> residues;
  Point2 right_anchor;
  Point2 left_anchor;
  double right_axis = 0.0;
  double left_axis = 0.0;

  /// Throws std::invalid_argument when there is no residue, the anchors
  /// coincide, or an axis is not positive.
  void validate() const;
};

class SiteError : public std::runtime_error {
 public:
  SiteError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented format: '#' comments, directives `right_anchor x y`,
/// `left_anchor x y`, `right_axis L`, `left_axis L`, and residue lines
/// `NAME x y P|H`.
ActiveSite parse_site(std::string_view text);
ActiveSite load_site(const std::filesystem::path& path);

}  // namespace nbga::ligand
