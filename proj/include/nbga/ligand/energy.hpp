#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nbga/core/geometry.hpp"
#include "nbga/ligand/chromosome.hpp"
#include "nbga/ligand/site.hpp"
#include "nbga/ligand/topology.hpp"

namespace nbga::ligand {

struct EnergyParams {
  double cn = 1.0;  // r^-6 coefficient
  double cm = 1.0;  // r^-12 coefficient
  double r_min = 0.7;
  double r_max = 2.7;
  double clash_penalty = 10.0;
  double mismatch_penalty = 5.0;
  double k = 100.0;
  double e_floor = 1e-6;
  /// false: V = cn/r^6 - cm/r^12 as printed; true: the usual Lennard-Jones
  /// sign, cm/r^12 - cn/r^6.
  bool standard_lj = false;

  void validate() const;
};

/// Pair potential; throws std::invalid_argument for r <= 0.
double vdw(double r, const EnergyParams& params);

/// F = k / E. Throws std::invalid_argument when E is below the floor.
double fitness(double energy, const EnergyParams& params);

struct LayoutOptions {
  double branch_spacing = 1.0;  // y step between sibling branches, angstrom
};

struct PlacedGroup {
  Side side;
  std::size_t position;  // 0-based
  Group code;
  Point2 at;
};

/// 2D coordinates of every non-Nul group. Each side grows from its anchor,
/// right along +x and left along -x, by the group's bond projection. Backbone
/// children keep the parent's y; the j-th other child (j = 1, 2, ...) is
/// offset by spacing * (-1)^j * ceil(j / 2).
std::vector<PlacedGroup> layout(const LigandChromosome& chromosome, const ActiveSite& site,
                                const TreeTopology& topology = TreeTopology::standard(),
                                const LayoutOptions& options = {});

enum class ContactKind { Clash, InWindow, OutOfRange };

struct EnergyTerm {
  PlacedGroup group;
  std::size_t residue;  // index of the nearest residue
  double distance;
  ContactKind kind;
  bool mismatch;
  double contribution;
};

struct EnergyReport {
  double total = 0.0;  // clamped below at e_floor
  double raw_total = 0.0;
  std::vector<EnergyTerm> terms;
};

/// Sums, over placed groups, the contribution of the nearest residue: the
/// clash penalty below r_min, vdw(d) plus a mismatch penalty on polarity
/// disagreement inside [r_min, r_max], nothing beyond r_max.
/// Throws std::invalid_argument when nothing is placed or the site is empty.
EnergyReport interaction_energy(const LigandChromosome& chromosome, const ActiveSite& site,
                                const EnergyParams& params,
                                const TreeTopology& topology = TreeTopology::standard(),
                                const LayoutOptions& options = {});

/// Same accounting over an explicit placement list.
EnergyReport interaction_energy(const std::vector<PlacedGroup>& placed, const ActiveSite& site,
                                const EnergyParams& params);

}  // namespace nbga::ligand
