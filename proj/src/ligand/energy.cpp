#include "nbga/ligand/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nbga::ligand {

namespace {

// Distances closer than this count as equal: ties go to the lower residue
// index and window edges are inclusive, independent of rounding noise.
constexpr double kDistanceSlack = 1e-9;

}  // namespace

void EnergyParams::validate() const {
  if (!(r_min > 0.0) || !(r_min < r_max)) throw std::invalid_argument("need 0 < r_min < r_max");
  if (clash_penalty < 0.0 || mismatch_penalty < 0.0) {
    throw std::invalid_argument("penalties must be non-negative");
  }
  if (!(k > 0.0)) throw std::invalid_argument("fitness constant k must be positive");
  if (!(e_floor > 0.0)) throw std::invalid_argument("energy floor must be positive");
}

double vdw(double r, const EnergyParams& params) {
  if (!(r > 0.0)) throw std::invalid_argument("pair distance must be positive");
  const double inv6 = 1.0 / std::pow(r, 6);
  const double attractive = params.cn * inv6;
  const double repulsive = params.cm * inv6 * inv6;
  return params.standard_lj ? repulsive - attractive : attractive - repulsive;
}

double fitness(double energy, const EnergyParams& params) {
  if (energy < params.e_floor) throw std::invalid_argument("energy below the clamp floor");
  return params.k / energy;
}

std::vector<PlacedGroup> layout(const LigandChromosome& chromosome, const ActiveSite& site,
                                const TreeTopology& topology, const LayoutOptions& options) {
  std::vector<PlacedGroup> placed;
  for (Side side : {Side::Right, Side::Left}) {
    const auto codes = chromosome.side(side);
    const auto& tree = topology.side(side);
    const double direction = side == Side::Right ? 1.0 : -1.0;
    const Point2 anchor = side == Side::Right ? site.right_anchor : site.left_anchor;

    std::vector<Point2> at(codes.size());
    for (std::size_t position : tree.root_to_leaf()) {
      const int parent = tree.parent(position);
      const Point2 base = parent < 0 ? anchor : at[static_cast<std::size_t>(parent)];
      double y = base.y;
      if (parent >= 0 && !tree.is_backbone(position)) {
        // j-th non-backbone child of the parent, 1-based
        int j = 0;
        for (std::size_t sibling : tree.children(static_cast<std::size_t>(parent))) {
          if (!tree.is_backbone(sibling)) ++j;
          if (sibling == position) break;
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        y += options.branch_spacing * sign * static_cast<double>((j + 1) / 2);
      }
      at[position] = {base.x + direction * bond_length(codes[position]), y};
      if (codes[position] != Group::Nul) placed.push_back({side, position, codes[position], at[position]});
    }
  }
  return placed;
}

EnergyReport interaction_energy(const std::vector<PlacedGroup>& placed, const ActiveSite& site,
                                const EnergyParams& params) {
  if (placed.empty()) throw std::invalid_argument("no functional groups placed");
  if (site.residues.empty()) throw std::invalid_argument("active site has no residues");

  EnergyReport report;
  report.terms.reserve(placed.size());
  for (const auto& group : placed) {
    std::size_t nearest = 0;
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < site.residues.size(); ++r) {
      const double dr = distance(group.at, site.residues[r].position);
      if (dr < d - kDistanceSlack) {
        d = dr;
        nearest = r;
      }
    }
    EnergyTerm term{group, nearest, d, ContactKind::OutOfRange, false, 0.0};
    if (d < params.r_min - kDistanceSlack) {
      term.kind = ContactKind::Clash;
      term.contribution = params.clash_penalty;
    } else if (d <= params.r_max + kDistanceSlack) {
      term.kind = ContactKind::InWindow;
      term.mismatch = is_polar(group.code) != site.residues[nearest].polar;
      term.contribution = vdw(d, params) + (term.mismatch ? params.mismatch_penalty : 0.0);
    }
    report.raw_total += term.contribution;
    report.terms.push_back(term);
  }
  report.total = std::max(report.raw_total, params.e_floor);
  return report;
}

EnergyReport interaction_energy(const LigandChromosome& chromosome, const ActiveSite& site,
                                const EnergyParams& params, const TreeTopology& topology,
                                const LayoutOptions& options) {
  return interaction_energy(layout(chromosome, site, topology, options), site, params);
}

}  // namespace nbga::ligand
