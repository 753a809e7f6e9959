#include "nbga/ligand/problem.hpp"

#include <stdexcept>

namespace nbga::ligand {

SideBounds bounds_for(const ActiveSite& site, LengthMode mode) {
  if (mode == LengthMode::Fixed) return full_bounds();
  return {length_bounds(site.right_axis, kRightSlots), length_bounds(site.left_axis, kLeftSlots)};
}

LigandProblem::LigandProblem(std::shared_ptr<const ActiveSite> site, EnergyParams params,
                             LengthMode mode, GroupMutationOptions mutation)
    : site_(std::move(site)), params_(params), mode_(mode), mutation_(mutation) {
  if (!site_) throw std::invalid_argument("LigandProblem needs an active site");
  site_->validate();
  params_.validate();
  bounds_ = bounds_for(*site_, mode_);
}

LigandChromosome LigandProblem::random_genome(Rng& rng) const {
  const std::span<const Group> legal = mode_ == LengthMode::Fixed
                                           ? std::span<const Group>(kLegalFixed)
                                           : std::span<const Group>(kLegalVariable);
  LigandChromosome chromosome;
  for (auto& code : chromosome.right) code = legal[uniform_index(rng, legal.size())];
  for (auto& code : chromosome.left) code = legal[uniform_index(rng, legal.size())];
  return chromosome;
}

double LigandProblem::objective(const LigandChromosome& chromosome) const {
  return interaction_energy(chromosome, *site_, params_).total;
}

LigandChromosome LigandProblem::mutate(const LigandChromosome& chromosome, int generation,
                                       const MutationSchedule& schedule, Rng& rng) const {
  return mutate_codes(chromosome, generation, schedule, mode_, rng, mutation_);
}

std::pair<LigandChromosome, LigandChromosome> LigandProblem::crossover(const LigandChromosome& p1,
                                                                       const LigandChromosome& p2,
                                                                       Rng& rng) const {
  return random_segment_crossover(p1, p2, rng);
}

LigandChromosome LigandProblem::repair(LigandChromosome chromosome, Rng& rng) const {
  return correct(chromosome, mode_, bounds_, rng);
}

}  // namespace nbga::ligand
