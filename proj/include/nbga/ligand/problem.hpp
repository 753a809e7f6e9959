#pragma once

#include <memory>
#include <utility>

#include "nbga/core/random.hpp"
#include "nbga/core/schedule.hpp"
#include "nbga/ligand/chromosome.hpp"
#include "nbga/ligand/energy.hpp"
#include "nbga/ligand/site.hpp"

namespace nbga::ligand {

/// Ligand design bundle. The objective is the clamped interaction energy
/// (minimized); variation operators return raw genomes and the engine applies
/// `repair` (the correct() sweep) to every new genome.
class LigandProblem {
 public:
  using genome_type = LigandChromosome;

  LigandProblem(std::shared_ptr<const ActiveSite> site, EnergyParams params, LengthMode mode,
                GroupMutationOptions mutation = {});

  const ActiveSite& site() const noexcept { return *site_; }
  const EnergyParams& params() const noexcept { return params_; }
  LengthMode mode() const noexcept { return mode_; }
  const SideBounds& bounds() const noexcept { return bounds_; }

  LigandChromosome random_genome(Rng& rng) const;
  double objective(const LigandChromosome& chromosome) const;
  LigandChromosome mutate(const LigandChromosome& chromosome, int generation,
                          const MutationSchedule& schedule, Rng& rng) const;
  std::pair<LigandChromosome, LigandChromosome> crossover(const LigandChromosome& p1,
                                                          const LigandChromosome& p2,
                                                          Rng& rng) const;
  LigandChromosome repair(LigandChromosome chromosome, Rng& rng) const;

 private:
  std::shared_ptr<const ActiveSite> site_;
  EnergyParams params_;
  LengthMode mode_;
  SideBounds bounds_;
  GroupMutationOptions mutation_;
};

/// l_min/l_max per side from the site's axes in variable mode; every slot in
/// fixed mode.
SideBounds bounds_for(const ActiveSite& site, LengthMode mode);

}  // namespace nbga::ligand
