#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nbga/core/schedule.hpp"
#include "nbga/experiment/classic_ga.hpp"
#include "nbga/ligand/energy.hpp"
#include "nbga/tsp/instance.hpp"

namespace nbga {

enum class ProblemKind { Tsp, LigandFixed, LigandVariable };
enum class Algorithm { Nbga, Classic };

std::string_view to_string(ProblemKind kind) noexcept;
std::string_view to_string(Algorithm algorithm) noexcept;

/// Everything one experiment needs. Unset schedule fields fall back to
/// MutationSchedule::for_dimension.
struct ExperimentConfig {
  ProblemKind problem = ProblemKind::Tsp;
  Algorithm algorithm = Algorithm::Nbga;
  int runs = 1;
  int pop = 100;
  std::optional<int> generations;  // default: 2000 for TSP, 100 for ligands
  std::uint64_t seed = 1;
  int threads = 0;  // 0: one per hardware thread

  std::filesystem::path instance;
  std::filesystem::path site;
  std::optional<std::filesystem::path> trace;
  std::optional<std::filesystem::path> out;

  std::optional<double> optimum;
  tsp::Rounding rounding = tsp::Rounding::Nearest;
  ligand::EnergyParams energy;
  ClassicGaOptions classic;

  std::optional<int> hi_start;
  std::optional<int> decay_generations;
  std::optional<double> multilevel_probability;
  std::optional<int> multilevel_start;

  int effective_generations() const noexcept;
  MutationSchedule schedule_for(std::size_t dimension) const;

  /// Throws ConfigError on out-of-range values or missing input paths.
  void validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies flat `key = value` lines ('#' starts a comment) on top of `config`.
/// Relative paths are resolved against `base_dir`. Unknown keys and bad values
/// raise ConfigError naming the line.
void apply_config_text(ExperimentConfig& config, std::string_view text,
                       const std::filesystem::path& base_dir = {});

void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path);

/// Sets one key as the config file would; used for command-line overrides.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir = {});

}  // namespace nbga
