#include "nbga/experiment/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace nbga {

std::string_view to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::Tsp: return "tsp";
    case ProblemKind::LigandFixed: return "ligand-fixed";
    case ProblemKind::LigandVariable: return "ligand-variable";
  }
  return "?";
}

std::string_view to_string(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::Nbga ? "nbga" : "classic";
}

int ExperimentConfig::effective_generations() const noexcept {
  if (generations) return *generations;
  return problem == ProblemKind::Tsp ? 2000 : 100;
}

MutationSchedule ExperimentConfig::schedule_for(std::size_t dimension) const {
  auto schedule = MutationSchedule::for_dimension(dimension, effective_generations());
  if (hi_start) schedule.hi_start = *hi_start;
  if (decay_generations) schedule.decay_generations = *decay_generations;
  if (multilevel_probability) schedule.multilevel_probability = *multilevel_probability;
  if (multilevel_start) schedule.multilevel_start_generation = *multilevel_start;
  return schedule;
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (pop < 3) throw ConfigError("pop must be at least 3");
  if (effective_generations() < 1) throw ConfigError("generations must be at least 1");
  if (threads < 0) throw ConfigError("threads must be non-negative");
  if (classic.crossover_rate < 0 || classic.crossover_rate > 1 || classic.mutation_rate < 0 ||
      classic.mutation_rate > 1) {
    throw ConfigError("classic GA rates must lie in [0, 1]");
  }
  const auto& input = problem == ProblemKind::Tsp ? instance : site;
  const char* what = problem == ProblemKind::Tsp ? "instance" : "site";
  if (input.empty()) throw ConfigError(std::string("no ") + what + " file given");
  if (!std::filesystem::exists(input)) {
    throw ConfigError(std::string(what) + " file '" + input.string() + "' does not exist");
  }
  try {
    energy.validate();
    schedule_for(problem == ProblemKind::Tsp ? 3 : 17).validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T result{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, result);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
  }
  return result;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir) {
  if (key == "problem") {
    if (value == "tsp") config.problem = ProblemKind::Tsp;
    else if (value == "ligand-fixed") config.problem = ProblemKind::LigandFixed;
    else if (value == "ligand-variable") config.problem = ProblemKind::LigandVariable;
    else if (value == "ligand") {
      if (config.problem == ProblemKind::Tsp) config.problem = ProblemKind::LigandVariable;
    } else throw ConfigError("unknown problem '" + std::string(value) + "'");
  } else if (key == "algorithm") {
    if (value == "nbga") config.algorithm = Algorithm::Nbga;
    else if (value == "classic" || value == "classic-ga") config.algorithm = Algorithm::Classic;
    else throw ConfigError("unknown algorithm '" + std::string(value) + "'");
  } else if (key == "mode") {
    if (value == "fixed") config.problem = ProblemKind::LigandFixed;
    else if (value == "variable") config.problem = ProblemKind::LigandVariable;
    else throw ConfigError("mode must be fixed or variable");
  } else if (key == "runs") {
    config.runs = parse_number<int>(key, value);
  } else if (key == "pop") {
    config.pop = parse_number<int>(key, value);
  } else if (key == "generations") {
    config.generations = parse_number<int>(key, value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "threads") {
    config.threads = parse_number<int>(key, value);
  } else if (key == "instance") {
    config.instance = resolve(base_dir, value);
  } else if (key == "site") {
    config.site = resolve(base_dir, value);
  } else if (key == "trace") {
    config.trace = resolve(base_dir, value);
  } else if (key == "out") {
    config.out = resolve(base_dir, value);
  } else if (key == "optimum") {
    config.optimum = parse_number<double>(key, value);
  } else if (key == "rounding") {
    if (value == "nearest") config.rounding = tsp::Rounding::Nearest;
    else if (value == "none") config.rounding = tsp::Rounding::None;
    else throw ConfigError("rounding must be nearest or none");
  } else if (key == "cn") {
    config.energy.cn = parse_number<double>(key, value);
  } else if (key == "cm") {
    config.energy.cm = parse_number<double>(key, value);
  } else if (key == "r_min") {
    config.energy.r_min = parse_number<double>(key, value);
  } else if (key == "r_max") {
    config.energy.r_max = parse_number<double>(key, value);
  } else if (key == "clash_penalty") {
    config.energy.clash_penalty = parse_number<double>(key, value);
  } else if (key == "mismatch_penalty") {
    config.energy.mismatch_penalty = parse_number<double>(key, value);
  } else if (key == "k") {
    config.energy.k = parse_number<double>(key, value);
  } else if (key == "e_floor") {
    config.energy.e_floor = parse_number<double>(key, value);
  } else if (key == "standard_lj") {
    config.energy.standard_lj = parse_bool(key, value);
  } else if (key == "hi_start") {
    config.hi_start = parse_number<int>(key, value);
  } else if (key == "decay_generations") {
    config.decay_generations = parse_number<int>(key, value);
  } else if (key == "multilevel_probability") {
    config.multilevel_probability = parse_number<double>(key, value);
  } else if (key == "multilevel_start") {
    config.multilevel_start = parse_number<int>(key, value);
  } else if (key == "crossover_rate") {
    config.classic.crossover_rate = parse_number<double>(key, value);
  } else if (key == "mutation_rate") {
    config.classic.mutation_rate = parse_number<double>(key, value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(ExperimentConfig& config, std::string_view text,
                       const std::filesystem::path& base_dir) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), base_dir);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    apply_config_text(config, buffer.str(), path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace nbga
