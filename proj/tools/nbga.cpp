// Command-line driver: TSP runs, ligand design, comparison benchmarks and
// instance download.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nbga/experiment/config.hpp"
#include "nbga/experiment/experiment.hpp"
#include "nbga/experiment/fetch.hpp"
#include "nbga/ligand/site.hpp"
#include "nbga/tsp/tsplib.hpp"

namespace {

using Overrides = std::map<std::string, std::string>;

struct Common {
  std::string config_path;
  Overrides overrides;
  bool timings = false;
};

void add_value(CLI::App* cmd, Overrides& overrides, const std::string& flag,
               const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&overrides, key](const std::string& value) { overrides[key] = value; }, help);
}

void add_engine_options(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  add_value(cmd, common.overrides, "--algorithm", "algorithm", "nbga | classic");
  add_value(cmd, common.overrides, "--runs", "runs", "independent runs (seeds seed..seed+runs-1)");
  add_value(cmd, common.overrides, "--pop", "pop", "population size");
  add_value(cmd, common.overrides, "--generations", "generations", "generations per run");
  add_value(cmd, common.overrides, "--seed", "seed", "base seed");
  add_value(cmd, common.overrides, "--threads", "threads", "worker threads (0 = all cores)");
  add_value(cmd, common.overrides, "--trace", "trace", "per-generation CSV trace path");
  add_value(cmd, common.overrides, "--out", "out", "report path (default: standard output)");
  cmd->add_flag("--timings", common.timings, "include wall-clock seconds in the report");
}

nbga::ExperimentConfig build_config(const Common& common, nbga::ProblemKind problem) {
  nbga::ExperimentConfig config;
  config.problem = problem;
  if (!common.config_path.empty()) nbga::apply_config_file(config, common.config_path);
  for (const auto& [key, value] : common.overrides) nbga::apply_setting(config, key, value);
  return config;
}

int run_single(const nbga::ExperimentConfig& config, bool timings) {
  const auto report = nbga::run_experiment(config);
  nbga::write_outputs(report, std::cout, timings);
  return 0;
}

template <class Fn>
int guarded(Fn fn) {
  try {
    return fn();
  } catch (const nbga::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
  } catch (const nbga::tsp::TsplibError& e) {
    std::cerr << "instance error: " << e.what() << '\n';
  } catch (const nbga::ligand::SiteError& e) {
    std::cerr << "site error: " << e.what() << '\n';
  } catch (const nbga::FetchError& e) {
    std::cerr << "fetch error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighbourhood based genetic algorithm: TSP benchmarks and ligand design"};
  app.require_subcommand(1);

  Common tsp_opts;
  auto* solve = app.add_subcommand("solve-tsp", "optimize a TSPLIB instance");
  add_engine_options(solve, tsp_opts);
  add_value(solve, tsp_opts.overrides, "--instance", "instance", "TSPLIB file");
  add_value(solve, tsp_opts.overrides, "--optimum", "optimum", "known optimum for the error column");
  add_value(solve, tsp_opts.overrides, "--rounding", "rounding",
            "EUC_2D rounding: nearest (TSPLIB) | none");

  Common ligand_opts;
  auto* design = app.add_subcommand("design-ligand", "evolve a two-tree ligand for an active site");
  add_engine_options(design, ligand_opts);
  add_value(design, ligand_opts.overrides, "--site", "site", "active-site file");
  add_value(design, ligand_opts.overrides, "--mode", "mode", "fixed | variable");

  Common bench_opts;
  std::vector<std::string> bench_instances;
  std::string bench_site;
  auto* bench = app.add_subcommand(
      "bench", "comparison tables: several TSP instances, or the three ligand variants");
  add_engine_options(bench, bench_opts);
  bench->add_option("--instance", bench_instances, "TSPLIB file (repeatable)");
  bench->add_option("--site", bench_site, "active-site file (runs classic fixed, nbga fixed, nbga variable)");

  std::vector<std::string> fetch_names;
  std::string base_url;
  std::string dest = "instances";
  auto* fetch = app.add_subcommand("fetch", "download TSPLIB instances");
  fetch->add_option("names", fetch_names, "instance names, e.g. eil51 st70")->required();
  fetch->add_option("--base-url", base_url,
                    std::string("directory URL holding <name>.tsp (default: $") +
                        nbga::kFetchBaseUrlEnv + ")");
  fetch->add_option("--dest", dest, "destination directory");

  CLI11_PARSE(app, argc, argv);

  if (*solve) {
    return guarded([&] {
      return run_single(build_config(tsp_opts, nbga::ProblemKind::Tsp), tsp_opts.timings);
    });
  }
  if (*design) {
    return guarded([&] {
      auto config = build_config(ligand_opts, nbga::ProblemKind::LigandVariable);
      if (config.problem == nbga::ProblemKind::Tsp) config.problem = nbga::ProblemKind::LigandVariable;
      return run_single(config, ligand_opts.timings);
    });
  }
  if (*bench) {
    return guarded([&] {
      if (bench_instances.empty() == bench_site.empty()) {
        throw nbga::ConfigError("bench needs either --instance files or a --site");
      }
      std::vector<nbga::ExperimentReport> reports;
      if (!bench_site.empty()) {
        const std::pair<nbga::Algorithm, nbga::ProblemKind> variants[] = {
            {nbga::Algorithm::Classic, nbga::ProblemKind::LigandFixed},
            {nbga::Algorithm::Nbga, nbga::ProblemKind::LigandFixed},
            {nbga::Algorithm::Nbga, nbga::ProblemKind::LigandVariable},
        };
        for (const auto& [algorithm, problem] : variants) {
          auto config = build_config(bench_opts, problem);
          config.problem = problem;
          config.algorithm = algorithm;
          config.site = bench_site;
          config.trace.reset();
          reports.push_back(nbga::run_experiment(config));
        }
      } else {
        for (const auto& path : bench_instances) {
          auto config = build_config(bench_opts, nbga::ProblemKind::Tsp);
          config.instance = path;
          config.trace.reset();
          reports.push_back(nbga::run_experiment(config));
        }
      }
      const auto& out_path = reports.front().config.out;
      std::ofstream file;
      if (out_path) {
        file.open(*out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write '" + out_path->string() + "'");
      }
      std::ostream& out = out_path ? static_cast<std::ostream&>(file) : std::cout;
      if (!bench_site.empty()) {
        nbga::write_ligand_table(reports, out);
      } else {
        nbga::write_tsp_table(reports, out);
      }
      return 0;
    });
  }
  if (*fetch) {
    return guarded([&] {
      if (base_url.empty()) {
        if (const char* env = std::getenv(nbga::kFetchBaseUrlEnv)) base_url = env;
      }
      for (const auto& item : nbga::fetch_instances(fetch_names, base_url, dest)) {
        std::cout << item.name << '\t'
                  << (item.status == nbga::FetchStatus::Downloaded ? "downloaded" : "present")
                  << '\t' << item.path.string() << '\n';
      }
      return 0;
    });
  }
  return 0;
}
