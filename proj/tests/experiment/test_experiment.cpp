#include <doctest.h>
#include <httplib.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nbga/experiment/classic_ga.hpp"
#include "nbga/experiment/config.hpp"
#include "nbga/experiment/experiment.hpp"
#include "nbga/experiment/fetch.hpp"
#include "nbga/tsp/problem.hpp"
#include "nbga/tsp/tsplib.hpp"
#include "../support/oracles.hpp"

using namespace nbga;
namespace fs = std::filesystem;

namespace {

const std::string kData = NBGA_TEST_DATA_DIR;
const std::string kSampleSite = NBGA_SAMPLE_SITE;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Fresh empty directory under the system temp dir.
fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("nbga-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string report_text(const ExperimentReport& report) {
  std::ostringstream out;
  write_report(report, out);
  return out.str();
}

ExperimentConfig small_tsp(int runs = 3) {
  ExperimentConfig c;
  c.problem = ProblemKind::Tsp;
  c.instance = kData + "/tsplib/gr24.tsp";
  c.runs = runs;
  c.pop = 30;
  c.generations = 60;
  c.seed = 7;
  c.threads = 1;
  return c;
}

ExperimentConfig small_ligand(ProblemKind kind) {
  ExperimentConfig c;
  c.problem = kind;
  c.site = kSampleSite;
  c.runs = 2;
  c.pop = 20;
  c.generations = 100;
  c.seed = 3;
  c.threads = 1;
  return c;
}

struct OptimalStart {
  using genome_type = tsp::Tour;
  tsp::TspProblem inner;

  tsp::Tour random_genome(Rng&) const { return {{0, 1, 2, 3, 4, 5}}; }
  double objective(const tsp::Tour& t) const { return inner.objective(t); }
  tsp::Tour mutate(const tsp::Tour& t, int gen, const MutationSchedule& s, Rng& rng) const {
    return inner.mutate(t, gen, s, rng);
  }
  std::pair<tsp::Tour, tsp::Tour> crossover(const tsp::Tour& a, const tsp::Tour& b, Rng& rng) const {
    return inner.crossover(a, b, rng);
  }
};

class LocalServer {
 public:
  LocalServer() {
    server_.Get(R"(/tsp/(\w+)\.tsp)", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests;
      const std::string name = req.matches[1];
      if (name == "broken") {
        res.set_content("NAME : broken\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n"
                        "NODE_COORD_SECTION\n1 0 0\n",
                        "text/plain");
        return;
      }
      const fs::path source = kData + "/tsplib/" + name + ".tsp";
      if (!fs::exists(source)) {
        res.status = 404;
        return;
      }
      res.set_content(slurp(source), "text/plain");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }

  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_) + "/tsp"; }
  int requests = 0;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST_CASE("config text") {
  ExperimentConfig c;
  apply_config_text(c,
                    "# comment\n"
                    "problem = ligand-fixed\n"
                    "runs = 4   # trailing comment\n"
                    "pop=50\n"
                    "\n"
                    "generations = 80\n"
                    "seed = 12\n"
                    "site = sites/a.txt\n"
                    "cn = 2.5\n"
                    "standard_lj = true\n"
                    "mutation_rate = 0.3\n"
                    "hi_start = 4\n",
                    "/base");
  CHECK(c.problem == ProblemKind::LigandFixed);
  CHECK(c.runs == 4);
  CHECK(c.pop == 50);
  CHECK(c.effective_generations() == 80);
  CHECK(c.seed == 12);
  CHECK(c.site == fs::path("/base/sites/a.txt"));
  CHECK(c.energy.cn == 2.5);
  CHECK(c.energy.standard_lj);
  CHECK(c.classic.mutation_rate == 0.3);
  CHECK(c.schedule_for(17).hi_start == 4);

  apply_setting(c, "runs", "9");
  apply_setting(c, "mode", "variable");
  CHECK(c.runs == 9);
  CHECK(c.problem == ProblemKind::LigandVariable);

  CHECK_THROWS_AS(apply_config_text(c, "colour = blue\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "runs = many\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "runs 4\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "algorithm = annealing\n"), ConfigError);
}

TEST_CASE("config defaults and validation") {
  ExperimentConfig c;
  CHECK(c.effective_generations() == 2000);
  c.problem = ProblemKind::LigandVariable;
  CHECK(c.effective_generations() == 100);

  auto bad = small_tsp();
  bad.pop = 2;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = small_tsp();
  bad.runs = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = small_tsp();
  bad.instance = kData + "/tsplib/missing.tsp";
  CHECK_THROWS_AS(run_experiment(bad), ConfigError);
}

TEST_CASE("config file paths resolve against the file") {
  const auto dir = scratch("config");
  fs::create_directories(dir / "inner");
  fs::copy_file(kData + "/tsplib/gr24.tsp", dir / "inner" / "gr24.tsp");
  {
    std::ofstream out(dir / "run.cfg");
    out << "instance = inner/gr24.tsp\nruns = 2\npop = 10\ngenerations = 5\n";
  }
  ExperimentConfig c;
  apply_config_file(c, dir / "run.cfg");
  CHECK(c.instance == dir / "inner" / "gr24.tsp");
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(apply_config_file(c, dir / "absent.cfg"), ConfigError);
}

TEST_CASE("minimal smoke run") {
  auto c = small_tsp(1);
  c.pop = 3;
  c.generations = 1;
  const auto report = run_experiment(c);
  REQUIRE(report.runs.size() == 1);
  CHECK(report.runs[0].trace.size() == 1);
}

TEST_CASE("report layout and statistics") {
  auto c = small_tsp(4);
  const auto report = run_experiment(c);
  CHECK(report.problem_name == "gr24");
  CHECK(report.dimension == 24);
  REQUIRE(report.optimum.has_value());
  CHECK(*report.optimum == 1272);
  CHECK(report.stats.best <= report.stats.average);
  REQUIRE(report.stats.error_percent.has_value());
  CHECK(*report.stats.error_percent == tsp::error_percent(report.stats.average, 1272));
  for (std::size_t i = 0; i < report.runs.size(); ++i) CHECK(report.runs[i].seed == 7 + i);

  const auto text = report_text(report);
  CHECK(text.find("Statistics\tBest\tAverage\tError") != std::string::npos);
  CHECK(text.find("seconds") == std::string::npos);
  std::ostringstream timed;
  write_report(report, timed, true);
  CHECK(timed.str().find("seconds") != std::string::npos);
}

TEST_CASE("reports are reproducible and independent of thread count") {
  auto c = small_tsp(4);
  const auto a = report_text(run_experiment(c));
  const auto b = report_text(run_experiment(c));
  CHECK(a == b);
  c.threads = 3;
  CHECK(report_text(run_experiment(c)) == a);

  auto lig = small_ligand(ProblemKind::LigandVariable);
  const auto la = report_text(run_experiment(lig));
  lig.threads = 2;
  CHECK(report_text(run_experiment(lig)) == la);
}

TEST_CASE("a single run can be replayed from its seed") {
  auto c = small_tsp(3);
  const auto all = run_experiment(c);
  c.seed = 8;
  c.runs = 1;
  const auto one = run_experiment(c);
  CHECK(one.runs[0].best_genome == all.runs[1].best_genome);
  CHECK(one.runs[0].trace == all.runs[1].trace);
}

TEST_CASE("trace files") {
  const auto dir = scratch("trace");
  auto c = small_ligand(ProblemKind::LigandVariable);
  c.runs = 1;
  c.trace = dir / "trace.csv";
  const auto report = run_experiment(c);
  std::ostringstream sink;
  write_outputs(report, sink);

  std::ifstream in(dir / "trace.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "generation,best_objective,fitness");
  int rows = 0;
  double previous = 1e300;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string g, e, f;
    std::getline(fields, g, ',');
    std::getline(fields, e, ',');
    std::getline(fields, f, ',');
    CHECK(std::stoi(g) == rows);
    const double energy = std::stod(e);
    CHECK(energy <= previous);
    previous = energy;
    CHECK(std::stod(f) == doctest::Approx(c.energy.k / energy));
  }
  CHECK(rows == 100);

  const std::vector<TracePoint> tiny{{1, 100.0}, {2, 100.0}};
  emit_trace(tiny, dir / "tiny.csv", ligand::EnergyParams{});
  CHECK(slurp(dir / "tiny.csv") == "generation,best_objective,fitness\n1,100,1\n2,100,1\n");
  emit_trace(tiny, dir / "tsp.csv");
  CHECK(slurp(dir / "tsp.csv") == "generation,best_objective,fitness\n1,100,\n2,100,\n");
  CHECK_THROWS(emit_trace(tiny, dir / "no" / "such" / "dir.csv"));

  auto multi = small_tsp(2);
  multi.trace = dir / "tour.csv";
  write_outputs(run_experiment(multi), sink);
  CHECK(fs::exists(dir / "tour-seed7.csv"));
  CHECK(fs::exists(dir / "tour-seed8.csv"));
  CHECK(trace_path_for("a/b.csv", 3) == fs::path("a/b-seed3.csv"));
}

TEST_CASE("classic GA baseline") {
  const auto problem = tsp::TspProblem(std::make_shared<const tsp::TspInstance>(oracle::hexagon()));
  EngineConfig config{30, 200, 5, MutationSchedule::for_dimension(6, 200)};

  SUBCASE("reaches the hexagon perimeter") {
    CHECK(classic_ga(problem, config).best.objective == doctest::Approx(6.0));
  }
  SUBCASE("deterministic per seed") {
    const auto inst = std::make_shared<const tsp::TspInstance>(oracle::random_instance(14, 5));
    const tsp::TspProblem p(inst);
    const auto a = classic_ga(p, config);
    const auto b = classic_ga(p, config);
    CHECK(a.best.genome == b.best.genome);
    CHECK(a.best_trace == b.best_trace);
    for (std::size_t i = 1; i < a.best_trace.size(); ++i) {
      CHECK(a.best_trace[i].best_objective <= a.best_trace[i - 1].best_objective);
    }
  }
  SUBCASE("an optimal identical population gives a constant trace") {
    const OptimalStart start{problem};
    const auto r = classic_ga(start, config);
    for (const auto& point : r.best_trace) CHECK(point.best_objective == doctest::Approx(6.0));
  }
  SUBCASE("population size is kept") {
    int calls = 0;
    classic_ga(problem, config, {},
               [&](int, std::span<const Individual<tsp::Tour>> population) {
                 ++calls;
                 CHECK(population.size() == 30);
               });
    CHECK(calls == 200);
  }
}

TEST_CASE("fetch downloads, skips and cleans up") {
  LocalServer server;
  const auto dest = scratch("fetch");

  const std::vector<std::string> names{"eil51"};
  const auto first = fetch_instances(names, server.base(), dest);
  REQUIRE(first.size() == 1);
  CHECK(first[0].status == FetchStatus::Downloaded);
  CHECK(tsp::load_tsplib(dest / "eil51.tsp").size() == 51);
  CHECK(server.requests == 1);

  const auto second = fetch_instances(names, server.base() + "/", dest);
  CHECK(second[0].status == FetchStatus::AlreadyPresent);
  CHECK(server.requests == 1);

  const std::vector<std::string> broken{"broken"};
  CHECK_THROWS_AS(fetch_instances(broken, server.base(), dest), FetchError);
  CHECK_FALSE(fs::exists(dest / "broken.tsp"));
  CHECK_FALSE(fs::exists(dest / "broken.tsp.part"));

  const std::vector<std::string> missing{"nowhere"};
  CHECK_THROWS_AS(fetch_instances(missing, server.base(), dest), FetchError);
  CHECK_FALSE(fs::exists(dest / "nowhere.tsp"));

  CHECK_THROWS_AS(fetch_instances(names, "", dest), FetchError);
  CHECK_THROWS_AS(fetch_instances(names, "ftp://example.org/x", dest), FetchError);
}

TEST_CASE("fetch from an unreachable host leaves nothing behind") {
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  const auto dest = scratch("unreachable");
  const std::vector<std::string> names{"st70"};
  CHECK_THROWS_AS(
      fetch_instances(names, "http://127.0.0.1:" + std::to_string(port) + "/tsp", dest),
      FetchError);
  CHECK(fs::is_empty(dest));
}
