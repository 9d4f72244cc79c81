#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "experiment.hpp"

namespace fs = std::filesystem;
using namespace hawkes;
using namespace hawkes::cli;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hawkes_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json gamma_doc() {
  return json::parse(R"({
    "schemes": ["ivi", "resolvent_ivi", "population"],
    "kernel": {"family": "gamma", "c": 8.1, "b": 3.0, "alpha": 2.0},
    "baseline": {"mu": 5.0},
    "horizon": 1.0,
    "steps": [16, 40],
    "paths": 300,
    "seed": 12,
    "outputs": {"laplace": {"w": [-0.1, -1]}, "marginals": true, "time_change": true}
  })");
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HAWKES_SIMULATE_BIN) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  const auto expect_error = [](json doc, const std::string& field) {
    try {
      (void)parse_config(doc);
      FAIL("expected ConfigError for " << field);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(field) == 0);
    }
  };
  json d = gamma_doc();
  d["paths"] = 0;
  expect_error(d, "paths");
  d = gamma_doc();
  d["outputs"]["laplace"]["w"] = {-1, 0.5};
  expect_error(d, "outputs.laplace.w[1]");
  d = gamma_doc();
  d["kernel"]["b"] = -1.0;
  expect_error(d, "kernel");
  d = gamma_doc();
  d["schemes"] = {"ivi", "markov_ivi"};
  expect_error(d, "schemes");
  d = gamma_doc();
  d["schemes"] = {"ivi", "euler"};
  expect_error(d, "schemes[1]");
  d = gamma_doc();
  d["horizn"] = 1.0;
  expect_error(d, "horizn");
  d = gamma_doc();
  d.erase("steps");
  expect_error(d, "steps");
  d = gamma_doc();
  d["kernel"] = {{"family", "mittag_leffler"}, {"c", 0.5}, {"rate", 0.5}, {"alpha", 0.7}};
  d["schemes"] = {"ogata"};
  expect_error(d, "schemes");
}

TEST_CASE("Poisson reduction through the runner") {
  json d = json::parse(R"({
    "schemes": ["ivi"], "kernel": {"family": "zero"}, "baseline": {"mu": 5.0},
    "horizon": 1.0, "steps": [10], "paths": 100000, "seed": 3,
    "outputs": {"laplace": {"w": [-0.2]}}
  })");
  const auto results = run_experiment(parse_config(d), 2);
  REQUIRE(results.size() == 1);
  const StatRow& row = results[0].stats.at(0);
  CHECK(row.statistic == "laplace_N_T(w=-0.2)");
  CHECK(row.n_samples == 100000);
  CHECK(std::abs(row.value - std::exp(5.0 * (std::exp(-0.2) - 1.0))) < 3.0 * row.std_error);
}

TEST_CASE("results are byte-identical across runs and thread counts") {
  const ExperimentConfig cfg = parse_config(gamma_doc());
  const fs::path dir = scratch("determinism");
  std::string reference;
  for (unsigned threads : {1U, 1U, 2U, 5U}) {
    const auto results = run_experiment(cfg, threads);
    const fs::path sub = dir / std::to_string(threads);
    write_results_csv(results, sub / "results.csv");
    write_path_samples(results, sub);
    const std::string csv = slurp(sub / "results.csv");
    if (reference.empty()) {
      reference = csv;
      CHECK(csv.find("ks_Lambda_T_vs_population_p_value") != std::string::npos);
    } else {
      CHECK(csv == reference);
    }
    CHECK(slurp(sub / "marginals_resolvent_ivi_n40.csv") == slurp(dir / "1" / "marginals_resolvent_ivi_n40.csv"));
    CHECK(slurp(sub / "timechange_population_n0.csv") == slurp(dir / "1" / "timechange_population_n0.csv"));
  }
}

TEST_CASE("every statistic carries its sample count") {
  const auto results = run_experiment(parse_config(gamma_doc()), 1);
  for (const BatchResult& r : results) {
    CHECK_FALSE(r.error);
    for (const StatRow& s : r.stats) {
      CHECK(s.n_samples > 0);
      CHECK(std::isfinite(s.std_error));
    }
  }
}

TEST_CASE("ill-posed grids are reported per pair") {
  json d = gamma_doc();
  d["steps"] = {1, 32};
  d["schemes"] = {"ivi"};
  d["kernel"] = {{"family", "exponential"}, {"c", 20.0}, {"b", 15.0}};
  d["outputs"] = {{"marginals", true}};
  const auto results = run_experiment(parse_config(d), 1);
  REQUIRE(results.size() == 2);
  CHECK(results[0].ill_posed);
  CHECK_FALSE(results[1].error);
}

TEST_CASE("trajectory files") {
  const fs::path dir = scratch("trajectory");
  json d = gamma_doc();
  d["kernel"] = {{"family", "zero"}};
  ExperimentConfig cfg = parse_config(d);

  emit_trajectory(cfg, SchemeVariant::IVi, 16, 4, dir / "k0.csv");
  std::ifstream in(dir / "k0.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,N,Lambda,lambda");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
    CHECK(line.substr(line.rfind(',') + 1) == "5");
    ++rows;
  }
  CHECK(rows == 17);

  d["baseline"]["mu"] = 0.0;
  d["kernel"] = gamma_doc()["kernel"];
  cfg = parse_config(d);
  emit_trajectory(cfg, SchemeVariant::ResolventIVi, 8, 0, dir / "zero.csv");
  std::ifstream z(dir / "zero.csv");
  std::getline(z, line);
  rows = 0;
  while (std::getline(z, line)) {
    CHECK(line.substr(line.find(',')) == ",0,0,0");
    ++rows;
  }
  CHECK(rows == 9);
}

TEST_CASE("simulate exit codes") {
  const fs::path dir = scratch("exit");
  const auto write = [&](const std::string& name, const json& doc) {
    std::ofstream(dir / name) << doc.dump();
    return (dir / name).string();
  };
  json good = gamma_doc();
  good["paths"] = 20;
  const std::string ok = write("ok.json", good);
  CHECK(run_cli("--config " + ok + " --out " + (dir / "o").string()) == 0);
  CHECK(fs::exists(dir / "o" / "results.csv"));
  CHECK(fs::exists(dir / "o" / "summary.json"));
  CHECK(run_cli("bench --config " + ok + " --out " + (dir / "b").string() + " --threads 2") == 0);
  CHECK(fs::exists(dir / "b" / "timing.csv"));
  CHECK(run_cli("trajectory --config " + ok + " --out " + (dir / "t").string() + " --path 3") == 0);
  CHECK(fs::exists(dir / "t" / "trajectory_ivi_n16_path3.csv"));

  json bad = good;
  bad["outputs"]["laplace"]["w"] = {1.0};
  CHECK(run_cli("--config " + write("bad.json", bad)) == 2);
  CHECK(run_cli("--config " + (dir / "missing.json").string()) == 2);
  CHECK(run_cli("--nonsense") == 2);
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(run_cli("--config " + (dir / "broken.json").string()) == 2);

  json ill = good;
  ill["schemes"] = {"ivi"};
  ill["steps"] = {1};
  ill["kernel"] = {{"family", "exponential"}, {"c", 20.0}, {"b", 15.0}};
  ill["outputs"] = json::object();
  CHECK(run_cli("--config " + write("ill.json", ill) + " --out " + (dir / "i").string()) == 3);
}
