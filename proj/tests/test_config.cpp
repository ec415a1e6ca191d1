#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutlab/experiments.hpp"
#include "doctest.h"

using namespace cutlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_dir(const std::string& tag) {
  auto p = std::filesystem::temp_directory_path() / ("cutlab_test_" + tag);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config parsing") {
  auto cfg = ExperimentConfig::parse_text(
      "# comment\n"
      "[provider]\n"
      "family = zd\n"
      "d = 2\n"
      "gens = std   # trailing comment\n"
      "\n"
      "[experiment]\n"
      "name = growth\n"
      "radii = 3, 4, 5\n",
      "test.cfg");
  CHECK(cfg.get("provider", "family") == "zd");
  CHECK(cfg.get_int("provider", "d") == 2);
  CHECK(cfg.get("provider", "gens") == "std");
  CHECK(cfg.get_int_list("experiment", "radii") ==
        std::vector<int>{3, 4, 5});
  CHECK(cfg.get_or("experiment", "missing", "x") == "x");
  CHECK_THROWS_AS(cfg.get("nope", "k"), ConfigError);
  CHECK_THROWS_AS(cfg.get_int("provider", "family"), ConfigError);
}

TEST_CASE("config parse errors carry line numbers") {
  try {
    ExperimentConfig::parse_text("[a]\nkey value\n", "bad.cfg");
    FAIL("expected a throw");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bad.cfg:2") != std::string::npos);
  }
  try {
    ExperimentConfig::parse_text("[a]\nk = 1\nk = 2\n", "dup.cfg");
    FAIL("expected a throw");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("dup.cfg:3") != std::string::npos);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  CHECK_THROWS_AS(ExperimentConfig::parse_text("k = 1\n", "x.cfg"),
                  ConfigError);
}

TEST_CASE("provider construction from config") {
  auto cfg = ExperimentConfig::parse_text(
      "[provider]\nfamily = hex\n"
      "[target]\nfamily = zd\nd = 2\ngens = e1.e2,-e1.-e2,e1,-e1,e2,-e2\n");
  CHECK(make_provider(cfg, "provider")->degree_bound() == 3);
  auto custom = make_provider(cfg, "target");
  CHECK(custom->degree_bound() == 6);

  auto bad = ExperimentConfig::parse_text("[provider]\nfamily = nope\n");
  CHECK_THROWS_AS(make_provider(bad, "provider"), ConfigError);
}

TEST_CASE("experiment run writes deterministic outputs") {
  auto dir = temp_dir("growth");
  std::string text =
      "[provider]\nfamily = zd\nd = 2\ngens = std\n"
      "[window]\nradius = 6\n"
      "[experiment]\nname = growth\nn_max = 6\n"
      "expect_balls = 1,5,13,25,41,61,85\n"
      "[output]\ndir = " +
      dir.string() + "\n";
  auto cfg = ExperimentConfig::parse_text(text, "growth.cfg");
  auto res1 = run_experiment(cfg);
  auto first = slurp(dir / "growth.csv");
  auto manifest1 = slurp(dir / "manifest.json");
  auto res2 = run_experiment(cfg);
  CHECK(first == slurp(dir / "growth.csv"));
  CHECK(manifest1 == slurp(dir / "manifest.json"));
  CHECK(first.find("0,1,1\n") != std::string::npos);
  CHECK(res1.files == res2.files);
  std::filesystem::remove_all(dir);
}

TEST_CASE("experiment assertion failures raise CheckFailure") {
  auto dir = temp_dir("regress");
  std::string text =
      "[provider]\nfamily = zd\nd = 2\ngens = std\n"
      "[window]\nradius = 6\n"
      "[experiment]\nname = growth\nn_max = 3\nexpect_balls = 1,5,13,999\n"
      "[output]\ndir = " +
      dir.string() + "\n";
  auto cfg = ExperimentConfig::parse_text(text, "regress.cfg");
  CHECK_THROWS_AS(run_experiment(cfg), CheckFailure);
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumerate experiment pins the grid counts") {
  auto dir = temp_dir("enum");
  std::string text =
      "[provider]\nfamily = zd\nd = 2\ngens = std\n"
      "[window]\nradius = 8\n"
      "[experiment]\nname = enumerate\nn_max = 6\n"
      "expect_counts = 4:1,5:0,6:4\n"
      "[output]\ndir = " +
      dir.string() + "\n";
  auto cfg = ExperimentConfig::parse_text(text, "enum.cfg");
  run_experiment(cfg);
  auto counts = slurp(dir / "counts.csv");
  CHECK(counts.find("4,1,") != std::string::npos);
  CHECK(counts.find("6,4,") != std::string::npos);
  auto stream = slurp(dir / "cutsets.tsv");
  CHECK(stream.find("4\t") == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("half-t refuses families without a declared presentation") {
  auto dir = temp_dir("halft");
  std::string text =
      "[provider]\nfamily = lamplighter\ngens = walk\n"
      "[window]\nradius = 5\n"
      "[experiment]\nname = half-t\nn_max = 4\n"
      "[output]\ndir = " +
      dir.string() + "\n";
  auto cfg = ExperimentConfig::parse_text(text, "halft.cfg");
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
  std::filesystem::remove_all(dir);
}
