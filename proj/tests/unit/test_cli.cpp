#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "reference_values.hpp"

using namespace polyspec;
namespace ref = polyspec::testref;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polyspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli zeros") {
  auto r = run_cli({"zeros", "--order", "0", "--count", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2.4048255576957729\n");
  r = run_cli({"zeros", "--order", "0", "--count", "3", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "j,value");
  double prev = 0.0;
  int rows = 0;
  for (std::string line; std::getline(lines, line); ++rows) {
    const double v = std::stod(line.substr(line.find(',') + 1));
    CHECK(v > prev);
    prev = v;
  }
  CHECK(rows == 3);
}

TEST_CASE("cli spectrum json") {
  auto r = run_cli({"spectrum", "--radii", "1,1", "--q", "1", "--max", "1.5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["points"].size() == 1);
  CHECK(doc["points"][0]["infinite"] == true);
  CHECK(doc["points"][0]["value"].get<double>() == doctest::Approx(ref::kBottomUnit));

  r = run_cli({"spectrum", "--radii", "1,2", "--q", "1", "--max", "0.3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["points"].empty());
}

TEST_CASE("cli spectrum csv columns and determinism") {
  const std::vector<std::string> args = {"spectrum", "--radii", "1,1.5,2", "--q", "2",
                                         "--max", "12", "--format", "csv"};
  const auto a = run_cli(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = run_cli(threaded);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("value,finite_multiplicity,infinite,family\n", 0) == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"spectrum", "--radii", "1,1", "--q", "2"}).code == 3);
  const auto q = run_cli({"spectrum", "--radii", "1,1", "--q", "2"});
  CHECK(q.err.find("1..1") != std::string::npos);
  CHECK(run_cli({"spectrum", "--radii", "1,x"}).code == 2);
  CHECK(run_cli({"zeros", "--order", "0", "--bogus"}).code == 2);
  CHECK(run_cli({"zeros"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"zeros", "--order", "500", "--count", "1"}).code == 3);
  CHECK(run_cli({"zeros", "--order", "0", "--format", "xml"}).code == 2);
  const auto help = run_cli({"spectrum", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("1e-11") != std::string::npos);
}

TEST_CASE("cli bottom and oracle") {
  auto r = run_cli({"bottom", "--radii", "1,2", "--q", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["value"].get<double>() == doctest::Approx(ref::kBottomRadiusTwo).epsilon(1e-14));
  CHECK(doc["J"] == nlohmann::json::array({2}));

  r = run_cli({"oracle", "fd", "--order", "0", "--bc", "dbar-neumann", "--grid", "2000",
               "--count", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["eigenvalues"][0].get<double>()) < 1e-6);
  CHECK(doc["eigenvalues"][1].get<double>() == doctest::Approx(ref::kLambda11Sq).epsilon(1e-4));
  CHECK(run_cli({"oracle", "fd", "--bc", "robin"}).code == 2);
}

TEST_CASE("cli verify") {
  const auto r = run_cli({"verify", "--suite", "zeros"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["passed"] == true);
  CHECK(run_cli({"verify", "--suite", "unknown"}).code == 3);
}

TEST_CASE("cli sample then inverse") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto grid = (dir / "polyspec_cli_test.pspc").string();
  const auto out_grid = (dir / "polyspec_cli_test_out.pspc").string();
  auto r = run_cli({"sample", "--radii", "1,1", "--J", "1", "--function", "bottom",
                    "--radial-nodes", "64", "--angular-nodes", "16", "--output", grid});
  REQUIRE(r.code == 0);
  r = run_cli({"inverse", "--input", grid, "--truncation", "6", "--p-max", "2",
               "--output-grid", out_grid});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  double biggest = 0.0;
  double at = 0.0;
  for (const auto& t : doc["terms"]) {
    const double mag = std::hypot(t["re"].get<double>(), t["im"].get<double>());
    if (mag > biggest) {
      biggest = mag;
      at = t["mode"]["value"].get<double>();
    }
  }
  CHECK(biggest == doctest::Approx(1.0 / ref::kBottomUnit).epsilon(1e-8));
  CHECK(at == doctest::Approx(ref::kBottomUnit));
  CHECK(std::filesystem::exists(out_grid));
  CHECK(run_cli({"inverse", "--input", (dir / "missing.pspc").string()}).code == 1);
  std::filesystem::remove(grid);
  std::filesystem::remove(out_grid);
}

TEST_CASE("json round trip of an output record") {
  ZeroCache cache;
  cli::OutputRecord rec;
  rec.radii = {1.0, 1.7};
  rec.q = 1;
  rec.max_lambda = 15.0;
  rec.group_tol = 1e-11;
  rec.witnesses = 8;
  rec.points = assemble_spectrum(Polydisc(rec.radii), 1, 15.0, cache);
  const auto j = cli::to_json(rec);
  const auto back = cli::record_from_json(nlohmann::json::parse(j.dump()));
  CHECK(cli::to_json(back) == j);
  REQUIRE(back.points.size() == rec.points.size());
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    CHECK(back.points[i].value == rec.points[i].value);
  }
}

TEST_CASE("parse_list") {
  CHECK(cli::parse_list("1,2.5,3") == std::vector<double>{1.0, 2.5, 3.0});
  CHECK_THROWS(cli::parse_list(""));
  CHECK_THROWS(cli::parse_list("1,,2"));
  CHECK_THROWS(cli::parse_list("1,2x"));
}
