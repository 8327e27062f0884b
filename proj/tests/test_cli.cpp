#include <doctest.h>

#include "swell/commands.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using swell::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "swell_test_cli";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

std::vector<double> column(const std::string& csv, std::size_t index) {
  std::vector<double> values;
  const auto rows = lines(csv);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream row(rows[i]);
    std::string cell;
    for (std::size_t c = 0; c <= index; ++c) {
      std::getline(row, cell, ',');
    }
    values.push_back(std::stod(cell));
  }
  return values;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"quantum", "level"}).code == 1);
  CHECK(run({"quantum", "level", "--n", "0"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classical analytic") {
  const auto path = scratch_dir() / "analytic.csv";
  auto r = run({"classical", "analytic", "--grid-points", "3", "--r-max", "0.999", "--out",
                path.string()});
  REQUIRE(r.code == 0);
  auto rows = lines(slurp(path));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "r,density");

  r = run({"classical", "analytic", "--grid-points", "2", "--r-max", "0.5", "--out", path.string()});
  REQUIRE(r.code == 0);
  rows = lines(slurp(path));
  REQUIRE(rows.size() == 3);
  const auto density = column(slurp(path), 1);
  CHECK(density[0] == 0.0);
  CHECK(density[1] == doctest::Approx(0.5493061443340548).epsilon(1e-14));

  CHECK(run({"classical", "analytic", "--r-max", "1", "--out", path.string()}).code == 1);
  CHECK(run({"classical", "analytic"}).code == 1);
}

TEST_CASE("classical mc") {
  const auto path = scratch_dir() / "mc.csv";
  CHECK(run({"classical", "mc", "--samples", "0", "--out", path.string()}).code == 1);
  CHECK(run({"classical", "mc", "--mode", "other", "--out", path.string()}).code == 1);

  auto r = run({"classical", "mc", "--samples", "200000", "--bins", "20", "--seed", "7", "--out",
                path.string(), "--threads", "2"});
  REQUIRE(r.code == 0);
  const auto first = slurp(path);
  CHECK(lines(first).size() == 21);
  CHECK(lines(first)[0] == "r_mid,density,count");
  for (double v : column(first, 1)) {
    CHECK(v >= 0.0);
  }

  r = run({"classical", "mc", "--samples", "200000", "--bins", "20", "--seed", "7", "--out",
           path.string(), "--threads", "5"});
  REQUIRE(r.code == 0);
  CHECK(slurp(path) == first);

  r = run({"classical", "mc", "--samples", "1000", "--bins", "1", "--out", path.string()});
  CHECK(r.code == 0);
}

TEST_CASE("quantum level") {
  auto r = run({"quantum", "level", "--n", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("l_max: 2\n") != std::string::npos);
  CHECK(r.out.find("degeneracy: 10\n") != std::string::npos);
  CHECK(r.out.find("weights: 0.2,0.3,0.5\n") != std::string::npos);
  CHECK(r.out.find("energy: 4.934802200544679 hbar^2/(mu a^2)\n") != std::string::npos);

  r = run({"quantum", "level", "--n", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("l_max: 30\n") != std::string::npos);
  CHECK(r.out.find("degeneracy: 962\n") != std::string::npos);
}

TEST_CASE("quantum density") {
  const auto path = scratch_dir() / "density.csv";
  CHECK(run({"quantum", "density", "--n", "1", "--l", "3", "--out", path.string()}).code == 1);
  CHECK(run({"quantum", "density", "--n", "1", "--out", path.string()}).code == 1);
  CHECK(run({"quantum", "density", "--n", "1", "--l", "0", "--total", "--out", path.string()})
            .code == 1);
  CHECK(run({"quantum", "density", "--n", "1", "--l", "1", "--branch", "H1", "--out",
             path.string()})
            .code == 1);

  auto r = run({"quantum", "density", "--n", "1", "--l", "0", "--grid-points", "11", "--out",
                path.string()});
  REQUIRE(r.code == 0);
  for (double v : column(slurp(path), 1)) {
    CHECK(std::abs(v - 1.0) < 1e-12);
  }

  r = run({"quantum", "density", "--n", "1", "--l", "0", "--branch", "H2", "--grid-points", "11",
           "--out", path.string()});
  REQUIRE(r.code == 0);
  for (double v : column(slurp(path), 1)) {
    CHECK(std::abs(v - 1.0) < 1e-12);
  }

  r = run({"quantum", "density", "--n", "3", "--total", "--grid-points", "101", "--out",
           path.string()});
  REQUIRE(r.code == 0);
  const auto values = column(slurp(path), 1);
  CHECK(values.size() == 101);
  // Only l = 0 survives at the origin: w_0 = 2 / D with D = 82.
  CHECK(values.front() == doctest::Approx(2.0 / 82).epsilon(1e-14));
  double mass = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    mass += 0.5 * 0.01 * (values[i - 1] + values[i]);
  }
  CHECK(std::abs(mass - 1.0) < 1e-3);
}

TEST_CASE("compare") {
  const auto dir = scratch_dir();
  const auto path = dir / "cmp.csv";
  auto r = run({"compare", "--n-list", "1,10,1", "--grid-points", "200", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("duplicate n = 1") != std::string::npos);
  const auto rows = lines(slurp(path));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "n,l_max,degeneracy,l1_distance,sup_distance");
  CHECK(rows[1].rfind("1,2,10,", 0) == 0);
  CHECK(rows[2].rfind("10,30,962,", 0) == 0);
  const auto l1 = column(slurp(path), 3);
  CHECK(l1[1] < l1[0]);
  CHECK(fs::exists(dir / "cmp_n1.csv"));
  CHECK(fs::exists(dir / "cmp_n10.csv"));
  CHECK(fs::exists(dir / "cmp_classical.csv"));
  CHECK(lines(slurp(dir / "cmp_n10.csv")).size() == 201);

  r = run({"compare", "--n-list", "4", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(lines(slurp(path)).size() == 2);

  CHECK(run({"compare", "--n-list", "1", "--r-max", "1", "--out", path.string()}).code == 1);
  CHECK(run({"compare", "--n-list", "0", "--out", path.string()}).code == 1);
  CHECK(run({"compare", "--n-list", "1", "--metric", "l2", "--out", path.string()}).code == 1);
}

TEST_CASE("specfun eval") {
  auto r = run({"specfun", "eval", "--fn", "j", "--l", "0", "--x", "1"});
  REQUIRE(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));

  r = run({"specfun", "eval", "--fn", "zero", "--l", "0", "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(2 * 3.141592653589793).epsilon(1e-14));

  r = run({"specfun", "eval", "--fn", "n", "--l", "1", "--x", "2"});
  REQUIRE(r.code == 0);
  CHECK(std::stod(r.out) ==
        doctest::Approx(-std::cos(2.0) / 4 - std::sin(2.0) / 2).epsilon(1e-14));

  CHECK(run({"specfun", "eval", "--fn", "n", "--l", "0", "--x", "0"}).code == 1);
  CHECK(run({"specfun", "eval", "--fn", "zero", "--l", "0", "--x", "1"}).code == 1);
  CHECK(run({"specfun", "eval", "--fn", "j", "--x", "1"}).code == 1);
}

TEST_CASE("repeat runs write identical files") {
  const auto path = scratch_dir() / "repeat.csv";
  const std::vector<std::string> args = {"quantum", "density", "--n",   "5",
                                         "--total", "--out",   path.string()};
  REQUIRE(run(args).code == 0);
  const auto first = slurp(path);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(path) == first);
  CHECK(!fs::exists(path.string() + ".tmp"));
}

TEST_CASE("installed binary reports exit codes") {
  const std::string exe = SWELL_CLI_PATH;
  const auto quiet = " >/dev/null 2>&1";
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + quiet).c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("quantum level --n 2") == 0);
  CHECK(status("quantum level --n -1") == 1);
  CHECK(status("bogus") == 1);
  // Unwritable output path is a runtime failure.
  CHECK(status("classical analytic --out /nonexistent_dir/x.csv") == 2);
}
