#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nilspec::cli::run;

namespace {

const fs::path kCatalogue = NILSPEC_TEST_CATALOGUE;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cat(const std::string& file) { return (kCatalogue / file).string(); }

/// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("nilspec-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_SUITE("cli basics") {
  TEST_CASE("spectra certify") {
    auto r = cli({"spectra", "certify", "--poly", "1,-5,6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Expanding") != std::string::npos);
    r = cli({"spectra", "certify", "--poly", "1,-3,1", "--expect", "expanding"});
    CHECK(r.code == 1);
    r = cli({"spectra", "certify", "--poly", "1,-3,1", "--expect", "not-expanding"});
    CHECK(r.code == 0);
    r = cli({"spectra", "certify", "--poly", "1,0,1"});
    CHECK(r.out.find("RootOnUnitCircle") != std::string::npos);
    r = cli({"spectra", "certify", "--poly", "1,zz"});
    CHECK(r.code == 2);
  }

  TEST_CASE("lie betti and certify on catalogue files") {
    auto r = cli({"lie", "betti", cat("heisenberg3.lie")});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 2 1\n");
    r = cli({"lie", "certify", cat("heisenberg3.lie"), cat("heisenberg3_diag.mat")});
    CHECK(r.code == 0);
    CHECK(r.out.find("{8, 8}") != std::string::npos);
    r = cli({"lie", "check-aut", cat("filiform4.lie"), cat("filiform4_diag.mat")});
    CHECK(r.code == 0);
  }

  TEST_CASE("theorem subcommands") {
    auto r = cli({"theorem", "toric", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "impossible (3 < 4)\n");
    r = cli({"theorem", "toric", "--n", "3"});
    CHECK(r.out == "not obstructed (2 >= 2)\n");
    r = cli({"theorem", "sphere-check", "--n", "5", "--expect", "SphereForced"});
    CHECK(r.code == 0);
    r = cli({"theorem", "sphere-check", "--n", "5", "--q1", "3", "--expect", "SphereForced"});
    CHECK(r.code == 1);
    r = cli({"bundle", "gysin", "--betti", "1,2,1", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,3,3,1") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"lie", "betti", cat("no-such-file.lie")}).code == 2);
    CHECK(cli({"theorem", "toric", "--n", "2"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("malformed files report line and column") {
    TempDir tmp;
    const auto bad = tmp.write("bad.mat", "2 2\n1 2\n3 x\n");
    auto r = cli({"matrix", "rank", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.mat") != std::string::npos);
    CHECK(r.err.find(":3:") != std::string::npos);
    const auto lie = tmp.write("bad.lie", "dim 3\n1 2 3 1\n2 1 3 1\n");
    r = cli({"lie", "betti", lie.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.lie") != std::string::npos);
  }
}

TEST_SUITE("machine output") {
  TEST_CASE("one parsable JSON object per line") {
    auto r = cli({"--machine", "spectra", "certify", "--poly", "1,-5,6"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
      CHECK(nlohmann::json::parse(line).is_object());
      ++lines;
    }
    CHECK(lines >= 1);
  }

  TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::vector<std::string>> commands{
        {"--machine", "lie", "certify", cat("heisenberg5.lie"), cat("heisenberg5_diag.mat")},
        {"--machine", "theorem", "sphere-check", "--n", "6"},
        {"--machine", "verify-paper", "--catalogue", kCatalogue.string(), "--jobs", "3"},
    };
    for (const auto& c : commands) CHECK(cli(c).out == cli(c).out);
  }
}

TEST_SUITE("verify-paper") {
  TEST_CASE("shipped catalogue matches the golden report") {
    const auto r = cli({"verify-paper", "--catalogue", kCatalogue.string()});
    INFO(r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("h3/diag(2,2,4)") != std::string::npos);
  }

  TEST_CASE("a Jacobi-violating algebra fails and names the file") {
    TempDir tmp;
    tmp.write("broken.lie", "dim 4\n1 2 3 1\n1 3 4 1\n2 3 4 1\n1 4 4 1\n");
    tmp.write("id.mat", "4 4\n2 0 0 0\n0 2 0 0\n0 0 2 0\n0 0 0 2\n");
    tmp.write("catalogue.txt", "broken broken.lie id.mat\n");
    const auto r = cli({"verify-paper", "--catalogue", tmp.path.string()});
    CHECK(r.code != 0);
    CHECK(r.err.find("broken.lie") != std::string::npos);
  }

  TEST_CASE("a malformed catalogue line is an input error") {
    TempDir tmp;
    tmp.write("catalogue.txt", "only-two fields\n");
    const auto r = cli({"verify-paper", "--catalogue", tmp.path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("catalogue.txt") != std::string::npos);
  }

  TEST_CASE("golden mismatch is a negative verdict") {
    TempDir tmp;
    for (const auto& e : fs::directory_iterator(kCatalogue)) fs::copy(e.path(), tmp.path / e.path().filename());
    std::ofstream(tmp.path / "golden.txt", std::ios::app) << "{\"kind\":\"extra\"}\n";
    CHECK(cli({"verify-paper", "--catalogue", tmp.path.string()}).code == 1);
    CHECK(cli({"verify-paper", "--catalogue", tmp.path.string(), "--write-golden"}).code == 0);
    CHECK(cli({"verify-paper", "--catalogue", tmp.path.string()}).code == 0);
  }
}
