#include <doctest.h>

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trop/cli.hpp"
#include "trop/errors.hpp"
#include "trop/parser.hpp"

using namespace trop;

namespace {

const std::string kData = std::string(TROP_SOURCE_DIR) + "/data/";

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

// runs fn with stdout redirected into a string
int with_stdout(const std::function<int()>& fn, std::string* out) {
  const std::string path = tmp_path("trop_test_stdout.txt");
  std::fflush(stdout);
  const int saved = dup(1);
  REQUIRE(saved >= 0);
  const int sink = ::open(path.c_str(), O_CREAT | O_WRONLY | O_TRUNC, 0600);
  REQUIRE(sink >= 0);
  dup2(sink, 1);
  ::close(sink);
  const int code = fn();
  std::fflush(stdout);
  dup2(saved, 1);
  ::close(saved);
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  *out = os.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string last_stdout;  // filled by every cli() call

int cli(const std::vector<std::string>& args) {
  return with_stdout(
      [&] {
        std::vector<const char*> argv{"trop"};
        for (const auto& a : args) argv.push_back(a.c_str());
        return run_cli(static_cast<int>(argv.size()), argv.data());
      },
      &last_stdout);
}

}  // namespace

TEST_CASE("text format round trips") {
  const PolySystem sys = parse_system(
      "# comment line\n"
      "vars x y\n"
      "\n"
      "f: 1 + 2*x + 1*y + 1*x*y ~ 0   # trailing comment\n"
      "g: 2 + 0*x >= 1*y\n"
      "0*y < 3\n");
  CHECK(sys.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(sys.rels.size() == 3);
  CHECK(sys.rels[0].kind == RelKind::Nabla);
  CHECK(sys.rels[1].kind == RelKind::Geq);
  // reversed strict comparison swaps the sides
  CHECK(sys.rels[2].kind == RelKind::Gt);
  CHECK(sys.rels[2].plus.coeff({0, 0}) == TropScalar(Rat(3)));
  CHECK(sys.rels[2].minus.coeff({0, 1}) == TropScalar(Rat(0)));

  // repeated variables multiply out, exponents may be negative
  const TPoly f = parse_poly("(-3)*x*x + 1/2*x^-2 + 0.25", {"x"});
  CHECK(f.coeff({2}) == TropScalar(Rat(-3)));
  CHECK(f.coeff({-2}) == TropScalar(Rat(1, 2)));
  CHECK(f.coeff({0}) == TropScalar(Rat(1, 4)));
}

TEST_CASE("malformed inputs are rejected with line numbers") {
  CHECK_THROWS_AS(parse_system("f: 0*x ~ 0\n"), MalformedInputError);  // no vars line
  CHECK_THROWS_AS(parse_system("vars x\nf: 0*y ~ 0\n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x x\n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x\nf: 0*x + 1*x ~ 0\n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x\nf: -3*x ~ 0\n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x\nf: 0*x ~ 1\n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x\nf: 0*x >= \n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x\nf: 0*x ~ 0 junk\n"), MalformedInputError);
  CHECK_THROWS_AS(parse_system("vars x\nf: 0*x^1.5 ~ 0\n"), MalformedInputError);

  try {
    parse_system("vars x\n\nf: 0*y ~ 0\n");
    CHECK(false);
  } catch (const MalformedInputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("decision subcommands exit by verdict") {
  CHECK(cli({"check", kData + "sys1.trop"}) == 10);
  CHECK(cli({"check", kData + "sys2.trop"}) == 0);
  CHECK(cli({"check", "--method", "oracle", kData + "sys1.trop"}) == 10);
  CHECK(cli({"check", "--method", "oracle", kData + "sys2.trop"}) == 0);
  CHECK(cli({"check", kData + "implication.trop"}) == 10);
  CHECK(cli({"check", kData + "empty_cols_tetra.trop"}) == 20);
  CHECK(cli({"solve", kData + "sys1.trop"}) == 10);
  CHECK(cli({"solve", kData + "sys2.trop"}) == 0);
  CHECK(cli({"solve", "--nontoric", kData + "empty_cols_prism.trop"}) == 0);
  CHECK(cli({"solve", "--nontoric", kData + "empty_cols_tetra.trop"}) == 10);
}

TEST_CASE("usage and input failures exit with 2") {
  CHECK(cli({}) == 2);
  CHECK(cli({"frobnicate", kData + "sys1.trop"}) == 2);
  CHECK(cli({"check", tmp_path("no_such_file.trop")}) == 2);
  CHECK(cli({"check", "--method", "sorcery", kData + "sys1.trop"}) == 2);

  const std::string bad = tmp_path("trop_test_bad.trop");
  std::ofstream(bad) << "vars x\nf: -3*x ~ 0\n";
  CHECK(cli({"check", bad}) == 2);
}

TEST_CASE("json check output carries the witness data") {
  CHECK(cli({"check", "--json", kData + "sys2.trop"}) == 0);
  const auto j = nlohmann::json::parse(last_stdout);
  CHECK(j["verdict"] == "feasible");
  CHECK(j["set"] == "ce");
  CHECK(j["columns"] == 6);
  CHECK(j["eps"] == "1/2");
  CHECK(j["witness"]["1"] == "6");
  CHECK(j["witness"]["x1^2"] == "0");
  CHECK(j["point_rational"]["x1"] == "-3");
  CHECK(j["point_rational"]["x2"] == "-1");

  CHECK(cli({"check", "--json", kData + "sys1.trop"}) == 10);
  CHECK(nlohmann::json::parse(last_stdout)["verdict"] == "infeasible");

  CHECK(cli({"check", "--json", kData + "empty_cols_tetra.trop"}) == 20);
  CHECK(nlohmann::json::parse(last_stdout)["verdict"] == "inconclusive");
}

TEST_CASE("certificates survive the file round trip") {
  const std::string cert = tmp_path("trop_test_cert.json");
  CHECK(cli({"certify", kData + "sys1.trop", "--out", cert}) == 10);
  CHECK(cli({"verify-cert", kData + "sys1.trop", cert}) == 0);

  // the same certificate says nothing about the feasible twin
  CHECK(cli({"verify-cert", kData + "sys2.trop", cert}) == 1);

  auto j = nlohmann::json::parse(slurp(cert));
  j["scaling"][0] = "99";
  const std::string warped = tmp_path("trop_test_cert_warped.json");
  std::ofstream(warped) << j.dump();
  CHECK(cli({"verify-cert", kData + "sys1.trop", warped}) == 1);

  const std::string garbage = tmp_path("trop_test_cert_garbage.json");
  std::ofstream(garbage) << "{\"n\": 2}";
  CHECK(cli({"verify-cert", kData + "sys1.trop", garbage}) == 1);

  // a feasible input yields a point, not a certificate
  CHECK(cli({"certify", kData + "sys2.trop"}) == 0);
  CHECK(cli({"certify", kData + "empty_cols_tetra.trop"}) == 20);
}

TEST_CASE("macaulay dumps") {
  const std::string csv = tmp_path("trop_test_macaulay.csv");
  CHECK(cli({"macaulay", kData + "sys1.trop", "--out", csv}) == 0);
  const std::string text = slurp(csv);
  CHECK(text.substr(0, text.find('\n')) == ",1,x1,x2,x1^2,x1*x2,x2^2");
  CHECK(text.find("x2*f3") != std::string::npos);

  CHECK(cli({"macaulay", "--json", kData + "sys1.trop"}) == 0);
  const auto j = nlohmann::json::parse(last_stdout);
  CHECK(j["rows"].size() == 7);
  CHECK(j["col_monomials"][3] == "x1^2");

  const std::string game = tmp_path("trop_test_game.json");
  CHECK(cli({"check", kData + "sys1.trop", "--dump-game", game}) == 10);
  const auto g = nlohmann::json::parse(slurp(game));
  CHECK(g["nodes"].size() == 6 + 19);  // columns plus one row per root entry
  CHECK(g["nodes"][0]["owner"] == "min");
  CHECK_FALSE(g["arcs"].empty());
}

TEST_CASE("truncated and veronese column sets") {
  CHECK(cli({"check", "--set", "degree:3", kData + "sys2.trop"}) == 0);
  // too low a degree admits no rows, so the decision is vacuously feasible
  CHECK(cli({"check", "--set", "degree:0", kData + "sys2.trop"}) == 0);
  CHECK(cli({"check", "--set", "degree:x", kData + "sys2.trop"}) == 2);
  CHECK(cli({"check", "--set", "qbar", kData + "sys2.trop"}) == 0);
  CHECK(cli({"check", "--set", "qbar", kData + "empty_cols_tetra.trop"}) == 10);
}
