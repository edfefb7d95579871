#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coset/cli.hpp"

using namespace coset;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum renders an aligned table") {
  auto r = cli({"spectrum", "B1/torus;mu=0", "--lines", "3"});
  CHECK(r.rc == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "space: B1/torus;mu=0\n"
        "energy  dim  mult  lambda\n"
        "     0    1     1  (0)\n"
        "     4    3     1  (1)\n"
        "    12    5     1  (2)\n");
}

TEST_CASE("lowest prints both notions of lowest level, labeled") {
  auto r = cli({"lowest", "B1/torus;mu=5/2"});
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "space: B1/torus;mu=5/2\n"
        "kostant (closed form): lambda = (2), energy = -1/2, multiplicity = 5\n"
        "frobenius (Peter-Weyl): lambda = (5/2), energy = 5, dim = 6, "
        "branching multiplicity = 1\n");
}

TEST_CASE("lowest reports an unattained closed form") {
  auto r = cli({"lowest", "B1/torus;mu=0"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("kostant (closed form): not attained\n") != std::string::npos);
  CHECK(r.out.find("frobenius (Peter-Weyl): lambda = (0), energy = 0, "
                   "dim = 1, branching multiplicity = 1\n") !=
        std::string::npos);
}

TEST_CASE("weyl-info summarizes the pair") {
  auto r = cli({"weyl-info", "B2/D2"});
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "space: B2/D2\n"
        "|W_g| = 8\n"
        "|W_eta| = 4\n"
        "|C| = 2\n"
        "rho_g = (3/2, 1/2)\n"
        "rho_eta = (1, 0)\n"
        "m positive roots (2): (0, 1) (1, 0)\n");
}

TEST_CASE("gkrs-check sweeps and reports one line per type") {
  auto r = cli({"gkrs-check", "B2/D2", "--dim-bound", "5"});
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "space: B2/D2\n"
        "dim bound: 5\n"
        "multiplet size |C|: 2\n"
        "lambda = (0, 0), dim = 1: verified\n"
        "lambda = (1/2, 1/2), dim = 4: verified\n"
        "lambda = (1, 0), dim = 5: verified\n"
        "checked 3 types: all verified\n");
}

TEST_CASE("json spectrum is valid json with exact rationals") {
  auto r = cli({"spectrum", "B1/torus;mu=1/2", "--lines", "2", "--json"});
  CHECK(r.rc == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["query"]["space"] == "B1/torus;mu=1/2");
  CHECK(doc["query"]["command"] == "spectrum");
  REQUIRE(doc["lines"].size() == 2);
  CHECK(doc["lines"][0]["lambda"][0]["num"] == 1);
  CHECK(doc["lines"][0]["lambda"][0]["den"] == 2);
  CHECK(doc["lines"][0]["energy"]["num"] == 1);
  CHECK(doc["lines"][0]["energy"]["den"] == 1);
  CHECK(doc["lines"][0]["dim"] == 2);
  CHECK(doc["lines"][0]["multiplicity"] == 1);
}

TEST_CASE("json lowest separates the two notions") {
  auto r = cli({"lowest", "B1/torus;mu=5/2", "--json"});
  CHECK(r.rc == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["kostant"]["label"] == "kostant (closed form)");
  CHECK(doc["kostant"]["attained"] == true);
  CHECK(doc["kostant"]["energy"]["num"] == -1);
  CHECK(doc["kostant"]["energy"]["den"] == 2);
  CHECK(doc["kostant"]["multiplicity"] == 5);
  CHECK(doc["frobenius"]["label"] == "frobenius (Peter-Weyl)");
  CHECK(doc["frobenius"]["dim"] == 6);
  CHECK(doc["frobenius"]["energy"]["num"] == 5);
}

TEST_CASE("json lowest marks the unattained closed form") {
  auto r = cli({"lowest", "B2/roots:0,1;mu=1,0", "--json"});
  CHECK(r.rc == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["kostant"]["attained"] == false);
  CHECK(!doc["kostant"].contains("lambda"));
  CHECK(doc["frobenius"].contains("lambda"));
}

TEST_CASE("scale clause and --scale override") {
  auto base = cli({"spectrum", "B1/torus;mu=0", "--lines", "2"});
  auto clause = cli({"spectrum", "B1/torus;mu=0;scale=3", "--lines", "2"});
  CHECK(clause.out.find("12  ") != std::string::npos);  // 4 * 3
  auto forced =
      cli({"spectrum", "B1/torus;mu=0;scale=3", "--lines", "2", "--scale", "1"});
  // the command line wins; modulo the spec echo the output matches scale 1
  CHECK(forced.out.substr(forced.out.find('\n')) ==
        base.out.substr(base.out.find('\n')));
  auto half = cli({"lowest", "B1/torus;mu=5/2", "--scale", "1/2"});
  CHECK(half.out.find("energy = -1/4") != std::string::npos);
  CHECK(half.out.find("energy = 5/2") != std::string::npos);
}

TEST_CASE("provenance flag appends the normalization note") {
  auto off = cli({"weyl-info", "B1/torus"});
  auto on = cli({"weyl-info", "B1/torus", "--provenance"});
  CHECK(off.out.find("normalization") == std::string::npos);
  CHECK(on.out.find("# normalization: the invariant form gives every long "
                    "root squared length 2") != std::string::npos);
  CHECK(on.out.find("# coset-spectra 1.0.0\n") != std::string::npos);
  auto js = cli({"lowest", "B1/torus;mu=1/2", "--json", "--provenance"});
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["provenance"]["artifact"] == "coset-spectra 1.0.0");
}

TEST_CASE("repeated invocations are byte-identical") {
  for (auto args : {std::vector<std::string>{"spectrum", "B2/D2;mu=1/2,1/2"},
                    {"lowest", "G2/roots:1,0|3,2;mu=0,1", "--json"},
                    {"gkrs-check", "B2/roots:1,1", "--dim-bound", "10"},
                    {"weyl-info", "B3/D3"}}) {
    auto first = cli(args);
    auto second = cli(args);
    CHECK(first.rc == second.rc);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("usage problems exit with code 1") {
  CHECK(cli({}).rc == 1);
  CHECK(cli({"bogus"}).rc == 1);
  CHECK(cli({"spectrum"}).rc == 1);                    // missing spec
  CHECK(cli({"spectrum", "B2"}).rc == 1);              // malformed spec
  CHECK(cli({"spectrum", "B2/D2"}).rc == 1);           // missing mu
  CHECK(cli({"lowest", "B2/D2"}).rc == 1);
  CHECK(cli({"spectrum", "B1/torus;mu=0", "--lines", "0"}).rc == 1);
  CHECK(cli({"spectrum", "B1/torus;mu=0", "--scale", "x"}).rc == 1);
  auto r = cli({"spectrum", "B2"});
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("computational errors exit with code 2") {
  CHECK(cli({"weyl-info", "E8/full"}).rc == 2);        // unsupported series
  CHECK(cli({"weyl-info", "G3/full"}).rc == 2);        // invalid rank
  CHECK(cli({"spectrum", "B3/D2;mu=0,0,0"}).rc == 2);  // not a subsystem
  CHECK(cli({"spectrum", "B2/D2;mu=-1,0"}).rc == 2);   // label not dominant
  CHECK(cli({"spectrum", "B2/D2;mu=1/3,0"}).rc == 2);  // label not integral
  CHECK(cli({"spectrum", "B2/D2;mu=0,0;scale=0"}).rc == 2);
  CHECK(cli({"weyl-info", "B3/D3", "--weyl-limit", "10"}).rc == 2);
  auto r = cli({"weyl-info", "E8/full"});
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help and version exit cleanly") {
  auto help = cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("spectrum") != std::string::npos);
  auto version = cli({"--version"});
  CHECK(version.rc == 0);
  CHECK(version.out.find("coset-spectra 1.0.0") != std::string::npos);
}
