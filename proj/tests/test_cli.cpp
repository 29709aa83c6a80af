#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

const std::string kData = QCLUSTER_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qcluster::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

const std::string kGoldenText =
    "(1)·X^(1,-2,0,0) + (q^(-1/2) + q^(1/2))·X^(-1,0,1,1) + (q^(-1/2) + q^(1/2))·X^(-1,-2,0,1) + "
    "(1)·X^(-3,4,3,2) + (q^-1 + 1 + q)·X^(-3,2,2,2) + (q^-1 + 1 + q)·X^(-3,0,1,2) + (1)·X^(-3,-2,0,2)\n";

}  // namespace

TEST_CASE("expand prints the golden polynomial") {
  const Result r = run({"expand", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--seed",
                        data("annulus_seed.json"), "--quantum"});
  CHECK(r.code == 0);
  CHECK(r.out == kGoldenText);
  const Result again = run({"expand", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"),
                            "--seed", data("annulus_seed.json"), "--quantum"});
  CHECK(again.out == r.out);
}

TEST_CASE("default seed is the principal quantization") {
  const Result r = run({"expand", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--quantum"});
  CHECK(r.code == 0);
  CHECK(r.out == kGoldenText);
}

TEST_CASE("commutative expansion") {
  const Result r = run({"expand", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("3·x^(-3,0,1,2)") != std::string::npos);
}

TEST_CASE("arc of the triangulation is a single monomial") {
  const Result r = run({"expand", "--surface", data("pentagon.json"), "--arc", R"({"arc":1})", "--quantum"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1)·X^(0,1,0,0)\n");
}

TEST_CASE("machine mode emits one record per term") {
  const Result r = run({"expand", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--quantum",
                        "--machine"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 7);
  CHECK(r.out.find("-3,0,1,2|-2,1,0,1,2,1\n") != std::string::npos);
}

TEST_CASE("audit table lists every matching") {
  const Result r = run({"expand", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--quantum",
                        "--audit"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) >= 14);
}

TEST_CASE("malformed input exits with 2") {
  CHECK(run({"expand", "--surface", R"({"n_internal":1,"n_boundary":4,"triangles":[[0,2,1]]})", "--arc",
             R"({"arc":0})"})
            .code == 2);
  CHECK(run({"expand", "--surface", R"({"n_internal":1,"n_boundary":4,"triangles":[[0,2]]})", "--arc",
             R"({"arc":0})"})
            .code == 2);
  CHECK(run({"expand", "--surface", "{not json", "--arc", R"({"arc":0})"}).code == 2);
  CHECK(run({"expand", "--surface", data("missing.json"), "--arc", R"({"arc":0})"}).code == 2);
  CHECK(run({"expand", "--surface", data("square.json"), "--arc", R"({"crossings":[0,0],"start_triangle":0})"})
            .code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  const Result r = run({"expand", "--surface", R"({"n_internal":1,"n_boundary":4,"triangles":[[0,2,1]]})", "--arc",
                        R"({"arc":0})"});
  CHECK(r.err.find("arc 0") != std::string::npos);
}

TEST_CASE("verify") {
  const Result annulus =
      run({"verify", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--seed",
           data("annulus_seed.json")});
  CHECK(annulus.code == 0);
  CHECK(annulus.out == "ok\n");

  for (const char* arc : {R"({"crossings":[0],"start_triangle":0,"end_triangle":1})",
                          R"({"crossings":[1],"start_triangle":1,"end_triangle":2})",
                          R"({"crossings":[0,1],"start_triangle":0,"end_triangle":2})"}) {
    CAPTURE(arc);
    CHECK(run({"verify", "--surface", data("pentagon.json"), "--arc", arc}).code == 0);
  }
  CHECK(run({"verify", "--surface", data("pentagon.json"), "--arc", data("pentagon_arc_14.json"), "--flips", "0,1"})
            .code == 0);
  CHECK(run({"verify", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--flips", "0"})
            .code == 2);
}

TEST_CASE("corrupted Lambda exits with 2") {
  const std::string seed = R"({"Btilde":[[0,-2],[2,0],[1,0],[0,1]],"Lambda":[[0,0,-1,0],[0,0,0,-1],[1,0,0,-2],[0,1,2,0]]})";
  const Result r = run({"verify", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json"), "--seed", seed});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"check-seed", "--seed", seed}).code == 2);
}

TEST_CASE("matchings lists one line per matching") {
  const Result one = run({"matchings", "--surface", data("square.json"), "--arc",
                          R"({"crossings":[0],"start_triangle":0,"end_triangle":1})"});
  CHECK(one.code == 0);
  CHECK(lines(one.out) == 2);
  const Result golden = run({"matchings", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json")});
  CHECK(golden.code == 0);
  CHECK(lines(golden.out) == 13);
  CHECK(golden.out.find("height=") != std::string::npos);
}

TEST_CASE("valuation table") {
  const Result r = run({"valuation", "--surface", data("annulus.json"), "--arc", data("annulus_arc_5.json")});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 13);
  CHECK(r.out.find("omega:") != std::string::npos);
}

TEST_CASE("flip prints the new surface and exchange matrix") {
  const Result r = run({"flip", "--surface", data("annulus.json"), "--tau", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("B = [[0,2],[-2,0]]") != std::string::npos);
  CHECK(run({"flip", "--surface", data("annulus.json"), "--tau", "2"}).code == 2);
}

TEST_CASE("check-seed prints d") {
  const Result r = run({"check-seed", "--seed", data("annulus_seed.json"), "--surface", data("annulus.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "d = 1\n");
  CHECK(run({"check-seed", "--seed", data("annulus_seed.json"), "--surface", data("pentagon.json")}).code == 2);
}
