#include <doctest.h>

#include <sstream>

#include "graphmon/cli.hpp"
#include "graphmon/error.hpp"
#include "graphmon/graph_io.hpp"
#include "support.hpp"

using namespace graphmon;
using namespace graphmon::testing;
using Json = nlohmann::json;

namespace {

const std::string kMixed = std::string(GRAPHMON_DATA_DIR) + "/mixed.graph";
const std::string kLadder = std::string(GRAPHMON_DATA_DIR) + "/ladder.graph";
const std::string kSplit = std::string(GRAPHMON_DATA_DIR) + "/split.graph";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_graph") {
  CHECK(load_graph(kMixed) == mixed_graph());
  try {
    parse_graph("");
    FAIL("empty input parsed");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("no vertices") != std::string::npos);
  }
  try {
    parse_graph("vertex a\nedge a z\n");
    FAIL("undeclared vertex parsed");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("z") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nloop a\n"), ParseError);
}

TEST_CASE("eq") {
  const Outcome equal = cli({"eq", kMixed, "b", "a + c"});
  CHECK(equal.code == kExitOk);
  CHECK(equal.out.find("rewrite b") != std::string::npos);
  CHECK(cli({"eq", kMixed, "c", "d"}).code == kExitNegative);
  CHECK(cli({"--depth", "1", "eq", "-", "v", "5*v"}, "vertex v\nedge v v\nedge v v\n").code ==
        kExitUnknown);
  CHECK(cli({"eq", kMixed, "b", "q"}).code == kExitUsage);
  CHECK(cli({"eq", kMixed}).code == kExitUsage);
  CHECK(cli({"eq", "/nonexistent.graph", "a", "a"}).code == kExitUsage);
  CHECK(cli({"--reduct-cap", "2", "nf", kMixed, "a"}).code == kExitUsage);
}

TEST_CASE("eq json") {
  const Outcome r = cli({"--format", "json", "eq", kMixed, "c", "d"});
  REQUIRE(r.code == kExitNegative);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "Distinct");
  CHECK(j["certificate"]["kind"] == "grothendieck-image");
}

TEST_CASE("k0") {
  const Outcome r = cli({"k0", kMixed, "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["free_rank"] == 1);
  CHECK(j["torsion"] == Json::array());
  CHECK(j["images"]["a"] == Json::array({0}));
  CHECK(j["images"]["b"] == j["images"]["c"]);
}

TEST_CASE("series") {
  CHECK(cli({"series", kMixed, "--validate", "d; c,d; a,b,c,d"}).code == kExitOk);
  CHECK(cli({"series", kMixed, "--validate", "a,c,d; a,b,c,d"}).code == kExitNegative);
  const Outcome r = cli({"series", kMixed, "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["chain"].size() == 4);
}

TEST_CASE("other subcommands") {
  CHECK(cli({"nf", kLadder, "p0"}).out == "p2 + 2*x\n");
  CHECK(cli({"nf", kMixed, "a"}).code == kExitUsage);
  CHECK(cli({"saturate", kMixed, "a,c,d"}).out == "{a, b, c, d}\n");
  CHECK(cli({"lattice", kMixed, "--format", "json"}).code == kExitOk);
  CHECK(cli({"quotient", kMixed, "--ideal", "c,d"}).out ==
        format_graph(make_graph({"a", "b"}, {{"a", "a"}, {"a", "a"}, {"b", "a"}})));
  CHECK(cli({"restrict", kMixed, "--ideal", "c"}).code == kExitUsage);
  CHECK(cli({"classify", kMixed}).code == kExitUsage);
  CHECK(cli({"classify", "-"}, "vertex v\nedge v v\n").code == kExitOk);
  CHECK(cli({"image", kMixed, "d"}).code == kExitOk);
  const Json f = Json::parse(cli({"filtration", kMixed, "--level", "1", "--format", "json"}).out);
  CHECK(f["level"] == 1);
  CHECK(f["blocks"].size() == 5);
  CHECK(cli({"check", kMixed, "--size-bound", "3"}).code == kExitOk);
  CHECK(cli({"check", kLadder, "--props", "primes", "--size-bound", "3"}).code == kExitOk);
  CHECK(cli({"refine", kSplit, "v", "v", "w", "3*w"}).code == kExitOk);
  CHECK(cli({"refine", kMixed, "c", "0", "d", "0"}).code == kExitNegative);
  CHECK(cli({"--lattice-cap", "2", "lattice", kMixed}).code == kExitResource);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
}

// ----------------------------------------------------------- properties

TEST_CASE("emitted graphs re-parse identically") {
  for (const Graph& g : corpus()) {
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    const Outcome r = cli({"--format", "json", "quotient", "-", "--ideal", ""}, format_graph(g));
    REQUIRE(r.code == kExitOk);
    CHECK(parse_graph(r.out) == g);
  }
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "lattice", kMixed},
        std::vector<std::string>{"check", kMixed, "--size-bound", "3"},
        std::vector<std::string>{"eq", kMixed, "b + c", "a + 2*c + d"}}) {
    const Outcome first = cli(args);
    for (int i = 0; i < 3; ++i) CHECK(cli(args).out == first.out);
  }
}
