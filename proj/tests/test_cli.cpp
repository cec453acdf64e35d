#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kData = MCGH_DATA_DIR;
const fs::path kGolden = MCGH_GOLDEN_DIR;

std::string data(const std::string& name) { return (kData / name).string(); }

struct Result {
  int code;
  std::string out;
  json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  int code = mcgh::cli::run(args, out);
  return {code, out.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* name;
  int code;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
  return {
      {"h1-g1b3", 0, {"h1", "--surface", data("g1b3.json")}},
      {"h1-closed", 0, {"h1", "--surface", R"({"genus": 1})"}},
      {"transition-pants", 0,
       {"transition", "--surface", data("g1b3.json"), "--op",
        R"({"kind": "pants", "target": "x", "new_boundaries": ["u", "v"]})"}},
      {"transition-flute", 0, {"transition", "--exh", data("flute-annuli.json"), "--stage", "3"}},
      {"star-degenerate", 0, {"star-check", "--star", data("star-degenerate.json")}},
      {"star-replay-g1b3", 0, {"star-check", "--surface", data("g1b3.json")}},
      {"boundary-sum-g1b3", 0, {"boundary-sum", "--surface", data("g1b3.json")}},
      {"phi-eval-twists", 0,
       {"phi-eval", "--subset-A", data("subset-empty.json"), "--depth", "3", "--twists", data("twists-ab1.json")}},
      {"phi-eval-class", 0,
       {"phi-eval", "--subset-A", data("subset-empty.json"), "--depth", "3", "--class", data("class-ab1.json")}},
      {"consistency-phi2", 0, {"consistency-check", "--subset-A", data("subset-2.json"), "--depth", "10"}},
      {"support-phi", 0, {"support-check", "--subset-A", data("subset-empty.json"), "--depth", "10"}},
      {"product-a-ladder", 2,
       {"product-eval", "--subset-A", data("subset-empty.json"), "--depth", "10", "--curves",
        data("curves-a-ladder.json")}},
      {"product-neighbours", 0,
       {"product-eval", "--subset-A", data("subset-empty.json"), "--depth", "10", "--curves",
        data("curves-neighbours.json")}},
      {"factor-phi", 2, {"factor-check", "--subset-A", data("subset-empty.json"), "--depth", "6", "--kept", "a,b,1,2"}},
      {"trace-annuli", 2,
       {"obstruct-trace", "--exh", data("flute-annuli.json"), "--seed", data("tau1.json"), "--depth", "30"}},
      {"trace-capped", 2, {"obstruct-trace", "--exh", data("g1-capped.json"), "--seed", data("tau1.json")}},
      {"trace-pants", 2, {"obstruct-trace", "--exh", data("g1-pants.json"), "--seed", data("tau1.json")}},
      {"trace-zero", 0, {"obstruct-trace", "--exh", data("g1-pants.json"), "--seed", R"({"tau": "0"})"}},
      {"braid-oracle-twist", 0, {"braid-oracle", "--word", "n=3 s1 s2 s1 s2 s1 s2"}},
      {"braid-abelianize", 0, {"braid-abelianize", "--word", "n=3 A1.2 A1.2 a1.3"}},
      {"flute-gen-2", 0, {"flute-gen", "--depth", "2", "--stages"}},
      {"flute-gen-phi", 0, {"flute-gen", "--depth", "2", "--subset-A", data("subset-2.json")}},
  };
}

}  // namespace

TEST_CASE("golden reports") {
  const bool update = std::getenv("MCGH_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    auto r = run(c.args);
    CHECK(r.code == c.code);
    auto path = kGolden / (std::string(c.name) + ".json");
    if (update) {
      std::ofstream(path, std::ios::binary) << r.out;
      continue;
    }
    REQUIRE(fs::exists(path));
    CHECK(r.out == slurp(path));
  }
}

TEST_CASE("reports are deterministic and re-parse") {
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    auto first = run(c.args), second = run(c.args);
    CHECK(first.out == second.out);
    CHECK_NOTHROW(first.report());
  }
}

TEST_CASE("h1 example") {
  auto r = run({"h1", "--surface", data("g1b3.json")});
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j.at("basis") == json::array({"tau", "bd:x", "bd:y"}));
  CHECK(j.at("relations")[0].at("text") == "12*tau = bd:x + bd:y + bd:z");
}

TEST_CASE("obstruct-trace example") {
  auto r = run({"obstruct-trace", "--exh", data("flute-annuli.json"), "--seed", data("tau1.json"), "--depth", "30"});
  CHECK(r.code == 2);
  auto j = r.report();
  CHECK(j.at("outcome") == "escaping");
  REQUIRE(j.at("witness").size() == 30);
  for (const auto& w : j.at("witness")) CHECK(w.at("value") == "12");
}

TEST_CASE("braid-oracle example") {
  auto r = run({"braid-oracle", "--word", "n=3 s1 s2 s1 s2 s1 s2"});
  REQUIRE(r.code == 0);
  CHECK(r.report().at("linking") == json{{"e1.2", "1"}, {"e1.3", "1"}, {"e2.3", "1"}});
}

TEST_CASE("input errors exit 1 with an error object") {
  struct Bad {
    std::vector<std::string> args;
    const char* code;
  };
  std::vector<Bad> cases{
      {{}, "Usage"},
      {{"nonsense"}, "Usage"},
      {{"h1"}, "Usage"},
      {{"h1", "--surface", data("missing.json")}, "ParseError"},
      {{"h1", "--surface", R"({"genus": 3})"}, "InvalidSurface"},
      {{"braid-oracle", "--word", "n=3 s1"}, "NotPure"},
      {{"braid-oracle", "--word", "s1"}, "ParseError"},
      {{"braid-oracle", "--word", "n=2 s2"}, "InvalidWord"},
      {{"phi-eval", "--subset-A", R"({"mode": "listed_out_of_A", "members": [1]})", "--depth", "2", "--twists",
        data("twists-ab1.json")},
       "InfiniteComplementViolation"},
      {{"obstruct-trace", "--exh", data("g1-capped.json"), "--seed", R"({"tau": "1", "bd:x0": "3"})"},
       "RelationViolation"},
      {{"product-eval", "--subset-A", data("subset-empty.json"), "--depth", "10", "--curves",
        data("curves-a-ladder.json"), "--strict"},
       "NotEscaping"},
      {{"factor-check", "--exh", data("flute-annuli.json"), "--hom", R"({"exhaustion": {}, "stages": []})"},
       "ParseError"},
  };
  for (const auto& b : cases) {
    CAPTURE(std::string(b.code));
    auto r = run(b.args);
    CHECK(r.code == 1);
    auto j = r.report();
    CHECK(j.at("error") == std::string(b.code));
    CHECK(j.at("detail").is_string());
  }
}

TEST_CASE("flute-gen output feeds the other commands") {
  auto gen = run({"flute-gen", "--depth", "8", "--subset-A", data("subset-empty.json")});
  REQUIRE(gen.code == 0);
  auto spec = gen.out;
  CHECK(run({"consistency-check", "--hom", spec}).code == 0);
  CHECK(run({"support-check", "--hom", spec}).code == 0);
  auto f = run({"factor-check", "--hom", spec, "--kept", "a,b,1,2,3"});
  CHECK(f.code == 2);
  CHECK(f.report().at("witness").at("symbol") == "pair:4:a");
}

TEST_CASE("--out writes the report to a file") {
  auto path = fs::temp_directory_path() / "mcgh-cli-out.json";
  fs::remove(path);
  auto r = run({"braid-oracle", "--word", "n=2 s1 s1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(json::parse(slurp(path)).at("linking").at("e1.2") == "1");
  fs::remove(path);
}
