#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "wmha/cli.hpp"
#include "wmha/examples.hpp"
#include "wmha/groupoid.hpp"
#include "wmha/io.hpp"

using namespace wmha;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wmha-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string generate(const TempDir& dir, const std::string& name, const std::vector<std::string>& gen_args) {
  std::vector<std::string> args{"gen-example"};
  args.insert(args.end(), gen_args.begin(), gen_args.end());
  Run r = run(args);
  REQUIRE(r.code == kExitPass);
  std::string path = dir.file(name);
  write(path, r.out);
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("definitions round-trip through JSON") {
    Wmha w = separability_wmha(weighted_separability_M2());
    Definition d{"wmha", "m2", "weighted", "success", w};
    std::string text = dump_definition(d);
    Definition back = parse_definition(text);
    CHECK(back.kind == "wmha");
    CHECK(back.expected == std::optional<std::string>("success"));
    const Wmha& v = std::get<Wmha>(back.value);
    CHECK(v.algebra == w.algebra);
    CHECK(v.delta == w.delta);
    CHECK(v.counit == w.counit);
    CHECK(v.antipode == w.antipode);
    CHECK(v.idempotent == w.idempotent);
    CHECK(dump_definition(back) == text);

    Algebroid a = obstruction_scenario('4').algebroid;
    Definition da{"algebroid", "iv", "", std::nullopt, a};
    Definition ab = parse_definition(dump_definition(da));
    const Algebroid& b = std::get<Algebroid>(ab.value);
    CHECK(b.delta_B == a.delta_B);
    CHECK(b.eps_C == a.eps_C);
    CHECK(b.graphs.S_C == a.graphs.S_C);
  }

  TEST_CASE("rationals in JSON") {
    CHECK(rational_to_json(Rational(-1, 3)) == Json("-1/3"));
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), SchemaError);
  }

  TEST_CASE("malformed and mismatched input") {
    CHECK_THROWS_AS(parse_definition("{not json"), ParseError);
    CHECK_THROWS_AS(parse_definition(R"({"schema": 1, "kind": "wmha"})"), SchemaError);
    CHECK_THROWS_AS(parse_definition(R"({"schema": 99, "kind": "wmha", "data": {}})"), SchemaError);
    CHECK_THROWS_AS(parse_definition(R"({"schema": 1, "kind": "teapot", "data": {}})"), SchemaError);
  }

  TEST_CASE("exit codes") {
    TempDir dir;
    std::string p2 = generate(dir, "p2.json", {"pair-groupoid", "n=2"});
    CHECK(run({"check-wmha", p2}).code == kExitPass);
    CHECK(run({"roundtrip", p2}).code == kExitPass);

    std::string sc1 = generate(dir, "sc1.json", {"obstruction-scenario", "scenario=i"});
    Run obstructed = run({"algebroid-to-wmha", sc1});
    CHECK(obstructed.code == kExitCheckFailed);
    CHECK(obstructed.out.find("NotSeparableFrobenius") != std::string::npos);

    std::string bad = dir.file("bad.json");
    write(bad, "{ \"schema\": 1, ");
    CHECK(run({"check-wmha", bad}).code == kExitInputError);
    CHECK(run({"check-wmha", dir.file("missing.json")}).code == kExitInputError);
    CHECK(run({"gen-example", "no-such-example"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"--format", "xml", "check-wmha", p2}).code == kExitInputError);

    // A single corrupted counit entry makes the suite fail.
    Wmha w = groupoid_wmha(pair_groupoid(2));
    w.counit[1] += 1;
    std::string mutated = dir.file("mutated.json");
    write(mutated, dump_definition(Definition{"wmha", "mutated", "", std::nullopt, w}));
    Run m = run({"check-wmha", mutated});
    CHECK(m.code == kExitCheckFailed);
    CHECK(m.out.find("fail  counit.") != std::string::npos);
  }

  TEST_CASE("json reports carry the verdict and the witness") {
    TempDir dir;
    std::string tw = generate(dir, "tw.json", {"mixed-algebroid", "base=convolution", "n=2"});
    Run r = run({"--format", "json", "algebroid-to-wmha", tw});
    CHECK(r.code == kExitCheckFailed);
    Json j = Json::parse(r.out);
    CHECK(j["obstruction"]["stage"] == "CounitsDiffer");
    CHECK(j["expected"] == "CounitsDiffer");
    CHECK(j["actual"] == "CounitsDiffer");
    CHECK(j["exit_code"] == kExitCheckFailed);
    bool revalidated = false;
    for (const auto& c : j["report"]["checks"])
      if (c["check"] == "obstruction.witness_revalidates") revalidated = c["status"] == "pass";
    CHECK(revalidated);
  }

  TEST_CASE("conversions chain through files") {
    TempDir dir;
    std::string m2 = generate(dir, "m2.json", {"separability-bundle", "phi=weighted"});
    std::string alg = dir.file("alg.json"), back = dir.file("back.json");
    CHECK(run({"--out", alg, "wmha-to-algebroid", m2}).code == kExitPass);
    CHECK(run({"check-algebroid", alg}).code == kExitPass);
    CHECK(run({"--out", back, "algebroid-to-wmha", alg}).code == kExitPass);
    Wmha w0 = std::get<Wmha>(load_definition(m2).value);
    Wmha w1 = std::get<Wmha>(load_definition(back).value);
    CHECK(w1.delta == w0.delta);
    CHECK(w1.counit == w0.counit);
    CHECK(w1.antipode == w0.antipode);
  }

  TEST_CASE("lazy groupoid through the CLI") {
    TempDir dir;
    std::string lazy = generate(dir, "lazy.json", {"lazy-pair-groupoid"});
    Run r = run({"--probes", "3", "check-wmha", lazy});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("verified-on-probes") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    TempDir dir;
    for (const std::vector<std::string>& gen :
         {std::vector<std::string>{"pair-groupoid", "n=3"}, std::vector<std::string>{"obstruction-scenario", "scenario=iii"},
          std::vector<std::string>{"twisted-coproduct", "base=M2"}}) {
      std::string f = generate(dir, "det.json", gen);
      CHECK(run({"gen-example"}).code == kExitInputError);
      for (const std::string& fmt : {"text", "json"}) {
        std::vector<std::string> cmd{"--format", fmt, gen[0] == "obstruction-scenario" ? "algebroid-to-wmha" : "check-wmha", f};
        Run a = run(cmd), b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
      }
      Run g1 = run([&] {
        std::vector<std::string> a{"gen-example"};
        a.insert(a.end(), gen.begin(), gen.end());
        return a;
      }());
      std::ifstream in(f);
      std::stringstream ss;
      ss << in.rdbuf();
      CHECK(g1.out == ss.str());
    }
  }
}
