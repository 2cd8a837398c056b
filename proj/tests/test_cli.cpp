#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "cli.hpp"
#include "handle3/io.hpp"

using namespace handle3;
namespace fs = std::filesystem;

namespace {

CliResult run(std::vector<std::string> args) { return run_cli(args, false); }

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = run(args);
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  return json::parse(r.out);
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("handle3_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, SpecExamples) {
  auto j = run_json({"lens", "homeo", "7", "2", "7", "3"});
  EXPECT_EQ(j["data"]["homeomorphic"], true);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["schema"], "handle3/1");
  EXPECT_EQ(j["command"], "lens homeo");

  auto r = run({"classify", "count", "--manifold", "5,2", "--genera", "1,1,1", "--case", "4"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "8\n");

  j = run_json({"decomp", "enumerate", "--genera", "0,1,1", "--manifold", "s3", "--max-loci",
                "4"});
  EXPECT_EQ(j["data"]["cases"].size(), 2u);
}

TEST(Cli, LensCommands) {
  EXPECT_EQ(run({"lens", "normalize", "7", "5"}).out, "L(7,2)\n");
  EXPECT_EQ(run({"lens", "normalize", "1", "0"}).out, "S3\n");
  EXPECT_EQ(run({"lens", "homeo", "5", "1", "5", "2"}).out, "false\n");
  auto j = run_json({"lens", "diffeotopy", "8", "3"});
  EXPECT_EQ(j["data"]["group"], "Z2xZ2");
  EXPECT_EQ(run_json({"lens", "core-criterion", "5", "2"})["data"]["core_isotopic"], false);
  EXPECT_EQ(run_json({"lens", "core-criterion", "7", "6"})["data"]["core_isotopic"], true);
}

TEST(Cli, ExitCodes) {
  auto r = run({"lens", "normalize", "4", "2"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("NotCoprime"), std::string::npos);

  r = run({"lens", "diffeotopy", "1", "0", "--json"});
  EXPECT_EQ(r.exit_code, 1);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "error");
  EXPECT_FALSE(j.contains("data"));
  EXPECT_EQ(j["error"]["code"], "SphereNotCovered");

  r = run({"decomp", "enumerate", "--genera", "0,1", "--manifold", "s3"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("--genera"), std::string::npos);

  r = run({"decomp", "enumerate", "--genera", "0,1,1", "--manifold", "seven"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("--manifold"), std::string::npos);

  r = run({"classify", "count", "--manifold", "s3", "--genera", "1,1,1", "--case", "2",
           "--frobnicate"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("--frobnicate"), std::string::npos);

  r = run({"classify", "count", "--manifold", "s3", "--genera", "1,1,1", "--case", "2",
           "--backend", "oracle"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("--backend"), std::string::npos);

  r = run({"classify", "count", "--manifold", "5,2", "--genera", "1,1,1", "--case", "6"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("UnclassifiedCase"), std::string::npos);

  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"moves"}).exit_code, 2);
  r = run({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}

TEST(Cli, FileErrors) {
  TempDir tmp;
  auto r = run({"decomp", "validate", "/nonexistent/handle3.json"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("IOError"), std::string::npos);
  r = run({"decomp", "validate", tmp.write("bad.json", "{not json")});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
  r = run({"decomp", "validate", tmp.write("partial.json", R"({"genera":[0,0,1]})")});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST(Cli, NormalizationWarning) {
  auto a = run_json({"classify", "count", "--manifold", "7,5", "--genera", "1,1,1", "--case",
                     "3"});
  auto b = run_json({"classify", "count", "--manifold", "7,2", "--genera", "1,1,1", "--case",
                     "3"});
  EXPECT_EQ(a["data"], b["data"]);
  ASSERT_EQ(a["warnings"].size(), 1u);
  EXPECT_NE(a["warnings"][0].get<std::string>().find("L(7,2)"), std::string::npos);
  EXPECT_TRUE(b["warnings"].empty());
}

TEST(Cli, DeterministicOutput) {
  std::vector<std::vector<std::string>> cmds{
      {"decomp", "enumerate", "--genera", "1,1,1", "--manifold", "4,1", "--explain", "--json"},
      {"classify", "table", "--max-p", "12", "--json"},
      {"classify", "audit", "--max-p", "12", "--json"},
      {"decomp", "fixture", "--manifold", "7,2", "--genera", "1,1,1", "--case", "5", "--json"}};
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, EnumerateExplain) {
  auto j = run_json(
      {"decomp", "enumerate", "--genera", "1,1,1", "--manifold", "4,1", "--explain"});
  EXPECT_EQ(j["data"]["cases"].size(), 6u);
  ASSERT_TRUE(j["data"].contains("pruned"));
  EXPECT_FALSE(j["data"]["pruned"].empty());
  for (const auto& p : j["data"]["pruned"]) EXPECT_FALSE(p["rules"].empty());
  auto plain = run_json({"decomp", "enumerate", "--genera", "1,1,1", "--manifold", "5,2"});
  EXPECT_EQ(plain["data"]["cases"].size(), 5u);
  EXPECT_FALSE(plain["data"].contains("pruned"));
}

TEST(Cli, RoundTripThroughFiles) {
  TempDir tmp;
  for (const auto& [m, g, n] : std::vector<std::tuple<std::string, std::string, int>>{
           {"s3", "1,1,1", 5}, {"7,2", "1,1,1", 3}, {"5,2", "0,1,1", 2}, {"4,1", "1,1,1", 6}}) {
    auto fix = run({"decomp", "fixture", "--manifold", m, "--genera", g, "--case",
                    std::to_string(n), "--json"});
    ASSERT_EQ(fix.exit_code, 0) << fix.err << fix.out;
    const auto dfile = tmp.write("d.json", fix.out);
    auto v = run_json({"decomp", "validate", dfile});
    EXPECT_EQ(v["data"]["valid"], true) << v.dump();
    EXPECT_EQ(v["data"]["case"]["case"], n);

    auto red = run({"moves", "reduce", dfile, "--json"});
    ASSERT_EQ(red.exit_code, 0) << red.out;
    const auto rfile = tmp.write("r.json", red.out);
    // The reduce envelope is accepted both as a decomposition and as a script.
    auto again = run_json({"decomp", "validate", rfile});
    EXPECT_EQ(again["data"]["valid"], true);
    auto applied = run_json({"moves", "apply", dfile, rfile});
    const auto final_state = decomposition_from_json(applied);
    const auto terminal = decomposition_from_json(json::parse(red.out));
    EXPECT_TRUE(isomorphic(final_state, terminal)) << m << " " << g << " " << n;
    for (const auto& s : applied["data"]["states"]) {
      const auto vfile = tmp.write("s.json", s.dump());
      EXPECT_EQ(run_json({"decomp", "validate", vfile})["data"]["valid"], true);
    }
  }
}

TEST(Cli, Candidates) {
  TempDir tmp;
  auto fix = run({"decomp", "fixture", "--manifold", "s3", "--genera", "0,0,1", "--case", "1",
                  "--json"});
  auto j = run_json({"moves", "candidates", tmp.write("d.json", fix.out)});
  ASSERT_EQ(j["data"]["witnesses"].size(), 1u);
  EXPECT_EQ(j["data"]["witnesses"][0]["handlebody"], 3);
}

TEST(Cli, AuditAndTable) {
  auto j = run_json({"classify", "audit", "--max-p", "20"});
  int expected = 0;
  std::set<std::pair<int, int>> seen;
  for (int p = 3; p <= 20; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) {
        auto m = normalize(p, q);
        if (seen.insert({m.p, m.q}).second && m.q != 1 && m.q != p - 1) ++expected;
      }
  EXPECT_EQ(static_cast<int>(j["data"]["disagreements"].size()), expected);
  for (const auto& r : j["data"]["disagreements"]) {
    EXPECT_EQ(r["case"]["case"], 2);
    EXPECT_EQ(r["theorem"], 4);
    EXPECT_EQ(r["derived"], 3);
  }
  EXPECT_EQ(run({"classify", "audit", "--manifold", "s3"}).out, "no disagreements\n");
  EXPECT_EQ(run({"classify", "audit"}).exit_code, 2);

  auto t = run({"classify", "table", "--max-p", "5"});
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_EQ(t.out.rfind("manifold,genera,case,theorem,derived\n", 0), 0u);
  // S3, L(2,1), L(3,1), L(4,1), L(5,1), L(5,2): 6 manifolds x 7 cases.
  EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 1 + 6 * 7);
  EXPECT_NE(t.out.find("L(5,2),111,4,8,8"), std::string::npos);
}

TEST(Cli, Color) {
  setenv("HANDLE3_COLOR", "always", 1);
  auto r = run({"lens", "normalize", "4", "2"});
  EXPECT_NE(r.err.find("\033["), std::string::npos);
  setenv("HANDLE3_COLOR", "never", 1);
  r = run_cli({"lens", "normalize", "4", "2"}, true);
  EXPECT_EQ(r.err.find("\033["), std::string::npos);
  setenv("HANDLE3_COLOR", "auto", 1);
  r = run_cli({"lens", "normalize", "4", "2"}, true);
  EXPECT_NE(r.err.find("\033["), std::string::npos);
  r = run_cli({"lens", "normalize", "4", "2", "--json"}, true);
  EXPECT_EQ(r.out.find("\033["), std::string::npos);
  unsetenv("HANDLE3_COLOR");
}

TEST(Cli, FigureFixturesValidate) {
  int n = 0;
  for (const auto& e : fs::directory_iterator(HANDLE3_FIXTURES)) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path());
    auto j = json::parse(in);
    if (!j.contains("decomposition")) continue;
    auto v = run_json({"decomp", "validate", e.path().string()});
    EXPECT_EQ(v["data"]["valid"], true) << e.path();
    EXPECT_EQ(v["data"]["case"]["genera"], j["case"]["genera"]) << e.path();
    EXPECT_EQ(v["data"]["case"]["case"], j["case"]["case"]) << e.path();
    ++n;
  }
  EXPECT_GE(n, 10);
}
