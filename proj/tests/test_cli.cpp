#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "weavesym/design.hpp"
#include "weavesym/layer_group.hpp"

#ifndef WEAVESYM_CLI
#error "WEAVESYM_CLI must name the weavesym executable"
#endif
#ifndef WEAVESYM_SOURCE_DIR
#error "WEAVESYM_SOURCE_DIR must name the source tree"
#endif

using namespace weavesym;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string("'") + WEAVESYM_CLI + "' " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("weavesym-cli-") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string at(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
  const fs::path repo_ = WEAVESYM_SOURCE_DIR;
};

}  // namespace

TEST_F(Cli, AnalyzeW1) {
  const CliResult r = run("analyze '" + (repo_ / "data/catalog/designs/w1.weave").string() + "' --json " + at("w1.json") +
                    " --svg-color " + at("c.svg") + " --svg-layer " + at("l.svg"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "(c2mm, c1m1) → c2/m11\n");
  const auto j = nlohmann::json::parse(slurp(at("w1.json")));
  EXPECT_EQ(j["layerSymbol"], "c2/m11");
  EXPECT_NE(slurp(at("c.svg")).find("</svg>"), std::string::npos);
  EXPECT_NE(slurp(at("l.svg")).find("axis2-inplane"), std::string::npos);
}

TEST_F(Cli, AnalyzeAllBlack) {
  write("allblack.weave", "weave-design v1\nblock 3 2\n###\n###\n");
  const CliResult r = run("analyze " + at("allblack.weave"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("(", 0), 0u) << r.out;
  EXPECT_NE(r.out.find(" → "), std::string::npos);
}

TEST_F(Cli, AnalyzeMalformed) {
  write("bad.weave", "weave-design v1\nblock 3 2\n#..\n.#\n");
  const CliResult r = run("analyze " + at("bad.weave"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("row 2 has 2 cells, expected 3"), std::string::npos) << r.out;
}

TEST_F(Cli, SearchP11a) {
  const CliResult r = run("search --pair \"p1,p1\" --max-block 6x6 --out-dir " + at("hits"));
  ASSERT_EQ(r.status, 0) << r.out;
  std::size_t n = 0;
  for (const auto& f : fs::directory_iterator(dir_ / "hits")) {
    ++n;
    EXPECT_EQ(classify(load_design(f.path().string())).layer.symbol, "p11a");
    const CliResult again = run("analyze " + f.path().string());
    EXPECT_NE(again.out.find("→ p11a"), std::string::npos) << again.out;
  }
  EXPECT_GE(n, 1u);
  EXPECT_NE(r.out.find("# 1: "), std::string::npos);
}

TEST_F(Cli, SearchImpossiblePair) {
  const CliResult r = run("search --pair \"p1,p2mm\"");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("S₁ must be a subgroup of S"), std::string::npos) << r.out;
}

TEST_F(Cli, SearchByLayer) {
  const CliResult r = run("search --layer c2/m11 --max-block 6x6 --limit 1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("(c2mm, c1m1) → c2/m11"), std::string::npos) << r.out;
}

TEST_F(Cli, GenerateAndRender) {
  ASSERT_EQ(run("generate twill --over 2 --under 2 --shift 1 --out " + at("t.json")).status, 0);
  const CliResult front = run("render-weave " + at("t.json") + " --side front --out " + at("front.weave"));
  ASSERT_EQ(front.status, 0) << front.out;
  EXPECT_EQ(slurp(at("front.weave")), "weave-design v1\nblock 4 4\n##..\n.##.\n..##\n#..#\n");

  ASSERT_EQ(run("generate twill --over 2 --under 2 --shift 1 --stripe-warp 3 --stripe-weft 3 --out " + at("s.json"))
                .status,
            0);
  const CliResult striped = run("render-weave " + at("s.json") + " --side back");
  EXPECT_EQ(striped.status, 0);
  EXPECT_EQ(parse_design(striped.out).width(), 12);
  EXPECT_EQ(run("render-weave " + at("s.json") + " --side sideways").status != 0, true);
}

TEST_F(Cli, CatalogEmptyManifest) {
  write("empty.json", "[]");
  const CliResult r = run("catalog verify --manifest " + at("empty.json"));
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("0 entries"), std::string::npos) << r.out;
}

TEST_F(Cli, CatalogShipped) {
  const std::string manifest = (repo_ / "data/catalog/manifest.json").string();
  const CliResult v = run("catalog verify --manifest '" + manifest + "'");
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find("0 failed, 0 errors"), std::string::npos) << v.out;
  const CliResult s = run("catalog stats --manifest '" + manifest + "'");
  EXPECT_EQ(s.status, 0);
  EXPECT_NE(s.out.find("entries: 44 (33 basket, 11 non-basket)"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("glide-containing: 32/44"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("distinct layer groups: 15"), std::string::npos) << s.out;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_NE(run("").status, 0);
  EXPECT_NE(run("search").status, 0);
  EXPECT_NE(run("analyze /does/not/exist.weave").status, 0);
}
