#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"
#include "weavesym/catalog.hpp"
#include "weavesym/report.hpp"
#include "weavesym/search.hpp"

using namespace weavesym;
namespace fs = std::filesystem;

namespace {

const Design kW1 = Design::from_rows({".##.#.", ".#..##"});

SearchOptions within(int w, int h, std::size_t limit = 5) {
  SearchOptions o;
  o.max_width = w;
  o.max_height = h;
  o.limit = limit;
  return o;
}

// Blocks of the given size whose only symmetry is the identity, by brute force.
std::size_t count_asymmetric(int w, int h) {
  std::size_t n = 0;
  for (std::uint64_t bits = 0; bits < (1ULL << (w * h)); ++bits)
    if (testing_support::brute_force_group(testing_support::design_from_bits(w, h, bits)).size() == 1) ++n;
  return n;
}

class TempDir {
 public:
  TempDir()
      : path_(fs::temp_directory_path() /
              (std::string("weavesym-") + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string entry_json(const std::string& id, const std::string& file, const std::string& pair,
                       const std::string& layer, bool transcribed = true) {
  return R"({"id": ")" + id + R"(", "name": ")" + id + R"(", "itemType": "basket", "designFile": ")" + file +
         R"(", "expectedPair": ")" + pair + R"(", "expectedLayer": ")" + layer + R"(", "source": "test", )" +
         R"("transcribed": )" + (transcribed ? "true" : "false") + "}";
}

}  // namespace

TEST(SearchTargets, Parsing) {
  const SearchTarget t = parse_pair_target("(c2mm, c1m1)");
  EXPECT_EQ(t.s, PlaneType::cmm);
  EXPECT_EQ(t.s1, PlaneType::cm);
  EXPECT_FALSE(parse_pair_target("p1,-").s1);
  EXPECT_THROW(parse_pair_target("p7,p1"), std::invalid_argument);
  EXPECT_THROW(layer_target("p6/mmm"), std::invalid_argument);
  EXPECT_EQ(layer_target("p2₁/b11").keys.size(), 1u);
}

TEST(SearchTargets, ImpossiblePair) {
  try {
    parse_pair_target("p1, p2mm");
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("S₁ must be a subgroup of S"), std::string::npos) << e.what();
  }
}

TEST(Search, NoAsymmetricBlockWithinThreeByThree) {
  // Every 3x3 (and smaller) block has some colour symmetry, so the
  // asymmetric pair first appears at 3x4 / 4x3.
  EXPECT_EQ(count_asymmetric(3, 3), 0u);
  EXPECT_TRUE(search_designs(parse_pair_target("p1,-"), within(3, 3)).empty());
}

TEST(Search, SmallestAsymmetricDesign) {
  const auto hits = search_designs(parse_pair_target("p1,-"), within(4, 4, 3));
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits.front().design.area(), 12);
  EXPECT_GT(count_asymmetric(4, 3), 0u);
  for (const auto& h : hits) {
    EXPECT_EQ(testing_support::brute_force_group(h.design).size(), 1u);
    EXPECT_EQ(classify(h.design).layer.symbol, "p1");
  }
}

TEST(Search, CentredPairWithinEightByEight) {
  const auto hits = search_designs(parse_pair_target("c2mm,c1m1"), within(8, 8));
  ASSERT_FALSE(hits.empty());
  for (const auto& h : hits) {
    EXPECT_LE(h.design.width(), 8);
    EXPECT_LE(h.design.height(), 8);
    const Classification c = classify(parse_design(serialize_design(h.design)));
    EXPECT_EQ(c.layer.symbol, "c2/m11");
    EXPECT_EQ(c.layer.pair_descriptor, "(c2mm, c1m1)");
  }
}

TEST(Search, HitsAreOrderedAndDistinct) {
  const auto hits = search_designs(parse_pair_target("p2,p1"), within(6, 6, 6));
  ASSERT_GE(hits.size(), 2u);
  std::set<std::vector<std::string>> canon;
  for (std::size_t k = 0; k < hits.size(); ++k) {
    EXPECT_TRUE(canon.insert(orbit_canonical(hits[k].design).rows()).second);
    if (k > 0) {
      EXPECT_LE(hits[k - 1].design.area(), hits[k].design.area());
    }
  }
}

TEST(Search, LayerTarget) {
  const auto hits = search_designs(layer_target("p11a"), within(6, 6, 2));
  ASSERT_FALSE(hits.empty());
  for (const auto& h : hits) EXPECT_EQ(h.classification.layer.symbol, "p11a");
}

TEST(Search, Deterministic) {
  const auto a = search_designs(parse_pair_target("p2mg,p1g1"), within(8, 8, 3));
  const auto b = search_designs(parse_pair_target("p2mg,p1g1"), within(8, 8, 3));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].design, b[k].design);
}

TEST(OrbitCanonical, InvariantUnderIsometryAndComplement) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 30; ++k) {
    const Design d = testing_support::random_design(rng, 5, 5);
    const Design c = orbit_canonical(d);
    EXPECT_EQ(orbit_canonical(complement(d)), c);
    EXPECT_EQ(orbit_canonical(tile(d, 2, 1)), c);
    for (PointOp r : kAllPointOps) EXPECT_EQ(orbit_canonical(transform(d, {r, {k % 3, 2}})), c);
  }
}

TEST(Report, JsonKeys) {
  const Classification c = classify(kW1);
  const auto j = analysis_report(kW1, c);
  for (const char* key : {"design", "lattices", "elements", "planeGroupS", "planeGroupS1", "pairDescriptor",
                          "layerSymbol", "provisional", "inventory"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["layerSymbol"], "c2/m11");
  EXPECT_EQ(j["pairDescriptor"], "(c2mm, c1m1)");
  EXPECT_EQ(j["provisional"], false);
  EXPECT_EQ(j["elements"].size(), c.analysis.elements.size());
  EXPECT_EQ(j["inventory"].size(), c.analysis.elements.size());
}

TEST(Catalog, ParseExpectedPair) {
  EXPECT_EQ(parse_expected_pair("(c2mm, c1m1)").s, PlaneType::cmm);
  EXPECT_FALSE(parse_expected_pair("(p1, -)").s1);
  EXPECT_FALSE(parse_expected_pair("(p1, −)").s1);
  EXPECT_THROW(parse_expected_pair("c2mm"), std::invalid_argument);
}

TEST(Catalog, ManifestErrors) {
  EXPECT_THROW(parse_manifest("{"), ParseError);
  EXPECT_THROW(parse_manifest("{}"), ParseError);
  EXPECT_THROW(parse_manifest(R"([{"id": "x"}])"), ParseError);
  EXPECT_THROW(
      parse_manifest(R"j([{"id": "x", "expectedPair": "(p1, -)", "expectedLayer": "p1", "itemType": "vase"}])j"),
      ParseError);
}

TEST(Catalog, EmptyManifest) {
  const CatalogReport r = verify_catalog(parse_manifest("[]"));
  EXPECT_FALSE(r.ok());
  EXPECT_NE(format_report(r).find("0 entries"), std::string::npos);
}

TEST(Catalog, PassFailSkipError) {
  TempDir dir;
  // Stand-in for the Piyakdan row: a (c1m1, p1) design from the search.
  const auto hits = search_designs(parse_pair_target("c1m1,p1"), within(8, 8, 1));
  ASSERT_FALSE(hits.empty());
  save_design(hits.front().design, (dir.path() / "piyakdan.weave").string());
  save_design(kW1, (dir.path() / "w1.weave").string());
  const std::string manifest = "[" + entry_json("piyakdan", "piyakdan.weave", "(c1m1, p1)", "c211") + "," +
                               entry_json("w1", "w1.weave", "(c2mm, c1m1)", "c2/m11") + "," +
                               entry_json("photo-only", "", "(p2, p1)", "p-1", false) + "," +
                               entry_json("missing", "nope.weave", "(p2, p1)", "p-1") + "]";
  const CatalogReport r = verify_catalog(parse_manifest(manifest, dir.path().string()));
  ASSERT_EQ(r.results.size(), 4u);
  EXPECT_EQ(r.results[0].status, EntryStatus::pass);
  EXPECT_EQ(r.results[0].computed_layer, "c211");
  EXPECT_EQ(r.results[1].status, EntryStatus::pass);
  EXPECT_EQ(r.results[2].status, EntryStatus::skipped);
  EXPECT_EQ(r.results[3].status, EntryStatus::error);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(format_report(r).find("4 entries: 2 passed, 0 failed, 1 errors, 1 skipped"), std::string::npos);
}

TEST(Catalog, CorruptedW1Fails) {
  TempDir dir;
  for (int cell = 0; cell < kW1.area(); ++cell) {
    std::vector<std::uint8_t> cells(kW1.cells().begin(), kW1.cells().end());
    cells[static_cast<std::size_t>(cell)] ^= 1;
    const Design broken(kW1.width(), kW1.height(), cells);
    save_design(broken, (dir.path() / "broken.weave").string());
    const CatalogReport r = verify_catalog(
        parse_manifest("[" + entry_json("giyanggangan", "broken.weave", "(c2mm, c1m1)", "c2/m11") + "]",
                       dir.path().string()));
    ASSERT_EQ(r.results.size(), 1u);
    EXPECT_EQ(r.results[0].status, EntryStatus::fail) << "cell " << cell;
    EXPECT_NE(r.results[0].computed_pair, "(c2mm, c1m1)");
    EXPECT_FALSE(r.ok());
  }
}

TEST(Catalog, Stats) {
  const CatalogStats one = catalog_stats(parse_manifest("[" + entry_json("a", "", "(p1, -)", "p1", false) + "]"));
  EXPECT_EQ(one.entries, 1u);
  EXPECT_DOUBLE_EQ(one.glide_fraction, 0.0);
  const CatalogStats two = catalog_stats(parse_manifest("[" + entry_json("a", "", "(p1, -)", "p1", false) + "," +
                                                        entry_json("b", "", "(p1g1, p1)", "p2_111", false) + "]"));
  EXPECT_EQ(two.entries, 2u);
  EXPECT_EQ(two.glide_entries, 1u);
  EXPECT_DOUBLE_EQ(two.glide_fraction, 0.5);
  EXPECT_EQ(two.by_layer.size(), 2u);
}
