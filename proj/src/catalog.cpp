#include "weavesym/catalog.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace weavesym {

std::string_view name(ItemType t) {
  switch (t) {
    case ItemType::basket: return "basket";
    case ItemType::mat: return "mat";
    case ItemType::tray: return "tray";
  }
  return "?";
}

std::string_view name(EntryStatus s) {
  switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::fail: return "FAIL";
    case EntryStatus::skipped: return "skipped";
    case EntryStatus::error: return "ERROR";
  }
  return "?";
}

namespace {

ItemType parse_item_type(const std::string& s) {
  if (s == "basket") return ItemType::basket;
  if (s == "mat") return ItemType::mat;
  if (s == "tray") return ItemType::tray;
  throw ParseError("manifest: unknown itemType '" + s + "'");
}

}  // namespace

Catalog parse_manifest(std::string_view json_text, std::string base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("manifest: expected a JSON array of entries");
  Catalog catalog;
  catalog.base_dir = std::move(base_dir);
  for (const auto& e : j) {
    try {
      CatalogEntry entry;
      entry.id = e.at("id").get<std::string>();
      entry.name = e.value("name", "");
      entry.item_type = parse_item_type(e.value("itemType", "basket"));
      entry.design_file = e.value("designFile", "");
      entry.expected_pair = e.at("expectedPair").get<std::string>();
      entry.expected_layer = e.at("expectedLayer").get<std::string>();
      entry.source = e.value("source", "");
      entry.transcribed = e.value("transcribed", false);
      entry.synthetic = e.value("synthetic", false);
      entry.expected_inferred = e.value("expectedInferred", false);
      catalog.entries.push_back(std::move(entry));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("manifest: ") + ex.what());
    }
  }
  return catalog;
}

Catalog load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), std::filesystem::path(path).parent_path().string());
}

ExpectedPair parse_expected_pair(std::string_view text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') cleaned.push_back(ch);
  const auto comma = cleaned.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad pair '" + std::string(text) + "'");
  const std::string s = cleaned.substr(0, comma), s1 = cleaned.substr(comma + 1);
  ExpectedPair out;
  auto type = parse_plane_type(s);
  if (!type) throw std::invalid_argument("unknown plane group '" + s + "'");
  out.s = *type;
  if (!s1.empty() && s1 != "-" && s1 != "−") {
    auto t1 = parse_plane_type(s1);
    if (!t1) throw std::invalid_argument("unknown plane group '" + s1 + "'");
    out.s1 = t1;
  }
  return out;
}

std::size_t CatalogReport::count(EntryStatus s) const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

bool CatalogReport::ok() const {
  return !results.empty() && count(EntryStatus::fail) == 0 && count(EntryStatus::error) == 0;
}

CatalogReport verify_catalog(const Catalog& catalog, const PairTable& table) {
  CatalogReport report;
  for (const auto& entry : catalog.entries) {
    EntryResult r;
    r.entry = entry;
    if (!entry.transcribed) {
      r.status = EntryStatus::skipped;
      r.message = "not transcribed";
      report.results.push_back(std::move(r));
      continue;
    }
    try {
      if (entry.design_file.empty()) throw std::runtime_error("no design file");
      const auto path = std::filesystem::path(catalog.base_dir) / entry.design_file;
      const Design d = load_design(path.string());
      const ExpectedPair expected = parse_expected_pair(entry.expected_pair);
      const Classification c = classify(d, table);
      r.computed_pair = c.layer.pair_descriptor;
      r.computed_layer = c.layer.symbol;
      r.computed_fourfold = c.analysis.has_rotation4();
      const bool pair_ok = c.key.s == expected.s && c.key.s1 == expected.s1;
      const bool layer_ok = c.layer.symbol == normalize_layer_symbol(entry.expected_layer);
      r.status = pair_ok && layer_ok ? EntryStatus::pass : EntryStatus::fail;
      if (r.status == EntryStatus::fail)
        r.message = "expected " + entry.expected_pair + " → " + normalize_layer_symbol(entry.expected_layer);
    } catch (const std::exception& e) {
      r.status = EntryStatus::error;
      r.message = e.what();
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

CatalogStats catalog_stats(const Catalog& catalog, const CatalogReport* report) {
  CatalogStats stats;
  for (const auto& entry : catalog.entries) {
    if (entry.synthetic) continue;
    ++stats.entries;
    (entry.item_type == ItemType::basket ? stats.baskets : stats.non_baskets) += 1;
    if (has_glides(parse_expected_pair(entry.expected_pair).s)) ++stats.glide_entries;
    ++stats.by_layer[normalize_layer_symbol(entry.expected_layer)];
  }
  if (stats.entries > 0)
    stats.glide_fraction = static_cast<double>(stats.glide_entries) / static_cast<double>(stats.entries);
  if (report) {
    for (const auto& r : report->results) {
      if (r.status != EntryStatus::pass && r.status != EntryStatus::fail) continue;
      ++stats.verified;
      stats.computed_fourfold += r.computed_fourfold;
    }
  }
  return stats;
}

std::string format_report(const CatalogReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << name(r.status) << "  " << r.entry.id;
    if (!r.entry.name.empty()) os << " (" << r.entry.name << ")";
    if (!r.computed_pair.empty()) os << "  " << r.computed_pair << " → " << r.computed_layer;
    if (!r.message.empty()) os << "  [" << r.message << "]";
    os << '\n';
  }
  os << report.results.size() << " entries: " << report.count(EntryStatus::pass) << " passed, "
     << report.count(EntryStatus::fail) << " failed, " << report.count(EntryStatus::error) << " errors, "
     << report.count(EntryStatus::skipped) << " skipped\n";
  return os.str();
}

std::string format_stats(const CatalogStats& stats) {
  std::ostringstream os;
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.2f", 100.0 * stats.glide_fraction);
  os << "entries: " << stats.entries << " (" << stats.baskets << " basket, " << stats.non_baskets
     << " non-basket)\n"
     << "glide-containing: " << stats.glide_entries << "/" << stats.entries << " = " << pct << "%\n"
     << "distinct layer groups: " << stats.by_layer.size() << '\n';
  for (const auto& [layer, n] : stats.by_layer) os << "  " << layer << ": " << n << '\n';
  os << "verified designs: " << stats.verified << ", with 4-fold rotations: " << stats.computed_fourfold << '\n';
  return os.str();
}

}  // namespace weavesym
