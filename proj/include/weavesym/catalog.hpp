#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weavesym/layer_group.hpp"

namespace weavesym {

enum class ItemType : std::uint8_t { basket, mat, tray };
std::string_view name(ItemType t);

struct CatalogEntry {
  std::string id;
  std::string name;  // blank for unnamed rows
  ItemType item_type = ItemType::basket;
  std::string design_file;  // relative to the manifest; empty if none
  std::string expected_pair;   // "(S, S1)" or "(S, -)"
  std::string expected_layer;
  std::string source;
  bool transcribed = false;
  bool synthetic = false;          // design produced by search, not transcribed
  bool expected_inferred = false;  // expected values deduced rather than printed
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::string base_dir;  // design files resolve against this
};

/// Manifest: a JSON array of entries.  Throws ParseError on malformed input.
Catalog parse_manifest(std::string_view json_text, std::string base_dir = ".");
Catalog load_manifest(const std::string& path);

struct ExpectedPair {
  PlaneType s = PlaneType::p1;
  std::optional<PlaneType> s1;
};
/// "(c2mm, c1m1)", "(p2, p1)", "(p1, -)".  Throws std::invalid_argument.
ExpectedPair parse_expected_pair(std::string_view text);

enum class EntryStatus : std::uint8_t { pass, fail, skipped, error };
std::string_view name(EntryStatus s);

struct EntryResult {
  CatalogEntry entry;
  EntryStatus status = EntryStatus::skipped;
  std::string computed_pair;
  std::string computed_layer;
  bool computed_fourfold = false;
  std::string message;
};

struct CatalogReport {
  std::vector<EntryResult> results;  // manifest order
  std::size_t count(EntryStatus s) const;
  /// At least one entry, and nothing failed or errored.
  bool ok() const;
};

/// Classify every transcribed entry and compare with its expected values.
/// Untranscribed entries are reported as skipped, never as passed.
CatalogReport verify_catalog(const Catalog& catalog, const PairTable& table = PairTable::builtin());

struct CatalogStats {
  std::size_t entries = 0;  // non-synthetic entries
  std::size_t baskets = 0;
  std::size_t non_baskets = 0;
  std::size_t glide_entries = 0;  // expected S contains glide reflections
  double glide_fraction = 0.0;
  std::map<std::string, std::size_t> by_layer;  // expected layer symbol -> count
  std::size_t verified = 0;          // transcribed entries classified
  std::size_t computed_fourfold = 0;  // of those, with 4-fold rotations in S
};

/// Statistics over the expected-values column of the non-synthetic entries;
/// the computed counts come from `report` when given.
CatalogStats catalog_stats(const Catalog& catalog, const CatalogReport* report = nullptr);

std::string format_report(const CatalogReport& report);
std::string format_stats(const CatalogStats& stats);

}  // namespace weavesym
