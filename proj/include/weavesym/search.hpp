#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weavesym/layer_group.hpp"

namespace weavesym {

/// What a search looks for.  When `keys` is non-empty a design matches iff
/// its PairKey is one of them (table pairs and layer symbols); otherwise it
/// matches on the plane types of S and S1 alone.
struct SearchTarget {
  std::string label;
  PlaneType s = PlaneType::p1;
  std::optional<PlaneType> s1;  // nullopt: S2 empty
  std::vector<PairKey> keys;
  // Oriented spellings hits are turned to match, when known.
  std::optional<std::string> s_symbol;
  std::optional<std::string> s1_symbol;

  bool matches(const Classification& c) const;
};

/// "S,S1", "(S, S1)" or "(S, -)".  Throws std::invalid_argument for unknown
/// symbols and for pairs where S1 cannot be an index-2 subgroup of S.
SearchTarget parse_pair_target(std::string_view text, const PairTable& table = PairTable::builtin());
/// Every table row with this layer symbol.  Throws for unknown symbols.
SearchTarget layer_target(std::string_view symbol, const PairTable& table = PairTable::builtin());

struct SearchOptions {
  int max_width = 12;
  int max_height = 12;
  std::size_t limit = 5;
  /// Blocks with at most this many cells are enumerated exhaustively; larger
  /// ones only through symmetry-constrained colourings.
  int exhaustive_area = 12;
  /// Random colourings tried per generator set when enumerating all of them
  /// would take more.
  int samples = 4;
  std::uint64_t seed = 0x5eed;
  const PairTable* table = nullptr;  // builtin when null
};

struct SearchHit {
  Design design;
  Classification classification;
};

/// Designs matching `target`, each re-classified by the full pipeline.  Hits
/// are distinct up to grid isometry and complement, reduced to their minimal
/// block, and ordered by (area, block rows).
std::vector<SearchHit> search_designs(const SearchTarget& target, const SearchOptions& options = {});

/// Lexicographically least block over rotations, reflections, translations
/// and colour complement of minimal_block(d).
Design orbit_canonical(const Design& d);

}  // namespace weavesym
