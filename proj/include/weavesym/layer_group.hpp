#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weavesym/color_group.hpp"
#include "weavesym/design.hpp"
#include "weavesym/plane_group.hpp"

namespace weavesym {

/// Three-dimensional counterpart of an element of the colour group, for a
/// weave lying on the plane P (z = 0).
enum class LayerKind : std::uint8_t {
  translation,
  glide_plane_through_p,  // reflection in P followed by an in-plane translation
  mirror_plane_normal,
  glide_plane_normal,
  axis2_normal,
  axis2_in_plane,
  screw2_in_plane,
  inversion_center,
  axis4_normal,
  rotoinversion4_normal,
  mirror_plane_parallel,  // reflection in P itself; never realised by a weave
};

std::string_view name(LayerKind k);

struct LayerElement {
  LayerKind kind = LayerKind::translation;
  SymmetryElement2D locus;  // same coordinates as the plane element it lifts

  friend bool operator==(const LayerElement&, const LayerElement&) = default;
};

/// Lift a located plane element with its side tag.  The identity (nullopt)
/// lifts to the zero translation.
LayerElement lift_table1(const std::optional<SymmetryElement2D>& element, Side side);

/// Canonical ASCII spelling of a layer symbol: spaces dropped, subscript
/// one written "_1", overbar written as a leading minus ("p-1").
std::string normalize_layer_symbol(std::string_view symbol);

/// Key identifying a layer group from its colour group data: the plane types
/// of S and S1 (S1 absent when S2 is empty) plus the sorted kinds of the S2
/// cosets.  The orientation of either group does not enter the key.
struct PairKey {
  PlaneType s = PlaneType::p1;
  std::optional<PlaneType> s1;
  std::vector<std::string> s2_kinds;

  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairTableRow {
  std::string s_symbol;   // as printed in the source table, e.g. "p2mg"
  std::string s1_symbol;  // "-" when S2 is empty
  PairKey key;
  std::string layer;  // canonical ASCII
  std::string source;

  std::string pair_descriptor() const;
};

/// The (S, S1) -> layer group lookup.  The built-in table is compiled from
/// data/layer_pairs.json; other tables can be loaded from the same format.
class PairTable {
 public:
  static const PairTable& builtin();
  static PairTable parse(std::string_view json_text);
  static PairTable load(const std::string& path);

  const std::vector<PairTableRow>& rows() const { return rows_; }
  const PairTableRow* find(const PairKey& key) const;
  /// Rows whose printed pair matches after alias normalisation.
  std::vector<const PairTableRow*> find_pair(PlaneType s, std::optional<PlaneType> s1) const;
  std::vector<const PairTableRow*> find_layer(std::string_view symbol) const;
  int version() const { return version_; }

 private:
  std::vector<PairTableRow> rows_;
  int version_ = 0;
};

struct LayerGroupName {
  std::string symbol;           // canonical layer symbol, or "unassigned"
  std::string pair_descriptor;  // "(S, S1)" or "(S, −)"
  bool provisional = true;
  std::vector<LayerElement> inventory;
  std::string source;  // table row citation for table hits
};

/// Everything the pipeline derives from one design.
struct Classification {
  ColorGroupAnalysis analysis;
  PlaneGroupName s;
  PlaneGroupName s1;
  PairKey key;
  LayerGroupName layer;
};

PairKey pair_key(const ColorGroupAnalysis& a);
LayerGroupName layer_group_name(const ColorGroupAnalysis& a, const PairTable& table = PairTable::builtin());
Classification classify(const Design& d, const PairTable& table = PairTable::builtin());

/// "(c2mm, c1m1) → c2/m11"
std::string summary_line(const Classification& c);

}  // namespace weavesym
