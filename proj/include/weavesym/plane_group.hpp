#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "weavesym/color_group.hpp"
#include "weavesym/isometry.hpp"
#include "weavesym/lattice.hpp"

namespace weavesym {

/// Plane crystallographic group types realisable inside the square tiling's
/// symmetry group (no 3- or 6-fold types).
enum class PlaneType : std::uint8_t { p1, p2, pm, pg, cm, pmm, pmg, pgg, cmm, p4, p4m, p4g };

std::string_view short_name(PlaneType t);
/// Accepts short and full (oriented) Hermann-Mauguin spellings, e.g. "pmg",
/// "p2mg", "p2gm", "p2", "p211", "cm", "c11m".
std::optional<PlaneType> parse_plane_type(std::string_view symbol);

int point_order(PlaneType t);
bool has_glides(PlaneType t);
/// Necessary condition for `sub` to occur as a subgroup of index <= 2 in `group`.
bool index_two_possible(PlaneType group, PlaneType sub);

/// Frame the reflection axes are drawn in.  Diagonal frames arise from
/// designs symmetric about the lines y = x + k.
enum class AxisFrame : std::uint8_t { none, rectilinear, diagonal };
std::string_view name(AxisFrame f);

struct PlaneGroupName {
  std::string symbol;  // oriented full symbol, e.g. "c1m1", "p2gm"
  PlaneType type = PlaneType::p1;
  char centering = 'p';
  int point_order = 1;
  AxisFrame axes = AxisFrame::none;

  friend bool operator==(const PlaneGroupName&, const PlaneGroupName&) = default;
};

/// Name the group generated by `lattice` and one coset representative per
/// point op.  Slot 2 of the oriented symbol describes the family with
/// horizontal (or (1,1)-diagonal) axes, slot 3 the vertical (or (1,-1)) one.
/// Throws std::logic_error if the inventory fits no plane group.
PlaneGroupName plane_group_name(const Lattice2& lattice, std::span<const GridIsometry> coset_reps);

PlaneGroupName plane_group_of_s(const ColorGroupAnalysis& a);
PlaneGroupName plane_group_of_s1(const ColorGroupAnalysis& a);

}  // namespace weavesym
