#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weavesym/color_group.hpp"
#include "weavesym/layer_group.hpp"

namespace weavesym {

/// Closed rectangle [x0,x1] x [y0,y1] in cell units.
struct Window {
  int x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  friend bool operator==(const Window&, const Window&) = default;
};

struct DiagramSpec {
  int cell_size = 24;  // pixels per unit square
  std::optional<Window> window;  // default: conventional cell of the lattice
  std::string black = "#000000";
  std::string white = "#ffffff";
  std::string s1_color = "#d62728";  // red
  std::string s2_color = "#1f77b4";  // blue
};

/// Smallest origin-anchored rectangle whose sides are lattice periods.
Window conventional_window(const Lattice2& lattice);

/// One glyph placement, in doubled coordinates (half-cell resolution).
struct GlyphInstance {
  std::string kind;  // class vocabulary: mirror, glide, rot2, rot4, inversion, axis2-inplane, screw2, ...
  std::optional<Side> side;
  HalfPoint at;      // centre, or a point on the line
  Vec2 direction{};  // zero for point glyphs
};

/// Instances of the listed elements (expanded by `lattice`) meeting the
/// window.  Lines count when they cross it with positive length.
std::vector<GlyphInstance> color_group_instances(const ColorGroupAnalysis& a, const Window& w);
std::vector<GlyphInstance> layer_instances(const std::vector<LayerElement>& inventory, const Lattice2& lattice,
                                           const Window& w);

/// Design raster with the colour-group diagram: mirrors solid, glides dashed,
/// 2-fold centres as lenses, 4-fold centres as squares; red for S1, blue for
/// S2.  Throws std::invalid_argument for an empty window.
std::string emit_color_group_svg(const Design& d, const ColorGroupAnalysis& a, const DiagramSpec& spec = {});

/// Layer-group diagram in black: mirror planes solid, glide planes dashed,
/// inversions as hollow circles, normal 2-fold axes as lenses, in-plane
/// 2-fold axes with arrowheads, screws with half arrowheads.
std::string emit_layer_svg(const std::vector<LayerElement>& inventory, const Lattice2& lattice,
                           const DiagramSpec& spec = {});

}  // namespace weavesym
