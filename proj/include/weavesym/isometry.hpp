#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "weavesym/lattice.hpp"

namespace weavesym {

class Design;

/// Point part of a symmetry of the square tiling (the dihedral group D4).
///   MX: (x,y) -> (x,-y)   reflection in a horizontal line
///   MY: (x,y) -> (-x,y)   reflection in a vertical line
///   MD: (x,y) -> (y,x)    MA: (x,y) -> (-y,-x)
/// R90 is (x,y) -> (-y,x); with y pointing down it turns clockwise on screen.
enum class PointOp : std::uint8_t { I, R90, R180, R270, MX, MY, MD, MA };

inline constexpr std::array<PointOp, 8> kAllPointOps = {
    PointOp::I, PointOp::R90, PointOp::R180, PointOp::R270,
    PointOp::MX, PointOp::MY, PointOp::MD, PointOp::MA};

struct Mat2 {
  int m00, m01, m10, m11;
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr Mat2 matrix(PointOp r) {
  switch (r) {
    case PointOp::I: return {1, 0, 0, 1};
    case PointOp::R90: return {0, -1, 1, 0};
    case PointOp::R180: return {-1, 0, 0, -1};
    case PointOp::R270: return {0, 1, -1, 0};
    case PointOp::MX: return {1, 0, 0, -1};
    case PointOp::MY: return {-1, 0, 0, 1};
    case PointOp::MD: return {0, 1, 1, 0};
    case PointOp::MA: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

constexpr Vec2 apply(PointOp r, Vec2 v) {
  const Mat2 m = matrix(r);
  return {m.m00 * v.x + m.m01 * v.y, m.m10 * v.x + m.m11 * v.y};
}

PointOp point_op_from_matrix(const Mat2& m);
PointOp operator*(PointOp lhs, PointOp rhs);
PointOp inverse(PointOp r);

/// +1 when rows map to rows, -1 when rows map to columns.
constexpr int direction_sign(PointOp r) { return matrix(r).m01 == 0 ? 1 : -1; }
constexpr bool is_reflection(PointOp r) {
  const Mat2 m = matrix(r);
  return m.m00 * m.m11 - m.m01 * m.m10 == -1;
}
/// Order of r as a rotation (1, 2 or 4); 0 for reflections.
constexpr int rotation_order(PointOp r) {
  switch (r) {
    case PointOp::I: return 1;
    case PointOp::R180: return 2;
    case PointOp::R90:
    case PointOp::R270: return 4;
    default: return 0;
  }
}
/// Direction of the fixed line of a reflection: (1,0), (0,1), (1,1) or (1,-1).
Vec2 reflection_axis(PointOp r);

std::string_view name(PointOp r);
std::optional<PointOp> parse_point_op(std::string_view text);

/// x -> r(x) + t.  Integer translations give exactly the symmetry group of
/// the unit-square tiling.
struct GridIsometry {
  PointOp r = PointOp::I;
  Vec2 t{};

  friend constexpr auto operator<=>(const GridIsometry&, const GridIsometry&) = default;
};

constexpr GridIsometry identity_isometry() { return {}; }
constexpr GridIsometry translation(Vec2 t) { return {PointOp::I, t}; }

/// (g o h)(x) = g(h(x)).
GridIsometry compose(const GridIsometry& g, const GridIsometry& h);
GridIsometry inverse(const GridIsometry& g);
constexpr int direction_sign(const GridIsometry& g) { return direction_sign(g.r); }

/// Image of the unit square [i,i+1]x[j,j+1] under g, as a cell index.
constexpr Vec2 apply_cell(const GridIsometry& g, Vec2 cell) {
  // Work with doubled centre coordinates so everything stays integral.
  const Vec2 centre2 = apply(g.r, Vec2{2 * cell.x + 1, 2 * cell.y + 1}) + 2 * g.t;
  return {(centre2.x - 1) / 2, (centre2.y - 1) / 2};
}

/// Image of a point of (1/2)Z^2.
constexpr HalfPoint apply_point(const GridIsometry& g, HalfPoint p) {
  const Vec2 q = apply(g.r, Vec2{p.x2, p.y2}) + 2 * g.t;
  return {q.x, q.y};
}

std::string to_string(const GridIsometry& g);

enum class ColorAction : std::uint8_t { preserve, swap, none };

std::string_view name(ColorAction a);
/// +1 for preserve, -1 for swap.  Undefined for none.
constexpr int sign(ColorAction a) { return a == ColorAction::swap ? -1 : 1; }

/// Whether g maps the colouring to itself (preserve), to its complement
/// (swap), or neither.
ColorAction color_action(const GridIsometry& g, const Design& d);

}  // namespace weavesym
