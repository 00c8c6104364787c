#include "weavesym/isometry.hpp"

#include <numeric>
#include <stdexcept>

#include "weavesym/design.hpp"

namespace weavesym {

PointOp point_op_from_matrix(const Mat2& m) {
  for (PointOp r : kAllPointOps)
    if (matrix(r) == m) return r;
  throw std::invalid_argument("matrix is not a symmetry of the square");
}

PointOp operator*(PointOp lhs, PointOp rhs) {
  const Mat2 a = matrix(lhs), b = matrix(rhs);
  return point_op_from_matrix({a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                               a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11});
}

PointOp inverse(PointOp r) {
  const Mat2 m = matrix(r);
  // Orthogonal: inverse is the transpose.
  return point_op_from_matrix({m.m00, m.m10, m.m01, m.m11});
}

Vec2 reflection_axis(PointOp r) {
  switch (r) {
    case PointOp::MX: return {1, 0};
    case PointOp::MY: return {0, 1};
    case PointOp::MD: return {1, 1};
    case PointOp::MA: return {1, -1};
    default: throw std::invalid_argument("reflection_axis: not a reflection");
  }
}

std::string_view name(PointOp r) {
  switch (r) {
    case PointOp::I: return "I";
    case PointOp::R90: return "R90";
    case PointOp::R180: return "R180";
    case PointOp::R270: return "R270";
    case PointOp::MX: return "MX";
    case PointOp::MY: return "MY";
    case PointOp::MD: return "MD";
    case PointOp::MA: return "MA";
  }
  return "?";
}

std::optional<PointOp> parse_point_op(std::string_view text) {
  for (PointOp r : kAllPointOps)
    if (name(r) == text) return r;
  return std::nullopt;
}

GridIsometry compose(const GridIsometry& g, const GridIsometry& h) {
  return {g.r * h.r, apply(g.r, h.t) + g.t};
}

GridIsometry inverse(const GridIsometry& g) {
  const PointOp ri = inverse(g.r);
  return {ri, -apply(ri, g.t)};
}

std::string to_string(const GridIsometry& g) {
  return std::string(name(g.r)) + "+" + to_string(g.t);
}

std::string_view name(ColorAction a) {
  switch (a) {
    case ColorAction::preserve: return "preserve";
    case ColorAction::swap: return "swap";
    case ColorAction::none: return "none";
  }
  return "?";
}

ColorAction color_action(const GridIsometry& g, const Design& d) {
  // Both d and d o g are periodic under the block lattice when g keeps it
  // invariant; otherwise under M*Z^2 with M = lcm(width, height).
  int w = d.width(), h = d.height();
  if (direction_sign(g) < 0 && w != h) w = h = std::lcm(w, h);
  bool preserve = true, swap = true;
  for (int j = 0; j < h && (preserve || swap); ++j) {
    for (int i = 0; i < w; ++i) {
      const std::uint8_t a = d.at(i, j);
      const std::uint8_t b = d.at(apply_cell(g, {i, j}));
      if (a == b)
        swap = false;
      else
        preserve = false;
      if (!preserve && !swap) break;
    }
  }
  if (preserve) return ColorAction::preserve;
  if (swap) return ColorAction::swap;
  return ColorAction::none;
}

}  // namespace weavesym
