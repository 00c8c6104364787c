#include "weavesym/diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace weavesym {

Window conventional_window(const Lattice2& lattice) {
  return {0, 0, lattice.a(), lattice.steps_along({0, 1})};
}

namespace {

int ceil_div(int a, int b) { return -floor_div(-a, b); }

bool empty_window(const Window& w) { return w.x1 <= w.x0 || w.y1 <= w.y0; }

// Points p + v, v in L, inside the window.  p and L are in doubled units.
std::vector<HalfPoint> point_instances(HalfPoint p, const Lattice2& L, const Window& w) {
  std::vector<HalfPoint> out;
  for (int n = ceil_div(2 * w.y0 - p.y2, L.c()); n <= floor_div(2 * w.y1 - p.y2, L.c()); ++n) {
    const int x = p.x2 + n * L.b();
    for (int m = ceil_div(2 * w.x0 - x, L.a()); m <= floor_div(2 * w.x1 - x, L.a()); ++m)
      out.push_back({x + m * L.a(), p.y2 + n * L.c()});
  }
  return out;
}

int cross(Vec2 d, Vec2 p) { return d.x * p.y - d.y * p.x; }

// x*p + y*q = g >= 0
std::tuple<int, int, int> extended_gcd(int p, int q) {
  int old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const int quot = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - quot * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - quot * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

struct LineInstance {
  HalfPoint at;  // where the line meets the window's left (or top) edge
  bool mirror;
};

// Axes of the reflections (r, t + v), v in L, crossing the window with
// positive length.  In doubled units the axis of (r, t) is the line
// cross(d, p) = cross(d, t).  A line is a mirror iff one of the coset
// members on it has no glide part.
std::vector<LineInstance> line_instances(const GridIsometry& g, const Lattice2& L, const Window& w) {
  const Vec2 d = reflection_axis(g.r);
  const Vec2 corners[4] = {{2 * w.x0, 2 * w.y0}, {2 * w.x1, 2 * w.y0}, {2 * w.x0, 2 * w.y1}, {2 * w.x1, 2 * w.y1}};
  int lo = cross(d, corners[0]), hi = lo;
  for (const Vec2& c : corners) {
    lo = std::min(lo, cross(d, c));
    hi = std::max(hi, cross(d, c));
  }
  const bool axis_aligned = d.x == 0 || d.y == 0;
  const Vec2 b0 = L.basis0(), b1 = L.basis1();
  const auto [step, alpha, beta] = extended_gcd(cross(d, b0), cross(d, b1));
  const Vec2 unit = alpha * b0 + beta * b1;  // cross(d, unit) = step
  const int period = L.steps_along(d) * dot(d, d);
  const int base = cross(d, g.t);
  std::vector<LineInstance> out;
  for (int k = ceil_div(lo - base, step); base + k * step <= hi; ++k) {
    const int inv = base + k * step;
    if (!axis_aligned && (inv == lo || inv == hi)) continue;  // touches a corner only
    const bool mirror = floor_mod(dot(d, g.t + k * unit), period) == 0;
    if (d.x != 0)
      out.push_back({{2 * w.x0, (inv + d.y * 2 * w.x0) / d.x}, mirror});
    else
      out.push_back({{-inv / d.y, 2 * w.y0}, mirror});
  }
  return out;
}

// Centres of the rotations (r, t + v), v in L: doubled centre M(t + v) with
// M = I for half turns and I + r for quarter turns.
std::vector<HalfPoint> centre_instances(const GridIsometry& g, const Lattice2& L, const Window& w) {
  auto m = [&](Vec2 v) { return g.r == PointOp::R180 ? v : v + apply(g.r, v); };
  const std::array<Vec2, 2> gens{m(L.basis0()), m(L.basis1())};
  const Vec2 c = m(g.t);
  return point_instances({c.x, c.y}, Lattice2::from_generators(gens), w);
}

// The coset representative a located element was derived from.
GridIsometry representative(const SymmetryElement2D& e) {
  switch (e.kind) {
    case ElementKind::translation: return translation({e.vector.x2 / 2, e.vector.y2 / 2});
    case ElementKind::rotation2: return {PointOp::R180, {e.center.x2, e.center.y2}};
    case ElementKind::rotation4:
      return {PointOp::R90, {(e.center.x2 + e.center.y2) / 2, (e.center.y2 - e.center.x2) / 2}};
    case ElementKind::mirror:
    case ElementKind::glide: break;
  }
  const Vec2 d = e.axis;
  const PointOp r = d == Vec2{1, 0} ? PointOp::MX
                    : d == Vec2{0, 1} ? PointOp::MY
                    : d == Vec2{1, 1} ? PointOp::MD
                                      : PointOp::MA;
  const int s = (e.vector.x2 * d.x + e.vector.y2 * d.y) / 2;
  const int c = cross(d, {e.anchor.x2, e.anchor.y2});
  const Vec2 perp{-d.y, d.x};
  const Vec2 num = s * d + c * perp;
  const int dd = dot(d, d);
  return {r, {num.x / dd, num.y / dd}};
}

bool is_line_kind(std::string_view k) {
  return k == "mirror" || k == "glide" || k == "axis2-inplane" || k == "screw2";
}

using InstanceKey = std::tuple<std::string, int, int, int, int, int>;

class InstanceCollector {
 public:
  InstanceCollector(const Lattice2& L, const Window& w) : L_(L), w_(w) {}

  // `layer` selects the three-dimensional glyph names.
  void add(const SymmetryElement2D& e, Side side, bool layer) {
    const GridIsometry g = representative(e);
    const bool s1 = side == Side::s1;
    std::optional<Side> tag;
    if (!layer) tag = side;
    switch (e.kind) {
      case ElementKind::translation: return;
      case ElementKind::rotation2:
      case ElementKind::rotation4: {
        const bool half = e.kind == ElementKind::rotation2;
        std::string kind = half ? "rot2" : "rot4";
        if (layer && !s1) kind = half ? "inversion" : "rotoinv4";
        for (HalfPoint p : centre_instances(g, L_, w_)) push(kind, tag, p, {});
        return;
      }
      case ElementKind::mirror:
      case ElementKind::glide:
        for (const LineInstance& line : line_instances(g, L_, w_)) {
          std::string kind = line.mirror ? "mirror" : "glide";
          if (layer && !s1) kind = line.mirror ? "axis2-inplane" : "screw2";
          push(kind, tag, line.at, e.axis);
        }
        return;
    }
  }

  void push_plain(GlyphInstance g) { out_.push_back(std::move(g)); }
  std::vector<GlyphInstance> take() { return std::move(out_); }

 private:
  void push(const std::string& kind, std::optional<Side> side, HalfPoint at, Vec2 dir) {
    const int side_tag = side ? static_cast<int>(*side) : -1;
    if (seen_.insert({kind, side_tag, at.x2, at.y2, dir.x, dir.y}).second) out_.push_back({kind, side, at, dir});
  }

  const Lattice2& L_;
  Window w_;
  std::set<InstanceKey> seen_;
  std::vector<GlyphInstance> out_;
};

Side side_of(LayerKind k) {
  switch (k) {
    case LayerKind::glide_plane_through_p:
    case LayerKind::axis2_in_plane:
    case LayerKind::screw2_in_plane:
    case LayerKind::inversion_center:
    case LayerKind::rotoinversion4_normal:
    case LayerKind::mirror_plane_parallel: return Side::s2;
    default: return Side::s1;
  }
}

}  // namespace

std::vector<GlyphInstance> color_group_instances(const ColorGroupAnalysis& a, const Window& w) {
  InstanceCollector collector(a.lattices.preserve, w);
  for (const auto& rec : a.elements)
    if (rec.element) collector.add(*rec.element, rec.side, false);
  return collector.take();
}

std::vector<GlyphInstance> layer_instances(const std::vector<LayerElement>& inventory, const Lattice2& lattice,
                                           const Window& w) {
  InstanceCollector collector(lattice, w);
  for (const auto& e : inventory) {
    if (e.kind == LayerKind::translation) continue;
    if (e.kind == LayerKind::glide_plane_through_p || e.kind == LayerKind::mirror_plane_parallel) {
      // A plane parallel to P: one glyph per coset, carrying its glide vector.
      collector.push_plain({e.kind == LayerKind::glide_plane_through_p ? "glide-p" : "mirror-p", std::nullopt,
                            e.locus.vector, {}});
      continue;
    }
    collector.add(e.locus, side_of(e.kind), true);
  }
  return collector.take();
}

namespace {

class SvgWriter {
 public:
  SvgWriter(const Window& w, int cell) : w_(w), cell_(cell) {
    if (empty_window(w)) throw std::invalid_argument("diagram: empty window");
    const double width = (w.x1 - w.x0 + 1) * cell, height = (w.y1 - w.y0 + 1) * cell;
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  }

  // Pixel coordinates of a doubled point.
  double px(int x2) const { return cell_ * (0.5 + x2 / 2.0 - w_.x0); }
  double py(int y2) const { return cell_ * (0.5 + y2 / 2.0 - w_.y0); }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
  }

  std::ostringstream& out() { return os_; }

  void open_group(std::string_view cls) { os_ << "<g class=\"" << cls << "\">\n"; }
  void close_group() { os_ << "</g>\n"; }

  void raster(const Design& d, const DiagramSpec& spec) {
    open_group("raster");
    for (int j = w_.y0; j < w_.y1; ++j)
      for (int i = w_.x0; i < w_.x1; ++i)
        os_ << "<rect class=\"cell\" x=\"" << num(px(2 * i)) << "\" y=\"" << num(py(2 * j)) << "\" width=\"" << cell_
            << "\" height=\"" << cell_ << "\" fill=\"" << (d.at(i, j) ? spec.black : spec.white)
            << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    close_group();
  }

  void frame() {
    os_ << "<rect class=\"frame\" x=\"" << num(px(2 * w_.x0)) << "\" y=\"" << num(py(2 * w_.y0)) << "\" width=\""
        << num(cell_ * (w_.x1 - w_.x0)) << "\" height=\"" << num(cell_ * (w_.y1 - w_.y0))
        << "\" fill=\"none\" stroke=\"#777777\" stroke-width=\"1\"/>\n";
  }

  // Clip the line through doubled point p with direction d to the window.
  std::pair<std::array<double, 2>, std::array<double, 2>> clip(HalfPoint p, Vec2 d) const {
    const double x = p.x2 / 2.0, y = p.y2 / 2.0;
    double t0 = -1e9, t1 = 1e9;
    auto bound = [&](double origin, int dir, double lo, double hi) {
      if (dir == 0) return;
      double a = (lo - origin) / dir, b = (hi - origin) / dir;
      if (a > b) std::swap(a, b);
      t0 = std::max(t0, a);
      t1 = std::min(t1, b);
    };
    bound(x, d.x, w_.x0, w_.x1);
    bound(y, d.y, w_.y0, w_.y1);
    return {{x + t0 * d.x, y + t0 * d.y}, {x + t1 * d.x, y + t1 * d.y}};
  }

  double cx(double x) const { return cell_ * (0.5 + x - w_.x0); }
  double cy(double y) const { return cell_ * (0.5 + y - w_.y0); }

  void line(const GlyphInstance& g, std::string_view cls, std::string_view colour, bool dashed, double width) {
    const auto [a, b] = clip(g.at, g.direction);
    os_ << "<line class=\"" << cls << "\" x1=\"" << num(cx(a[0])) << "\" y1=\"" << num(cy(a[1])) << "\" x2=\""
        << num(cx(b[0])) << "\" y2=\"" << num(cy(b[1])) << "\" stroke=\"" << colour << "\" stroke-width=\""
        << num(width) << "\"";
    if (dashed) os_ << " stroke-dasharray=\"" << num(cell_ / 4.0) << ' ' << num(cell_ / 6.0) << "\"";
    os_ << "/>\n";
  }

  // In-plane 2-fold axis (full heads) or screw (half heads) along a clipped line.
  void arrow_axis(const GlyphInstance& g, std::string_view cls, bool half) {
    const auto [a, b] = clip(g.at, g.direction);
    const double len = std::hypot(g.direction.x, g.direction.y);
    const double ux = g.direction.x / len, uy = g.direction.y / len;
    const double head = 0.18, wing = 0.09;
    os_ << "<g class=\"" << cls << "\">\n";
    os_ << "<line x1=\"" << num(cx(a[0])) << "\" y1=\"" << num(cy(a[1])) << "\" x2=\"" << num(cx(b[0]))
        << "\" y2=\"" << num(cy(b[1])) << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    auto tip = [&](std::array<double, 2> at, double sx) {
      // Head pointing outward along sx*u, base pulled back by `head`.
      const double bx = at[0] - sx * ux * head, by = at[1] - sx * uy * head;
      const double nx = -uy * wing, ny = ux * wing;
      os_ << "<polygon points=\"" << num(cx(at[0])) << ',' << num(cy(at[1])) << ' ' << num(cx(bx + nx)) << ','
          << num(cy(by + ny)) << ' ';
      if (half)
        os_ << num(cx(bx)) << ',' << num(cy(by));
      else
        os_ << num(cx(bx - nx)) << ',' << num(cy(by - ny));
      os_ << "\" fill=\"#000000\"/>\n";
    };
    tip(a, -1.0);
    tip(b, 1.0);
    os_ << "</g>\n";
  }

  void lens(const GlyphInstance& g, std::string_view cls, std::string_view fill, std::string_view stroke) {
    const double x = px(g.at.x2), y = py(g.at.y2), r = cell_ * 0.2;
    os_ << "<path class=\"" << cls << "\" d=\"M " << num(x - r) << ' ' << num(y) << " A " << num(r) << ' '
        << num(r * 1.4) << " 0 0 1 " << num(x + r) << ' ' << num(y) << " A " << num(r) << ' ' << num(r * 1.4)
        << " 0 0 1 " << num(x - r) << ' ' << num(y) << " Z\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
  }

  void square(const GlyphInstance& g, std::string_view cls, std::string_view fill, std::string_view stroke) {
    const double s = cell_ * 0.32;
    os_ << "<rect class=\"" << cls << "\" x=\"" << num(px(g.at.x2) - s / 2) << "\" y=\"" << num(py(g.at.y2) - s / 2)
        << "\" width=\"" << num(s) << "\" height=\"" << num(s) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
  }

  void circle(const GlyphInstance& g, std::string_view cls) {
    os_ << "<circle class=\"" << cls << "\" cx=\"" << num(px(g.at.x2)) << "\" cy=\"" << num(py(g.at.y2))
        << "\" r=\"" << num(cell_ * 0.14) << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }

  // Glide plane parallel to P: a bent arrow near the window corner showing
  // the glide vector.
  void parallel_plane(const GlyphInstance& g, std::string_view cls, int index) {
    const double x0 = px(2 * w_.x0) + 4 + 10 * index, y0 = py(2 * w_.y0) - cell_ * 0.4;
    const double len = std::hypot(g.at.x2, g.at.y2);
    const double dx = len > 0 ? 8 * g.at.x2 / len : 8, dy = len > 0 ? 8 * g.at.y2 / len : 0;
    os_ << "<polyline class=\"" << cls << "\" points=\"" << num(x0) << ',' << num(y0 - 6) << ' ' << num(x0) << ','
        << num(y0) << ' ' << num(x0 + dx) << ',' << num(y0 + dy) << "\" fill=\"none\" stroke=\"#000000\""
        << " stroke-width=\"1.2\"/>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  Window w_;
  int cell_;
  std::ostringstream os_;
};

std::string side_class(std::string_view kind, Side s) {
  return std::string(kind) + (s == Side::s1 ? " s1" : " s2");
}

// Draw order: lines first, then point glyphs on top.
int draw_rank(const GlyphInstance& g) { return is_line_kind(g.kind) ? 0 : 1; }

}  // namespace

std::string emit_color_group_svg(const Design& d, const ColorGroupAnalysis& a, const DiagramSpec& spec) {
  const Window w = spec.window.value_or(conventional_window(a.lattices.full()));
  SvgWriter svg(w, spec.cell_size);
  svg.raster(d, spec);
  svg.frame();
  auto glyphs = color_group_instances(a, w);
  std::stable_sort(glyphs.begin(), glyphs.end(),
                   [](const GlyphInstance& x, const GlyphInstance& y) { return draw_rank(x) < draw_rank(y); });
  svg.open_group("elements");
  for (const auto& g : glyphs) {
    const Side s = g.side.value_or(Side::s1);
    const std::string& colour = s == Side::s1 ? spec.s1_color : spec.s2_color;
    const std::string cls = side_class(g.kind, s);
    if (g.kind == "mirror")
      svg.line(g, cls, colour, false, 2.5);
    else if (g.kind == "glide")
      svg.line(g, cls, colour, true, 2.5);
    else if (g.kind == "rot2")
      svg.lens(g, cls, colour, colour);
    else if (g.kind == "rot4")
      svg.square(g, cls, colour, colour);
  }
  svg.close_group();
  return svg.finish();
}

std::string emit_layer_svg(const std::vector<LayerElement>& inventory, const Lattice2& lattice,
                           const DiagramSpec& spec) {
  const Window w = spec.window.value_or(conventional_window(lattice));
  SvgWriter svg(w, spec.cell_size);
  svg.frame();
  auto glyphs = layer_instances(inventory, lattice, w);
  std::stable_sort(glyphs.begin(), glyphs.end(),
                   [](const GlyphInstance& x, const GlyphInstance& y) { return draw_rank(x) < draw_rank(y); });
  svg.open_group("elements");
  int parallel = 0;
  for (const auto& g : glyphs) {
    if (g.kind == "mirror")
      svg.line(g, g.kind, "#000000", false, 2);
    else if (g.kind == "glide")
      svg.line(g, g.kind, "#000000", true, 2);
    else if (g.kind == "axis2-inplane")
      svg.arrow_axis(g, g.kind, false);
    else if (g.kind == "screw2")
      svg.arrow_axis(g, g.kind, true);
    else if (g.kind == "rot2")
      svg.lens(g, g.kind, "#000000", "#000000");
    else if (g.kind == "inversion")
      svg.circle(g, g.kind);
    else if (g.kind == "rot4")
      svg.square(g, g.kind, "#000000", "#000000");
    else if (g.kind == "rotoinv4") {
      svg.square(g, g.kind, "#ffffff", "#000000");
      svg.lens(g, "rotoinv4-core", "#000000", "#000000");
    } else if (g.kind == "glide-p" || g.kind == "mirror-p")
      svg.parallel_plane(g, g.kind, parallel++);
  }
  svg.close_group();
  return svg.finish();
}

}  // namespace weavesym
