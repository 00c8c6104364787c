#include "weavesym/color_group.hpp"

#include <array>
#include <cstdlib>
#include <tuple>

namespace weavesym {

std::string_view name(Side s) { return s == Side::s1 ? "S1" : "S2"; }

std::string_view name(ElementKind k) {
  switch (k) {
    case ElementKind::translation: return "translation";
    case ElementKind::rotation2: return "rotation2";
    case ElementKind::rotation4: return "rotation4";
    case ElementKind::mirror: return "mirror";
    case ElementKind::glide: return "glide";
  }
  return "?";
}

Lattice2 TranslationLattices::full() const {
  if (!swap_rep) return preserve;
  const std::array<Vec2, 3> gens{preserve.basis0(), preserve.basis1(), *swap_rep};
  return Lattice2::from_generators(gens);
}

namespace {

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

}  // namespace

GridIsometry shortest_representative(const GridIsometry& g, const Lattice2& lattice) {
  if (!is_reflection(g.r)) return g;
  const Vec2 d = reflection_axis(g.r);
  const Vec2 b0 = lattice.basis0(), b1 = lattice.basis1();
  const auto [step, x0, x1] = extended_gcd(dot(b0, d), dot(b1, d));
  const int s = dot(g.t, d);
  const int target = floor_mod(s, step);
  const int k = (target - s) / step;
  const Vec2 u = k * (x0 * b0 + x1 * b1);
  return {g.r, g.t + u};
}

std::optional<SymmetryElement2D> locate_element(const GridIsometry& g, const Lattice2& lattice) {
  SymmetryElement2D e;
  const Vec2 t = g.t;
  switch (g.r) {
    case PointOp::I:
      if (lattice.contains(t)) return std::nullopt;
      e.kind = ElementKind::translation;
      e.vector = HalfPoint::from_cell_units(t);
      return e;
    case PointOp::R180:
      e.kind = ElementKind::rotation2;
      e.center = {t.x, t.y};
      return e;
    case PointOp::R90:
      e.kind = ElementKind::rotation4;
      e.center = {t.x - t.y, t.x + t.y};
      return e;
    case PointOp::R270:
      e.kind = ElementKind::rotation4;
      e.center = {t.x + t.y, t.y - t.x};
      return e;
    default: break;
  }
  const GridIsometry rep = shortest_representative(g, lattice);
  const Vec2 d = reflection_axis(g.r);
  const int s = dot(rep.t, d);
  const int dd = dot(d, d);
  e.kind = s == 0 ? ElementKind::mirror : ElementKind::glide;
  e.axis = d;
  e.vector = {2 * s / dd * d.x, 2 * s / dd * d.y};
  const Vec2 tp = rep.t;
  switch (g.r) {
    case PointOp::MX: e.anchor = {0, tp.y}; break;
    case PointOp::MY: e.anchor = {tp.x, 0}; break;
    case PointOp::MD: e.anchor = {tp.x - tp.y, 0}; break;
    case PointOp::MA: e.anchor = {tp.x + tp.y, 0}; break;
    default: break;
  }
  return e;
}

Side side_split_rule(Chi chi, int delta) { return sign(chi) * delta > 0 ? Side::s1 : Side::s2; }

std::size_t ColorGroupAnalysis::count(Side s) const {
  std::size_t n = 0;
  for (const auto& e : elements) n += e.side == s;
  return n;
}

bool ColorGroupAnalysis::has_rotation4() const {
  for (const auto& e : elements)
    if (rotation_order(e.g.r) == 4) return true;
  return false;
}

TranslationLattices translation_lattices(const Design& d) {
  std::vector<Vec2> preserving{{d.width(), 0}, {0, d.height()}};
  std::optional<Vec2> swap;
  for (int ty = 0; ty < d.height(); ++ty) {
    for (int tx = 0; tx < d.width(); ++tx) {
      const ColorAction a = color_action(translation({tx, ty}), d);
      if (a == ColorAction::preserve)
        preserving.push_back({tx, ty});
      else if (a == ColorAction::swap && !swap)
        swap = Vec2{tx, ty};
    }
  }
  TranslationLattices out{Lattice2::from_generators(preserving), std::nullopt};
  if (swap) out.swap_rep = out.preserve.reduce(*swap);
  return out;
}

Design minimal_block(const Design& d) {
  const Lattice2 L = translation_lattices(d).preserve;
  const int w = L.a(), h = L.steps_along({0, 1});
  if (w == d.width() && h == d.height()) return d;
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(w * h));
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) cells.push_back(d.at(i, j));
  return Design(w, h, std::move(cells));
}

ColorAction color_action(const GridIsometry& g, const ReducedDesign& d) {
  const Lattice2& L = d.lattice;
  bool preserve = true, swap = true;
  for (int j = 0; j < L.c(); ++j) {
    for (int i = 0; i < L.a(); ++i) {
      const bool same = d.cells[static_cast<std::size_t>(j * L.a() + i)] == d.at(apply_cell(g, {i, j}));
      (same ? swap : preserve) = false;
      if (!preserve && !swap) return ColorAction::none;
    }
  }
  return preserve ? ColorAction::preserve : ColorAction::swap;
}

ColorGroupAnalysis color_group(const Design& d) {
  ColorGroupAnalysis out;
  out.lattices = translation_lattices(d);
  const Lattice2& L = out.lattices.preserve;
  out.design.lattice = L;
  const int n = L.index();
  out.design.cells.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < L.c(); ++j)
    for (int i = 0; i < L.a(); ++i) out.design.cells[static_cast<std::size_t>(j * L.a() + i)] = d.at(i, j);

  const auto& cells = out.design.cells;
  std::vector<Vec2> image(static_cast<std::size_t>(n));
  for (PointOp r : kAllPointOps) {
    // A colour symmetry normalises the preserving translations.
    if (!L.contains(apply(r, L.basis0())) || !L.contains(apply(r, L.basis1()))) continue;
    for (int j = 0; j < L.c(); ++j)
      for (int i = 0; i < L.a(); ++i)
        image[static_cast<std::size_t>(j * L.a() + i)] = apply_cell({r, {}}, {i, j});
    for (int ty = 0; ty < L.c(); ++ty) {
      for (int tx = 0; tx < L.a(); ++tx) {
        const Vec2 t{tx, ty};
        bool preserve = true, swap = true;
        for (int k = 0; k < n && (preserve || swap); ++k) {
          const bool same = cells[static_cast<std::size_t>(k)] ==
                            cells[static_cast<std::size_t>(L.slot(image[static_cast<std::size_t>(k)] + t))];
          (same ? swap : preserve) = false;
        }
        if (!preserve && !swap) continue;
        ElementRecord rec;
        rec.g = {r, t};
        rec.chi = preserve ? Chi::preserve : Chi::swap;
        rec.side = side_split_rule(rec.chi, direction_sign(r));
        rec.element = locate_element(rec.g, L);
        out.elements.push_back(rec);
      }
    }
  }
  return out;
}

}  // namespace weavesym
