#include "weavesym/plane_group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weavesym {

std::string_view short_name(PlaneType t) {
  switch (t) {
    case PlaneType::p1: return "p1";
    case PlaneType::p2: return "p2";
    case PlaneType::pm: return "pm";
    case PlaneType::pg: return "pg";
    case PlaneType::cm: return "cm";
    case PlaneType::pmm: return "pmm";
    case PlaneType::pmg: return "pmg";
    case PlaneType::pgg: return "pgg";
    case PlaneType::cmm: return "cmm";
    case PlaneType::p4: return "p4";
    case PlaneType::p4m: return "p4m";
    case PlaneType::p4g: return "p4g";
  }
  return "?";
}

std::optional<PlaneType> parse_plane_type(std::string_view symbol) {
  static const std::array<std::pair<std::string_view, PlaneType>, 30> kAliases{{
      {"p1", PlaneType::p1},     {"p2", PlaneType::p2},     {"p211", PlaneType::p2},
      {"p121", PlaneType::p2},   {"p112", PlaneType::p2},   {"pm", PlaneType::pm},
      {"p1m1", PlaneType::pm},   {"p11m", PlaneType::pm},   {"pg", PlaneType::pg},
      {"p1g1", PlaneType::pg},   {"p11g", PlaneType::pg},   {"cm", PlaneType::cm},
      {"c1m1", PlaneType::cm},   {"c11m", PlaneType::cm},   {"pmm", PlaneType::pmm},
      {"p2mm", PlaneType::pmm},  {"pmg", PlaneType::pmg},   {"p2mg", PlaneType::pmg},
      {"p2gm", PlaneType::pmg},  {"pgm", PlaneType::pmg},   {"pgg", PlaneType::pgg},
      {"p2gg", PlaneType::pgg},  {"cmm", PlaneType::cmm},   {"c2mm", PlaneType::cmm},
      {"p4", PlaneType::p4},     {"p4m", PlaneType::p4m},   {"p4mm", PlaneType::p4m},
      {"p4g", PlaneType::p4g},   {"p4gm", PlaneType::p4g},  {"p4bm", PlaneType::p4g},
  }};
  for (const auto& [alias, type] : kAliases)
    if (alias == symbol) return type;
  return std::nullopt;
}

int point_order(PlaneType t) {
  switch (t) {
    case PlaneType::p1: return 1;
    case PlaneType::p2:
    case PlaneType::pm:
    case PlaneType::pg:
    case PlaneType::cm: return 2;
    case PlaneType::pmm:
    case PlaneType::pmg:
    case PlaneType::pgg:
    case PlaneType::cmm:
    case PlaneType::p4: return 4;
    case PlaneType::p4m:
    case PlaneType::p4g: return 8;
  }
  return 1;
}

bool has_glides(PlaneType t) {
  switch (t) {
    case PlaneType::pg:
    case PlaneType::cm:
    case PlaneType::pmg:
    case PlaneType::pgg:
    case PlaneType::cmm:
    case PlaneType::p4m:
    case PlaneType::p4g: return true;
    default: return false;
  }
}

namespace {

// Point group family: 1, 2, m, 2mm, 4, 4mm.
enum class PointFamily { one, two, m, mm2, four, four_mm };

PointFamily family(PlaneType t) {
  switch (t) {
    case PlaneType::p1: return PointFamily::one;
    case PlaneType::p2: return PointFamily::two;
    case PlaneType::pm:
    case PlaneType::pg:
    case PlaneType::cm: return PointFamily::m;
    case PlaneType::pmm:
    case PlaneType::pmg:
    case PlaneType::pgg:
    case PlaneType::cmm: return PointFamily::mm2;
    case PlaneType::p4: return PointFamily::four;
    default: return PointFamily::four_mm;
  }
}

bool family_embeds(PointFamily sub, PointFamily group) {
  if (sub == group || sub == PointFamily::one) return true;
  switch (sub) {
    case PointFamily::two:
      return group == PointFamily::mm2 || group == PointFamily::four || group == PointFamily::four_mm;
    case PointFamily::m: return group == PointFamily::mm2 || group == PointFamily::four_mm;
    case PointFamily::mm2:
    case PointFamily::four: return group == PointFamily::four_mm;
    default: return false;
  }
}

}  // namespace

bool index_two_possible(PlaneType group, PlaneType sub) {
  const int g = point_order(group), s = point_order(sub);
  if (s != g && 2 * s != g) return false;
  return family_embeds(family(sub), family(group));
}

std::string_view name(AxisFrame f) {
  switch (f) {
    case AxisFrame::none: return "none";
    case AxisFrame::rectilinear: return "rectilinear";
    case AxisFrame::diagonal: return "diagonal";
  }
  return "?";
}

namespace {

bool primary_family(PointOp r) { return r == PointOp::MX || r == PointOp::MD; }

struct ReflectionInfo {
  PointOp r;
  bool mirror;
};

}  // namespace

PlaneGroupName plane_group_name(const Lattice2& lattice, std::span<const GridIsometry> coset_reps) {
  std::vector<PointOp> ops;
  std::vector<ReflectionInfo> refl;
  for (const GridIsometry& g : coset_reps) {
    if (std::find(ops.begin(), ops.end(), g.r) != ops.end()) continue;
    ops.push_back(g.r);
    if (is_reflection(g.r)) {
      const Vec2 d = reflection_axis(g.r);
      refl.push_back({g.r, dot(g.t, d) % lattice.projection_step(d) == 0});
    }
  }
  std::sort(refl.begin(), refl.end(), [](const ReflectionInfo& x, const ReflectionInfo& y) {
    return primary_family(x.r) > primary_family(y.r);
  });
  const bool rot4 = std::find(ops.begin(), ops.end(), PointOp::R90) != ops.end();
  const bool rot2 = std::find(ops.begin(), ops.end(), PointOp::R180) != ops.end();

  PlaneGroupName out;
  out.point_order = static_cast<int>(ops.size());
  auto set = [&](PlaneType type, std::string symbol) {
    out.type = type;
    out.symbol = std::move(symbol);
    out.centering = (type == PlaneType::cm || type == PlaneType::cmm) ? 'c' : 'p';
  };
  auto centered = [&](PointOp r) {
    const Vec2 d = reflection_axis(r);
    return lattice.steps_along(d) * dot(d, d) != lattice.projection_step(d);
  };
  if (!refl.empty())
    out.axes = (refl.front().r == PointOp::MX || refl.front().r == PointOp::MY) ? AxisFrame::rectilinear
                                                                                  : AxisFrame::diagonal;
  if (rot4 && refl.size() == 4) out.axes = AxisFrame::rectilinear;

  switch (ops.size()) {
    case 1: set(PlaneType::p1, "p1"); return out;
    case 2:
      if (rot2) {
        set(PlaneType::p2, "p211");
        return out;
      }
      if (refl.size() == 1) {
        const ReflectionInfo& f = refl.front();
        auto symbol = [&](char lat, char kind) {
          return primary_family(f.r) ? std::string{lat, '1', kind, '1'} : std::string{lat, '1', '1', kind};
        };
        if (!f.mirror)
          set(PlaneType::pg, symbol('p', 'g'));
        else if (centered(f.r))
          set(PlaneType::cm, symbol('c', 'm'));
        else
          set(PlaneType::pm, symbol('p', 'm'));
        return out;
      }
      break;
    case 4:
      if (rot4 && refl.empty()) {
        set(PlaneType::p4, "p4");
        return out;
      }
      if (rot2 && refl.size() == 2) {
        const bool m1 = refl[0].mirror, m2 = refl[1].mirror;
        if (centered(refl[0].r)) {
          if (!m1 || !m2) break;
          set(PlaneType::cmm, "c2mm");
        } else if (m1 && m2) {
          set(PlaneType::pmm, "p2mm");
        } else if (m1) {
          set(PlaneType::pmg, "p2mg");
        } else if (m2) {
          set(PlaneType::pmg, "p2gm");
        } else {
          set(PlaneType::pgg, "p2gg");
        }
        return out;
      }
      break;
    case 8: {
      const bool all_mirror =
          std::all_of(refl.begin(), refl.end(), [](const ReflectionInfo& f) { return f.mirror; });
      if (all_mirror)
        set(PlaneType::p4m, "p4mm");
      else
        set(PlaneType::p4g, "p4gm");
      return out;
    }
    default: break;
  }
  throw std::logic_error("plane_group_name: inventory matches no plane group");
}

PlaneGroupName plane_group_of_s(const ColorGroupAnalysis& a) {
  std::vector<GridIsometry> reps;
  for (const auto& e : a.elements) reps.push_back(e.g);
  return plane_group_name(a.lattices.full(), reps);
}

PlaneGroupName plane_group_of_s1(const ColorGroupAnalysis& a) {
  std::vector<GridIsometry> reps;
  for (const auto& e : a.elements)
    if (e.side == Side::s1) reps.push_back(e.g);
  return plane_group_name(a.lattices.preserve, reps);
}

}  // namespace weavesym
