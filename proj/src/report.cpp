#include "weavesym/report.hpp"

namespace weavesym {

namespace {

nlohmann::json point(HalfPoint p) { return {p.x2 / 2.0, p.y2 / 2.0}; }
nlohmann::json vec(Vec2 v) { return {v.x, v.y}; }

nlohmann::json plane_group(const PlaneGroupName& g) {
  return {{"symbol", g.symbol},
          {"type", short_name(g.type)},
          {"centering", std::string(1, g.centering)},
          {"pointOrder", g.point_order},
          {"axes", name(g.axes)}};
}

}  // namespace

nlohmann::json to_json(const Lattice2& l) {
  return {{"basis", {vec(l.basis0()), vec(l.basis1())}}, {"index", l.index()}};
}

nlohmann::json to_json(const SymmetryElement2D& e) {
  nlohmann::json j{{"kind", name(e.kind)}};
  switch (e.kind) {
    case ElementKind::translation: j["vector"] = point(e.vector); break;
    case ElementKind::rotation2:
    case ElementKind::rotation4: j["center"] = point(e.center); break;
    case ElementKind::mirror:
      j["axis"] = vec(e.axis);
      j["anchor"] = point(e.anchor);
      break;
    case ElementKind::glide:
      j["axis"] = vec(e.axis);
      j["anchor"] = point(e.anchor);
      j["vector"] = point(e.vector);
      break;
  }
  return j;
}

nlohmann::json analysis_report(const Design& d, const Classification& c) {
  const ColorGroupAnalysis& a = c.analysis;
  nlohmann::json lattices{{"preserve", to_json(a.lattices.preserve)}, {"full", to_json(a.lattices.full())}};
  lattices["swapRep"] = a.lattices.swap_rep ? vec(*a.lattices.swap_rep) : nlohmann::json(nullptr);

  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : a.elements) {
    elements.push_back({{"pointOp", name(e.g.r)},
                        {"t", vec(e.g.t)},
                        {"chi", sign(e.chi)},
                        {"side", name(e.side)},
                        {"element", e.element ? to_json(*e.element) : nlohmann::json{{"kind", "identity"}}}});
  }
  nlohmann::json inventory = nlohmann::json::array();
  for (const auto& l : c.layer.inventory) {
    nlohmann::json locus = to_json(l.locus);
    locus.erase("kind");
    inventory.push_back({{"kind", name(l.kind)}, {"locus", locus}});
  }
  return {{"design", {{"width", d.width()}, {"height", d.height()}, {"rows", d.rows()}}},
          {"lattices", lattices},
          {"elements", elements},
          {"planeGroupS", plane_group(c.s)},
          {"planeGroupS1", plane_group(c.s1)},
          {"pairDescriptor", c.layer.pair_descriptor},
          {"layerSymbol", c.layer.symbol},
          {"provisional", c.layer.provisional},
          {"inventory", inventory},
          {"s2Kinds", c.key.s2_kinds}};
}

}  // namespace weavesym
