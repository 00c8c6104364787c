#include "weavesym/layer_group.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "layer_pairs_data.hpp"

namespace weavesym {

std::string_view name(LayerKind k) {
  switch (k) {
    case LayerKind::translation: return "translation";
    case LayerKind::glide_plane_through_p: return "glide-plane-through-P";
    case LayerKind::mirror_plane_normal: return "mirror-plane-normal";
    case LayerKind::glide_plane_normal: return "glide-plane-normal";
    case LayerKind::axis2_normal: return "axis2-normal";
    case LayerKind::axis2_in_plane: return "axis2-in-plane";
    case LayerKind::screw2_in_plane: return "screw2-in-plane";
    case LayerKind::inversion_center: return "inversion-center";
    case LayerKind::axis4_normal: return "axis4-normal";
    case LayerKind::rotoinversion4_normal: return "rotoinversion4-normal";
    case LayerKind::mirror_plane_parallel: return "mirror-plane-parallel";
  }
  return "?";
}

LayerElement lift_table1(const std::optional<SymmetryElement2D>& element, Side side) {
  LayerElement out;
  if (!element) return out;  // zero translation
  out.locus = *element;
  const bool s1 = side == Side::s1;
  switch (element->kind) {
    case ElementKind::translation:
      out.kind = s1 ? LayerKind::translation : LayerKind::glide_plane_through_p;
      break;
    case ElementKind::rotation2:
      out.kind = s1 ? LayerKind::axis2_normal : LayerKind::inversion_center;
      break;
    case ElementKind::rotation4:
      out.kind = s1 ? LayerKind::axis4_normal : LayerKind::rotoinversion4_normal;
      break;
    case ElementKind::mirror:
      out.kind = s1 ? LayerKind::mirror_plane_normal : LayerKind::axis2_in_plane;
      break;
    case ElementKind::glide:
      out.kind = s1 ? LayerKind::glide_plane_normal : LayerKind::screw2_in_plane;
      break;
  }
  return out;
}

std::string normalize_layer_symbol(std::string_view symbol) {
  std::string s;
  for (char ch : symbol)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
      s.replace(pos, from.size(), to);
  };
  replace_all("₁", "_1");         // subscript one
  replace_all("\\bar{1}", "-1");       // TeX overbar
  replace_all("\\overline{1}", "-1");
  replace_all("1̄", "-1");        // 1 + combining macron
  replace_all("1̅", "-1");   // 1 + combining overline
  replace_all("_{1}", "_1");
  replace_all("$", "");
  return s;
}

std::string PairTableRow::pair_descriptor() const {
  return "(" + s_symbol + ", " + (s1_symbol == "-" ? std::string("−") : s1_symbol) + ")";
}

namespace {

std::optional<PlaneType> parse_s1(const std::string& text) {
  if (text == "-" || text == "−") return std::nullopt;
  auto t = parse_plane_type(text);
  if (!t) throw std::invalid_argument("pair table: unknown plane group '" + text + "'");
  return t;
}

}  // namespace

PairTable PairTable::parse(std::string_view json_text) {
  const auto j = nlohmann::json::parse(json_text);
  PairTable table;
  table.version_ = j.value("version", 0);
  for (const auto& r : j.at("rows")) {
    PairTableRow row;
    row.s_symbol = r.at("s").get<std::string>();
    row.s1_symbol = r.at("s1").get<std::string>();
    auto s = parse_plane_type(row.s_symbol);
    if (!s) throw std::invalid_argument("pair table: unknown plane group '" + row.s_symbol + "'");
    row.key.s = *s;
    row.key.s1 = parse_s1(row.s1_symbol);
    row.key.s2_kinds = r.at("s2_kinds").get<std::vector<std::string>>();
    std::sort(row.key.s2_kinds.begin(), row.key.s2_kinds.end());
    row.layer = normalize_layer_symbol(r.at("layer").get<std::string>());
    row.source = r.value("source", "");
    table.rows_.push_back(std::move(row));
  }
  return table;
}

PairTable PairTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const PairTable& PairTable::builtin() {
  static const PairTable table = parse(kLayerPairsJson);
  return table;
}

const PairTableRow* PairTable::find(const PairKey& key) const {
  for (const auto& row : rows_)
    if (row.key == key) return &row;
  return nullptr;
}

std::vector<const PairTableRow*> PairTable::find_pair(PlaneType s, std::optional<PlaneType> s1) const {
  std::vector<const PairTableRow*> out;
  for (const auto& row : rows_)
    if (row.key.s == s && row.key.s1 == s1) out.push_back(&row);
  return out;
}

std::vector<const PairTableRow*> PairTable::find_layer(std::string_view symbol) const {
  const std::string canon = normalize_layer_symbol(symbol);
  std::vector<const PairTableRow*> out;
  for (const auto& row : rows_)
    if (row.layer == canon) out.push_back(&row);
  return out;
}

PairKey pair_key(const ColorGroupAnalysis& a) {
  PairKey key;
  key.s = plane_group_of_s(a).type;
  for (const auto& e : a.elements)
    if (e.side == Side::s2 && e.element) key.s2_kinds.emplace_back(name(e.element->kind));
  std::sort(key.s2_kinds.begin(), key.s2_kinds.end());
  if (!key.s2_kinds.empty()) key.s1 = plane_group_of_s1(a).type;
  return key;
}

namespace {

LayerGroupName name_from(const ColorGroupAnalysis& a, const PlaneGroupName& s, const PlaneGroupName& s1,
                         const PairKey& key, const PairTable& table) {
  LayerGroupName out;
  for (const auto& e : a.elements) out.inventory.push_back(lift_table1(e.element, e.side));
  if (const PairTableRow* row = table.find(key)) {
    out.symbol = row->layer;
    out.pair_descriptor = row->pair_descriptor();
    out.provisional = false;
    out.source = row->source;
  } else {
    out.symbol = "unassigned";
    out.pair_descriptor = "(" + s.symbol + ", " + (key.s1 ? s1.symbol : std::string("−")) + ")";
    out.provisional = true;
  }
  return out;
}

}  // namespace

LayerGroupName layer_group_name(const ColorGroupAnalysis& a, const PairTable& table) {
  return name_from(a, plane_group_of_s(a), plane_group_of_s1(a), pair_key(a), table);
}

Classification classify(const Design& d, const PairTable& table) {
  Classification c;
  c.analysis = color_group(d);
  c.s = plane_group_of_s(c.analysis);
  c.s1 = plane_group_of_s1(c.analysis);
  c.key = pair_key(c.analysis);
  c.layer = name_from(c.analysis, c.s, c.s1, c.key, table);
  return c;
}

std::string summary_line(const Classification& c) {
  std::string line = c.layer.pair_descriptor + " → " + c.layer.symbol;
  if (c.layer.provisional) line += " (provisional)";
  return line;
}

}  // namespace weavesym
