#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weavesym/catalog.hpp"
#include "weavesym/diagram.hpp"
#include "weavesym/generators.hpp"
#include "weavesym/report.hpp"
#include "weavesym/search.hpp"

namespace py = pybind11;
using namespace weavesym;

namespace {

Design design_from(const std::vector<std::string>& rows) { return Design::from_rows(rows); }

std::string report_json(const std::vector<std::string>& rows) {
  const Design d = design_from(rows);
  return analysis_report(d, classify(d)).dump();
}

std::vector<std::pair<std::vector<std::string>, std::string>> search(const std::string& pair, const std::string& layer,
                                                                     int max_width, int max_height,
                                                                     std::size_t limit) {
  const SearchTarget target = layer.empty() ? parse_pair_target(pair) : layer_target(layer);
  SearchOptions options;
  options.max_width = max_width;
  options.max_height = max_height;
  options.limit = limit;
  std::vector<std::pair<std::vector<std::string>, std::string>> out;
  for (const auto& hit : search_designs(target, options))
    out.emplace_back(hit.design.rows(), summary_line(hit.classification));
  return out;
}

WeaveStructure structure_from(const std::vector<std::string>& overunder, const std::vector<std::string>& warp,
                              const std::vector<std::string>& weft) {
  WeaveStructure w;
  w.overunder = design_from(overunder);
  for (const auto& f : warp) w.warp_faces.push_back(parse_faces(f));
  for (const auto& f : weft) w.weft_faces.push_back(parse_faces(f));
  return w;
}

}  // namespace

PYBIND11_MODULE(_weavesym, m) {
  m.doc() = "Colour and layer symmetry groups of two-colour woven designs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse_design", [](const std::string& text) { return parse_design(text).rows(); }, py::arg("text"),
        "Parse weave-design v1 text into rows of '#'/'.'.");
  m.def("serialize_design", [](const std::vector<std::string>& rows) { return serialize_design(design_from(rows)); },
        py::arg("rows"));
  m.def("summary", [](const std::vector<std::string>& rows) { return summary_line(classify(design_from(rows))); },
        py::arg("rows"), "Pair descriptor and layer symbol, e.g. '(c2mm, c1m1) → c2/m11'.");
  m.def("layer_symbol", [](const std::vector<std::string>& rows) { return classify(design_from(rows)).layer.symbol; },
        py::arg("rows"));
  m.def("_report_json", &report_json, py::arg("rows"));
  m.def("_search", &search, py::arg("pair"), py::arg("layer"), py::arg("max_width"), py::arg("max_height"),
        py::arg("limit"));
  m.def("gen_twill", [](int over, int under, int shift, int rows) { return gen_twill(over, under, shift, rows).rows(); },
        py::arg("over"), py::arg("under"), py::arg("shift"), py::arg("rows"));
  m.def(
      "render_visible",
      [](const std::vector<std::string>& overunder, const std::vector<std::string>& warp_faces,
         const std::vector<std::string>& weft_faces, const std::string& side) {
        return render_visible(structure_from(overunder, warp_faces, weft_faces),
                              side == "back" ? Side3D::back : Side3D::front)
            .rows();
      },
      py::arg("overunder"), py::arg("warp_faces"), py::arg("weft_faces"), py::arg("side") = "front");
  m.def(
      "color_group_svg",
      [](const std::vector<std::string>& rows) {
        const Design d = design_from(rows);
        return emit_color_group_svg(d, color_group(d));
      },
      py::arg("rows"));
  m.def(
      "layer_svg",
      [](const std::vector<std::string>& rows) {
        const Classification c = classify(design_from(rows));
        return emit_layer_svg(c.layer.inventory, c.analysis.lattices.preserve);
      },
      py::arg("rows"));
  m.def(
      "verify_catalog",
      [](const std::string& manifest) {
        const Catalog catalog = load_manifest(manifest);
        const CatalogReport report = verify_catalog(catalog);
        return py::make_tuple(report.ok(), format_report(report));
      },
      py::arg("manifest"));
  m.def(
      "catalog_stats",
      [](const std::string& manifest) {
        const Catalog catalog = load_manifest(manifest);
        const CatalogReport report = verify_catalog(catalog);
        const CatalogStats s = catalog_stats(catalog, &report);
        py::dict out;
        out["entries"] = s.entries;
        out["baskets"] = s.baskets;
        out["non_baskets"] = s.non_baskets;
        out["glide_entries"] = s.glide_entries;
        out["glide_fraction"] = s.glide_fraction;
        out["by_layer"] = s.by_layer;
        out["verified"] = s.verified;
        out["computed_fourfold"] = s.computed_fourfold;
        return out;
      },
      py::arg("manifest"));
}
