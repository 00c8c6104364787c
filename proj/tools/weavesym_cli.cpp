// Command-line front end: analyze, render-weave, generate, search, catalog.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "weavesym/catalog.hpp"
#include "weavesym/diagram.hpp"
#include "weavesym/generators.hpp"
#include "weavesym/report.hpp"
#include "weavesym/search.hpp"

namespace {

using namespace weavesym;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::pair<int, int> parse_block(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw std::invalid_argument("block size must look like WxH, got '" + text + "'");
  const int w = std::stoi(text.substr(0, x)), h = std::stoi(text.substr(x + 1));
  if (w < 1 || h < 1) throw std::invalid_argument("block size must be positive");
  return {w, h};
}

struct AnalyzeArgs {
  std::string design;
  std::string json_out, svg_color, svg_layer, table;
};

int run_analyze(const AnalyzeArgs& args) {
  const Design d = load_design(args.design);
  std::optional<PairTable> custom;
  if (!args.table.empty()) custom = PairTable::load(args.table);
  const Classification c = classify(d, custom ? *custom : PairTable::builtin());
  std::cout << summary_line(c) << '\n';
  if (!args.json_out.empty()) write_file(args.json_out, analysis_report(d, c).dump(2) + "\n");
  if (!args.svg_color.empty()) write_file(args.svg_color, emit_color_group_svg(d, c.analysis));
  if (!args.svg_layer.empty())
    write_file(args.svg_layer, emit_layer_svg(c.layer.inventory, c.analysis.lattices.preserve));
  return 0;
}

struct RenderArgs {
  std::string structure, side = "front", out;
};

int run_render(const RenderArgs& args) {
  const WeaveStructure w = load_structure(args.structure);
  const Design d = render_visible(w, args.side == "back" ? Side3D::back : Side3D::front);
  if (args.out.empty())
    std::cout << serialize_design(d);
  else
    save_design(d, args.out);
  return 0;
}

struct TwillArgs {
  int over = 2, under = 2, shift = 1, rows = 0;
  int stripe_warp = 0, stripe_weft = 0, phase_warp = 0, phase_weft = 0;
  std::string out;
};

int run_twill(const TwillArgs& args) {
  const int rows = args.rows > 0 ? args.rows : args.over + args.under;
  Design ou = gen_twill(args.over, args.under, args.shift, rows);
  StrandColoring colouring = basket_palette();
  if (args.stripe_warp > 0 || args.stripe_weft > 0)
    colouring = gen_striped_coloring(args.stripe_warp > 0 ? args.stripe_warp : 1,
                                     args.stripe_weft > 0 ? args.stripe_weft : 1, args.phase_warp, args.phase_weft);
  const std::string text = serialize_structure(make_structure(std::move(ou), std::move(colouring)));
  if (args.out.empty())
    std::cout << text;
  else
    write_file(args.out, text);
  return 0;
}

struct SearchArgs {
  std::string pair, layer, max_block = "8x8", out_dir;
  std::size_t limit = 5;
  int exhaustive_area = 12;
};

int run_search(const SearchArgs& args) {
  const SearchTarget target = args.pair.empty() ? layer_target(args.layer) : parse_pair_target(args.pair);
  SearchOptions options;
  std::tie(options.max_width, options.max_height) = parse_block(args.max_block);
  options.limit = args.limit;
  options.exhaustive_area = args.exhaustive_area;
  const auto hits = search_designs(target, options);
  if (!args.out_dir.empty()) std::filesystem::create_directories(args.out_dir);
  int k = 0;
  for (const auto& hit : hits) {
    ++k;
    std::cout << "# " << k << ": " << hit.design.width() << "x" << hit.design.height() << "  "
              << summary_line(hit.classification) << "  [" << hit.classification.s.symbol << ", "
              << (hit.classification.key.s1 ? hit.classification.s1.symbol : std::string("−")) << "]\n";
    for (const auto& row : hit.design.rows()) std::cout << row << '\n';
    if (!args.out_dir.empty())
      save_design(hit.design, (std::filesystem::path(args.out_dir) / ("hit" + std::to_string(k) + ".weave")).string());
  }
  if (hits.empty()) {
    std::cerr << "no design matching " << target.label << " within " << args.max_block << "\n";
    return 1;
  }
  return 0;
}

int run_catalog(const std::string& action, const std::string& manifest) {
  const Catalog catalog = load_manifest(manifest);
  const CatalogReport report = verify_catalog(catalog);
  if (action == "verify") {
    std::cout << format_report(report);
    return report.ok() ? 0 : 1;
  }
  const CatalogStats stats = catalog_stats(catalog, &report);
  std::cout << format_stats(stats);
  return stats.entries > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry groups of two-colour woven designs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Classify a design file");
  a->add_option("design", analyze.design, "weave-design v1 file")->required()->check(CLI::ExistingFile);
  a->add_option("--json", analyze.json_out, "Write the JSON report here");
  a->add_option("--svg-color", analyze.svg_color, "Write the colour-group diagram here");
  a->add_option("--svg-layer", analyze.svg_layer, "Write the layer-group diagram here");
  a->add_option("--table", analyze.table, "Pair table (JSON) to use instead of the built-in one");

  RenderArgs render;
  auto* r = app.add_subcommand("render-weave", "Render one face of a weave structure as a design");
  r->add_option("structure", render.structure, "Structure JSON file")->required()->check(CLI::ExistingFile);
  r->add_option("--side", render.side, "front or back")->check(CLI::IsMember({"front", "back"}));
  r->add_option("--out", render.out, "Output design file (stdout if omitted)");

  TwillArgs twill;
  auto* g = app.add_subcommand("generate", "Generate weave structures");
  g->require_subcommand(1);
  auto* t = g->add_subcommand("twill", "Twill over/under block with optional striped strands");
  t->add_option("--over", twill.over)->check(CLI::NonNegativeNumber);
  t->add_option("--under", twill.under)->check(CLI::NonNegativeNumber);
  t->add_option("--shift", twill.shift);
  t->add_option("--rows", twill.rows, "Block height (default over+under)");
  t->add_option("--stripe-warp", twill.stripe_warp, "Warp stripe width")->check(CLI::PositiveNumber);
  t->add_option("--stripe-weft", twill.stripe_weft, "Weft stripe width")->check(CLI::PositiveNumber);
  t->add_option("--phase-warp", twill.phase_warp);
  t->add_option("--phase-weft", twill.phase_weft);
  t->add_option("--out", twill.out, "Output structure file (stdout if omitted)");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Find designs realising a pair or layer group");
  auto* pair_opt = s->add_option("--pair", search.pair, "Target pair, e.g. \"c2mm,c1m1\"");
  auto* layer_opt = s->add_option("--layer", search.layer, "Target layer group symbol");
  pair_opt->excludes(layer_opt);
  s->add_option("--max-block", search.max_block, "Largest block, WxH");
  s->add_option("--limit", search.limit, "Maximum number of designs");
  s->add_option("--exhaustive-area", search.exhaustive_area, "Enumerate every block up to this many cells");
  s->add_option("--out-dir", search.out_dir, "Also write each hit as a design file here");

  std::string catalog_action, manifest;
  auto* c = app.add_subcommand("catalog", "Verify the pattern catalog or print statistics");
  c->add_option("action", catalog_action, "verify or stats")->required()->check(CLI::IsMember({"verify", "stats"}));
  c->add_option("--manifest", manifest, "Manifest JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (a->parsed()) return run_analyze(analyze);
    if (r->parsed()) return run_render(render);
    if (t->parsed()) return run_twill(twill);
    if (s->parsed()) {
      if (search.pair.empty() && search.layer.empty()) throw std::invalid_argument("search needs --pair or --layer");
      return run_search(search);
    }
    if (c->parsed()) return run_catalog(catalog_action, manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
