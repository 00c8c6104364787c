#include "weavesym/generators.hpp"

#include <stdexcept>

namespace weavesym {

Design gen_twill(int over, int under, int shift, int rows) {
  if (over < 0 || under < 0 || over + under < 2)
    throw std::invalid_argument("gen_twill: over + under must be at least 2");
  if (rows < 1) throw std::invalid_argument("gen_twill: rows must be positive");
  const int p = over + under;
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(p * rows));
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < p; ++i) cells.push_back(floor_mod(i - shift * j, p) < over ? 1 : 0);
  return Design(p, rows, std::move(cells));
}

namespace {

std::vector<StrandFaces> stripes(int x, int phase) {
  if (x < 1) throw std::invalid_argument("gen_striped_coloring: stripe width must be positive");
  const StrandFaces bw{StrandColor::black, StrandColor::white};
  const StrandFaces wb{StrandColor::white, StrandColor::black};
  std::vector<StrandFaces> out;
  for (int i = 0; i < 2 * x; ++i) out.push_back(floor_mod(floor_div(i + phase, x), 2) == 0 ? bw : wb);
  return out;
}

}  // namespace

StrandColoring gen_striped_coloring(int x_warp, int x_weft, int phase_warp, int phase_weft) {
  return {stripes(x_warp, phase_warp), stripes(x_weft, phase_weft)};
}

StrandColoring basket_palette() {
  return {{StrandFaces{StrandColor::white, StrandColor::black}},
          {StrandFaces{StrandColor::black, StrandColor::white}}};
}

WeaveStructure make_structure(Design overunder, StrandColoring coloring) {
  return {std::move(overunder), std::move(coloring.warp_faces), std::move(coloring.weft_faces)};
}

}  // namespace weavesym
