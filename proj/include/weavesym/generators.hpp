#pragma once

#include <vector>

#include "weavesym/design.hpp"

namespace weavesym {

/// Over/under block of a twill: period p = over + under, and cell (i,j) is
/// weft-over iff (i - shift*j) mod p < over.  The block is p x rows.
Design gen_twill(int over, int under, int shift, int rows);

struct StrandColoring {
  std::vector<StrandFaces> warp_faces;
  std::vector<StrandFaces> weft_faces;
};

/// One-sided strands in stripes of x: column i shows black in front ("BW")
/// when floor((i + phase_warp) / x_warp) is even, "WB" otherwise.  Rows
/// likewise with x_weft and phase_weft.
StrandColoring gen_striped_coloring(int x_warp, int x_weft, int phase_warp = 0, int phase_weft = 0);

/// All warps white in front, all wefts black in front: the front view is the
/// over/under design itself.
StrandColoring basket_palette();

WeaveStructure make_structure(Design overunder, StrandColoring coloring);

}  // namespace weavesym
