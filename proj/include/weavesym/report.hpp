#pragma once

#include <nlohmann/json.hpp>

#include "weavesym/layer_group.hpp"

namespace weavesym {

/// JSON analysis report.  Keys: design, lattices, elements, planeGroupS,
/// planeGroupS1, pairDescriptor, layerSymbol, provisional, inventory.
/// Half-integer coordinates are written as numbers in cell units.
nlohmann::json analysis_report(const Design& d, const Classification& c);

nlohmann::json to_json(const SymmetryElement2D& e);
nlohmann::json to_json(const Lattice2& l);

}  // namespace weavesym
