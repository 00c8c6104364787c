#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "weavesym/design.hpp"
#include "weavesym/isometry.hpp"
#include "weavesym/lattice.hpp"

namespace weavesym {

using Chi = ColorAction;  // restricted to preserve | swap inside an analysis

enum class Side : std::uint8_t { s1, s2 };
std::string_view name(Side s);

/// Translations of a design.  `preserve` is the lattice of colour-preserving
/// translations; colour-swapping translations, when present, are the single
/// coset swap_rep + preserve.
struct TranslationLattices {
  Lattice2 preserve;
  std::optional<Vec2> swap_rep;

  /// Translation lattice of the whole colour group.
  Lattice2 full() const;
  friend bool operator==(const TranslationLattices&, const TranslationLattices&) = default;
};

enum class ElementKind : std::uint8_t { translation, rotation2, rotation4, mirror, glide };
std::string_view name(ElementKind k);

/// Geometric locus of a plane isometry.  Which fields are meaningful depends
/// on `kind`: `vector` for translations and glides, `center` for rotations,
/// `axis` + `anchor` for mirrors and glides.  Diagonal axes are anchored on
/// y = 0, horizontal axes on x = 0, vertical axes on y = 0.
struct SymmetryElement2D {
  ElementKind kind = ElementKind::translation;
  HalfPoint center{};
  Vec2 axis{};
  HalfPoint anchor{};
  HalfPoint vector{};

  friend bool operator==(const SymmetryElement2D&, const SymmetryElement2D&) = default;
};

/// Locate g's fixed point / invariant line.  For reflections, g is first
/// recomposed with a lattice translation so the glide part is as short as
/// possible; the kind is mirror iff that glide part vanishes.  Returns
/// nullopt for the identity (and for lattice translations).
std::optional<SymmetryElement2D> locate_element(const GridIsometry& g, const Lattice2& lattice);

/// The isometry (g composed with a lattice translation) whose locus
/// locate_element reports.
GridIsometry shortest_representative(const GridIsometry& g, const Lattice2& lattice);

/// Side-preserving iff the colour sign times the direction sign is +1:
/// a direction-swapping move turns weft-over into warp-over.
Side side_split_rule(Chi chi, int delta);

struct ElementRecord {
  GridIsometry g;  // t reduced modulo the preserving lattice
  Chi chi = Chi::preserve;
  Side side = Side::s1;
  std::optional<SymmetryElement2D> element;  // nullopt for the identity

  friend bool operator==(const ElementRecord&, const ElementRecord&) = default;
};

/// A design presented on a fundamental domain [0,a) x [0,c) of an HNF lattice.
struct ReducedDesign {
  Lattice2 lattice;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(Vec2 c) const { return cells[static_cast<std::size_t>(lattice.slot(c))]; }
  friend bool operator==(const ReducedDesign&, const ReducedDesign&) = default;
};

struct ColorGroupAnalysis {
  TranslationLattices lattices;
  std::vector<ElementRecord> elements;  // the finite group S / preserving lattice
  ReducedDesign design;

  std::size_t count(Side s) const;
  bool has_rotation4() const;
};

TranslationLattices translation_lattices(const Design& d);

/// Smallest rectangular block (a x b, anchored at the origin) that repeats d.
Design minimal_block(const Design& d);

/// Colour group of d with chi and side tags, listed modulo the preserving
/// translation lattice.  Order: point op (I, R90, ..., MA), then the
/// translation representative in row-major order of the fundamental domain.
ColorGroupAnalysis color_group(const Design& d);

/// Colour action of g on a reduced design.  g must map the lattice to itself.
ColorAction color_action(const GridIsometry& g, const ReducedDesign& d);

}  // namespace weavesym
