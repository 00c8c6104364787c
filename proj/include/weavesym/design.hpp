#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weavesym/isometry.hpp"
#include "weavesym/lattice.hpp"

namespace weavesym {

/// Raised for malformed design or structure files.  The message names the
/// offending line where there is one.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Periodic black/white colouring of the unit-square tiling.  Cell (i,j) is
/// the square [i,i+1]x[j,j+1]; 1 = black = weft over, 0 = white = warp over.
/// The block repeats with periods (width,0) and (0,height).
class Design {
 public:
  Design() : Design(1, 1, {0}) {}
  Design(int width, int height, std::vector<std::uint8_t> cells);

  static Design filled(int width, int height, std::uint8_t value);
  /// Rows given as strings over {'#','.'}; '#' is black.
  static Design from_rows(const std::vector<std::string>& rows);

  int width() const { return width_; }
  int height() const { return height_; }
  int area() const { return width_ * height_; }
  std::span<const std::uint8_t> cells() const { return cells_; }

  std::uint8_t at(int i, int j) const {
    return cells_[static_cast<std::size_t>(floor_mod(j, height_) * width_ + floor_mod(i, width_))];
  }
  std::uint8_t at(Vec2 c) const { return at(c.x, c.y); }

  std::vector<std::string> rows() const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

Design parse_design(std::string_view text);
std::string serialize_design(const Design& d);
Design load_design(const std::string& path);
void save_design(const Design& d, const std::string& path);

Design complement(const Design& d);

/// d' with d'(g(c)) = d(c).  Width and height swap when g swaps directions.
Design transform(const Design& d, const GridIsometry& g);

/// Repeat the block `nx` times horizontally and `ny` times vertically.
Design tile(const Design& d, int nx, int ny);

// ---------------------------------------------------------------------------
// Strand-coloured weave structures

enum class StrandColor : std::uint8_t { white = 0, black = 1 };

struct StrandFaces {
  StrandColor front = StrandColor::white;
  StrandColor back = StrandColor::white;

  bool one_sided() const { return front != back; }
  friend bool operator==(const StrandFaces&, const StrandFaces&) = default;
};

/// "BW" = front black, back white.
StrandFaces parse_faces(std::string_view code);
std::string faces_code(const StrandFaces& f);

struct WeaveStructure {
  Design overunder;                     // 1 = weft passes over warp
  std::vector<StrandFaces> warp_faces;  // per column, repeated periodically
  std::vector<StrandFaces> weft_faces;  // per row, repeated periodically

  friend bool operator==(const WeaveStructure&, const WeaveStructure&) = default;
};

WeaveStructure parse_structure(std::string_view json_text);
std::string serialize_structure(const WeaveStructure& w);
WeaveStructure load_structure(const std::string& path);

enum class Side3D : std::uint8_t { front, back };

/// The black/white pattern seen from one face.  The back view is seen from
/// behind, so its x axis is mirrored relative to the front.  Common period is
/// the lcm of the over/under block and the strand colour sequences.
Design render_visible(const WeaveStructure& w, Side3D side);

/// Horizontal mirror of a block: column i becomes column width-1-i.
Design mirror_columns(const Design& d);

}  // namespace weavesym
