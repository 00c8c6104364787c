#pragma once

// Shared helpers for the test programs: random designs and two independent
// oracles (a brute-force symmetry checker and a strand-stack view simulator).

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "weavesym/color_group.hpp"
#include "weavesym/design.hpp"
#include "weavesym/isometry.hpp"

namespace testing_support {

using namespace weavesym;

inline Design random_design(std::mt19937_64& rng, int max_w, int max_h) {
  std::uniform_int_distribution<int> wd(1, max_w), hd(1, max_h), bit(0, 1);
  const int w = wd(rng), h = hd(rng);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w * h));
  for (auto& c : cells) c = static_cast<std::uint8_t>(bit(rng));
  return Design(w, h, std::move(cells));
}

inline Design design_from_bits(int w, int h, std::uint64_t bits) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w * h));
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k] = static_cast<std::uint8_t>((bits >> k) & 1U);
  return Design(w, h, std::move(cells));
}

// One symmetry (or anti-symmetry) of a design, with its translation taken
// modulo the block rectangle (W,0),(0,H).
struct RawElement {
  int op = 0;  // index into kAllPointOps
  int tx = 0, ty = 0;
  int chi = 1;  // +1 preserve, -1 swap
  int side = 1;  // 1 or 2

  friend auto operator<=>(const RawElement&, const RawElement&) = default;
};

// The 2x2 integer matrices of the square's symmetries, written out here
// rather than taken from the library.
inline constexpr int kOracleMatrices[8][4] = {
    {1, 0, 0, 1}, {0, -1, 1, 0}, {-1, 0, 0, -1}, {0, 1, -1, 0},
    {1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, -1, 0},
};

inline int mod(int a, int m) { return ((a % m) + m) % m; }
inline int fdiv(int a, int m) { return (a - mod(a, m)) / m; }

// Tests every point op with every translation in [0,W)x[0,H) against the
// design cell by cell over an M x M window, M = lcm(W,H).  No lattice is
// computed: d and d o g are both (M,0),(0,M)-periodic, so the window decides.
inline std::set<RawElement> brute_force_group(const Design& d) {
  const int w = d.width(), h = d.height();
  const int m = std::lcm(w, h);
  auto value = [&](int i, int j) { return d.cells()[static_cast<std::size_t>(mod(j, h) * w + mod(i, w))]; };
  std::set<RawElement> out;
  for (int op = 0; op < 8; ++op) {
    const int* a = kOracleMatrices[op];
    for (int ty = 0; ty < h; ++ty) {
      for (int tx = 0; tx < w; ++tx) {
        bool same = true, opposite = true;
        for (int j = 0; j < m && (same || opposite); ++j) {
          for (int i = 0; i < m && (same || opposite); ++i) {
            // Cell centre (i+1/2, j+1/2), doubled, through x -> A x + t.
            const int cx = 2 * i + 1, cy = 2 * j + 1;
            const int ix = a[0] * cx + a[1] * cy + 2 * tx, iy = a[2] * cx + a[3] * cy + 2 * ty;
            const int ci = fdiv(ix - 1, 2), cj = fdiv(iy - 1, 2);
            const auto here = value(i, j), there = value(ci, cj);
            if (here != there) same = false;
            if (here == there) opposite = false;
          }
        }
        if (!same && !opposite) continue;
        RawElement e;
        e.op = op;
        e.tx = tx;
        e.ty = ty;
        e.chi = same ? 1 : -1;
        const int delta = a[1] == 0 ? 1 : -1;
        e.side = e.chi * delta == 1 ? 1 : 2;
        out.insert(e);
      }
    }
  }
  return out;
}

// The pipeline's elements, expanded from the preserving lattice to the block
// rectangle so they can be compared with brute_force_group.
inline std::set<RawElement> expand_pipeline(const Design& d, const ColorGroupAnalysis& a) {
  const int w = d.width(), h = d.height();
  const Lattice2& lp = a.lattices.preserve;
  std::set<RawElement> out;
  for (const auto& rec : a.elements) {
    int op = 0;
    while (kAllPointOps[static_cast<std::size_t>(op)] != rec.g.r) ++op;
    for (int vy = 0; vy < h; ++vy) {
      for (int vx = 0; vx < w; ++vx) {
        if (!lp.contains({vx, vy})) continue;
        RawElement e;
        e.op = op;
        e.tx = mod(rec.g.t.x + vx, w);
        e.ty = mod(rec.g.t.y + vy, h);
        e.chi = rec.chi == ColorAction::swap ? -1 : 1;
        e.side = rec.side == Side::s1 ? 1 : 2;
        out.insert(e);
      }
    }
  }
  return out;
}

// Visible pattern from one face, by stacking the two strands at each
// crossing and reading off the nearest face.  The back viewer's column X is
// world column -1-X.
inline int simulate_view(const WeaveStructure& w, bool back, int x, int y) {
  const int world_x = back ? -1 - x : x;
  const int nu = static_cast<int>(w.warp_faces.size()), nv = static_cast<int>(w.weft_faces.size());
  const StrandFaces warp = w.warp_faces[static_cast<std::size_t>(mod(world_x, nu))];
  const StrandFaces weft = w.weft_faces[static_cast<std::size_t>(mod(y, nv))];
  const bool weft_on_top = w.overunder.at(world_x, y) == 1;
  // stack[0] faces the front viewer, stack[1] the back viewer.
  const StrandFaces stack[2] = {weft_on_top ? weft : warp, weft_on_top ? warp : weft};
  const StrandColor seen = back ? stack[1].back : stack[0].front;
  return seen == StrandColor::black ? 1 : 0;
}

}  // namespace testing_support
