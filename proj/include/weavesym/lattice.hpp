#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace weavesym {

/// Integer vector / cell index in Z^2.  x grows rightward, y grows downward.
struct Vec2 {
  int x = 0;
  int y = 0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(int k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr int dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

std::string to_string(Vec2 v);

/// A point of (1/2)Z^2 stored as twice its coordinates.  Rotation centres,
/// axis anchors and glide vectors of the square tiling all live here.
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;

  static constexpr HalfPoint from_cell_units(Vec2 v) { return {2 * v.x, 2 * v.y}; }
  friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
  constexpr double x() const { return x2 / 2.0; }
  constexpr double y() const { return y2 / 2.0; }
};

/// "3/2", "-1", "0" style rendering of a half-integer coordinate pair.
std::string to_string(HalfPoint p);

constexpr int floor_mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

constexpr int floor_div(int a, int m) { return (a - floor_mod(a, m)) / m; }

/// Full-rank sublattice of Z^2 held in Hermite normal form: basis vectors
/// (a, 0) and (b, c) with a, c > 0 and 0 <= b < a.  Every full-rank
/// sublattice has exactly one such basis, so equality is structural.
class Lattice2 {
 public:
  Lattice2() = default;
  Lattice2(int a, int b, int c);

  /// HNF of the lattice spanned by `generators`; throws std::invalid_argument
  /// if they do not span a rank-2 lattice.
  static Lattice2 from_generators(std::span<const Vec2> generators);
  static Lattice2 rectangular(int width, int height) { return {width, 0, height}; }

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  Vec2 basis0() const { return {a_, 0}; }
  Vec2 basis1() const { return {b_, c_}; }
  int index() const { return a_ * c_; }

  bool contains(Vec2 v) const;
  /// Canonical coset representative, lying in [0,a) x [0,c).
  Vec2 reduce(Vec2 v) const;
  /// Linear index of reduce(v) in the fundamental domain, row-major.
  int slot(Vec2 v) const {
    const Vec2 r = reduce(v);
    return r.y * a_ + r.x;
  }
  /// Smallest m > 0 with m*d in the lattice.
  int steps_along(Vec2 d) const;
  /// gcd of the projections <v, d> over the lattice (scalar units of <., d>).
  int projection_step(Vec2 d) const;

  friend bool operator==(const Lattice2&, const Lattice2&) = default;

 private:
  int a_ = 1;
  int b_ = 0;
  int c_ = 1;
};

std::string to_string(const Lattice2& lattice);

}  // namespace weavesym
