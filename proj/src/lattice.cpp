#include "weavesym/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace weavesym {

std::string to_string(Vec2 v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

namespace {

std::string half_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

std::string to_string(HalfPoint p) {
  return "(" + half_string(p.x2) + "," + half_string(p.y2) + ")";
}

Lattice2::Lattice2(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a <= 0 || c <= 0 || b < 0 || b >= a)
    throw std::invalid_argument("Lattice2: basis is not in Hermite normal form");
}

Lattice2 Lattice2::from_generators(std::span<const Vec2> generators) {
  std::vector<Vec2> rows(generators.begin(), generators.end());
  // Euclid on the y column until a single row with nonzero y remains.
  for (;;) {
    auto pivot = rows.end();
    for (auto it = rows.begin(); it != rows.end(); ++it)
      if (it->y != 0 && (pivot == rows.end() || std::abs(it->y) < std::abs(pivot->y))) pivot = it;
    if (pivot == rows.end())
      throw std::invalid_argument("Lattice2: generators do not span a rank-2 lattice");
    bool reduced = true;
    const Vec2 p = *pivot;
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it == pivot || it->y == 0) continue;
      const int q = it->y / p.y;
      *it = *it - q * p;
      if (it->y != 0) reduced = false;
    }
    if (reduced) break;
  }
  Vec2 top{};
  int a = 0;
  for (const Vec2& r : rows) {
    if (r.y != 0)
      top = r;
    else
      a = std::gcd(a, std::abs(r.x));
  }
  if (a == 0) throw std::invalid_argument("Lattice2: generators do not span a rank-2 lattice");
  if (top.y < 0) top = -top;
  return Lattice2(a, floor_mod(top.x, a), top.y);
}

bool Lattice2::contains(Vec2 v) const {
  if (floor_mod(v.y, c_) != 0) return false;
  const int k = v.y / c_;
  return floor_mod(v.x - k * b_, a_) == 0;
}

Vec2 Lattice2::reduce(Vec2 v) const {
  const int j = floor_mod(v.y, c_);
  const int k = (v.y - j) / c_;
  return {floor_mod(v.x - k * b_, a_), j};
}

int Lattice2::steps_along(Vec2 d) const {
  for (int m = 1;; ++m)
    if (contains(m * d)) return m;
}

int Lattice2::projection_step(Vec2 d) const {
  return std::gcd(std::abs(dot(basis0(), d)), std::abs(dot(basis1(), d)));
}

std::string to_string(const Lattice2& lattice) {
  return "<" + to_string(lattice.basis0()) + "," + to_string(lattice.basis1()) + ">";
}

}  // namespace weavesym
