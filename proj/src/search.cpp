#include "weavesym/search.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace weavesym {

namespace {

constexpr std::array<std::string_view, 16> kOrientedSymbols{
    "p1",   "p211", "p1m1", "p11m", "p1g1", "p11g", "c1m1", "c11m",
    "p2mm", "p2mg", "p2gm", "p2gg", "c2mm", "p4",   "p4mm", "p4gm",
};

bool is_oriented(std::string_view s) {
  return std::find(kOrientedSymbols.begin(), kOrientedSymbols.end(), s) != kOrientedSymbols.end();
}

// Oriented spelling for short names that have only one orientation.
std::optional<std::string> default_orientation(PlaneType t) {
  switch (t) {
    case PlaneType::p1: return "p1";
    case PlaneType::p2: return "p211";
    case PlaneType::pmm: return "p2mm";
    case PlaneType::pgg: return "p2gg";
    case PlaneType::cmm: return "c2mm";
    case PlaneType::p4: return "p4";
    case PlaneType::p4m: return "p4mm";
    case PlaneType::p4g: return "p4gm";
    default: return std::nullopt;
  }
}

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t' && ch != '(' && ch != ')') out.push_back(ch);
  return out;
}

bool is_empty_marker(const std::string& s) { return s.empty() || s == "-" || s == "−"; }

PlaneType require_type(const std::string& s) {
  auto t = parse_plane_type(s);
  if (!t) throw std::invalid_argument("unknown plane group '" + s + "'");
  return *t;
}

}  // namespace

bool SearchTarget::matches(const Classification& c) const {
  if (!keys.empty()) return std::find(keys.begin(), keys.end(), c.key) != keys.end();
  return c.key.s == s && c.key.s1 == s1;
}

SearchTarget parse_pair_target(std::string_view text, const PairTable& table) {
  const std::string cleaned = trim(text);
  const auto comma = cleaned.find(',');
  if (comma == std::string::npos || cleaned.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("expected a pair \"S,S1\", got '" + std::string(text) + "'");
  const std::string s_text = cleaned.substr(0, comma);
  const std::string s1_text = cleaned.substr(comma + 1);

  SearchTarget target;
  target.s = require_type(s_text);
  if (!is_empty_marker(s1_text)) target.s1 = require_type(s1_text);
  target.label = "(" + s_text + ", " + (target.s1 ? s1_text : std::string("−")) + ")";
  if (target.s1 && !index_two_possible(target.s, *target.s1))
    throw std::invalid_argument("invalid target " + target.label + ": S₁ must be a subgroup of S of index 2");

  const auto rows = table.find_pair(target.s, target.s1);
  for (const PairTableRow* row : rows) target.keys.push_back(row->key);

  if (is_oriented(s_text))
    target.s_symbol = s_text;
  else if (!rows.empty() && is_oriented(rows.front()->s_symbol))
    target.s_symbol = rows.front()->s_symbol;
  else
    target.s_symbol = default_orientation(target.s);
  if (target.s1) {
    if (is_oriented(s1_text))
      target.s1_symbol = s1_text;
    else if (!rows.empty() && is_oriented(rows.front()->s1_symbol))
      target.s1_symbol = rows.front()->s1_symbol;
    else
      target.s1_symbol = default_orientation(*target.s1);
  }
  return target;
}

SearchTarget layer_target(std::string_view symbol, const PairTable& table) {
  const auto rows = table.find_layer(symbol);
  if (rows.empty()) throw std::invalid_argument("unknown layer group '" + std::string(symbol) + "'");
  SearchTarget target;
  target.label = normalize_layer_symbol(symbol);
  target.s = rows.front()->key.s;
  target.s1 = rows.front()->key.s1;
  for (const PairTableRow* row : rows) target.keys.push_back(row->key);
  target.s_symbol = rows.front()->s_symbol;
  if (rows.front()->s1_symbol != "-") target.s1_symbol = rows.front()->s1_symbol;
  return target;
}

Design orbit_canonical(const Design& d) {
  const Design m = minimal_block(d);
  std::optional<Design> best;
  std::vector<std::uint8_t> cells;
  for (PointOp r : kAllPointOps) {
    const Design t = transform(m, {r, {0, 0}});
    const int w = t.width(), h = t.height();
    for (int flip = 0; flip < 2; ++flip) {
      for (int ty = 0; ty < h; ++ty) {
        for (int tx = 0; tx < w; ++tx) {
          cells.clear();
          for (int j = 0; j < h; ++j)
            for (int i = 0; i < w; ++i) cells.push_back(static_cast<std::uint8_t>(t.at(i + tx, j + ty) ^ flip));
          const bool better = !best || std::make_pair(w, h) < std::make_pair(best->width(), best->height()) ||
                              (w == best->width() && h == best->height() &&
                               std::lexicographical_compare(cells.begin(), cells.end(), best->cells().begin(),
                                                            best->cells().end()));
          if (better) best = Design(w, h, cells);
        }
      }
    }
  }
  return *best;
}

namespace {

struct Generator {
  GridIsometry g;
  bool swap = false;
};

// Point-op generators for each orientation class of a plane type.  The
// conjugates MY and MA need not be listed: hits are re-oriented afterwards.
std::vector<std::vector<PointOp>> generator_ops(PlaneType t) {
  switch (t) {
    case PlaneType::p1: return {{}};
    case PlaneType::p2: return {{PointOp::R180}};
    case PlaneType::pm:
    case PlaneType::pg:
    case PlaneType::cm: return {{PointOp::MX}, {PointOp::MD}};
    case PlaneType::pmm:
    case PlaneType::pmg:
    case PlaneType::pgg:
    case PlaneType::cmm: return {{PointOp::MX, PointOp::MY}, {PointOp::MD, PointOp::MA}};
    case PlaneType::p4: return {{PointOp::R90}};
    case PlaneType::p4m:
    case PlaneType::p4g: return {{PointOp::R90, PointOp::MX}, {PointOp::R90, PointOp::MD}};
  }
  return {{}};
}

class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  std::pair<int, std::uint8_t> find(int x) {
    std::uint8_t p = 0;
    int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      p ^= parity_[static_cast<std::size_t>(root)];
      root = parent_[static_cast<std::size_t>(root)];
    }
    // Path compression with parity fix-up.
    std::uint8_t acc = p;
    while (parent_[static_cast<std::size_t>(x)] != x) {
      const int next = parent_[static_cast<std::size_t>(x)];
      const std::uint8_t step = parity_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      parity_[static_cast<std::size_t>(x)] = acc;
      acc ^= step;
      x = next;
    }
    return {root, p};
  }

  // False on a parity conflict.
  bool unite(int a, int b, std::uint8_t parity) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[static_cast<std::size_t>(ra)] = rb;
    parity_[static_cast<std::size_t>(ra)] = static_cast<std::uint8_t>(pa ^ pb ^ parity);
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
};

// Canonical translations of a first generator with point op r on the W x H
// torus, up to conjugation by translations (which only shifts the design).
std::vector<Vec2> reduced_translations(PointOp r, int w, int h) {
  std::vector<Vec2> shifts;
  for (int uy = 0; uy < h; ++uy)
    for (int ux = 0; ux < w; ++ux) {
      const Vec2 u{ux, uy};
      const Vec2 v = u - apply(r, u);
      shifts.push_back({floor_mod(v.x, w), floor_mod(v.y, h)});
    }
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  std::vector<Vec2> reps;
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(w * h), 0);
  for (int ty = 0; ty < h; ++ty)
    for (int tx = 0; tx < w; ++tx) {
      if (covered[static_cast<std::size_t>(ty * w + tx)]) continue;
      reps.push_back({tx, ty});
      for (const Vec2& s : shifts)
        covered[static_cast<std::size_t>(floor_mod(ty + s.y, h) * w + floor_mod(tx + s.x, w))] = 1;
    }
  return reps;
}

bool has_smaller_period(const std::vector<std::uint8_t>& cells, int w, int h) {
  auto periodic = [&](int dx, int dy) {
    for (int j = 0; j < h; ++j)
      for (int i = 0; i < w; ++i)
        if (cells[static_cast<std::size_t>(j * w + i)] !=
            cells[static_cast<std::size_t>(((j + dy) % h) * w + (i + dx) % w)])
          return false;
    return true;
  };
  for (int p = 2; p <= w; ++p)
    if (w % p == 0 && periodic(w / p, 0)) return true;
  for (int p = 2; p <= h; ++p)
    if (h % p == 0 && periodic(0, h / p)) return true;
  return false;
}

class Searcher {
 public:
  Searcher(const SearchTarget& target, const SearchOptions& options)
      : target_(target),
        options_(options),
        table_(options.table ? *options.table : PairTable::builtin()),
        rng_(options.seed) {}

  std::vector<SearchHit> run() {
    const int max_area = options_.max_width * options_.max_height;
    for (int area = 1; area <= max_area; ++area) {
      for (int w = 1; w <= options_.max_width; ++w) {
        if (area % w != 0 || area / w > options_.max_height) continue;
        const int h = area / w;
        if (area <= options_.exhaustive_area)
          exhaustive(w, h);
        else
          constrained(w, h);
      }
      if (hits_.size() >= options_.limit) break;
    }
    std::sort(hits_.begin(), hits_.end(), [](const SearchHit& a, const SearchHit& b) {
      const Design& x = a.design;
      const Design& y = b.design;
      if (x.area() != y.area()) return x.area() < y.area();
      if (x.width() != y.width()) return x.width() < y.width();
      return std::lexicographical_compare(x.cells().begin(), x.cells().end(), y.cells().begin(), y.cells().end());
    });
    if (hits_.size() > options_.limit) hits_.resize(options_.limit);
    return std::move(hits_);
  }

 private:
  void exhaustive(int w, int h) {
    const int n = w * h;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n));
    // Cell (0,0) is white: complements classify identically.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      for (int k = 1; k < n; ++k) cells[static_cast<std::size_t>(k)] = (mask >> (k - 1)) & 1;
      if (has_smaller_period(cells, w, h)) continue;
      consider(Design(w, h, cells));
    }
  }

  void constrained(int w, int h) {
    for (const auto& ops : generator_ops(target_.s)) {
      const bool square_only =
          std::any_of(ops.begin(), ops.end(), [](PointOp r) { return direction_sign(r) < 0; });
      if (square_only && w != h) continue;

      std::vector<std::optional<Generator>> extras{std::nullopt};
      if (w % 2 == 0) extras.push_back(Generator{translation({w / 2, 0}), true});
      if (h % 2 == 0) extras.push_back(Generator{translation({0, h / 2}), true});
      if (w % 2 == 0 && h % 2 == 0) {
        extras.push_back(Generator{translation({w / 2, h / 2}), true});
        extras.push_back(Generator{translation({w / 2, h / 2}), false});
      }

      std::vector<std::vector<Generator>> point_gens{{}};
      if (!ops.empty()) {
        point_gens.clear();
        for (const Vec2& t1 : reduced_translations(ops[0], w, h))
          for (bool s1 : {false, true}) {
            const Generator g1{{ops[0], t1}, s1};
            if (ops.size() == 1) {
              point_gens.push_back({g1});
              continue;
            }
            for (int ty = 0; ty < h; ++ty)
              for (int tx = 0; tx < w; ++tx)
                for (bool s2 : {false, true}) point_gens.push_back({g1, Generator{{ops[1], {tx, ty}}, s2}});
          }
      }
      for (const auto& gens : point_gens)
        for (const auto& extra : extras) {
          std::vector<Generator> all = gens;
          if (extra) all.push_back(*extra);
          colourings(w, h, all);
        }
    }
  }

  void colourings(int w, int h, const std::vector<Generator>& gens) {
    const int n = w * h;
    ParityUnionFind uf(n);
    for (const Generator& gen : gens)
      for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
          const Vec2 img = apply_cell(gen.g, {i, j});
          const int b = floor_mod(img.y, h) * w + floor_mod(img.x, w);
          if (!uf.unite(j * w + i, b, gen.swap ? 1 : 0)) return;
        }
    std::vector<int> root(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> parity(static_cast<std::size_t>(n));
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    int k = 0;
    for (int c = 0; c < n; ++c) {
      const auto [r, p] = uf.find(c);
      root[static_cast<std::size_t>(c)] = r;
      parity[static_cast<std::size_t>(c)] = p;
      if (component[static_cast<std::size_t>(r)] < 0) component[static_cast<std::size_t>(r)] = k++;
    }
    std::vector<std::uint8_t> colour(static_cast<std::size_t>(k), 0);
    auto emit = [&] {
      std::vector<std::uint8_t> cells(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) {
        const int comp = component[static_cast<std::size_t>(root[static_cast<std::size_t>(c)])];
        cells[static_cast<std::size_t>(c)] =
            colour[static_cast<std::size_t>(comp)] ^ parity[static_cast<std::size_t>(c)];
      }
      consider(Design(w, h, std::move(cells)));
    };
    // Component 0 stays white: complements classify identically.
    const auto samples = static_cast<std::uint64_t>(std::max(1, options_.samples));
    if (k - 1 < 63 && (std::uint64_t{1} << (k - 1)) <= samples) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (k - 1)); ++bits) {
        for (int c = 1; c < k; ++c) colour[static_cast<std::size_t>(c)] = (bits >> (c - 1)) & 1;
        emit();
      }
    } else {
      for (std::uint64_t s = 0; s < samples; ++s) {
        for (int c = 1; c < k; ++c) colour[static_cast<std::size_t>(c)] = rng_() & 1;
        emit();
      }
    }
  }

  void consider(const Design& d) {
    Classification c = classify(d, table_);
    if (!target_.matches(c)) return;
    const Design m = minimal_block(d);
    if (!seen_.insert(serialize_design(orbit_canonical(m))).second) return;
    hits_.push_back(reorient(m));
  }

  // Turn the design so its oriented names agree with the target's spelling
  // where some grid isometry achieves that.
  SearchHit reorient(const Design& d) const {
    SearchHit best{d, classify(d, table_)};
    if (!target_.s_symbol && !target_.s1_symbol) return best;
    auto score = [&](const Classification& c) {
      int v = 0;
      if (target_.s_symbol && c.s.symbol == *target_.s_symbol) v += 2;
      if (target_.s1_symbol && c.key.s1 && c.s1.symbol == *target_.s1_symbol) v += 1;
      return v;
    };
    int best_score = score(best.classification);
    for (PointOp r : kAllPointOps) {
      if (r == PointOp::I) continue;
      Design t = transform(d, {r, {0, 0}});
      Classification c = classify(t, table_);
      if (const int v = score(c); v > best_score) {
        best_score = v;
        best = {std::move(t), std::move(c)};
      }
    }
    return best;
  }

  const SearchTarget& target_;
  const SearchOptions& options_;
  const PairTable& table_;
  std::mt19937_64 rng_;
  std::unordered_set<std::string> seen_;
  std::vector<SearchHit> hits_;
};

}  // namespace

std::vector<SearchHit> search_designs(const SearchTarget& target, const SearchOptions& options) {
  if (options.max_width < 1 || options.max_height < 1)
    throw std::invalid_argument("search: maximum block must be at least 1x1");
  return Searcher(target, options).run();
}

}  // namespace weavesym
