#include <gtest/gtest.h>

#include <array>
#include <random>

#include "support.hpp"
#include "weavesym/generators.hpp"

using namespace weavesym;

namespace {

const Design kChecker = Design::from_rows({"#.", ".#"});

// Corner enumeration: the image of a unit square under x -> A x + t is the
// square whose lower-left corner is the componentwise minimum.
Vec2 cell_image_by_corners(const GridIsometry& g, Vec2 c) {
  int mx = 1 << 20, my = 1 << 20;
  for (int dx = 0; dx <= 1; ++dx)
    for (int dy = 0; dy <= 1; ++dy) {
      const Vec2 p = apply(g.r, Vec2{c.x + dx, c.y + dy}) + g.t;
      mx = std::min(mx, p.x);
      my = std::min(my, p.y);
    }
  return {mx, my};
}

}  // namespace

TEST(Lattice, HermiteFormIsCanonical) {
  const std::array<Vec2, 2> a{Vec2{1, 1}, Vec2{1, -1}};
  const std::array<Vec2, 3> b{Vec2{2, 0}, Vec2{0, 2}, Vec2{3, 1}};
  const Lattice2 la = Lattice2::from_generators(a), lb = Lattice2::from_generators(b);
  EXPECT_EQ(la, lb);
  EXPECT_EQ(la.a(), 2);
  EXPECT_EQ(la.b(), 1);
  EXPECT_EQ(la.c(), 1);
  EXPECT_EQ(la.index(), 2);
}

TEST(Lattice, RejectsRankOne) {
  const std::array<Vec2, 2> g{Vec2{1, 2}, Vec2{2, 4}};
  EXPECT_THROW(Lattice2::from_generators(g), std::invalid_argument);
}

TEST(Lattice, ReduceAndContains) {
  const Lattice2 l(3, 1, 2);
  for (int y = -5; y <= 5; ++y)
    for (int x = -5; x <= 5; ++x) {
      const Vec2 r = l.reduce({x, y});
      EXPECT_TRUE(l.contains(Vec2{x, y} - r));
      EXPECT_GE(r.x, 0);
      EXPECT_LT(r.x, 3);
      EXPECT_GE(r.y, 0);
      EXPECT_LT(r.y, 2);
    }
  EXPECT_EQ(l.steps_along({0, 1}), 6);
  EXPECT_EQ(l.steps_along({1, 0}), 3);
}

TEST(Isometry, PointOpsFormD4) {
  for (PointOp a : kAllPointOps) {
    EXPECT_EQ(a * inverse(a), PointOp::I);
    for (PointOp b : kAllPointOps) {
      EXPECT_EQ(direction_sign(a * b), direction_sign(a) * direction_sign(b));
      for (PointOp c : kAllPointOps) EXPECT_EQ((a * b) * c, a * (b * c));
    }
  }
}

TEST(Isometry, ApplyCell) {
  EXPECT_EQ(apply_cell(identity_isometry(), {3, 5}), (Vec2{3, 5}));
  const GridIsometry r90{PointOp::R90, {1, 0}};
  for (int j = -3; j <= 3; ++j)
    for (int i = -3; i <= 3; ++i) {
      EXPECT_EQ(apply_cell(r90, {i, j}), (Vec2{-j, i}));
      EXPECT_EQ(apply_cell(r90, {i, j}), cell_image_by_corners(r90, {i, j}));
    }
  EXPECT_EQ(apply_cell({PointOp::R180, {1, 1}}, {0, 0}), (Vec2{0, 0}));
}

TEST(Isometry, EveryCellMapsToACellByCorners) {
  for (PointOp r : kAllPointOps)
    for (int tx = -2; tx <= 2; ++tx)
      for (int i = -2; i <= 2; ++i) {
        const GridIsometry g{r, {tx, 1 - tx}};
        EXPECT_EQ(apply_cell(g, {i, 2 * i - 1}), cell_image_by_corners(g, {i, 2 * i - 1}));
      }
}

TEST(Isometry, Composition) {
  const GridIsometry g{PointOp::MD, {2, -1}};
  EXPECT_EQ(compose(g, identity_isometry()), g);
  EXPECT_EQ(compose(GridIsometry{PointOp::MX, {}}, GridIsometry{PointOp::MX, {}}), identity_isometry());
  EXPECT_EQ(compose(GridIsometry{PointOp::R90, {}}, GridIsometry{PointOp::R90, {}}),
            (GridIsometry{PointOp::R180, {}}));
  for (PointOp r : kAllPointOps) {
    const GridIsometry h{r, {1, 3}};
    EXPECT_EQ(compose(h, inverse(h)), identity_isometry());
    for (int i = -2; i <= 2; ++i)
      EXPECT_EQ(apply_cell(compose(g, h), {i, -i}), apply_cell(g, apply_cell(h, {i, -i})));
  }
}

TEST(Isometry, ColorActionOnCheckerboard) {
  EXPECT_EQ(color_action(identity_isometry(), kChecker), ColorAction::preserve);
  EXPECT_EQ(color_action(translation({1, 0}), kChecker), ColorAction::swap);
  EXPECT_EQ(color_action(GridIsometry{PointOp::MX, {0, 0}}, kChecker), ColorAction::swap);
  EXPECT_EQ(color_action(GridIsometry{PointOp::MX, {0, 1}}, kChecker), ColorAction::preserve);
  EXPECT_EQ(color_action(GridIsometry{PointOp::MD, {1, 0}}, kChecker), ColorAction::swap);
  EXPECT_EQ(color_action(translation({1, 0}), Design::from_rows({"#..", "..."})), ColorAction::none);
}

TEST(DesignIo, ParsesCheckerboard) {
  const Design d = parse_design("weave-design v1\nblock 2 2\n#.\n.#\n");
  EXPECT_EQ(d, kChecker);
  EXPECT_EQ(d.at(0, 0), 1);
}

TEST(DesignIo, ShortRowError) {
  try {
    parse_design("weave-design v1\nblock 3 2\n#..\n.#\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2 has 2 cells, expected 3"), std::string::npos) << e.what();
  }
}

TEST(DesignIo, OtherErrors) {
  EXPECT_THROW(parse_design("block 1 1\n#\n"), ParseError);
  EXPECT_THROW(parse_design("weave-design v1\nblock 0 1\n"), ParseError);
  EXPECT_THROW(parse_design("weave-design v1\nblock 2 1\n#x\n"), ParseError);
  EXPECT_THROW(parse_design("weave-design v1\nblock 1 2\n#\n"), ParseError);
  EXPECT_THROW(parse_design("weave-design v1\nblock 1 1\n#\n#\n"), ParseError);
}

TEST(DesignIo, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Design d = testing_support::random_design(rng, 9, 9);
    EXPECT_EQ(parse_design(serialize_design(d)), d);
  }
}

TEST(DesignOps, Complement) {
  EXPECT_EQ(complement(kChecker), transform(kChecker, translation({1, 0})));
  EXPECT_EQ(complement(Design::filled(1, 1, 1)), Design::filled(1, 1, 0));
  std::mt19937_64 rng(12);
  for (int k = 0; k < 20; ++k) {
    const Design d = testing_support::random_design(rng, 6, 6);
    EXPECT_EQ(complement(complement(d)), d);
    EXPECT_NE(complement(d), d);
  }
}

TEST(DesignOps, Transform) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 20; ++k) {
    const Design d = testing_support::random_design(rng, 6, 6);
    EXPECT_EQ(transform(d, identity_isometry()), d);
    for (PointOp r : kAllPointOps) {
      const GridIsometry g{r, {k % 3, 1}};
      const Design e = transform(d, g);
      EXPECT_EQ(transform(e, inverse(g)), d);
      for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) EXPECT_EQ(e.at(apply_cell(g, {i, j})), d.at(i, j));
    }
  }
}

TEST(Structure, JsonRoundTrip) {
  const WeaveStructure w = make_structure(gen_twill(2, 1, 1, 3), gen_striped_coloring(2, 3, 1, 0));
  EXPECT_EQ(parse_structure(serialize_structure(w)), w);
  EXPECT_THROW(parse_structure("{}"), ParseError);
  EXPECT_THROW(parse_structure("not json"), ParseError);
}

TEST(Structure, UniformPalettes) {
  const Design ou = gen_twill(2, 2, 1, 4);
  const StrandFaces ww{StrandColor::white, StrandColor::white}, bb{StrandColor::black, StrandColor::black};
  EXPECT_EQ(render_visible({ou, {ww}, {bb}}, Side3D::front), ou);
  EXPECT_EQ(render_visible(make_structure(ou, basket_palette()), Side3D::front), ou);
  EXPECT_EQ(render_visible({ou, {bb}, {bb}}, Side3D::front), Design::filled(4, 4, 1));
  EXPECT_EQ(render_visible({ou, {bb, bb, bb}, {bb}}, Side3D::back), Design::filled(12, 4, 1));
}

TEST(Structure, MatConventionOnTwillAgainstSimulation) {
  const StrandFaces bw{StrandColor::black, StrandColor::white}, wb{StrandColor::white, StrandColor::black};
  const WeaveStructure w{gen_twill(2, 2, 1, 4), {bw}, {wb}};
  const Design front = render_visible(w, Side3D::front), back = render_visible(w, Side3D::back);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) {
      EXPECT_EQ(front.at(x, y), testing_support::simulate_view(w, false, x, y));
      EXPECT_EQ(back.at(x, y), testing_support::simulate_view(w, true, x, y));
    }
  EXPECT_EQ(back, mirror_columns(front));
}

TEST(Generators, Twill) {
  EXPECT_EQ(gen_twill(1, 1, 1, 2), kChecker);
  const Design t = gen_twill(2, 2, 1, 4);
  ASSERT_EQ(t.width(), 4);
  ASSERT_EQ(t.height(), 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t.at(i, j), (i == j % 4 || i == (j + 1) % 4) ? 1 : 0);
  const Design flat = gen_twill(2, 2, 0, 4);
  for (int j = 1; j < 4; ++j)
    for (int i = 0; i < 4; ++i) EXPECT_EQ(flat.at(i, j), flat.at(i, 0));
  EXPECT_THROW(gen_twill(1, 0, 1, 2), std::invalid_argument);
  EXPECT_THROW(gen_twill(1, 1, 1, 0), std::invalid_argument);
}

TEST(Generators, StripedColouring) {
  for (int x : {1, 3, 6}) {
    const StrandColoring c = gen_striped_coloring(x, x);
    ASSERT_EQ(c.warp_faces.size(), static_cast<std::size_t>(2 * x));
    for (int i = 0; i < 2 * x; ++i) {
      EXPECT_TRUE(c.warp_faces[static_cast<std::size_t>(i)].one_sided());
      // x strands black in front, then x white.
      EXPECT_EQ(c.warp_faces[static_cast<std::size_t>(i)].front, i < x ? StrandColor::black : StrandColor::white);
      EXPECT_EQ(c.weft_faces[static_cast<std::size_t>(i)], c.warp_faces[static_cast<std::size_t>(i)]);
    }
  }
  const StrandColoring shifted = gen_striped_coloring(3, 3, 1, -1);
  EXPECT_EQ(shifted.warp_faces[2].front, StrandColor::white);
  EXPECT_EQ(shifted.weft_faces[0].front, StrandColor::white);
}

TEST(Generators, StripedViewsMatchSimulation) {
  for (int x : {1, 3, 6})
    for (int shift : {0, 1}) {
      const WeaveStructure w = make_structure(gen_twill(2, 2, shift, 4), gen_striped_coloring(x, x, x / 2, 0));
      for (bool back : {false, true}) {
        const Design v = render_visible(w, back ? Side3D::back : Side3D::front);
        for (int y = 0; y < v.height(); ++y)
          for (int xx = 0; xx < v.width(); ++xx)
            ASSERT_EQ(v.at(xx, y), testing_support::simulate_view(w, back, xx, y)) << x << " " << back;
      }
    }
}
