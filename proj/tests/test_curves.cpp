#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotint/braid.hpp"
#include "knotint/curves.hpp"

using namespace knotint;

TEST_CASE("layouts") {
  PunctureLayout g = make_layout(2, LayoutMode::Gamma);
  CHECK(g.total() == 5);
  int blacks = 0, blues = 0;
  for (auto c : g.colors) {
    if (c == PunctureColor::Black) ++blacks;
    if (c == PunctureColor::Blue) ++blues;
  }
  CHECK(blacks == 3);
  CHECK(blues == 2);

  PunctureLayout g3 = make_layout(3, LayoutMode::Gamma);
  CHECK(g3.total() == 8);

  PunctureLayout a = make_layout(2, LayoutMode::Alexander);
  CHECK(a.total() == 3);
  CHECK(a.black[0] == 0);
  CHECK(a.black[1] == 1);

  PunctureLayout lam = make_layout(3, LayoutMode::Lambda);
  CHECK(lam.total() == 6);
  CHECK(lam.anchor == 3);

  CHECK_THROWS_AS(make_layout(1, LayoutMode::Gamma), std::invalid_argument);
}

TEST_CASE("word reduction") {
  CurveWord w;
  w.from = 0;
  w.to = 2;
  w.start_half = -1;
  w.crossings = {1, 3, 3, 2};
  CurveWord r = reduce(w);
  CHECK(r.crossings == std::vector<int>{1, 2});
  CHECK(reduce(r) == r);
}

TEST_CASE("reduction against the bigon insertion oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    CurveWord w;
    w.from = 0;
    w.to = 2;
    w.start_half = (rng() % 2) ? 1 : -1;
    int len = int(rng() % 5);
    for (int i = 0; i < len; ++i) {
      int c = int(rng() % 4);
      if (!w.crossings.empty() && w.crossings.back() == c) c = (c + 1) % 4;
      w.crossings.push_back(c);
    }
    // insert 20 cancelling pairs at random places
    CurveWord noisy = w;
    for (int i = 0; i < 20; ++i) {
      size_t pos = noisy.crossings.empty() ? 0 : rng() % (noisy.crossings.size() + 1);
      int c = int(rng() % 4);
      noisy.crossings.insert(noisy.crossings.begin() + long(pos), {c, c});
    }
    CHECK(reduce(noisy) == reduce(w));
  }
}

TEST_CASE("standard supports meet their circles in two points") {
  for (int n : {2, 3, 4}) {
    PunctureLayout l = make_layout(n, LayoutMode::Gamma);
    Scene s = build_scene(standard_supports(l));
    for (int k = 1; k <= n - 1; ++k) {
      for (int r = 0; r < n - 1; ++r) {
        auto pts = curve_intersections(s, r, k);
        if (r == k - 1) {
          REQUIRE(pts.size() == 2);
          CHECK_FALSE(pts[0].right_side);
          CHECK(pts[1].right_side);
          CHECK(pts[0].local_sign * pts[1].local_sign == -1);
        } else {
          CHECK(pts.empty());
        }
      }
    }
  }
}

TEST_CASE("inverse cancellation acts trivially") {
  PunctureLayout l = make_layout(3, LayoutMode::Gamma);
  CurveDiagram d = standard_supports(l);
  for (int i : {1, 2}) {
    CurveDiagram once = act_generator(d, i, +1);
    CurveDiagram back = act_generator(once, i, -1);
    CHECK(back.same_isotopy_class(d));
  }
}

TEST_CASE("braid relation on the standard supports") {
  PunctureLayout l = make_layout(3, LayoutMode::Gamma);
  CurveDiagram d = standard_supports(l);
  CurveDiagram lhs =
      act_generator(act_generator(act_generator(d, 1, 1), 2, 1), 1, 1);
  CurveDiagram rhs =
      act_generator(act_generator(act_generator(d, 2, 1), 1, 1), 2, 1);
  CHECK(lhs.same_isotopy_class(rhs));
}

TEST_CASE("braid relations and cancellation on randomised diagrams") {
  std::mt19937 rng(41);
  int cases = 0;
  for (int n : {3, 4}) {
    PunctureLayout l = make_layout(n, LayoutMode::Gamma);
    for (int trial = 0; trial < 40; ++trial) {
      // randomise the starting diagram by a short random braid
      CurveDiagram d = standard_supports(l);
      for (int j = 0; j < int(rng() % 4); ++j) {
        int g = 1 + int(rng() % (n - 1));
        d = act_generator(d, g, (rng() % 2) ? 1 : -1);
      }
      int i = 1 + int(rng() % (n - 2));
      // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
      CurveDiagram lhs =
          act_generator(act_generator(act_generator(d, i, 1), i + 1, 1), i, 1);
      CurveDiagram rhs = act_generator(
          act_generator(act_generator(d, i + 1, 1), i, 1), i + 1, 1);
      CHECK(lhs.same_isotopy_class(rhs));
      ++cases;
      // h h^-1 = id
      int sgn = (rng() % 2) ? 1 : -1;
      CHECK(act_generator(act_generator(d, i, sgn), i, -sgn).same_isotopy_class(d));
      ++cases;
      // far generators commute
      if (n >= 4) {
        CurveDiagram ab = act_generator(act_generator(d, 1, 1), 3, 1);
        CurveDiagram ba = act_generator(act_generator(d, 3, 1), 1, 1);
        CHECK(ab.same_isotopy_class(ba));
        ++cases;
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("word and its free reduction act identically") {
  std::mt19937 rng(59);
  PunctureLayout l = make_layout(3, LayoutMode::Gamma);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord w;
    w.strands = 3;
    for (int j = 0; j < 4; ++j) {
      int g = 1 + int(rng() % 2);
      w.letters.push_back((rng() % 2) ? g : -g);
    }
    // insert a cancelling pair
    size_t pos = rng() % (w.letters.size() + 1);
    int g = 1 + int(rng() % 2);
    BraidWord noisy = w;
    noisy.letters.insert(noisy.letters.begin() + long(pos), {g, -g});
    CurveDiagram a = act_braid(standard_supports(l), w);
    CurveDiagram b = act_braid(standard_supports(l), noisy);
    CHECK(a.same_isotopy_class(b));
  }
}

TEST_CASE("trefoil braiding yields five intersection points") {
  PunctureLayout l = make_layout(2, LayoutMode::Gamma);
  CurveDiagram d = act_braid(standard_supports(l), parse_braid("1 1 1", 2));
  Scene s = build_scene(d);
  CHECK(s.points.size() == 5);
}

TEST_CASE("embed/extract round trip") {
  std::mt19937 rng(77);
  PunctureLayout l = make_layout(3, LayoutMode::Gamma);
  for (int trial = 0; trial < 20; ++trial) {
    CurveDiagram d = standard_supports(l);
    for (int j = 0; j < int(rng() % 5); ++j)
      d = act_generator(d, 1 + int(rng() % 2), (rng() % 2) ? 1 : -1);
    CurveDiagram back = extract_diagram(l, d.comps, embed_diagram(d));
    CHECK(back.same_isotopy_class(d));
  }
}

TEST_CASE("debug dump format") {
  CurveWord w;
  w.from = 1;
  w.to = 3;
  w.start_half = -1;
  w.crossings = {2, 4};
  CHECK(dump_word(w) == "arc(1,3;L): 2 4");
}
