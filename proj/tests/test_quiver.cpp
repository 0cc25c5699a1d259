#include <doctest.h>

#include <memory>

#include "braidcover/quiver.hpp"

using namespace braidcover;

namespace {

HurwitzSystem sys(int m, std::initializer_list<std::pair<int, int>> pairs) {
  HurwitzSystem h;
  h.m = m;
  for (auto [x, y] : pairs) h.tuple.emplace_back(x, y);
  return h;
}

ChartPtr chart_of(const HurwitzSystem& h) {
  return std::make_shared<const Chart>(skeleton_from_hurwitz(h));
}

}  // namespace

TEST_CASE("figure-2 dissection gives four vertices, six degree-zero arrows, four relations") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection seed = seed_dissection(chart);
  GradedQuiver q = quiver_of(seed, GradingData{});
  CHECK(q.vertices == 4);
  REQUIRE(q.arrows.size() == 6);
  for (const auto& a : q.arrows) {
    CHECK(a.degree == 0);
    CHECK(a.target == a.source + 1);  // double arrows along the chain
  }
  // each consecutive pair of arcs gets exactly two parallel arrows
  int count[3] = {0, 0, 0};
  for (const auto& a : q.arrows) count[a.source] += 1;
  CHECK(count[0] == 2);
  CHECK(count[1] == 2);
  CHECK(count[2] == 2);
  // relations: arrival and departure through different ends compose to zero
  CHECK(q.relations.size() == 4);
  for (auto [a, b] : q.relations) {
    CHECK(q.arrows[a].target == q.arrows[b].source);
    CHECK(q.arrows[a].point != q.arrows[b].point);
  }
}

TEST_CASE("two-marked disk: one vertex, no arrows") {
  auto chart = chart_of(sys(2, {{1, 2}}));
  GradedQuiver q = quiver_of(seed_dissection(chart), GradingData{});
  CHECK(q.vertices == 1);
  CHECK(q.arrows.empty());
  CHECK(q.relations.empty());
}

TEST_CASE("three-marked disk with arcs {1,2},{2,3}: linear A2 quiver") {
  auto chart = chart_of(sys(3, {{1, 2}, {2, 3}}));
  GradedQuiver q = quiver_of(seed_dissection(chart), GradingData{});
  CHECK(q.vertices == 2);
  REQUIRE(q.arrows.size() == 1);
  CHECK(q.arrows[0].source == 0);
  CHECK(q.arrows[0].target == 1);
  CHECK(q.relations.empty());
}

TEST_CASE("hom dimensions on the figure-2 dissection") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection seed = seed_dissection(chart);
  auto h12 = hom_dim(seed, 0, 1);
  CHECK_FALSE(h12.infinite);
  CHECK(h12.total == 2);
  CHECK(h12.by_degree.at(0) == 2);
  auto h13 = hom_dim(seed, 0, 2);
  CHECK(h13.total == 2);
  auto h14 = hom_dim(seed, 0, 3);
  CHECK(h14.total == 2);
  for (int i = 0; i < 4; ++i) {
    auto hii = hom_dim(seed, i, i);
    CHECK(hii.total == 1);
    CHECK(hii.by_degree.at(0) == 1);
  }
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < j; ++i) {
      auto back = hom_dim(seed, j, i);
      CHECK(back.total == 0);
      CHECK_FALSE(back.infinite);
    }
}

TEST_CASE("degree additivity: composite path degrees are sums of arrow degrees") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection seed = seed_dissection(chart);
  auto val = validate_dissection(seed);
  REQUIRE(val.valid());
  GradingData g;
  // weight the six arrows 1..6 in file order
  g.degrees[{0, 0}] = 1;
  g.degrees[{0, 1}] = 2;
  g.degrees[{0, 2}] = 3;
  g.degrees[{1, 0}] = 4;
  g.degrees[{1, 1}] = 5;
  g.degrees[{1, 2}] = 6;
  auto h = hom_dim(val.skeleton, g, 0, 2);  // paths a1b1 (deg 3) and a2b2 (deg 9)
  CHECK(h.total == 2);
  CHECK(h.by_degree.at(1 + 2) == 1);
  CHECK(h.by_degree.at(4 + 5) == 1);
  auto h2 = hom_dim(val.skeleton, g, 0, 3);
  CHECK(h2.by_degree.at(1 + 2 + 3) == 1);
  CHECK(h2.by_degree.at(4 + 5 + 6) == 1);
}

TEST_CASE("exceptional sequence check accepts valid dissections and names violations") {
  auto chart = chart_of(sys(3, {{1, 2}, {2, 3}}));
  Dissection seed = seed_dissection(chart);
  CHECK(is_exceptional_sequence(*chart, seed.arcs).ok);

  // swapping the two arcs breaks the order at the middle point
  std::vector<ArcClass> swapped{seed.arcs[1], seed.arcs[0]};
  auto chk = is_exceptional_sequence(*chart, swapped);
  CHECK_FALSE(chk.ok);
  CHECK(chk.first_violation.find("backward hom") != std::string::npos);

  // dropping an arc breaks fullness
  std::vector<ArcClass> dropped{seed.arcs[0]};
  auto chk2 = is_exceptional_sequence(*chart, dropped);
  CHECK_FALSE(chk2.ok);
  CHECK(chk2.first_violation.find("full") != std::string::npos);
}

TEST_CASE("mutated sequences stay exceptional") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection seed = seed_dissection(chart);
  for (const BraidWord& w :
       {BraidWord{1}, BraidWord{-2}, BraidWord{3, 1}, BraidWord{2, -1}, BraidWord{1, 2, 3}}) {
    Dissection d = braid_act(seed, w);
    CHECK(is_exceptional_sequence(*chart, d.arcs).ok);
  }
}

TEST_CASE("index symmetry") {
  CHECK(index_symmetry_check(0, 1));
  for (int rho = -3; rho <= 3; ++rho) CHECK(index_symmetry_check(rho, 1 - rho));
  CHECK_FALSE(index_symmetry_check(1, 1));
}

TEST_CASE("grading transport keeps the zero grading and negates the connecting path") {
  auto chart = chart_of(sys(3, {{1, 2}, {2, 3}}));
  Dissection seed = seed_dissection(chart);
  Dissection img = apply_generator(seed, 1);

  // zero stays zero
  GradingData zero = transport_grading(seed, GradingData{}, 1, img);
  for (auto& [k, v] : zero.degrees) CHECK(v == 0);

  // nonzero connecting arrow: the unique arrow of the A2 quiver
  GradingData g;
  g.degrees[{1, 0}] = 7;  // the arrow at the middle point
  GradingData moved = transport_grading(seed, g, 1, img);
  // new dissection is (a2, R); its middle-point adjacency carries -7
  GradedQuiver q = quiver_of(img, moved);
  bool found = false;
  for (const auto& a : q.arrows)
    if (a.degree == -7) found = true;
  CHECK(found);
}

TEST_CASE("hom paths never report infinite on valid dissections") {
  for (auto h : {sys(2, {{1, 2}}), sys(3, {{1, 2}, {2, 3}}), sys(2, {{1, 2}, {1, 2}}),
                 sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}})}) {
    auto chart = chart_of(h);
    Dissection seed = seed_dissection(chart);
    for (int i = 0; i < seed.n(); ++i)
      for (int j = 0; j < seed.n(); ++j) CHECK_FALSE(hom_dim(seed, i, j).infinite);
  }
}

TEST_CASE("grading transport through both directions and the double-smoothing case") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection seed = seed_dissection(chart);
  for (int g : {1, -1, 2, -2, 3, -3}) {
    Dissection img = apply_generator(seed, g);
    GradingData moved = transport_grading(seed, GradingData{}, g, img);
    for (auto& [k, v] : moved.degrees) CHECK(v == 0);
    GradedQuiver q = quiver_of(img, moved);
    for (const auto& a : q.arrows) CHECK(a.degree == 0);
  }
}
