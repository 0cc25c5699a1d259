#include <doctest.h>

#include <memory>
#include <set>

#include "braidcover/orbit.hpp"

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

TEST_CASE("two-marked disk orbit is a single point") {
  auto chart = chart_of(sys(2, {{1, 2}}));
  ExploreLimits lim;
  lim.max_depth = 3;
  auto rep = explore(seed_dissection(chart), lim);
  CHECK(rep.complete);
  CHECK(rep.visited.size() == 1);
}

TEST_CASE("three-marked disk: exactly three dissections, all reached") {
  auto chart = chart_of(standard_system(MarkedSurface{0, {3}}));
  ExploreLimits lim;
  lim.max_depth = 8;
  auto rep = explore(seed_dissection(chart), lim);
  CHECK(rep.complete);
  CHECK(rep.visited.size() == 3);
  // replay every recorded path
  for (const auto& st : rep.visited)
    CHECK(braid_act(rep.seed, st.path) == st.dissection);
}

TEST_CASE("four-marked disk: sixteen dissections") {
  auto chart = chart_of(standard_system(MarkedSurface{0, {4}}));
  ExploreLimits lim;
  lim.max_depth = 10;
  lim.max_states = 1000;
  auto rep = explore(seed_dissection(chart), lim);
  CHECK(rep.complete);
  CHECK(rep.visited.size() == 16);
  // the projections cover exactly the Hurwitz systems with the chart product
  std::set<std::string> proj(rep.hurwitz_keys.begin(), rep.hurwitz_keys.end());
  CHECK(proj.size() == 16);  // disk: dissections biject with their systems
}

TEST_CASE("parallel exploration matches sequential") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  ExploreLimits seq;
  seq.max_depth = 3;
  ExploreLimits par = seq;
  par.threads = 4;
  auto a = explore(seed_dissection(chart), seq);
  auto b = explore(seed_dissection(chart), par);
  REQUIRE(a.visited.size() == b.visited.size());
  for (size_t i = 0; i < a.visited.size(); ++i)
    CHECK(a.visited[i].dissection.key() == b.visited[i].dissection.key());
}

TEST_CASE("deck invariance is logged and preserved on the figure-2 ball") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  ExploreLimits lim;
  lim.max_depth = 3;
  auto rep = explore(seed_dissection(chart), lim);
  CHECK(rep.has_deck);
  CHECK(rep.visited.size() > 20);
  for (char c : rep.deck_invariant) CHECK(c == 1);
  // every state projects to the same Hurwitz system here
  std::set<std::string> proj(rep.hurwitz_keys.begin(), rep.hurwitz_keys.end());
  CHECK(proj.size() == 1);
}

TEST_CASE("separate finds a planted path") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection d1 = seed_dissection(chart);
  Dissection d2 = braid_act(d1, {2, -1});
  auto cert = separate(d1, d2, 10000);
  REQUIRE(cert.kind == SeparationCertificate::Kind::Path);
  CHECK(braid_act(d1, cert.path) == d2);
}

TEST_CASE("separate certifies the twisted dissection by the deck witness") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  Dissection base = seed_dissection(chart);
  Dissection twisted = boundary_twist(base, 0, +1);
  auto cert = separate(base, twisted, 10000);
  REQUIRE(cert.kind == SeparationCertificate::Kind::Witness);
  CHECK(cert.witness_name == "deck_invariance");
  CHECK(cert.value_at_d1 == "true");
  CHECK(cert.value_at_d2 == "false");
}

TEST_CASE("separate on the annulus double cover always finds paths") {
  auto chart = chart_of(sys(2, {{1, 2}, {1, 2}}));
  Dissection seed = seed_dissection(chart);
  ExploreLimits lim;
  lim.max_depth = 3;
  auto ball = explore(seed, lim);
  for (const auto& st : ball.visited) {
    auto cert = separate(seed, st.dissection, 100000);
    REQUIRE(cert.kind == SeparationCertificate::Kind::Path);
  }
}

TEST_CASE("genus-0 transitivity at m=3") {
  ExploreLimits lim;
  lim.max_depth = 8;
  auto rep = genus0_transitivity_check(3, 2, lim);
  CHECK(rep.ok);
  CHECK(rep.expected_total == 3);
  CHECK(rep.reached == 3);
}

TEST_CASE("counterexample scenario, shallow smoke run") {
  auto rep = counterexample_g1b2(2, 100000, 1);
  CHECK(rep.witness_separates);
  CHECK(rep.same_hurwitz);
  CHECK_FALSE(rep.bfs_reached_twisted);
  CHECK(rep.witness_preserved);
  CHECK(rep.states_explored > 10);
  CHECK(rep.text.find("certificate=witness") != std::string::npos);
}

TEST_CASE("separate refuses mismatched surfaces") {
  auto c1 = chart_of(sys(2, {{1, 2}, {1, 2}}));
  auto c2 = chart_of(sys(3, {{1, 2}, {2, 3}}));
  CHECK_THROWS_AS(separate(seed_dissection(c1), seed_dissection(c2), 10), domain_error);
}

TEST_CASE("disk orbit projections all lie in one Hurwitz move component") {
  auto chart = chart_of(standard_system(MarkedSurface{0, {3}}));
  ExploreLimits lim;
  lim.max_depth = 4;
  auto rep = explore(seed_dissection(chart), lim);
  auto horbit = hurwitz_orbit(hurwitz_of(rep.seed), 100000);
  std::set<std::string> keys;
  for (const auto& s : horbit.systems) keys.insert(canonical_key(s));
  for (const auto& k : rep.hurwitz_keys) CHECK(keys.count(k) == 1);
}

TEST_CASE("genus-2 one-boundary double cover: machinery closes at depth 2") {
  auto chart = chart_of(standard_system(MarkedSurface{2, {2}}));
  REQUIRE(chart->n_arcs() == 5);
  Dissection seed = seed_dissection(chart);
  REQUIRE(validate_dissection(seed).valid());
  ExploreLimits lim;
  lim.max_depth = 2;
  auto rep = explore(seed, lim);
  CHECK(rep.has_deck);
  CHECK(rep.visited.size() > 30);
  for (char c : rep.deck_invariant) CHECK(c == 1);
  Dissection tw = boundary_twist(seed, 0, +1);
  CHECK(validate_dissection(tw).valid());
  CHECK(boundary_twist(tw, 0, -1) == seed);
}
