#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ehk/detect.hpp"
#include "ehk/exact.hpp"
#include "ehk/gen.hpp"
#include "ehk/graph.hpp"
#include "ehk/hubfree.hpp"
#include "support/testutil.hpp"

using namespace ehk;
using namespace testutil;

namespace {

// First non-adjacent same-component pair whose first end has a hub-free
// neighborhood, or nullopt.
std::optional<std::pair<int, int>> hubfree_pair(const Graph& g) {
  DetectLimits dl;
  dl.certify_n = dl.hard_n;
  HubSet hs = hubs(g, dl);
  if (!hs.certified) return std::nullopt;
  for (int a = 0; a < g.size(); ++a) {
    if (g.neighbors(a).empty()) continue;
    if (g.neighbors(a).intersects(hs.hubs)) continue;
    for (int b = 0; b < g.size(); ++b) {
      if (b == a || g.adjacent(a, b)) continue;
      if (!same_component(g, g.vertices(), a, b)) continue;
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("ends in different components need no separator") {
  Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
  auto rep = ab_separator_hubfree(g, 0, 7);
  CHECK(rep.verified);
  CHECK(rep.z.empty());
  CHECK(rep.kappa == 0);
  CHECK(rep.fallbacks == 0);
}

TEST_CASE("a long path is cut by one vertex next to an end") {
  Graph g = path_graph(10);
  auto rep = ab_separator_hubfree(g, 0, 9);
  CHECK(rep.verified);
  CHECK(rep.z == VertexSet::of(10, {1}));
  CHECK(rep.kappa == 1);
  CHECK(rep.cover.cliques.size() == 1);
  CHECK(rep.within_budget);
}

TEST_CASE("bad endpoints are rejected") {
  Graph g = path_graph(6);
  CHECK_THROWS_AS(ab_separator_hubfree(g, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ab_separator_hubfree(g, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(ab_separator_hubfree(g, 0, 6), std::invalid_argument);
}

TEST_CASE("a hub next to the first end is refused, the far side still runs") {
  // Proper wheel: 7-cycle with center 7 on three spokes; 8 hangs off the
  // center, 9 off a rim vertex.
  Graph g = Graph::from_edges(10, {{0, 1},
                                   {1, 2},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 0},
                                   {7, 0},
                                   {7, 2},
                                   {7, 4},
                                   {8, 7},
                                   {9, 1}});
  CHECK_THROWS_AS(ab_separator_hubfree(g, 8, 9), hub_precondition);

  auto rep = ab_separator_hubfree(g, 9, 8);
  CHECK(rep.verified);
  CHECK(!component_of(g, g.vertices() - rep.z, 9).contains(8));
}

TEST_CASE("minimum clique cover separators are exact on small shapes") {
  SUBCASE("one edge clique cuts a path") {
    auto r = min_clique_cover_separator(path_graph(5), 0, 4);
    REQUIRE(r.exact);
    CHECK(r.cliques.size() == 1);
    CHECK(!component_of(path_graph(5), path_graph(5).vertices() - r.z, 0).contains(4));
  }
  SUBCASE("a six-hole needs two cliques") {
    auto r = min_clique_cover_separator(cycle_graph(6), 0, 3);
    REQUIRE(r.exact);
    CHECK(r.cliques.size() == 2);
  }
  SUBCASE("a four-hole needs its two stable corners") {
    Graph g = complete_bipartite(2, 2);
    auto r = min_clique_cover_separator(g, 0, 1);
    REQUIRE(r.exact);
    CHECK(r.cliques.size() == 2);
    CHECK(r.z == VertexSet::of(4, {2, 3}));
  }
  SUBCASE("separated ends cost nothing") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    auto r = min_clique_cover_separator(g, 0, 3);
    REQUIRE(r.exact);
    CHECK(r.cliques.empty());
    CHECK(r.z.empty());
  }
  CHECK_THROWS_AS(min_clique_cover_separator(path_graph(3), 0, 1), std::invalid_argument);
}

TEST_CASE("a fan behind one hub is cut by the globalized census clique") {
  // Three two-corner fans hang off vertices 2, 3, 4, all funneled through
  // vertex 1 to the target 0; the apex 11 sees every corner. The census
  // finds every block triple detached behind vertex 1 and globalization
  // returns that single clique.
  Graph g = Graph::from_edges(12, {{0, 1},
                                   {1, 2},
                                   {1, 3},
                                   {1, 4},
                                   {5, 2},
                                   {6, 2},
                                   {7, 3},
                                   {8, 3},
                                   {9, 4},
                                   {10, 4},
                                   {11, 5},
                                   {11, 6},
                                   {11, 7},
                                   {11, 8},
                                   {11, 9},
                                   {11, 10}});
  REQUIRE(hubs(g).hubs.empty());
  auto rep = ab_separator_hubfree(g, 11, 0);
  CHECK(rep.verified);
  CHECK(rep.z == VertexSet::of(12, {1}));
  CHECK(rep.kappa == 1);
  bool globalized = false;
  for (const auto& t : rep.trace) globalized = globalized || t.find("globalized") != std::string::npos;
  CHECK(globalized);
}

TEST_CASE("a prism through the apex routes through the dangerous regime") {
  // The component is a prism body: triangles {0,1,2} and {3,4,5} joined by
  // 2-5, the path 0-6-11-10-3 through the apex, and 1-9-4 through corner 9
  // with the cross edge 11-9. Corners 7 and 8 pad the attachment so the
  // two-clique split leaves {6}, {9}, {10}, making 9 a dangerous center.
  Graph g = Graph::from_edges(12, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 5},
                                   {0, 6}, {6, 11}, {11, 10}, {10, 3},
                                   {1, 9}, {9, 4}, {11, 9},
                                   {7, 2}, {7, 11}, {8, 5}, {8, 11}});
  REQUIRE(hubs(g).hubs.empty());
  auto rep = ab_separator_hubfree(g, 11, 2);
  CHECK(rep.verified);
  CHECK(!component_of(g, g.vertices() - rep.z, 11).contains(2));
  bool dangerous = false;
  for (const auto& t : rep.trace)
    dangerous = dangerous || t.find("dangerous-cut") != std::string::npos;
  CHECK(dangerous);
}

TEST_CASE("random hub-free pairs always end separated and verified") {
  int ran = 0, fallbacks = 0, rounds_max = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 10 + int(seed % 15);
    Graph g = gen_random_ehf(n, 0.22, seed);
    auto pick = hubfree_pair(g);
    if (!pick) continue;
    auto [a, b] = *pick;
    auto rep = ab_separator_hubfree(g, a, b, seed);
    CHECK(rep.verified);
    CHECK(!rep.z.contains(a));
    CHECK(!rep.z.contains(b));
    CHECK(!component_of(g, g.vertices() - rep.z, a).contains(b));
    CHECK(verify_clique_cover(g, rep.z, rep.cover));
    CHECK(rep.kappa == int(rep.cover.cliques.size()));
    fallbacks += rep.fallbacks;
    rounds_max = std::max(rounds_max, rep.rounds);
    ++ran;
  }
  CHECK(ran >= 20);
  MESSAGE("pairs=", ran, " fallbacks=", fallbacks, " deepest=", rounds_max);
}

TEST_CASE("separator size stays within reach of the exact optimum") {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int n = 9 + int(seed % 6);
    Graph g = gen_random_ehf(n, 0.3, seed);
    auto pick = hubfree_pair(g);
    if (!pick) continue;
    auto [a, b] = *pick;
    auto rep = ab_separator_hubfree(g, a, b, seed);
    auto opt = min_clique_cover_separator(g, a, b);
    if (!opt.exact) continue;
    CHECK(rep.kappa >= int(opt.cliques.size()));
    CHECK(rep.kappa <= 20 * std::max<int>(1, int(opt.cliques.size())));
    ++compared;
  }
  CHECK(compared >= 12);
}

TEST_CASE("the loop is deterministic for a fixed seed") {
  Graph g = gen_random_ehf(20, 0.25, 77);
  auto pick = hubfree_pair(g);
  REQUIRE(pick.has_value());
  auto [a, b] = *pick;
  auto one = ab_separator_hubfree(g, a, b, 5);
  auto two = ab_separator_hubfree(g, a, b, 5);
  CHECK(one.z == two.z);
  CHECK(one.kappa == two.kappa);
  CHECK(one.trace == two.trace);
}
