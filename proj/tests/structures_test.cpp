#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ehk/detect.hpp"
#include "ehk/graph.hpp"
#include "ehk/holes.hpp"
#include "ehk/witness.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace ehk;
using testutil::complete_bipartite;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::for_all_graphs;
using testutil::path_graph;
using testutil::prism_graph;
using testutil::random_graph;

namespace {

// Smallest pyramid: apex 0, base 1-2-3, path lengths 1, 2, 2.
Graph pyramid_122() {
  return Graph::from_edges(6, {{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 4}, {4, 2}, {0, 5}, {5, 3}});
}

// Pyramid with no apex-corner edge: all three paths have length 2.
Graph pyramid_222() {
  return Graph::from_edges(
      7, {{1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}, {0, 5}, {5, 2}, {0, 6}, {6, 3}});
}

PyramidWitness pyramid_122_witness() {
  PyramidWitness w;
  w.apex = 0;
  w.base = {1, 2, 3};
  w.paths = {Path{{0, 1}}, Path{{0, 4, 2}}, Path{{0, 5, 3}}};
  return w;
}

// Near-prism whose triangles {0,1,2} and {0,3,4} share the corner 0.
Graph shared_corner_near_prism() {
  return Graph::from_edges(9, {{0, 1},
                               {0, 2},
                               {1, 2},
                               {0, 3},
                               {0, 4},
                               {3, 4},
                               {1, 5},
                               {5, 6},
                               {6, 3},
                               {2, 7},
                               {7, 8},
                               {8, 4}});
}

// Prism with all three corner paths of length 2 (no four-cycle inside).
Graph long_prism() {
  return Graph::from_edges(9, {{0, 1},
                               {0, 2},
                               {1, 2},
                               {3, 4},
                               {3, 5},
                               {4, 5},
                               {0, 6},
                               {6, 3},
                               {1, 7},
                               {7, 4},
                               {2, 8},
                               {8, 5}});
}

// Near-prism on long paths plus one cross edge 6-8 between two interiors.
Graph extended_near_prism_graph() {
  return Graph::from_edges(12, {{0, 1}, {0, 2}, {1, 2},  {3, 4},   {3, 5},   {4, 5},
                                {0, 6}, {6, 7}, {7, 3},  {1, 8},   {8, 9},   {9, 4},
                                {2, 10}, {10, 11}, {11, 5}, {6, 8}});
}

// Loaded pyramid on 7 vertices: apex 0, base 1-2-3 with apex edge to 2,
// paths 0-4-1 and 0-5-3, and the one-vertex loading path 6 hanging off 2
// with its other foot on the interior vertex 4.
Graph loaded_pyramid_graph() {
  return Graph::from_edges(
      7, {{1, 2}, {1, 3}, {2, 3}, {0, 2}, {0, 4}, {4, 1}, {0, 5}, {5, 3}, {6, 2}, {6, 4}});
}

Graph add_center(const Graph& cycle, const std::vector<int>& attach) {
  Graph g(cycle.size() + 1);
  for (auto [u, v] : cycle.edges()) g.add_edge(u, v);
  for (int v : attach) g.add_edge(cycle.size(), v);
  return g;
}

bool oracle_c4(const Graph& g) {
  for (const auto& sub : oracle::all_subsets(g.size(), 4))
    if (sub.size() == 4 && oracle::subset_is_hole(g, sub)) return true;
  return false;
}

bool oracle_theta(const Graph& g) {
  for (const auto& sub : oracle::all_subsets(g.size(), 5))
    if (oracle::subset_is_theta(g, sub)) return true;
  return false;
}

bool oracle_pyramid(const Graph& g) {
  for (const auto& sub : oracle::all_subsets(g.size(), 6))
    if (oracle::subset_is_pyramid(g, sub)) return true;
  return false;
}

bool oracle_near_prism(const Graph& g, bool disjoint_triangles) {
  for (const auto& sub : oracle::all_subsets(g.size(), 6)) {
    if (oracle::subset_is_near_prism(g, sub, true)) return true;
    if (!disjoint_triangles && oracle::subset_is_near_prism(g, sub, false)) return true;
  }
  return false;
}

bool oracle_extended_near_prism(const Graph& g, int a, int b) {
  for (const auto& sub : oracle::all_subsets(g.size(), 8))
    if (oracle::subset_is_extended_near_prism_with_cross(g, sub, a, b)) return true;
  return false;
}

using WheelPair = std::pair<std::vector<int>, int>;

std::set<WheelPair> wheel_pairs(const Graph& g) {
  WheelEnumeration we = enumerate_wheels(g);
  REQUIRE(we.certified);
  std::set<WheelPair> out;
  for (const auto& [w, cls] : we.wheels) {
    std::vector<int> hole = w.hole.cycle;
    std::sort(hole.begin(), hole.end());
    out.emplace(hole, w.center);
  }
  return out;
}

std::set<WheelPair> wheel_pairs_brute(const Graph& g) {
  auto v = oracle::wheels_brute(g);
  return std::set<WheelPair>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("four-cycle detection") {
  auto k22 = detect_c4(complete_bipartite(2, 2));
  REQUIRE(k22.found());
  CHECK(k22.certified);
  CHECK(k22.witness->length() == 4);
  CHECK(validate_hole(complete_bipartite(2, 2), *k22.witness));

  CHECK(detect_c4(complete_bipartite(3, 3)).found());
  CHECK(detect_c4(prism_graph()).found());

  auto c5 = detect_c4(cycle_graph(5));
  CHECK(!c5.found());
  CHECK(c5.certified);
  CHECK(!detect_c4(cycle_graph(6)).found());
  CHECK(!detect_c4(complete_graph(4)).found());
  CHECK(!detect_c4(long_prism()).found());
}

TEST_CASE("even hole search on small fixtures") {
  auto c6 = find_even_hole(cycle_graph(6));
  REQUIRE(c6.found());
  CHECK(c6.witness->length() == 6);
  CHECK(c6.witness->even());
  CHECK(validate_hole(cycle_graph(6), *c6.witness));

  auto pr = find_even_hole(prism_graph());
  REQUIRE(pr.found());
  CHECK(pr.witness->length() == 4);

  CHECK(!find_even_hole(cycle_graph(5)).found());
  CHECK(!find_even_hole(cycle_graph(7)).found());
  CHECK(!find_even_hole(path_graph(6)).found());
  CHECK(find_even_hole(cycle_graph(5)).certified);

  CHECK_THROWS_AS(find_even_hole(Graph(65)), limit_error);
}

TEST_CASE("hole through prescribed vertices") {
  Graph c6 = cycle_graph(6);
  auto h = find_hole_through(c6, VertexSet::of(6, {0, 3}));
  REQUIRE(h.found());
  CHECK(VertexSet::of(6, {0, 3}).subset_of(h.witness->vertex_set(6)));
  CHECK(validate_hole(c6, *h.witness));

  auto whole = find_hole_through(c6, c6.vertices());
  REQUIRE(whole.found());
  CHECK(whole.witness->length() == 6);

  auto odd = find_hole_through(cycle_graph(5), VertexSet::of(5, {0, 2}));
  REQUIRE(odd.found());
  CHECK(odd.witness->length() == 5);

  auto none = find_hole_through(path_graph(6), VertexSet::of(6, {0, 5}));
  CHECK(!none.found());
  CHECK(none.certified);

  CHECK_THROWS_AS(find_hole_through(Graph(65), VertexSet(65)), limit_error);
}

TEST_CASE("hole through required set agrees with brute force") {
  for (int seed = 0; seed < 100; ++seed) {
    Graph g = random_graph(12, 0.3 + 0.02 * (seed % 10), 4200 + seed);
    testutil::Rng rng(seed * 13 + 1);
    int a = rng.below(12), b = rng.below(12);
    if (a == b) b = (b + 1) % 12;
    std::uint32_t need = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
    bool expect = oracle::hole_exists_brute(g, false, need);
    auto got = find_hole_through(g, VertexSet::of(12, {a, b}));
    CAPTURE(seed);
    REQUIRE(got.certified);
    CHECK(got.found() == expect);
    if (got.found()) {
      CHECK(validate_hole(g, *got.witness));
      CHECK(got.witness->vertex_set(12).contains(a));
      CHECK(got.witness->vertex_set(12).contains(b));
    }
  }
}

TEST_CASE("theta detection on fixtures") {
  Graph k23 = complete_bipartite(2, 3);
  auto t = detect_theta(k23);
  REQUIRE(t.found());
  CHECK(t.certified);
  CHECK(validate_theta(k23, *t.witness));

  // Uneven branch lengths: ends 0 and 1, interiors of sizes 1, 2, 3.
  Graph th = Graph::from_edges(
      8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
  auto t2 = detect_theta(th);
  REQUIRE(t2.found());
  CHECK(validate_theta(th, *t2.witness));

  CHECK(!detect_theta(prism_graph()).found());
  CHECK(!detect_theta(cycle_graph(6)).found());
  CHECK(!detect_theta(long_prism()).found());
  CHECK(detect_theta(prism_graph()).certified);

  CHECK_THROWS_AS(detect_theta(Graph(65)), limit_error);

  // Beyond the certification size the negative answer is only best-effort.
  Graph star = complete_bipartite(1, 34);
  auto big = detect_theta(star);
  CHECK(!big.found());
  CHECK(!big.certified);
}

TEST_CASE("pyramid detection on fixtures") {
  Graph py = pyramid_122();
  auto d = detect_pyramid(py);
  REQUIRE(d.found());
  CHECK(d.certified);
  CHECK(validate_pyramid(py, *d.witness));
  VertexSet sigma(py.size());
  sigma.add(d.witness->apex);
  for (int v : d.witness->base) sigma.add(v);
  for (const auto& p : d.witness->paths) sigma |= p.vertex_set(py.size());
  CHECK(sigma == py.vertices());

  Graph py2 = pyramid_222();
  auto d2 = detect_pyramid(py2);
  REQUIRE(d2.found());
  CHECK(validate_pyramid(py2, *d2.witness));

  CHECK(!detect_pyramid(complete_graph(4)).found());
  CHECK(!detect_pyramid(prism_graph()).found());
  CHECK(!detect_pyramid(complete_bipartite(2, 3)).found());

  auto big = detect_pyramid(complete_bipartite(1, 34));
  CHECK(!big.found());
  CHECK(!big.certified);
}

TEST_CASE("prism and near-prism detection on fixtures") {
  auto pr = detect_prism(prism_graph());
  REQUIRE(pr.found());
  CHECK(validate_prism(prism_graph(), *pr.witness));

  auto lp = detect_prism(long_prism());
  REQUIRE(lp.found());
  CHECK(validate_prism(long_prism(), *lp.witness));

  Graph shared = shared_corner_near_prism();
  auto np = detect_near_prism(shared);
  REQUIRE(np.found());
  CHECK(np.certified);
  CHECK(validate_near_prism(shared, *np.witness, /*require_disjoint=*/false));

  auto noprism = detect_prism(shared);
  CHECK(!noprism.found());
  CHECK(noprism.certified);

  CHECK(detect_near_prism(prism_graph()).found());
  CHECK(!detect_near_prism(complete_bipartite(3, 3)).found());
}

TEST_CASE("extended near-prism with a prescribed cross edge") {
  Graph g = extended_near_prism_graph();
  auto d = detect_extended_near_prism_with_cross_edge(g, 6, 8);
  REQUIRE(d.found());
  CHECK(d.certified);
  CHECK(d.witness->cross_a == 6);
  CHECK(d.witness->cross_b == 8);
  CHECK(validate_extended_near_prism(g, *d.witness));

  auto rev = detect_extended_near_prism_with_cross_edge(g, 8, 6);
  REQUIRE(rev.found());
  CHECK(validate_extended_near_prism(g, *rev.witness));

  // A triangle edge cannot be the cross edge of any witness here.
  auto tri = detect_extended_near_prism_with_cross_edge(g, 0, 1);
  CHECK(!tri.found());
  CHECK(tri.certified);

  for (auto [a, b] : prism_graph().edges()) {
    CHECK(!detect_extended_near_prism_with_cross_edge(prism_graph(), a, b).found());
  }

  Graph k23e = complete_bipartite(2, 3).with_edge(2, 3);
  for (auto [a, b] : k23e.edges()) {
    CHECK(!detect_extended_near_prism_with_cross_edge(k23e, a, b).found());
  }

  CHECK_THROWS_AS(detect_extended_near_prism_with_cross_edge(complete_bipartite(2, 3), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("wheel enumeration and classification on fixtures") {
  // Hole C7 with a center seeing three pairwise non-adjacent rim vertices.
  Graph w1 = add_center(cycle_graph(7), {0, 2, 4});
  auto e1 = enumerate_wheels(w1);
  REQUIRE(e1.certified);
  REQUIRE(e1.wheels.size() == 1);
  CHECK(e1.wheels[0].first.center == 7);
  CHECK(e1.wheels[0].first.hole.length() == 7);
  CHECK(validate_wheel(w1, e1.wheels[0].first));
  const auto& c1 = e1.wheels[0].second;
  CHECK(c1.is_proper);
  CHECK(!c1.is_universal);
  CHECK(!c1.is_even);
  CHECK(c1.sectors.size() == 3);
  CHECK(c1.long_sector_indices.size() == 3);

  // Universal center over C5: a wheel, but not proper and not even.
  Graph w2 = add_center(cycle_graph(5), {0, 1, 2, 3, 4});
  auto e2 = enumerate_wheels(w2);
  REQUIRE(e2.wheels.size() == 1);
  CHECK(!e2.wheels[0].second.is_proper);
  CHECK(e2.wheels[0].second.is_universal);
  CHECK(!e2.wheels[0].second.is_even);

  // Universal center over C6: proper, universal, and even.
  Graph w3 = add_center(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  auto e3 = enumerate_wheels(w3);
  REQUIRE(e3.wheels.size() == 1);
  CHECK(e3.wheels[0].second.is_proper);
  CHECK(e3.wheels[0].second.is_universal);
  CHECK(e3.wheels[0].second.is_even);

  // Alternating center over C6: proper with an odd number of spokes.
  Graph w4 = add_center(cycle_graph(6), {0, 2, 4});
  auto e4 = enumerate_wheels(w4);
  REQUIRE(e4.wheels.size() == 1);
  CHECK(e4.wheels[0].second.is_proper);
  CHECK(!e4.wheels[0].second.is_even);
  CHECK(!e4.wheels[0].second.is_universal);

  CHECK(wheel_pairs(w1) == wheel_pairs_brute(w1));
  CHECK(wheel_pairs(w4) == wheel_pairs_brute(w4));
  CHECK(enumerate_wheels(cycle_graph(8)).wheels.empty());
}

TEST_CASE("wheel enumeration reports truncation instead of hiding it") {
  Graph w1 = add_center(cycle_graph(7), {0, 2, 4});

  HoleEnumLimits one_hole;
  one_hole.max_holes = 1;
  auto partial = enumerate_wheels(w1, one_hole);
  CHECK(!partial.certified);

  HoleEnumLimits tiny_budget;
  tiny_budget.node_budget = 3;
  auto starved = enumerate_wheels(w1, tiny_budget);
  CHECK(!starved.certified);
}

TEST_CASE("loaded pyramid detection and hubs on fixtures") {
  Graph lp = loaded_pyramid_graph();
  auto d = detect_loaded_pyramid(lp);
  REQUIRE(d.found());
  CHECK(d.certified);
  CHECK(d.witness->corner() == 2);
  CHECK(validate_loaded_pyramid(lp, *d.witness));

  HubSet hs = hubs(lp);
  CHECK(hs.certified);
  CHECK(hs.hubs == VertexSet::of(7, {2}));
  auto brute = oracle::hubs_brute(lp);
  auto got = hs.hubs.to_vector();
  CHECK(std::set<int>(got.begin(), got.end()) == brute);

  // A bare pyramid has no room for a loading path and no proper wheel.
  CHECK(!detect_loaded_pyramid(pyramid_122()).found());
  CHECK(hubs(pyramid_122()).hubs.empty());
  CHECK(oracle::hubs_brute(pyramid_122()).empty());

  // No apex-corner edge at all: not even a candidate.
  CHECK(!detect_loaded_pyramid(pyramid_222()).found());

  CHECK(hubs(path_graph(9)).hubs.empty());
  CHECK(hubs(path_graph(9)).certified);

  Graph w1 = add_center(cycle_graph(7), {0, 2, 4});
  CHECK(hubs(w1).hubs == VertexSet::of(8, {7}));
  Graph w3 = add_center(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  CHECK(hubs(w3).hubs == VertexSet::of(7, {6}));

  CHECK(!hubs(complete_bipartite(1, 34)).certified);
}

TEST_CASE("loaded pyramid detection is label-independent") {
  // Same graph as loaded_pyramid_graph under a vertex permutation.
  std::vector<int> m{3, 5, 0, 6, 1, 2, 4};
  Graph base = loaded_pyramid_graph();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : base.edges()) edges.emplace_back(m[u], m[v]);
  Graph shuffled = Graph::from_edges(7, edges);

  auto d = detect_loaded_pyramid(shuffled);
  REQUIRE(d.found());
  CHECK(d.witness->corner() == m[2]);
  CHECK(hubs(shuffled).hubs == VertexSet::of(7, {m[2]}));
}

TEST_CASE("classification of sets against a pyramid") {
  Graph py = pyramid_122();
  PyramidWitness w = pyramid_122_witness();
  REQUIRE(validate_pyramid(py, w));

  CHECK(classify_against_pyramid(py, w, VertexSet::of(6, {0, 1})).relation ==
        PyramidRelation::Local);
  CHECK(classify_against_pyramid(py, w, VertexSet::of(6, {4, 2})).relation ==
        PyramidRelation::Local);
  CHECK(classify_against_pyramid(py, w, VertexSet::of(6, {1, 2, 3})).relation ==
        PyramidRelation::Local);
  CHECK(classify_against_pyramid(py, w, VertexSet::of(6, {4, 5})).relation ==
        PyramidRelation::Other);

  // One vertex seeing the two other corners and the apex side of path one.
  Graph cp(7);
  for (auto [u, v] : py.edges()) cp.add_edge(u, v);
  cp.add_edge(6, 2);
  cp.add_edge(6, 3);
  cp.add_edge(6, 0);
  REQUIRE(validate_pyramid(cp, w));
  auto corner = classify_against_pyramid(cp, w, VertexSet::of(7, {6}));
  CHECK(corner.relation == PyramidRelation::CornerPath);
  CHECK(corner.corner == 1);

  // A two-vertex corner path for corner 1 of the all-length-2 pyramid.
  Graph py2 = pyramid_222();
  PyramidWitness w2;
  w2.apex = 0;
  w2.base = {1, 2, 3};
  w2.paths = {Path{{0, 4, 1}}, Path{{0, 5, 2}}, Path{{0, 6, 3}}};
  Graph cp2(9);
  for (auto [u, v] : py2.edges()) cp2.add_edge(u, v);
  cp2.add_edge(7, 8);
  cp2.add_edge(7, 2);
  cp2.add_edge(7, 3);
  cp2.add_edge(8, 4);
  REQUIRE(validate_pyramid(cp2, w2));
  auto corner2 = classify_against_pyramid(cp2, w2, VertexSet::of(9, {7, 8}));
  CHECK(corner2.relation == PyramidRelation::CornerPath);
  CHECK(corner2.corner == 1);

  // A vertex with feet on the interiors of two different paths is major.
  Graph mj(7);
  for (auto [u, v] : py.edges()) mj.add_edge(u, v);
  mj.add_edge(6, 4);
  mj.add_edge(6, 5);
  auto major = classify_against_pyramid(mj, w, VertexSet::of(7, {6}));
  CHECK(major.relation == PyramidRelation::Major);
  CHECK(major.vertex == 6);

  // A vertex whose neighborhood in the pyramid stays inside one path is not.
  Graph loc(7);
  for (auto [u, v] : py.edges()) loc.add_edge(u, v);
  loc.add_edge(6, 0);
  loc.add_edge(6, 4);
  CHECK(classify_against_pyramid(loc, w, VertexSet::of(7, {6})).relation ==
        PyramidRelation::Other);

  // Single foot on one corner: neither corner path nor major.
  Graph one(7);
  for (auto [u, v] : py.edges()) one.add_edge(u, v);
  one.add_edge(6, 2);
  CHECK(classify_against_pyramid(one, w, VertexSet::of(7, {6})).relation ==
        PyramidRelation::Other);

  // Sets straddling the pyramid boundary stay unclassified.
  Graph mix(7);
  for (auto [u, v] : py.edges()) mix.add_edge(u, v);
  mix.add_edge(6, 5);
  CHECK(classify_against_pyramid(mix, w, VertexSet::of(7, {5, 6})).relation ==
        PyramidRelation::Other);
}

TEST_CASE("class membership fixtures") {
  auto k22 = in_class_C(complete_bipartite(2, 2));
  CHECK(!k22.in_class);
  REQUIRE(k22.violation.has_value());
  CHECK(k22.violation->kind == StructureKind::C4);

  auto c5 = in_class_C(cycle_graph(5));
  CHECK(c5.in_class);
  CHECK(c5.certified);

  // An even hole alone does not leave the class: only the four named
  // structures matter.
  CHECK(in_class_C(cycle_graph(6)).in_class);

  // Two of the branch pairs of this theta close odd holes, none a C4.
  Graph th = Graph::from_edges(
      8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
  auto theta = in_class_C(th);
  CHECK(!theta.in_class);
  REQUIRE(theta.violation.has_value());
  CHECK(theta.violation->kind == StructureKind::Theta);

  // The complete bipartite theta falls to its four-cycle first.
  auto k23 = in_class_C(complete_bipartite(2, 3));
  CHECK(!k23.in_class);
  REQUIRE(k23.violation.has_value());
  CHECK(k23.violation->kind == StructureKind::C4);

  auto lp = in_class_C(long_prism());
  CHECK(!lp.in_class);
  REQUIRE(lp.violation.has_value());
  CHECK(lp.violation->kind == StructureKind::Prism);

  Graph w3 = add_center(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  auto even_wheel = in_class_C(w3);
  CHECK(!even_wheel.in_class);
  REQUIRE(even_wheel.violation.has_value());
  CHECK(even_wheel.violation->kind == StructureKind::Wheel);

  CHECK(in_class_C(complete_graph(5)).in_class);
  CHECK(in_class_C(path_graph(8)).in_class);
}

TEST_CASE("exhaustive agreement with definitions on five vertices") {
  for_all_graphs(5, [](const Graph& g) {
    CHECK(detect_c4(g).found() == oracle_c4(g));
    CHECK(find_even_hole(g).found() == oracle::hole_exists_brute(g, true));
    CHECK(detect_theta(g).found() == oracle_theta(g));
    CHECK(!detect_pyramid(g).found());
    CHECK(!detect_near_prism(g).found());
    if (!oracle::hole_exists_brute(g, true)) CHECK(in_class_C(g).in_class);
  });
}

TEST_CASE("exhaustive agreement with definitions on six vertices") {
  for_all_graphs(6, [](const Graph& g) {
    CHECK(detect_c4(g).found() == oracle_c4(g));
    CHECK(find_even_hole(g).found() == oracle::hole_exists_brute(g, true));
    CHECK(detect_theta(g).found() == oracle_theta(g));
    CHECK(detect_pyramid(g).found() == oracle_pyramid(g));
    CHECK(detect_prism(g).found() == oracle_near_prism(g, true));
    CHECK(detect_near_prism(g).found() == oracle_near_prism(g, false));
    CHECK(wheel_pairs(g) == wheel_pairs_brute(g));
    if (!oracle::hole_exists_brute(g, true)) CHECK(in_class_C(g).in_class);
  });
}

TEST_CASE("random agreement: four-cycles, even holes, thetas") {
  for (int seed = 0; seed < 150; ++seed) {
    double p = seed % 3 == 0 ? 0.2 : (seed % 3 == 1 ? 0.35 : 0.5);
    Graph g = random_graph(10, p, 9000 + seed);
    CAPTURE(seed);
    CHECK(detect_c4(g).found() == oracle_c4(g));
    CHECK(find_even_hole(g).found() == oracle::hole_exists_brute(g, true));
    auto th = detect_theta(g);
    CHECK(th.found() == oracle_theta(g));
    CHECK(th.certified);
    if (th.found()) CHECK(validate_theta(g, *th.witness));
  }
}

TEST_CASE("random agreement: prisms, near-prisms, pyramids") {
  for (int seed = 0; seed < 90; ++seed) {
    double p = seed % 3 == 0 ? 0.25 : (seed % 3 == 1 ? 0.4 : 0.55);
    Graph g = random_graph(9, p, 17000 + seed);
    CAPTURE(seed);
    auto pr = detect_prism(g);
    CHECK(pr.found() == oracle_near_prism(g, true));
    if (pr.found()) CHECK(validate_prism(g, *pr.witness));
    auto np = detect_near_prism(g);
    CHECK(np.found() == oracle_near_prism(g, false));
    if (np.found()) CHECK(validate_near_prism(g, *np.witness, false));
    auto py = detect_pyramid(g);
    CHECK(py.found() == oracle_pyramid(g));
    if (py.found()) CHECK(validate_pyramid(g, *py.witness));
  }
}

TEST_CASE("random agreement: wheels and hubs") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(8, 0.35, 23000 + seed);
    CAPTURE(seed);
    CHECK(wheel_pairs(g) == wheel_pairs_brute(g));
    HubSet hs = hubs(g);
    REQUIRE(hs.certified);
    auto got = hs.hubs.to_vector();
    CHECK(std::set<int>(got.begin(), got.end()) == oracle::hubs_brute(g));
  }
}

TEST_CASE("random agreement: extended near-prisms over every edge") {
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(8, 0.4, 31000 + seed);
    CAPTURE(seed);
    for (auto [a, b] : g.edges()) {
      auto d = detect_extended_near_prism_with_cross_edge(g, a, b);
      CHECK(d.found() == oracle_extended_near_prism(g, a, b));
      if (d.found()) CHECK(validate_extended_near_prism(g, *d.witness));
    }
  }
}

TEST_CASE("random agreement: even holes at fourteen vertices") {
  for (int seed = 0; seed < 500; ++seed) {
    double p = 0.1 + 0.04 * (seed % 10);
    Graph g = random_graph(14, p, 40000 + seed);
    CAPTURE(seed);
    auto d = find_even_hole(g);
    REQUIRE(d.certified);
    CHECK(d.found() == oracle::hole_exists_brute(g, true));
    if (d.found()) {
      CHECK(validate_hole(g, *d.witness));
      CHECK(d.witness->even());
    }
  }
}

TEST_CASE("starved searches are reported as uncertified") {
  DetectLimits tiny;
  tiny.node_budget = 3;

  auto th = detect_theta(cycle_graph(12), tiny);
  CHECK(!th.found());
  CHECK(!th.certified);

  auto py = detect_pyramid(pyramid_222(), tiny);
  CHECK((py.found() || !py.certified));

  auto np = detect_near_prism(prism_graph(), tiny);
  CHECK((np.found() || !np.certified));

  auto lo = detect_loaded_pyramid(loaded_pyramid_graph(), tiny);
  CHECK((lo.found() || !lo.certified));
}
