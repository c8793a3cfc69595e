#include <doctest.h>

#include <utility>
#include <vector>

#include "ehk/detect.hpp"
#include "ehk/gen.hpp"
#include "ehk/graph.hpp"
#include "ehk/holes.hpp"
#include "ehk/laws.hpp"
#include "support/testutil.hpp"

using namespace ehk;

namespace {

// Apex 0, base 1-2-3 with the apex edge 0-2, both side paths of length 3,
// and one loading vertex 8 hooked to the corner, an interior of the first
// path, and the far base vertex. Class member; 8 is major for the pyramid.
Graph loaded_class_member() {
  return Graph::from_edges(9, {{1, 2}, {1, 3}, {2, 3},
                               {0, 4}, {4, 5}, {5, 1},
                               {0, 2},
                               {0, 6}, {6, 7}, {7, 3},
                               {8, 2}, {8, 5}, {8, 1}});
}

PyramidWitness loaded_member_pyramid() {
  PyramidWitness w;
  w.apex = 0;
  w.base = {1, 2, 3};
  w.paths = {Path{{0, 4, 5, 1}}, Path{{0, 2}}, Path{{0, 6, 7, 3}}};
  return w;
}

// Pyramid with three length-2 paths: apex 0, base 1-2-3, midpoints 4, 5, 6.
Graph pyramid_222() {
  return Graph::from_edges(7, {{1, 2}, {1, 3}, {2, 3},
                               {0, 4}, {4, 1},
                               {0, 5}, {5, 2},
                               {0, 6}, {6, 3}});
}

PyramidWitness pyramid_222_witness() {
  PyramidWitness w;
  w.apex = 0;
  w.base = {1, 2, 3};
  w.paths = {Path{{0, 4, 1}}, Path{{0, 5, 2}}, Path{{0, 6, 3}}};
  return w;
}

Graph with_extra_vertex(const Graph& g, const std::vector<int>& attach) {
  Graph out(g.size() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v : attach) out.add_edge(g.size(), v);
  return out;
}

}  // namespace

TEST_CASE("sector and star cutsets hold on a skewed odd wheel") {
  Graph g = gen_named("wheel", {9, 3});  // rim 0..8, center 9 on {0, 3, 6}
  auto cc = in_class_C(g);
  REQUIRE(cc.in_class);
  REQUIRE(cc.certified);

  auto we = enumerate_wheels(g);
  REQUIRE(we.certified);
  REQUIRE(we.wheels.size() == 1);
  const auto& [w, cls] = we.wheels.front();
  CHECK(w.center == 9);
  CHECK(cls.is_proper);
  CHECK(!cls.is_universal);
  CHECK(cls.long_sector_indices.size() == 3);
  CHECK(wheel_star_cutset_law(g, w));
  CHECK(wheel_sector_cutset_law(g, w, cls));

  LawReport rep = check_structure_laws(g);
  CHECK(rep.ok());
  CHECK(rep.complete);
  CHECK(rep.proper_wheels == 1);
  CHECK(rep.nonuniversal_proper_wheels == 1);
  CHECK(rep.pyramids == 0);
  CHECK(rep.major_pairs == 0);
  CHECK(rep.loaded_pyramids == 0);
}

TEST_CASE("sector cutset checker notices a broken separation") {
  // A chord from the sector interior to the far rim defeats the parity cut
  // {0, 3, 9}; the stale wheel description must be reported as violated.
  Graph g = gen_named("wheel", {9, 3}).with_edge(1, 5);
  WheelWitness w;
  w.hole.cycle = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  w.center = 9;
  auto cls = classify_wheel(g, w);
  CHECK(cls.is_proper);
  CHECK(cls.long_sector_indices.size() == 3);
  CHECK(!wheel_sector_cutset_law(g, w, cls));
}

TEST_CASE("star cutset checker notices a dominating component") {
  Graph base = gen_named("wheel", {9, 3});
  VertexSet rim(11);
  for (int v = 0; v <= 8; ++v) rim.add(v);
  Graph g = with_extra_vertex(base, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  // 10 survives the removal of N[9] and covers the whole rim by itself.
  CHECK(!hub_star_cutset_law(g, rim, 9));
}

TEST_CASE("loaded pyramid corner law and the loading major alternative") {
  Graph g = loaded_class_member();
  auto cc = in_class_C(g);
  REQUIRE(cc.in_class);
  REQUIRE(cc.certified);

  auto hs = hubs(g);
  REQUIRE(hs.certified);
  CHECK(hs.hubs.to_vector() == std::vector<int>{2});

  PyramidWitness pyr = loaded_member_pyramid();
  REQUIRE(validate_pyramid(g, pyr));
  auto c = classify_against_pyramid(g, pyr, VertexSet::of(9, {8}));
  CHECK(c.relation == PyramidRelation::Major);
  CHECK(major_vertex_outcome(g, pyr, 8, hs.hubs) == 4);

  auto d = detect_loaded_pyramid(g);
  REQUIRE(d.found());
  CHECK(d.witness->corner() == 2);
  enumerate_loaded_pyramids(g, {}, [&](const LoadedPyramidWitness& w) {
    CHECK(loaded_corner_law(g, w));
    return true;
  });

  LawReport rep = check_structure_laws(g);
  CHECK(rep.ok());
  CHECK(rep.complete);
  CHECK(rep.pyramids == 1);
  CHECK(rep.major_pairs == 1);
  CHECK(rep.loaded_pyramids == 1);
  CHECK(rep.proper_wheels == 0);
}

TEST_CASE("apex-capped pyramid takes the first major alternative") {
  // 7 caps the apex and two path midpoints; the 0-7 edge keeps C4s out.
  Graph g = with_extra_vertex(pyramid_222(), {4, 5, 0});
  auto cc = in_class_C(g);
  REQUIRE(cc.in_class);
  REQUIRE(cc.certified);

  auto hs = hubs(g);
  PyramidWitness pyr = pyramid_222_witness();
  auto c = classify_against_pyramid(g, pyr, VertexSet::of(8, {7}));
  CHECK(c.relation == PyramidRelation::Major);
  CHECK(major_vertex_outcome(g, pyr, 7, hs.hubs) == 1);

  LawReport rep = check_structure_laws(g);
  CHECK(rep.ok());
  CHECK(rep.complete);
  CHECK(rep.pyramids == 1);
  CHECK(rep.major_pairs == 1);
  CHECK(rep.loaded_pyramids == 0);
}

TEST_CASE("a defeated major vertex pins the graph outside the class") {
  // Without the apex edge the cap vertex closes a C4 (7-4-0-5) and no
  // alternative holds for it: exactly what non-membership permits.
  Graph g = with_extra_vertex(pyramid_222(), {4, 5});
  CHECK(!in_class_C(g).in_class);
  auto hs = hubs(g);
  PyramidWitness pyr = pyramid_222_witness();
  auto c = classify_against_pyramid(g, pyr, VertexSet::of(8, {7}));
  REQUIRE(c.relation == PyramidRelation::Major);
  CHECK(major_vertex_outcome(g, pyr, 7, hs.hubs) == 0);

  LawReport rep = check_structure_laws(g);
  CHECK(!rep.ok());
}

TEST_CASE("larger odd wheels keep their sector cutsets") {
  for (auto [rim, spokes] : {std::pair{11, 3}, {13, 3}, {15, 5}}) {
    Graph g = gen_named("wheel", {rim, spokes});
    auto cc = in_class_C(g);
    REQUIRE(cc.in_class);
    REQUIRE(cc.certified);
    LawReport rep = check_structure_laws(g);
    CHECK(rep.ok());
    CHECK(rep.complete);
    CHECK(rep.nonuniversal_proper_wheels >= 1);
    if (!rep.ok())
      for (const auto& v : rep.violations) MESSAGE(v);
  }
}

TEST_CASE("random class members satisfy every law") {
  int wheels_seen = 0, majors_seen = 0, loaded_seen = 0;
  for (int s = 0; s < 40; ++s) {
    int n = 8 + s % 7;
    double p = 0.25 + 0.05 * (s % 5);
    Graph g = gen_random_ehf(n, p, 1000 + s);
    LawReport rep = check_structure_laws(g);
    CHECK(rep.ok());
    CHECK(rep.complete);
    if (!rep.ok())
      for (const auto& v : rep.violations) MESSAGE("seed ", 1000 + s, ": ", v);
    wheels_seen += rep.proper_wheels;
    majors_seen += rep.major_pairs;
    loaded_seen += rep.loaded_pyramids;
  }
  MESSAGE("corpus census: ", wheels_seen, " proper wheels, ", majors_seen,
          " major pairs, ", loaded_seen, " loadings");
}
