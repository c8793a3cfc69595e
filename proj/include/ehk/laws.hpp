#pragma once
// Consequence checkers for structures found in class members. Each law takes
// a configuration already located in the graph and verifies the conclusion
// that class membership forces: the four alternatives for a major vertex of
// a pyramid, the parity cutset carved out of a long wheel sector, and the
// star cutsets around hubs. A reported violation means either the graph is
// outside the class or a detector upstream is wrong, so property tests and
// the acceptance sweep assert that class members produce none.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "ehk/detect.hpp"
#include "ehk/graph.hpp"
#include "ehk/holes.hpp"
#include "ehk/path.hpp"
#include "ehk/witness.hpp"

namespace ehk {

inline VertexSet pyramid_vertex_set(const PyramidWitness& pyr, int universe) {
  VertexSet s(universe);
  s.add(pyr.apex);
  for (int v : pyr.base) s.add(v);
  for (const auto& p : pyr.paths) s |= p.vertex_set(universe);
  return s;
}

inline VertexSet loaded_vertex_set(const LoadedPyramidWitness& w, int universe) {
  VertexSet s = pyramid_vertex_set(w.pyramid, universe);
  s |= w.p.vertex_set(universe);
  return s;
}

// Star cutset around v: no component of G - N[v] may dominate the whole
// structure, i.e. contain every structure vertex in its closed neighborhood.
inline bool hub_star_cutset_law(const Graph& g, const VertexSet& structure, int v) {
  VertexSet rest = g.vertices() - closed_neighborhood(g, v);
  for (const auto& d : components(g, rest))
    if (structure.subset_of(closed_neighborhood(g, d))) return false;
  return true;
}

// Instance for a proper wheel: the hole against its center.
inline bool wheel_star_cutset_law(const Graph& g, const WheelWitness& w) {
  return hub_star_cutset_law(g, w.hole.vertex_set(g.size()), w.center);
}

// Instance for a loaded pyramid: all of its vertices against the corner.
inline bool loaded_corner_law(const Graph& g, const LoadedPyramidWitness& w) {
  return hub_star_cutset_law(g, loaded_vertex_set(w, g.size()), w.corner());
}

// Sector cutset of a proper non-universal wheel (H, x): for a long sector Q
// with ends x1, x2, collect the spokes h != x1 whose subpath of H - x1 from
// x2 to h holds an even number of spokes (ends included); those spokes W stay
// on the far side while N(x) \ W plus x must separate the sector interior
// from W and from the hole vertices outside Q and N(x). Checked for every
// long sector under both end labelings.
inline bool wheel_sector_cutset_law(const Graph& g, const WheelWitness& w,
                                    const WheelClassification& cls) {
  int n = g.size();
  const std::vector<int>& cyc = w.hole.cycle;
  int k = int(cyc.size());
  VertexSet hset = w.hole.vertex_set(n);
  VertexSet nx = g.neighbors(w.center);
  VertexSet spokes = nx & hset;

  for (int qi : cls.long_sector_indices) {
    const Path& q = cls.sectors[qi];
    VertexSet qset = q.vertex_set(n);
    VertexSet qstar = qset;
    qstar.remove(q.first());
    qstar.remove(q.last());
    VertexSet z = (hset - qset) - nx;

    for (int lab = 0; lab < 2; ++lab) {
      int x1 = lab == 0 ? q.first() : q.last();
      int x2 = lab == 0 ? q.last() : q.first();
      int pos = 0;
      while (cyc[pos] != x1) ++pos;
      std::vector<int> open;
      open.reserve(k - 1);
      for (int t = 1; t < k; ++t) open.push_back(cyc[(pos + t) % k]);
      std::vector<int> pref(open.size() + 1, 0);
      int px2 = -1;
      for (std::size_t i = 0; i < open.size(); ++i) {
        pref[i + 1] = pref[i] + int(spokes.contains(open[i]));
        if (open[i] == x2) px2 = int(i);
      }
      VertexSet even_spokes(n);
      for (std::size_t i = 0; i < open.size(); ++i) {
        if (!spokes.contains(open[i])) continue;
        int lo = std::min(px2, int(i)), hi = std::max(px2, int(i));
        if ((pref[hi + 1] - pref[lo]) % 2 == 0) even_spokes.add(open[i]);
      }
      VertexSet cut = nx - even_spokes;
      cut.add(w.center);
      VertexSet target = even_spokes | z;
      if (target.empty()) continue;
      VertexSet rest = g.vertices() - cut;
      for (const auto& d : components(g, rest))
        if (d.intersects(qstar) && d.intersects(target)) return false;
    }
  }
  return true;
}

// Which alternative holds for a major vertex p of the pyramid:
//   1  p sees the apex and two or more of the apex's pyramid neighbors;
//   2  p sees the apex and p is a hub;
//   3  the pyramid plus p induces an extended prism with the apex on its
//      cross-edge;
//   4  p loads the pyramid, making the corner on the apex edge a hub;
//   0  none (impossible for class members).
// Checks run cheapest first, so the code returned is the first that holds in
// the order 1, 2, 4, 3. hub_set must hold the hubs of g.
inline int major_vertex_outcome(const Graph& g, const PyramidWitness& pyr, int p,
                                const VertexSet& hub_set, const DetectLimits& lim = {}) {
  int n = g.size();
  VertexSet sigma = pyramid_vertex_set(pyr, n);
  int a = pyr.apex;
  if (g.adjacent(p, a)) {
    VertexSet na_sigma = g.neighbors(a) & sigma;
    if ((g.neighbors(p) & na_sigma).count() >= 2) return 1;
    if (hub_set.contains(p)) return 2;
  }
  // Loading by the one-vertex path p: the apex edge fixes which corner can
  // load; both assignments of the remaining base pair are tried.
  for (int ci = 0; ci < 3; ++ci) {
    if (pyr.paths[ci].length() != 1) continue;
    std::array<int, 2> rest{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != ci) rest[k++] = i;
    for (int swap = 0; swap < 2; ++swap) {
      int i1 = rest[swap], i3 = rest[1 - swap];
      LoadedPyramidWitness lw;
      lw.pyramid.apex = a;
      lw.pyramid.base = {pyr.base[i1], pyr.base[ci], pyr.base[i3]};
      lw.pyramid.paths = {pyr.paths[i1], pyr.paths[ci], pyr.paths[i3]};
      lw.p = Path{{p}};
      if (validate_loaded_pyramid(g, lw)) return 4;
    }
  }
  // Extended prism on exactly the pyramid plus p: some prism with disjoint
  // triangles covering every vertex of the induced subgraph, with the apex
  // hosted in one path interior and a neighbor across the cross-edge.
  VertexSet hull = sigma;
  hull.add(p);
  auto [h, map] = induced_subgraph(g, hull);
  int ah = -1;
  for (int i = 0; i < int(map.size()); ++i)
    if (map[i] == a) ah = i;
  VertexSet apex_nb = h.neighbors(ah);
  for (int yh = apex_nb.min(); yh >= 0; yh = apex_nb.next(yh)) {
    Graph h2 = h.without_edge(ah, yh);
    bool covered = false;
    detail::near_prism_search(h2, lim, /*disjoint_only=*/true, ah, yh,
                              [&](const PrismWitness& np) {
                                int cnt = 0;
                                for (const auto& q : np.paths) cnt += int(q.v.size());
                                if (cnt == h.size()) {
                                  covered = true;
                                  return false;
                                }
                                return true;
                              });
    if (covered) return 3;
  }
  return 0;
}

struct LawLimits {
  int max_pyramids = 200;
  int max_loaded = 200;
};

struct LawReport {
  int pyramids = 0;                    // distinct pyramids examined
  int major_pairs = 0;                 // (pyramid, major vertex) pairs checked
  int proper_wheels = 0;               // star cutset instances
  int nonuniversal_proper_wheels = 0;  // sector cutset instances
  int loaded_pyramids = 0;             // distinct (corner, vertex set) loadings
  bool complete = true;  // false when a budget, size limit, or cap truncated a walk
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Runs every law instance the enumerators can surface in g. Only meaningful
// for class members: on outsiders a violation merely witnesses
// non-membership. Violations are exhaustive only when complete is true (the
// hub set backing alternative 2 is under-approximated past the limits).
inline LawReport check_structure_laws(const Graph& g, const DetectLimits& dl = {},
                                      const HoleEnumLimits& hl = {},
                                      const LawLimits& ll = {}) {
  LawReport rep;
  int n = g.size();
  HubSet hs = hubs(g, dl, hl);
  if (!hs.certified) rep.complete = false;

  WheelEnumeration we = enumerate_wheels(g, hl);
  if (!we.certified) rep.complete = false;
  for (const auto& [w, cls] : we.wheels) {
    if (!cls.is_proper) continue;
    ++rep.proper_wheels;
    if (!wheel_star_cutset_law(g, w))
      rep.violations.push_back("wheel star cutset fails at center " +
                               std::to_string(w.center) + " on hole " +
                               w.hole.vertex_set(n).str());
    if (cls.is_universal) continue;
    ++rep.nonuniversal_proper_wheels;
    if (!wheel_sector_cutset_law(g, w, cls))
      rep.violations.push_back("wheel sector cutset fails at center " +
                               std::to_string(w.center) + " on hole " +
                               w.hole.vertex_set(n).str());
  }

  std::set<std::vector<int>> seen_pyr;
  bool pyr_ok = enumerate_pyramids(g, dl, [&](const PyramidWitness& pyr) {
    VertexSet sigma = pyramid_vertex_set(pyr, n);
    std::vector<int> key{pyr.apex, pyr.base[0], pyr.base[1], pyr.base[2]};
    for (int v : sigma.to_vector()) key.push_back(v);
    if (!seen_pyr.insert(std::move(key)).second) return true;
    ++rep.pyramids;
    for (int p = 0; p < n; ++p) {
      if (sigma.contains(p)) continue;
      auto c = classify_against_pyramid(g, pyr, VertexSet::of(n, {p}));
      if (c.relation != PyramidRelation::Major) continue;
      ++rep.major_pairs;
      if (major_vertex_outcome(g, pyr, p, hs.hubs, dl) == 0)
        rep.violations.push_back("major vertex " + std::to_string(p) +
                                 " defeats every alternative on pyramid " +
                                 sigma.str());
    }
    return rep.pyramids < ll.max_pyramids;
  });
  if (!pyr_ok || rep.pyramids >= ll.max_pyramids) rep.complete = false;

  std::set<std::vector<int>> seen_loaded;
  bool loaded_ok = enumerate_loaded_pyramids(g, dl, [&](const LoadedPyramidWitness& w) {
    std::vector<int> key{w.corner()};
    for (int v : loaded_vertex_set(w, n).to_vector()) key.push_back(v);
    if (!seen_loaded.insert(std::move(key)).second) return true;
    ++rep.loaded_pyramids;
    if (!loaded_corner_law(g, w))
      rep.violations.push_back("loaded pyramid star cutset fails at corner " +
                               std::to_string(w.corner()) + " on " +
                               loaded_vertex_set(w, n).str());
    return rep.loaded_pyramids < ll.max_loaded;
  });
  if (!loaded_ok || rep.loaded_pyramids >= ll.max_loaded) rep.complete = false;

  return rep;
}

}  // namespace ehk
