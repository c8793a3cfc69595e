#pragma once

// Dangerous triples and purity: a triple across the three blocks is
// dangerous with a given center when the apex-center edge is a cross-edge of
// an extended near-prism inside the component plus the triple; a block
// subset is pure when no hole through both the apex and the target survives
// inside the component plus that subset.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ehk/bitset.hpp"
#include "ehk/detect.hpp"
#include "ehk/graph.hpp"
#include "ehk/holes.hpp"
#include "ehk/witness.hpp"

namespace ehk {

namespace detail {

inline Path remap_path(const Path& p, const std::vector<int>& map) {
  Path out;
  out.v.reserve(p.v.size());
  for (int v : p.v) out.v.push_back(map[v]);
  return out;
}

inline ExtendedNearPrismWitness remap_extended_near_prism(const ExtendedNearPrismWitness& w,
                                                          const std::vector<int>& map) {
  ExtendedNearPrismWitness out = w;
  for (int i = 0; i < 3; ++i) {
    out.near_prism.a_corner[i] = map[w.near_prism.a_corner[i]];
    out.near_prism.b_corner[i] = map[w.near_prism.b_corner[i]];
    out.near_prism.paths[i] = remap_path(w.near_prism.paths[i], map);
  }
  out.cross_a = map[w.cross_a];
  out.cross_b = map[w.cross_b];
  return out;
}

}  // namespace detail

// True branch carries the witness that the apex-center edge is a cross-edge
// of an extended near-prism in dset plus the triple and the apex. The
// uncertified-without-witness state means the detector budget ran out.
inline Detection<ExtendedNearPrismWitness> dangerous_triple_check(const Graph& g, int a, int x1,
                                                                  int x2, int x3,
                                                                  const VertexSet& dset,
                                                                  const DetectLimits& lim = {}) {
  if (x1 == x2 || x1 == x3 || x2 == x3)
    throw std::invalid_argument("dangerous_triple_check: corners must be distinct");
  for (int x : {x1, x2, x3}) {
    if (!g.adjacent(a, x))
      throw std::invalid_argument("dangerous_triple_check: corners must neighbor the apex");
    if (dset.contains(x))
      throw std::invalid_argument("dangerous_triple_check: corners must avoid the component");
  }
  if (g.adjacent(x1, x2) || g.adjacent(x1, x3) || g.adjacent(x2, x3))
    throw std::invalid_argument("dangerous_triple_check: corners must be pairwise non-adjacent");
  if (dset.intersects(closed_neighborhood(g, a)))
    throw std::invalid_argument("dangerous_triple_check: component must avoid the apex closure");

  VertexSet span = dset;
  span.add(x1);
  span.add(x2);
  span.add(x3);
  span.add(a);
  auto [sub, map] = induced_subgraph(g, span);
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < int(map.size()); ++i) pos[map[i]] = i;

  Detection<ExtendedNearPrismWitness> found =
      detect_extended_near_prism_with_cross_edge(sub, pos[a], pos[x2], lim);
  Detection<ExtendedNearPrismWitness> out;
  out.certified = found.certified;
  if (found.found()) {
    ExtendedNearPrismWitness w = detail::remap_extended_near_prism(*found.witness, map);
    if (!validate_extended_near_prism(g, w))
      throw std::logic_error("dangerous_triple_check: witness does not survive the embedding");
    out.witness = w;
  }
  return out;
}

// Hole through both a and b inside dset plus xprime plus a. Pure means no
// such hole: !found() with certified set. The witness, when found, is the
// impurity certificate.
inline Detection<HoleWitness> purity_check(const Graph& g, const VertexSet& dset,
                                           const VertexSet& xprime, int a, int b,
                                           HoleEnumLimits lim = {}) {
  if (dset.contains(a) || xprime.contains(a))
    throw std::invalid_argument("purity_check: apex must be outside the component and the subset");
  if (!dset.contains(b)) throw std::invalid_argument("purity_check: target must be in the component");
  if (xprime.intersects(dset)) throw std::invalid_argument("purity_check: subset meets the component");
  if (g.neighbors(a).intersects(dset))
    throw std::invalid_argument("purity_check: apex must be anticomplete to the component");
  if (!is_connected(g, dset))
    throw std::invalid_argument("purity_check: component must be connected");
  for (int x = xprime.min(); x >= 0; x = xprime.next(x)) {
    if (!g.adjacent(a, x))
      throw std::invalid_argument("purity_check: subset must lie in the apex neighborhood");
    if (!g.neighbors(x).intersects(dset))
      throw std::invalid_argument("purity_check: subset must attach to the component");
  }

  VertexSet span = dset | xprime;
  span.add(a);
  auto [sub, map] = induced_subgraph(g, span);
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < int(map.size()); ++i) pos[map[i]] = i;

  Detection<HoleWitness> found =
      find_hole_through(sub, VertexSet::of(sub.size(), {pos[a], pos[b]}), lim);
  Detection<HoleWitness> out;
  out.certified = found.certified;
  if (found.found()) {
    HoleWitness h;
    for (int v : found.witness->cycle) h.cycle.push_back(map[v]);
    if (!validate_hole(g, h))
      throw std::logic_error("purity_check: hole does not survive the embedding");
    out.witness = h;
  }
  return out;
}

// Greedy search for a pure subset of xs of at least min_size vertices:
// peel the xs-vertices of each found hole and retest. Returns the subset on
// success; nullopt when the peel dips below min_size or a budget-starved
// purity test leaves the answer unknown.
inline std::optional<VertexSet> pure_subset(const Graph& g, const VertexSet& dset,
                                            const VertexSet& xs, int a, int b, int min_size,
                                            HoleEnumLimits lim = {}) {
  VertexSet cand = xs;
  while (cand.count() >= min_size) {
    Detection<HoleWitness> hole = purity_check(g, dset, cand, a, b, lim);
    if (!hole.found()) {
      if (!hole.certified) return std::nullopt;
      return cand;
    }
    VertexSet peel = hole.witness->vertex_set(g.size()) & cand;
    if (peel.empty()) throw std::logic_error("pure_subset: impurity hole avoids the subset");
    cand -= peel;
  }
  return std::nullopt;
}

}  // namespace ehk
