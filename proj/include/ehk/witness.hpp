#pragma once

// Structural configurations and their definition-level validators. Every
// detector re-validates its output through these predicates, so a detector
// bug cannot produce an invalid witness silently.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ehk/exact.hpp"
#include "ehk/graph.hpp"
#include "ehk/path.hpp"

namespace ehk {

enum class StructureKind {
  C4,
  Hole,
  Theta,
  Prism,
  NearPrism,
  Pyramid,
  Wheel,
  ExtendedNearPrism,
  LoadedPyramid,
};

inline const char* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::C4: return "c4";
    case StructureKind::Hole: return "hole";
    case StructureKind::Theta: return "theta";
    case StructureKind::Prism: return "prism";
    case StructureKind::NearPrism: return "near_prism";
    case StructureKind::Pyramid: return "pyramid";
    case StructureKind::Wheel: return "wheel";
    case StructureKind::ExtendedNearPrism: return "extended_near_prism";
    case StructureKind::LoadedPyramid: return "loaded_pyramid";
  }
  return "?";
}

// Hole stored as the cyclic vertex order; length = number of vertices.
struct HoleWitness {
  std::vector<int> cycle;

  int length() const { return int(cycle.size()); }
  bool even() const { return length() % 2 == 0; }
  VertexSet vertex_set(int universe) const {
    VertexSet s(universe);
    for (int v : cycle) s.add(v);
    return s;
  }
};

struct ThetaWitness {
  int a = -1, b = -1;
  Path p1, p2, p3;  // each from a to b
};

// Near-prism; a prism when the triangles are disjoint. paths[i] runs from
// a_corner[i] to b_corner[i]; a shared triangle vertex appears as a
// single-vertex path.
struct PrismWitness {
  std::array<int, 3> a_corner{-1, -1, -1};
  std::array<int, 3> b_corner{-1, -1, -1};
  std::array<Path, 3> paths;
};

struct PyramidWitness {
  int apex = -1;
  std::array<int, 3> base{-1, -1, -1};
  std::array<Path, 3> paths;  // paths[i] from apex to base[i]
};

struct WheelWitness {
  HoleWitness hole;
  int center = -1;
};

struct ExtendedNearPrismWitness {
  PrismWitness near_prism;
  int cross_a = -1, cross_b = -1;  // cross_a in P1*, cross_b in P2*
};

struct LoadedPyramidWitness {
  PyramidWitness pyramid;  // apex adjacent to base[1]; paths[1] has length 1
  Path p;                  // p1..pk per the corner-path-like conditions
  int corner() const { return pyramid.base[1]; }
};

struct StructureWitness {
  StructureKind kind;
  std::optional<HoleWitness> hole;
  std::optional<ThetaWitness> theta;
  std::optional<PrismWitness> prism;
  std::optional<PyramidWitness> pyramid;
  std::optional<WheelWitness> wheel;
  std::optional<ExtendedNearPrismWitness> enp;
  std::optional<LoadedPyramidWitness> loaded;

  VertexSet vertex_set(int universe) const;
};

// ---- validators -------------------------------------------------------

inline bool validate_hole(const Graph& g, const HoleWitness& h) {
  int k = h.length();
  if (k < 4) return false;
  VertexSet seen(g.size());
  for (int v : h.cycle) {
    if (seen.contains(v)) return false;
    seen.add(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(h.cycle[i], h.cycle[j]) != consecutive) return false;
    }
  return true;
}

inline bool validate_theta(const Graph& g, const ThetaWitness& w) {
  if (w.a == w.b || g.adjacent(w.a, w.b)) return false;
  const Path* ps[3] = {&w.p1, &w.p2, &w.p3};
  for (auto* p : ps) {
    if (!is_induced_path(g, *p)) return false;
    if (p->first() != w.a || p->last() != w.b) return false;
    if (p->length() < 2) return false;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      VertexSet ii = ps[i]->interior(g.size());
      VertexSet ij = ps[j]->interior(g.size());
      if (ii.intersects(ij)) return false;
      if (!anticomplete(g, ii, ij)) return false;
    }
  return true;
}

// Validates near-prisms and prisms. Follows the definition: two triangles,
// three paths corner-to-corner, every two paths inducing a hole; a shared
// corner appears as a one-vertex path.
inline bool validate_near_prism(const Graph& g, const PrismWitness& w,
                                bool require_disjoint_triangles) {
  VertexSet ta(g.size()), tb(g.size());
  for (int v : w.a_corner) ta.add(v);
  for (int v : w.b_corner) tb.add(v);
  if (ta.count() != 3 || tb.count() != 3) return false;
  if (!is_clique(g, ta) || !is_clique(g, tb)) return false;
  int shared = (ta & tb).count();
  if (require_disjoint_triangles && shared != 0) return false;
  if (shared > 1) return false;
  for (int i = 0; i < 3; ++i) {
    const Path& p = w.paths[i];
    if (p.empty()) return false;
    if (p.first() != w.a_corner[i] || p.last() != w.b_corner[i]) return false;
    if (p.v.size() == 1) {
      if (w.a_corner[i] != w.b_corner[i]) return false;
    } else if (!is_induced_path(g, p)) {
      return false;
    }
  }
  // Shared corner must be its own one-vertex path.
  if (shared == 1) {
    int c = (ta & tb).min();
    bool found = false;
    for (int i = 0; i < 3; ++i)
      if (w.paths[i].v.size() == 1 && w.paths[i].first() == c) found = true;
    if (!found) return false;
  }
  // Pairwise disjoint vertex sets.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (w.paths[i].vertex_set(g.size()).intersects(w.paths[j].vertex_set(g.size())))
        return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Path& pi = w.paths[i];
      const Path& pj = w.paths[j];
      std::vector<int> cyc = pi.v;
      std::vector<int> rev = pj.v;
      std::reverse(rev.begin(), rev.end());
      cyc.insert(cyc.end(), rev.begin(), rev.end());
      HoleWitness h;
      h.cycle = cyc;
      if (!validate_hole(g, h)) return false;
    }
  return true;
}

inline bool validate_prism(const Graph& g, const PrismWitness& w) {
  return validate_near_prism(g, w, true);
}

inline bool validate_pyramid(const Graph& g, const PyramidWitness& w) {
  VertexSet base(g.size());
  for (int v : w.base) base.add(v);
  if (base.count() != 3 || base.contains(w.apex)) return false;
  if (!is_clique(g, base)) return false;
  for (int i = 0; i < 3; ++i) {
    const Path& p = w.paths[i];
    if (p.v.size() < 2) return false;
    if (p.first() != w.apex || p.last() != w.base[i]) return false;
    if (!is_induced_path(g, p)) return false;
  }
  // P_i minus apex pairwise disjoint.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      VertexSet si = w.paths[i].vertex_set(g.size());
      si.remove(w.apex);
      VertexSet sj = w.paths[j].vertex_set(g.size());
      sj.remove(w.apex);
      if (si.intersects(sj)) return false;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::vector<int> cyc = w.paths[i].v;  // apex .. base[i]
      std::vector<int> rev = w.paths[j].v;  // apex .. base[j]
      std::reverse(rev.begin(), rev.end());
      for (std::size_t t = 0; t + 1 < rev.size(); ++t) cyc.push_back(rev[t]);
      HoleWitness h;
      h.cycle = cyc;
      if (!validate_hole(g, h)) return false;
    }
  return true;
}

inline bool validate_wheel(const Graph& g, const WheelWitness& w) {
  if (!validate_hole(g, w.hole)) return false;
  VertexSet h = w.hole.vertex_set(g.size());
  if (h.contains(w.center)) return false;
  return (g.neighbors(w.center) & h).count() >= 3;
}

inline bool validate_extended_near_prism(const Graph& g, const ExtendedNearPrismWitness& w) {
  if (!g.adjacent(w.cross_a, w.cross_b)) return false;
  const auto& np = w.near_prism;
  // cross ends must be interiors of two distinct paths and avoid both
  // triangles.
  int ia = -1, ib = -1;
  for (int i = 0; i < 3; ++i) {
    if (np.paths[i].interior(g.size()).contains(w.cross_a)) ia = i;
    if (np.paths[i].interior(g.size()).contains(w.cross_b)) ib = i;
  }
  if (ia < 0 || ib < 0 || ia == ib) return false;
  for (int i = 0; i < 3; ++i)
    if (np.a_corner[i] == w.cross_a || np.b_corner[i] == w.cross_a ||
        np.a_corner[i] == w.cross_b || np.b_corner[i] == w.cross_b)
      return false;
  Graph without = g.without_edge(w.cross_a, w.cross_b);
  return validate_near_prism(without, np, false);
}

inline bool validate_loaded_pyramid(const Graph& g, const LoadedPyramidWitness& w) {
  const auto& pyr = w.pyramid;
  if (!validate_pyramid(g, pyr)) return false;
  int a = pyr.apex, b1 = pyr.base[0], b2 = pyr.base[1];
  if (!g.adjacent(a, b2)) return false;
  if (pyr.paths[1].length() != 1) return false;
  if (w.p.empty() || !is_induced_path(g, w.p)) return false;

  VertexSet sigma(g.size());
  sigma.add(a);
  for (int v : pyr.base) sigma.add(v);
  for (auto& p : pyr.paths) sigma |= p.vertex_set(g.size());
  VertexSet pset = w.p.vertex_set(g.size());
  if (pset.intersects(sigma)) return false;

  int p1 = w.p.first(), pk = w.p.last();
  if (!g.adjacent(p1, b2)) return false;
  VertexSet p1_star = pyr.paths[0].interior(g.size());
  if (!g.neighbors(pk).intersects(p1_star)) return false;
  VertexSet p3set = pyr.paths[2].vertex_set(g.size());
  if (!anticomplete(g, p3set, pset)) return false;
  VertexSet p_minus_first = pset;
  p_minus_first.remove(p1);
  if (g.neighbors(b2).intersects(p_minus_first)) return false;
  VertexSet path1_minus_b1 = pyr.paths[0].vertex_set(g.size());
  path1_minus_b1.remove(b1);
  VertexSet p_minus_last = pset;
  p_minus_last.remove(pk);
  if (!anticomplete(g, path1_minus_b1, p_minus_last)) return false;
  return true;
}

inline VertexSet StructureWitness::vertex_set(int universe) const {
  VertexSet s(universe);
  auto add_path = [&](const Path& p) {
    for (int v : p.v) s.add(v);
  };
  switch (kind) {
    case StructureKind::C4:
    case StructureKind::Hole:
      for (int v : hole->cycle) s.add(v);
      break;
    case StructureKind::Theta:
      add_path(theta->p1);
      add_path(theta->p2);
      add_path(theta->p3);
      break;
    case StructureKind::Prism:
    case StructureKind::NearPrism:
      for (auto& p : prism->paths) add_path(p);
      break;
    case StructureKind::Pyramid:
      for (auto& p : pyramid->paths) add_path(p);
      break;
    case StructureKind::Wheel:
      for (int v : wheel->hole.cycle) s.add(v);
      s.add(wheel->center);
      break;
    case StructureKind::ExtendedNearPrism:
      for (auto& p : enp->near_prism.paths) add_path(p);
      break;
    case StructureKind::LoadedPyramid:
      for (auto& p : loaded->pyramid.paths) add_path(p);
      add_path(loaded->p);
      break;
  }
  return s;
}

inline bool validate_witness(const Graph& g, const StructureWitness& w) {
  switch (w.kind) {
    case StructureKind::C4:
      return w.hole && w.hole->length() == 4 && validate_hole(g, *w.hole);
    case StructureKind::Hole:
      return w.hole && validate_hole(g, *w.hole);
    case StructureKind::Theta:
      return w.theta && validate_theta(g, *w.theta);
    case StructureKind::Prism:
      return w.prism && validate_prism(g, *w.prism);
    case StructureKind::NearPrism:
      return w.prism && validate_near_prism(g, *w.prism, false);
    case StructureKind::Pyramid:
      return w.pyramid && validate_pyramid(g, *w.pyramid);
    case StructureKind::Wheel:
      return w.wheel && validate_wheel(g, *w.wheel);
    case StructureKind::ExtendedNearPrism:
      return w.enp && validate_extended_near_prism(g, *w.enp);
    case StructureKind::LoadedPyramid:
      return w.loaded && validate_loaded_pyramid(g, *w.loaded);
  }
  return false;
}

}  // namespace ehk
