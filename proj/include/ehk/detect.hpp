#pragma once
// Guided exact detectors for the configurations the decomposition pipeline
// recognizes: C4s, thetas, prisms and near-prisms, pyramids, extended
// near-prisms with a prescribed cross edge, loaded pyramids, hubs, and
// class membership. Positive answers carry witnesses re-validated at the
// definition level; absences are certified only when the search provably
// covered its whole space within limits.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exact.hpp"
#include "graph.hpp"
#include "holes.hpp"
#include "path.hpp"
#include "witness.hpp"

namespace ehk {

// certify_n: largest n for which an absence is reported certified.
// hard_n: beyond this the guided searches refuse to start.
// node_budget: DFS extension cap shared across one detector call.
struct DetectLimits {
  int certify_n = 30;
  int hard_n = 64;
  std::int64_t node_budget = 20'000'000;
};

namespace detail {

inline std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < g.size(); ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (int v = nu.next(u); v >= 0; v = nu.next(v)) {
      VertexSet common = nu & g.neighbors(v);
      for (int w = common.next(v); w >= 0; w = common.next(w)) out.push_back({u, v, w});
    }
  }
  return out;
}

}  // namespace detail

// Exact at any n: scans non-adjacent pairs and their common neighborhoods.
inline Detection<HoleWitness> detect_c4(const Graph& g) {
  int n = g.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      VertexSet common = g.neighbors(x) & g.neighbors(y);
      if (common.count() < 2) continue;
      for (int u = common.min(); u >= 0; u = common.next(u)) {
        VertexSet rest = (common - g.neighbors(u));
        rest.remove(u);
        int w = rest.min();
        if (w < 0) continue;
        HoleWitness h;
        h.cycle = {x, std::min(u, w), y, std::max(u, w)};
        if (!validate_hole(g, h)) throw std::logic_error("detect_c4: invalid witness");
        return {h, true};
      }
    }
  }
  return {std::nullopt, true};
}

// Three internally disjoint induced paths between a non-adjacent pair, with
// pairwise anticomplete interiors. Two paths are enumerated inside regions
// that encode the anticompleteness; the third only needs to exist, so BFS
// inside the residual region settles it.
inline Detection<ThetaWitness> detect_theta(const Graph& g, const DetectLimits& lim = {}) {
  int n = g.size();
  if (n > lim.hard_n) throw limit_error("detect_theta: n exceeds hard limit");
  std::int64_t budget = lim.node_budget;
  bool budget_ok = true;
  std::optional<ThetaWitness> found;
  VertexSet all = g.vertices();

  for (int a = 0; a < n && !found; ++a) {
    for (int b = a + 1; b < n && !found; ++b) {
      if (g.adjacent(a, b)) continue;
      bool ok1 = enumerate_induced_paths(g, a, b, all, budget, [&](const Path& p1) {
        VertexSet int1 = p1.interior(n);
        VertexSet reg2 = all - closed_neighborhood(g, int1);
        reg2.add(a);
        reg2.add(b);
        bool ok2 = enumerate_induced_paths(g, a, b, reg2, budget, [&](const Path& p2) {
          VertexSet int2 = p2.interior(n);
          VertexSet reg3 = reg2 - closed_neighborhood(g, int2);
          reg3.add(a);
          reg3.add(b);
          auto p3 = find_induced_path(g, a, b, reg3);
          if (!p3) return true;
          ThetaWitness w;
          w.a = a;
          w.b = b;
          w.p1 = p1;
          w.p2 = p2;
          w.p3 = *p3;
          if (!validate_theta(g, w)) throw std::logic_error("detect_theta: invalid witness");
          found = w;
          return false;
        });
        if (!ok2) budget_ok = false;
        return !found && budget > 0;
      });
      if (!ok1) budget_ok = false;
    }
  }
  Detection<ThetaWitness> out;
  out.witness = found;
  out.certified = found.has_value() || (budget_ok && n <= lim.certify_n);
  return out;
}

namespace detail {

// Core pyramid walk: for every triangle (sorted) and apex, paths are grown
// corner by corner inside regions that forbid the chords a pyramid cannot
// have. With all_triples the third path is enumerated too (needed when the
// caller must see every path triple, e.g. the loaded-pyramid search);
// otherwise BFS existence suffices. Returns false iff the budget ran out.
inline bool enumerate_pyramids_core(const Graph& g, const DetectLimits& lim, bool all_triples,
                                    std::int64_t& budget,
                                    const std::function<bool(const PyramidWitness&)>& visit) {
  int n = g.size();
  if (n > lim.hard_n) throw limit_error("pyramid search: n exceeds hard limit");
  bool budget_ok = true;
  bool stopped = false;
  VertexSet all = g.vertices();

  for (const auto& t : all_triangles(g)) {
    if (stopped) break;
    int b1 = t[0], b2 = t[1], b3 = t[2];
    for (int a = 0; a < n && !stopped; ++a) {
      if (a == b1 || a == b2 || a == b3) continue;
      // two apex-corner edges would force two length-1 paths, whose union
      // is a triangle and never a hole
      int adj_corners = int(g.adjacent(a, b1)) + int(g.adjacent(a, b2)) + int(g.adjacent(a, b3));
      if (adj_corners > 1) continue;

      VertexSet r1 = (all - closed_neighborhood(g, b2)) - closed_neighborhood(g, b3);
      r1.add(a);
      r1.add(b1);
      bool ok1 = enumerate_induced_paths(g, a, b1, r1, budget, [&](const Path& p1) {
        VertexSet body1 = p1.vertex_set(n);
        body1.remove(a);
        VertexSet n1 = closed_neighborhood(g, body1);
        VertexSet r2 = (all - n1) - closed_neighborhood(g, b3);
        r2.add(a);
        r2.add(b2);
        bool ok2 = enumerate_induced_paths(g, a, b2, r2, budget, [&](const Path& p2) {
          VertexSet body2 = p2.vertex_set(n);
          body2.remove(a);
          VertexSet n2 = closed_neighborhood(g, body2);
          VertexSet r3 = (all - n1) - n2;
          r3.add(a);
          r3.add(b3);
          auto emit = [&](const Path& p3) -> bool {
            PyramidWitness w;
            w.apex = a;
            w.base = {b1, b2, b3};
            w.paths = {p1, p2, p3};
            if (!validate_pyramid(g, w)) throw std::logic_error("pyramid search: invalid witness");
            if (!visit(w)) stopped = true;
            return !stopped && budget > 0;
          };
          if (all_triples) {
            bool ok3 = enumerate_induced_paths(g, a, b3, r3, budget, emit);
            if (!ok3) budget_ok = false;
          } else if (auto p3 = find_induced_path(g, a, b3, r3)) {
            emit(*p3);
          }
          return !stopped && budget > 0;
        });
        if (!ok2) budget_ok = false;
        return !stopped && budget > 0;
      });
      if (!ok1) budget_ok = false;
    }
  }
  return budget_ok;
}

}  // namespace detail

// Visits pyramids with the base sorted ascending and paths[i] ending at
// base[i]. The return value (no budget truncation) is meaningful only when
// the visitor never stopped the walk.
inline bool enumerate_pyramids(const Graph& g, const DetectLimits& lim,
                               const std::function<bool(const PyramidWitness&)>& visit,
                               bool all_triples = false) {
  std::int64_t budget = lim.node_budget;
  return detail::enumerate_pyramids_core(g, lim, all_triples, budget, visit);
}

inline Detection<PyramidWitness> detect_pyramid(const Graph& g, const DetectLimits& lim = {}) {
  std::optional<PyramidWitness> found;
  bool budget_ok = enumerate_pyramids(g, lim, [&](const PyramidWitness& w) {
    found = w;
    return false;
  });
  Detection<PyramidWitness> out;
  out.witness = found;
  out.certified = found.has_value() || (budget_ok && g.size() <= lim.certify_n);
  return out;
}

namespace detail {

// Shared walk behind near-prism, prism, and cross-edge searches. Corner
// assignments come from ordered triangle pairs and all corner bijections; a
// shared triangle vertex rides as a fixed one-vertex path. When require_a
// and require_b are set, they must land in the interiors of the first and
// second enumerated paths, so every (host, host) index placement is tried.
// Returns false iff the budget ran out.
inline bool near_prism_search(const Graph& g, const DetectLimits& lim, bool disjoint_only,
                              int require_a, int require_b,
                              const std::function<bool(const PrismWitness&)>& visit) {
  int n = g.size();
  if (n > lim.hard_n) throw limit_error("near-prism search: n exceeds hard limit");
  std::int64_t budget = lim.node_budget;
  bool budget_ok = true;
  bool stopped = false;
  VertexSet all = g.vertices();
  auto tris = all_triangles(g);

  struct Plan {
    std::array<int, 2> idx{-1, -1};
    std::array<int, 2> req{-1, -1};
    int count = 0;
    int bfs = -1;
  };

  for (std::size_t ti = 0; ti < tris.size() && !stopped; ++ti) {
    for (std::size_t tj = ti + 1; tj < tris.size() && !stopped; ++tj) {
      const auto& ta = tris[ti];
      const auto& tb = tris[tj];
      if (require_a >= 0) {
        // cross ends may not lie in the triangles
        bool in_tri = false;
        for (int v : ta)
          if (v == require_a || v == require_b) in_tri = true;
        for (int v : tb)
          if (v == require_a || v == require_b) in_tri = true;
        if (in_tri) continue;
      }
      int shared = -1, shared_count = 0;
      for (int u : ta)
        for (int v : tb)
          if (u == v) {
            shared = u;
            ++shared_count;
          }
      if (shared_count > 1) continue;
      if (disjoint_only && shared_count == 1) continue;

      std::array<int, 3> perm{0, 1, 2};
      do {
        if (stopped) break;
        std::array<int, 3> A{ta[0], ta[1], ta[2]};
        std::array<int, 3> B{tb[perm[0]], tb[perm[1]], tb[perm[2]]};
        int si = -1;
        for (int i = 0; i < 3; ++i)
          if (A[i] == B[i]) si = i;
        if (shared_count == 1 && si < 0) continue;  // shared corner must self-pair

        bool ok_assign = true;
        // an A[i]B[j] edge (i != j, away from the shared corner) would be a
        // chord of the pair hole
        for (int i = 0; i < 3 && ok_assign; ++i)
          for (int j = 0; j < 3 && ok_assign; ++j) {
            if (i == j || i == si || j == si) continue;
            if (g.adjacent(A[i], B[j])) ok_assign = false;
          }
        // with a shared corner the other two paths need length >= 2
        if (si >= 0)
          for (int i = 0; i < 3; ++i)
            if (i != si && g.adjacent(A[i], B[i])) ok_assign = false;
        if (!ok_assign) continue;

        std::array<VertexSet, 3> base{VertexSet(n), VertexSet(n), VertexSet(n)};
        for (int i = 0; i < 3; ++i) {
          VertexSet r = all;
          for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            r -= closed_neighborhood(g, A[j]);
            r -= closed_neighborhood(g, B[j]);
          }
          r.add(A[i]);
          r.add(B[i]);
          base[i] = r;
        }

        std::vector<Plan> plans;
        if (require_a < 0) {
          Plan p;
          if (si < 0) {
            p.idx = {0, 1};
            p.count = 2;
            p.bfs = 2;
          } else {
            std::array<int, 2> e{};
            int k = 0;
            for (int i = 0; i < 3; ++i)
              if (i != si) e[k++] = i;
            p.idx = {e[0], -1};
            p.count = 1;
            p.bfs = e[1];
          }
          plans.push_back(p);
        } else if (si < 0) {
          for (int ia = 0; ia < 3; ++ia)
            for (int ib = 0; ib < 3; ++ib) {
              if (ia == ib) continue;
              Plan p;
              p.idx = {ia, ib};
              p.req = {require_a, require_b};
              p.count = 2;
              p.bfs = 3 - ia - ib;
              plans.push_back(p);
            }
        } else {
          std::array<int, 2> e{};
          int k = 0;
          for (int i = 0; i < 3; ++i)
            if (i != si) e[k++] = i;
          for (int swap = 0; swap < 2; ++swap) {
            Plan p;
            p.idx = {e[swap], e[1 - swap]};
            p.req = {require_a, require_b};
            p.count = 2;
            plans.push_back(p);
          }
        }

        for (const Plan& plan : plans) {
          if (stopped) break;
          std::array<Path, 3> chosen;
          if (si >= 0) chosen[si].v = {A[si]};

          std::function<void(int, const std::array<VertexSet, 3>&)> level =
              [&](int k, const std::array<VertexSet, 3>& regions) {
                if (k == plan.count) {
                  if (plan.bfs >= 0) {
                    auto p = find_induced_path(g, A[plan.bfs], B[plan.bfs], regions[plan.bfs]);
                    if (!p) return;
                    chosen[plan.bfs] = *p;
                  }
                  PrismWitness w;
                  w.a_corner = A;
                  w.b_corner = B;
                  w.paths = chosen;
                  if (!validate_near_prism(g, w, disjoint_only))
                    throw std::logic_error("near-prism search: invalid witness");
                  if (!visit(w)) stopped = true;
                  return;
                }
                int idx = plan.idx[k];
                int req = plan.req[k];
                if (req >= 0 && !regions[idx].contains(req)) return;
                bool ok = enumerate_induced_paths(
                    g, A[idx], B[idx], regions[idx], budget, [&](const Path& p) {
                      if (req >= 0 && !p.interior(n).contains(req)) return !stopped;
                      chosen[idx] = p;
                      std::array<VertexSet, 3> next = regions;
                      VertexSet body = p.vertex_set(n);
                      body.remove(A[idx]);
                      body.remove(B[idx]);
                      VertexSet nb = closed_neighborhood(g, body);
                      for (int other = 0; other < 3; ++other) {
                        if (other == idx) continue;
                        next[other] -= nb;
                        next[other].add(A[other]);
                        next[other].add(B[other]);
                      }
                      level(k + 1, next);
                      return !stopped && budget > 0;
                    });
                if (!ok) budget_ok = false;
              };
          level(0, base);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return budget_ok;
}

}  // namespace detail

inline Detection<PrismWitness> detect_near_prism(const Graph& g, const DetectLimits& lim = {}) {
  std::optional<PrismWitness> found;
  bool budget_ok = detail::near_prism_search(g, lim, false, -1, -1, [&](const PrismWitness& w) {
    found = w;
    return false;
  });
  Detection<PrismWitness> out;
  out.witness = found;
  out.certified = found.has_value() || (budget_ok && g.size() <= lim.certify_n);
  return out;
}

inline Detection<PrismWitness> detect_prism(const Graph& g, const DetectLimits& lim = {}) {
  std::optional<PrismWitness> found;
  bool budget_ok = detail::near_prism_search(g, lim, true, -1, -1, [&](const PrismWitness& w) {
    found = w;
    return false;
  });
  Detection<PrismWitness> out;
  out.witness = found;
  out.certified = found.has_value() || (budget_ok && g.size() <= lim.certify_n);
  return out;
}

// Searches g minus the edge ab for a near-prism hosting a and b in the
// interiors of two distinct paths, away from the triangles.
inline Detection<ExtendedNearPrismWitness> detect_extended_near_prism_with_cross_edge(
    const Graph& g, int a, int b, const DetectLimits& lim = {}) {
  if (!g.adjacent(a, b))
    throw std::invalid_argument("cross-edge search: ab must be an edge of the graph");
  Graph g2 = g.without_edge(a, b);
  std::optional<ExtendedNearPrismWitness> found;
  bool budget_ok = detail::near_prism_search(g2, lim, false, a, b, [&](const PrismWitness& np) {
    ExtendedNearPrismWitness w;
    w.near_prism = np;
    w.cross_a = a;
    w.cross_b = b;
    if (!validate_extended_near_prism(g, w))
      throw std::logic_error("cross-edge search: invalid witness");
    found = w;
    return false;
  });
  Detection<ExtendedNearPrismWitness> out;
  out.witness = found;
  out.certified = found.has_value() || (budget_ok && g.size() <= lim.certify_n);
  return out;
}

namespace detail {

// First loading path for a relabeled pyramid (corner at base[1], apex edge
// as paths[1]), or nullopt. The DFS pool encodes the loading conditions:
// start in N(b2) away from Sigma and N[P3]; extend only through vertices
// with no neighbor in P1*; close as soon as the tail touches P1*.
inline std::optional<Path> find_loading_path(const Graph& g, const PyramidWitness& pyr,
                                             std::int64_t& budget, bool& budget_ok) {
  int n = g.size();
  int b2 = pyr.base[1];
  VertexSet sigma(n);
  sigma.add(pyr.apex);
  for (int v : pyr.base) sigma.add(v);
  for (const auto& p : pyr.paths) sigma |= p.vertex_set(n);
  VertexSet p3set = pyr.paths[2].vertex_set(n);
  VertexSet p1_star = pyr.paths[0].interior(n);
  VertexSet banned = sigma | closed_neighborhood(g, p3set);
  const VertexSet& nb2 = g.neighbors(b2);

  std::optional<Path> found;
  bool ok = true;
  std::vector<int> cur;

  std::function<void(int, const VertexSet&)> dfs = [&](int tail, const VertexSet& blocked) {
    if (found || !ok) return;
    if (--budget < 0) {
      ok = false;
      return;
    }
    if (g.neighbors(tail).intersects(p1_star)) {
      Path p;
      p.v = cur;
      found = p;
      return;
    }
    VertexSet cand = ((g.neighbors(tail) - banned) - nb2) - blocked;
    for (int w = cand.min(); w >= 0 && !found && ok; w = cand.next(w)) {
      cur.push_back(w);
      VertexSet nb = blocked | g.neighbors(tail);
      nb.add(tail);
      dfs(w, nb);
      cur.pop_back();
    }
  };

  VertexSet starts = nb2 - banned;
  for (int s = starts.min(); s >= 0 && !found && ok; s = starts.next(s)) {
    cur = {s};
    dfs(s, VertexSet(n));
  }
  if (!ok) budget_ok = false;
  return found;
}

}  // namespace detail

// Visits loaded pyramids: every enumerated pyramid with an apex-corner edge,
// relabeled both ways around that corner, paired with the first loading
// path found for the labeling. Return value as for enumerate_pyramids.
inline bool enumerate_loaded_pyramids(const Graph& g, const DetectLimits& lim,
                                      const std::function<bool(const LoadedPyramidWitness&)>& visit) {
  std::int64_t budget = lim.node_budget;
  bool budget_ok = true;
  bool stopped = false;
  bool pyr_ok = detail::enumerate_pyramids_core(
      g, lim, /*all_triples=*/true, budget, [&](const PyramidWitness& pyr) {
        int ci = -1;
        for (int i = 0; i < 3; ++i)
          if (pyr.paths[i].length() == 1) ci = i;
        if (ci < 0) return true;
        std::array<int, 2> rest{};
        int k = 0;
        for (int i = 0; i < 3; ++i)
          if (i != ci) rest[k++] = i;
        for (int swap = 0; swap < 2 && !stopped; ++swap) {
          int i1 = rest[swap], i3 = rest[1 - swap];
          PyramidWitness rel;
          rel.apex = pyr.apex;
          rel.base = {pyr.base[i1], pyr.base[ci], pyr.base[i3]};
          rel.paths = {pyr.paths[i1], pyr.paths[ci], pyr.paths[i3]};
          auto p = detail::find_loading_path(g, rel, budget, budget_ok);
          if (!p) continue;
          LoadedPyramidWitness w;
          w.pyramid = rel;
          w.p = *p;
          if (!validate_loaded_pyramid(g, w))
            throw std::logic_error("loaded-pyramid search: invalid witness");
          if (!visit(w)) stopped = true;
        }
        return !stopped;
      });
  if (!pyr_ok) budget_ok = false;
  return budget_ok;
}

inline Detection<LoadedPyramidWitness> detect_loaded_pyramid(const Graph& g,
                                                             const DetectLimits& lim = {}) {
  std::optional<LoadedPyramidWitness> found;
  bool budget_ok = enumerate_loaded_pyramids(g, lim, [&](const LoadedPyramidWitness& w) {
    found = w;
    return false;
  });
  Detection<LoadedPyramidWitness> out;
  out.witness = found;
  out.certified = found.has_value() || (budget_ok && g.size() <= lim.certify_n);
  return out;
}

struct HubSet {
  VertexSet hubs;
  bool certified = true;
};

// Hubs: proper-wheel centers plus loaded-pyramid corners.
inline HubSet hubs(const Graph& g, const DetectLimits& dl = {}, const HoleEnumLimits& hl = {}) {
  HubSet out;
  out.hubs = VertexSet(g.size());
  WheelEnumeration we = enumerate_wheels(g, hl);
  for (const auto& [w, c] : we.wheels)
    if (c.is_proper) out.hubs.add(w.center);
  bool loaded_ok = enumerate_loaded_pyramids(g, dl, [&](const LoadedPyramidWitness& w) {
    out.hubs.add(w.corner());
    return true;
  });
  out.certified = we.certified && loaded_ok && g.size() <= dl.certify_n;
  return out;
}

// Vertex order of the path G[x] induces, or nullopt when G[x] is not a path.
inline std::optional<std::vector<int>> induced_path_order(const Graph& g, const VertexSet& x) {
  int cnt = x.count();
  if (cnt == 0) return std::nullopt;
  if (cnt == 1) return std::vector<int>{x.min()};
  int end = -1;
  for (int v = x.min(); v >= 0; v = x.next(v)) {
    int d = (g.neighbors(v) & x).count();
    if (d == 0 || d > 2) return std::nullopt;
    if (d == 1 && end < 0) end = v;
  }
  if (end < 0) return std::nullopt;  // 2-regular: a cycle
  std::vector<int> order{end};
  VertexSet seen(g.size());
  seen.add(end);
  int curv = end;
  while (true) {
    VertexSet nxt = (g.neighbors(curv) & x) - seen;
    if (nxt.empty()) break;
    curv = nxt.min();
    seen.add(curv);
    order.push_back(curv);
  }
  if (int(order.size()) != cnt) return std::nullopt;  // disconnected
  return order;
}

enum class PyramidRelation { Local, CornerPath, Major, Other };

struct PyramidClassification {
  PyramidRelation relation = PyramidRelation::Other;
  int corner = -1;  // CornerPath: the base corner the path serves
  int vertex = -1;  // Major: the classified vertex
};

// A set inside the pyramid is local iff it sits inside one path or inside
// the base triangle.
inline bool pyramid_local_set(const Graph& g, const PyramidWitness& pyr, const VertexSet& x) {
  int n = g.size();
  VertexSet base(n);
  for (int v : pyr.base) base.add(v);
  if (x.subset_of(base)) return true;
  for (const auto& p : pyr.paths)
    if (x.subset_of(p.vertex_set(n))) return true;
  return false;
}

// Classifies X against the pyramid: subsets of Sigma as local or not;
// disjoint sets as corner paths (the path attaches to one corner's path and
// to the other two corners, with no stray edges into Sigma away from the
// corner); disjoint singletons that are neither as major when their
// neighborhood in Sigma is not local.
inline PyramidClassification classify_against_pyramid(const Graph& g, const PyramidWitness& pyr,
                                                      const VertexSet& x) {
  int n = g.size();
  VertexSet sigma(n);
  sigma.add(pyr.apex);
  for (int v : pyr.base) sigma.add(v);
  for (const auto& p : pyr.paths) sigma |= p.vertex_set(n);

  PyramidClassification out;
  if (x.subset_of(sigma)) {
    if (pyramid_local_set(g, pyr, x)) out.relation = PyramidRelation::Local;
    return out;
  }
  if (x.intersects(sigma)) return out;  // mixed sets stay unclassified

  auto order = induced_path_order(g, x);
  if (order) {
    for (int ci = 0; ci < 3 && out.relation != PyramidRelation::CornerPath; ++ci) {
      int b = pyr.base[ci];
      int c1 = pyr.base[(ci + 1) % 3];
      int c2 = pyr.base[(ci + 2) % 3];
      VertexSet attach = pyr.paths[ci].vertex_set(n);
      attach.remove(b);
      VertexSet sigma_minus_b = sigma;
      sigma_minus_b.remove(b);
      for (int orient = 0; orient < 2 && out.relation != PyramidRelation::CornerPath; ++orient) {
        std::vector<int> ord = *order;
        if (orient == 1) {
          if (ord.size() == 1) break;
          std::reverse(ord.begin(), ord.end());
        }
        int p1 = ord.front(), pk = ord.back();
        if (!g.adjacent(p1, c1) || !g.adjacent(p1, c2)) continue;
        if (!g.neighbors(pk).intersects(attach)) continue;
        bool clean = true;
        for (int v : ord) {
          VertexSet allowed(n);
          if (v == p1) {
            allowed.add(c1);
            allowed.add(c2);
          }
          if (v == pk) allowed |= attach;
          if (!((g.neighbors(v) & sigma_minus_b) - allowed).empty()) {
            clean = false;
            break;
          }
        }
        if (clean) {
          out.relation = PyramidRelation::CornerPath;
          out.corner = b;
        }
      }
    }
    if (out.relation == PyramidRelation::CornerPath) return out;
  }
  if (x.count() == 1) {
    int v = x.min();
    if (!pyramid_local_set(g, pyr, g.neighbors(v) & sigma)) {
      out.relation = PyramidRelation::Major;
      out.vertex = v;
    }
  }
  return out;
}

struct ClassCheck {
  bool in_class = false;
  std::optional<StructureWitness> violation;
  bool certified = true;
};

// Membership in the class closed under the decomposition: no C4, no theta,
// no prism, no even wheel. Returns the first violating witness found.
inline ClassCheck in_class_C(const Graph& g, const DetectLimits& dl = {},
                             const HoleEnumLimits& hl = {}) {
  ClassCheck out;
  if (auto c4 = detect_c4(g); c4.found()) {
    StructureWitness w;
    w.kind = StructureKind::C4;
    w.hole = c4.witness;
    out.violation = w;
    return out;
  }
  auto th = detect_theta(g, dl);
  if (th.found()) {
    StructureWitness w;
    w.kind = StructureKind::Theta;
    w.theta = th.witness;
    out.violation = w;
    return out;
  }
  auto pr = detect_prism(g, dl);
  if (pr.found()) {
    StructureWitness w;
    w.kind = StructureKind::Prism;
    w.prism = pr.witness;
    out.violation = w;
    return out;
  }
  WheelEnumeration we = enumerate_wheels(g, hl);
  for (const auto& [wheel, cls] : we.wheels) {
    if (cls.is_even) {
      StructureWitness w;
      w.kind = StructureKind::Wheel;
      w.wheel = wheel;
      out.violation = w;
      return out;
    }
  }
  out.in_class = true;
  out.certified = th.certified && pr.certified && we.certified;
  return out;
}

}  // namespace ehk
