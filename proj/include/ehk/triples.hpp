#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ehk/bitset.hpp"
#include "ehk/detect.hpp"
#include "ehk/exact.hpp"
#include "ehk/graph.hpp"
#include "ehk/rational.hpp"
#include "ehk/rng.hpp"
#include "ehk/separation.hpp"

namespace ehk {

// Witness taxonomy for a separated triple (x1, x2, x3) against an anchor b
// inside a part D. Writing Di for the union of components of D - K holding a
// neighbor of xi, the clique K certifies one of:
//   Type1:  b lies outside K u Di u Dj for the active pair (i, j).
//   Type2*: b avoids N[Di], and along every induced path from b to xj the last
//           neighbor of a guard vertex q is complete to K; the set of those
//           last neighbors is not a clique. The flavor records the guard:
//           2a has q = b (so b in K), 2b has q = xj, 2c a third corner.
enum class TripleType { Type1, Type2a, Type2b, Type2c };

inline const char* triple_type_name(TripleType t) {
  switch (t) {
    case TripleType::Type1: return "1";
    case TripleType::Type2a: return "2a";
    case TripleType::Type2b: return "2b";
    default: return "2c";
  }
}

struct TripleWitness {
  std::array<int, 3> triple{{-1, -1, -1}};
  std::array<int, 2> active{{-1, -1}};  // indices into triple, ordered (i, j)
  VertexSet clique;
  TripleType type = TripleType::Type1;
  VertexSet guard_set;  // the non-clique set of last guard-neighbors (type 2)
  int guard = -1;       // q (type 2)

  TripleWitness() : clique(0), guard_set(0) {}
};

struct TripleLimits {
  long long max_paths = 100000;       // induced b->xj paths per guard scan
  long long node_budget = 5'000'000;  // search-tree nodes per guard scan
};

// Search outcome: found() with a validated witness, or a definite miss
// (exhausted) or a budget-truncated miss (not exhausted, so "unknown").
struct TripleSearch {
  std::optional<TripleWitness> witness;
  bool exhausted = true;

  bool found() const { return witness.has_value(); }
};

namespace detail {

// Last guard-neighbors over every induced path from the anchor to a target.
struct GuardScan {
  VertexSet last;       // one vertex per path: its final member of N(q)
  bool all_hit = true;  // every path meets N(q)
  bool complete = true; // enumeration finished inside the budget
};

inline GuardScan scan_guarded_paths(const Graph& g, const VertexSet& dset,
                                    int b, int target, int q,
                                    const TripleLimits& lim) {
  GuardScan r{VertexSet(g.size()), true, true};
  VertexSet allowed = dset;
  allowed.add(target);
  const VertexSet nq = g.neighbors(q);
  long long paths = 0;
  long long nodes = 0;
  std::vector<int> path{b};
  VertexSet used(g.size());
  used.add(b);
  auto rec = [&](auto&& self, int u) -> bool {
    if (++nodes > lim.node_budget) return false;
    if (u == target) {
      if (++paths > lim.max_paths) return false;
      int hit = -1;
      for (int w : path)
        if (nq.contains(w)) hit = w;
      if (hit < 0)
        r.all_hit = false;
      else
        r.last.add(hit);
      return true;
    }
    VertexSet cand = (g.neighbors(u) & allowed) - used;
    for (int w = cand.min(); w != -1; w = cand.next(w)) {
      bool chord = false;
      for (std::size_t t = 0; t + 1 < path.size(); ++t)
        if (g.adjacent(path[t], w)) {
          chord = true;
          break;
        }
      if (chord) continue;
      path.push_back(w);
      used.add(w);
      bool ok = self(self, w);
      path.pop_back();
      used.remove(w);
      if (!ok) return false;
    }
    return true;
  };
  r.complete = rec(rec, b);
  return r;
}

// One cut candidate, with the facts about b's surroundings precomputed:
// bcomp is b's component of dset - k (when b is outside k) and breach the
// union of components meeting N[b].
struct CutCandidate {
  VertexSet k;
  bool has_b = false;
  VertexSet bcomp;
  VertexSet breach;

  CutCandidate() : k(0), bcomp(0), breach(0) {}
};

// A type-2 witness clique is never maximal: its guard set is complete to it
// and sticks out of it, so any maximal extension swallows part of the guard
// set. The scan therefore tries the empty clique, every maximal clique, and
// every maximal clique minus one vertex, in that order.
struct TripleScanner {
  const Graph& g;
  VertexSet dset;
  int b;
  TripleLimits lim;
  std::vector<CutCandidate> cuts;
  std::map<std::pair<int, int>, GuardScan> memo;

  TripleScanner(const Graph& g_, const VertexSet& dset_, int b_,
                const TripleLimits& lim_ = {})
      : g(g_), dset(dset_), b(b_), lim(lim_) {
    std::vector<VertexSet> ks;
    ks.push_back(VertexSet(g.size()));
    auto maximal = enumerate_maximal_cliques(g, dset);
    for (const auto& m : maximal) ks.push_back(m);
    std::unordered_set<VertexSet, VertexSetHash> seen(ks.begin(), ks.end());
    std::vector<VertexSet> peeled;
    for (const auto& m : maximal) {
      auto mv = m.to_vector();
      for (int v : mv) {
        VertexSet k = m;
        k.remove(v);
        if (seen.insert(k).second) peeled.push_back(k);
      }
    }
    std::sort(peeled.begin(), peeled.end(),
              [](const VertexSet& a, const VertexSet& bb) { return a.lex_less(bb); });
    for (auto& k : peeled) ks.push_back(std::move(k));
    cuts.reserve(ks.size());
    const VertexSet nb_closed = closed_neighborhood(g, b);
    for (const auto& k : ks) {
      CutCandidate c;
      c.k = k;
      c.has_b = k.contains(b);
      c.bcomp = VertexSet(g.size());
      c.breach = VertexSet(g.size());
      for (const auto& comp : components(g, dset - k)) {
        if (comp.contains(b)) c.bcomp = comp;
        if (comp.intersects(nb_closed)) c.breach |= comp;
      }
      cuts.push_back(std::move(c));
    }
  }

  const GuardScan& guarded(int target, int q) {
    auto key = std::make_pair(target, q);
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, scan_guarded_paths(g, dset, b, target, q, lim)).first;
    return it->second;
  }

  TripleSearch run(const std::array<int, 3>& xs);
};

}  // namespace detail

inline void validate_triple_witness(const Graph& g, const VertexSet& dset, int b,
                                    const TripleWitness& w,
                                    const TripleLimits& lim = {});

inline TripleSearch detail::TripleScanner::run(const std::array<int, 3>& xs) {
  static const std::array<std::array<int, 2>, 6> pairs{
      {{{0, 1}}, {{0, 2}}, {{1, 0}}, {{1, 2}}, {{2, 0}}, {{2, 1}}}};
  std::array<VertexSet, 3> nx{VertexSet(0), VertexSet(0), VertexSet(0)};
  for (int t = 0; t < 3; ++t) nx[t] = g.neighbors(xs[t]);

  TripleSearch res;
  for (const auto& cut : cuts) {
    if (cut.has_b) continue;
    for (const auto& pr : pairs) {
      if (cut.bcomp.intersects(nx[pr[0]])) continue;
      if (cut.bcomp.intersects(nx[pr[1]])) continue;
      TripleWitness w;
      w.triple = xs;
      w.active = pr;
      w.clique = cut.k;
      w.type = TripleType::Type1;
      validate_triple_witness(g, dset, b, w, lim);
      res.witness = std::move(w);
      return res;
    }
  }

  for (const auto& cut : cuts) {
    for (const auto& pr : pairs) {
      if (cut.breach.intersects(nx[pr[0]])) continue;
      const int xj = xs[pr[1]];
      std::array<std::pair<TripleType, int>, 3> guards;
      int ng = 0;
      if (cut.has_b) guards[ng++] = {TripleType::Type2a, b};
      if (complete_to(g, xj, cut.k)) guards[ng++] = {TripleType::Type2b, xj};
      const int third = 3 - pr[0] - pr[1];
      if (complete_to(g, xs[third], cut.k))
        guards[ng++] = {TripleType::Type2c, xs[third]};
      for (int gi = 0; gi < ng; ++gi) {
        const auto [ty, q] = guards[gi];
        const GuardScan& sc = guarded(xj, q);
        if (!sc.complete) {
          res.exhausted = false;
          continue;
        }
        if (!sc.all_hit) continue;
        if (sc.last.count() < 2 || is_clique(g, sc.last)) continue;
        bool anchored = true;
        auto lv = sc.last.to_vector();
        for (int v : lv)
          if (!complete_to(g, v, cut.k)) {
            anchored = false;
            break;
          }
        if (!anchored) continue;
        TripleWitness w;
        w.triple = xs;
        w.active = pr;
        w.clique = cut.k;
        w.type = ty;
        w.guard_set = sc.last;
        w.guard = q;
        validate_triple_witness(g, dset, b, w, lim);
        res.witness = std::move(w);
        return res;
      }
    }
  }
  return res;
}

// Re-derives every clause of the witness definition; throws std::logic_error
// on the first failure and limit_error if the path re-scan cannot finish.
inline void validate_triple_witness(const Graph& g, const VertexSet& dset, int b,
                                    const TripleWitness& w,
                                    const TripleLimits& lim) {
  auto fail = [](const std::string& m) {
    throw std::logic_error("triple witness: " + m);
  };
  if (!dset.contains(b)) fail("anchor outside the part");
  for (int t = 0; t < 3; ++t) {
    if (dset.contains(w.triple[t])) fail("triple vertex inside the part");
    if (g.adjacent(w.triple[t], b)) fail("triple vertex adjacent to the anchor");
    if (!g.neighbors(w.triple[t]).intersects(dset)) fail("triple vertex misses the part");
    for (int u = t + 1; u < 3; ++u)
      if (g.adjacent(w.triple[t], w.triple[u])) fail("triple is not stable");
  }
  if (!w.clique.subset_of(dset)) fail("clique leaves the part");
  if (!is_clique(g, w.clique)) fail("cut is not a clique");
  const int i = w.active[0];
  const int j = w.active[1];
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j) fail("bad active pair");
  auto comps = components(g, dset - w.clique);
  VertexSet di(g.size());
  for (const auto& c : comps)
    if (c.intersects(g.neighbors(w.triple[i]))) di |= c;

  if (w.type == TripleType::Type1) {
    if (w.clique.contains(b)) fail("anchor sits in a detaching cut");
    VertexSet dj(g.size());
    for (const auto& c : comps)
      if (c.intersects(g.neighbors(w.triple[j]))) dj |= c;
    if (di.contains(b) || dj.contains(b)) fail("anchor reaches an active side");
    return;
  }

  if (di.contains(b) || di.intersects(g.neighbors(b))) fail("anchor touches the guarded side");
  const int q = w.guard;
  switch (w.type) {
    case TripleType::Type2a:
      if (q != b || !w.clique.contains(b)) fail("anchor guard without the anchor in the cut");
      break;
    case TripleType::Type2b:
      if (q != w.triple[j]) fail("corner guard is not the target corner");
      break;
    case TripleType::Type2c:
      if (q != w.triple[3 - i - j]) fail("corner guard is not the third corner");
      break;
    default:
      fail("unknown witness type");
  }
  if (q != b) {
    if (!complete_to(g, q, w.clique)) fail("guard corner not complete to the cut");
    if (!complete_to(g, q, w.guard_set)) fail("guard corner not complete to the guard set");
  }
  auto sc = detail::scan_guarded_paths(g, dset, b, w.triple[j], q, lim);
  if (!sc.complete) throw limit_error("triple witness: path re-scan exceeded its budget");
  if (!sc.all_hit) fail("a path to the target corner avoids the guard");
  if (!(sc.last == w.guard_set)) fail("guard set differs from the path scan");
  if (w.guard_set.count() < 2 || is_clique(g, w.guard_set)) fail("guard set is a clique");
  auto lv = w.guard_set.to_vector();
  for (int v : lv)
    if (!complete_to(g, v, w.clique)) fail("a last guard-neighbor is not complete to the cut");
}

// Searches for a clique of the part certifying that the stable triple
// (x1, x2, x3) is separated from the anchor b. Type-1 witnesses are
// preferred; the clique scan order is fixed, so the result is deterministic.
inline TripleSearch find_triple_witness(const Graph& g, const VertexSet& dset, int b,
                                        int x1, int x2, int x3,
                                        const TripleLimits& lim = {}) {
  if (!dset.contains(b)) throw std::invalid_argument("find_triple_witness: anchor outside the part");
  const std::array<int, 3> xs{{x1, x2, x3}};
  for (int t = 0; t < 3; ++t) {
    if (dset.contains(xs[t]))
      throw std::invalid_argument("find_triple_witness: triple vertex inside the part");
    if (g.adjacent(xs[t], b))
      throw std::invalid_argument("find_triple_witness: triple vertex adjacent to the anchor");
    if (!g.neighbors(xs[t]).intersects(dset))
      throw std::invalid_argument("find_triple_witness: triple vertex has no neighbor in the part");
    for (int u = t + 1; u < 3; ++u)
      if (g.adjacent(xs[t], xs[u]))
        throw std::invalid_argument("find_triple_witness: triple is not stable");
  }
  detail::TripleScanner scanner(g, dset, b, lim);
  return scanner.run(xs);
}

// ---------------------------------------------------------------------------
// Minimal connected pieces meeting three outside neighborhoods.

enum class MinimalShape { PathWithAttachment, Spider, TriangleSpider };

struct MinimalConnectedResult {
  VertexSet h;
  MinimalShape shape = MinimalShape::PathWithAttachment;
  // PathWithAttachment: spine runs from x_order[0] to x_order[1] (corners
  // included); attach holds the third corner's neighbors inside h.
  std::array<int, 3> order{{0, 1, 2}};
  Path spine;
  VertexSet attach;
  bool spine_closes = false;  // the two spine corners are adjacent
  // Spider / TriangleSpider: legs[t] runs from centers[t] to the t-th corner;
  // a spider repeats one center, a triangle spider uses a triangle.
  std::array<Path, 3> legs;
  std::array<int, 3> centers{{-1, -1, -1}};

  MinimalConnectedResult() : h(0), attach(0) {}
};

namespace detail {

// True when g restricted to sub is a single path with the given ends; the
// walk is written to out (ends included).
inline bool induced_path_between(const Graph& g, const VertexSet& sub, int a,
                                 int c, Path* out) {
  if (!sub.contains(a) || !sub.contains(c)) return false;
  if (a == c) {
    if (sub.count() != 1) return false;
    if (out) out->v = {a};
    return true;
  }
  std::vector<int> walk{a};
  int prev = -1;
  int cur = a;
  while (true) {
    VertexSet step = neighbors_in(g, cur, sub);
    if (prev >= 0) step.remove(prev);
    if (cur == c) {
      if (!step.empty()) return false;
      break;
    }
    if (step.count() != 1) return false;
    prev = cur;
    cur = step.min();
    walk.push_back(cur);
  }
  if (int(walk.size()) != sub.count()) return false;
  if (out) out->v = std::move(walk);
  return true;
}

inline bool attachment_forked(const Graph& g, const VertexSet& nh) {
  if (nh.count() < 2) return false;
  if (nh.count() == 2) return true;
  return !is_clique(g, nh);
}

}  // namespace detail

// Shrinks a connected piece of the part to one that meets all three corner
// neighborhoods and is inclusion-minimal with that property, then matches it
// against the three possible shapes.
inline MinimalConnectedResult classify_minimal_connected(const Graph& g,
                                                         const VertexSet& dset,
                                                         int x1, int x2, int x3) {
  const std::array<int, 3> xs{{x1, x2, x3}};
  std::array<VertexSet, 3> nx{VertexSet(0), VertexSet(0), VertexSet(0)};
  for (int t = 0; t < 3; ++t) {
    if (dset.contains(xs[t]))
      throw std::invalid_argument("classify_minimal_connected: corner inside the part");
    nx[t] = g.neighbors(xs[t]);
    if (!nx[t].intersects(dset))
      throw std::invalid_argument("classify_minimal_connected: corner has no neighbor in the part");
  }
  auto serves = [&](const VertexSet& s) {
    return s.intersects(nx[0]) && s.intersects(nx[1]) && s.intersects(nx[2]);
  };
  VertexSet h(g.size());
  bool seeded = false;
  for (const auto& comp : components(g, dset))
    if (serves(comp)) {
      h = comp;
      seeded = true;
      break;
    }
  if (!seeded)
    throw std::invalid_argument(
        "classify_minimal_connected: no component meets all three neighborhoods");

  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    auto hv = h.to_vector();
    for (int v : hv) {
      VertexSet rest = h;
      rest.remove(v);
      for (const auto& comp : components(g, rest))
        if (serves(comp)) {
          h = comp;
          shrunk = true;
          break;
        }
      if (shrunk) break;
    }
  }

  MinimalConnectedResult res;
  res.h = h;

  // Shape 1: h plus two corners is a path between them (or closes into a
  // hole), and the third corner hooks on with a fork or a tight pair.
  static const std::array<std::array<int, 3>, 3> splits{
      {{{0, 1, 2}}, {{0, 2, 1}}, {{1, 2, 0}}}};
  for (const auto& sp : splits) {
    const int a = xs[sp[0]];
    const int c = xs[sp[1]];
    VertexSet hx = h;
    hx.add(a);
    hx.add(c);
    Path spine;
    bool linear = detail::induced_path_between(g, hx, a, c, &spine);
    bool closes = false;
    if (!linear && g.adjacent(a, c) && hx.count() >= 4) {
      // Walk the cycle from a the long way: drop the direct edge by seeding
      // the walk's predecessor as c.
      bool cyc = true;
      std::vector<int> walk{a};
      int prev = c;
      int cur = a;
      while (cyc) {
        if (int(walk.size()) > hx.count()) {
          cyc = false;
          break;
        }
        VertexSet step = neighbors_in(g, cur, hx);
        step.remove(prev);
        if (cur == c) break;
        if (step.count() != 1) {
          cyc = false;
          break;
        }
        prev = cur;
        cur = step.min();
        walk.push_back(cur);
      }
      if (cyc && cur == c && int(walk.size()) == hx.count()) {
        // Every vertex must have exactly two neighbors on the cycle.
        bool deg2 = true;
        auto cv = hx.to_vector();
        for (int v : cv)
          if (neighbors_in(g, v, hx).count() != 2) {
            deg2 = false;
            break;
          }
        if (deg2) {
          spine.v = std::move(walk);
          linear = true;
          closes = true;
        }
      }
    }
    if (!linear) continue;
    VertexSet nh = nx[sp[2]] & h;
    if (!detail::attachment_forked(g, nh)) continue;
    res.shape = MinimalShape::PathWithAttachment;
    res.order = sp;
    res.spine = spine;
    res.attach = nh;
    res.spine_closes = closes;
    return res;
  }

  // Shape 2: one center with at most three dangling paths, one per corner.
  auto hv = h.to_vector();
  static const std::array<std::array<int, 3>, 6> perms{
      {{{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}}, {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}}}};
  for (int a : hv) {
    VertexSet rest = h;
    rest.remove(a);
    auto comps = components(g, rest);
    if (comps.size() > 3) continue;
    for (const auto& pm : perms) {
      std::array<Path, 3> legs;
      std::array<const VertexSet*, 3> leg_of{nullptr, nullptr, nullptr};
      for (std::size_t t = 0; t < comps.size(); ++t) leg_of[pm[t]] = &comps[t];
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) {
        if (leg_of[t]) {
          VertexSet sub = *leg_of[t];
          sub.add(a);
          sub.add(xs[t]);
          ok = detail::induced_path_between(g, sub, a, xs[t], &legs[t]);
        } else {
          ok = g.adjacent(a, xs[t]);
          legs[t].v = {a, xs[t]};
        }
      }
      for (int t = 0; t < 3 && ok; ++t)
        for (int u = 0; u < 3 && ok; ++u)
          if (t != u && leg_of[u]) ok = !nx[t].intersects(*leg_of[u]);
      if (!ok) continue;
      res.shape = MinimalShape::Spider;
      res.legs = legs;
      res.centers = {a, a, a};
      return res;
    }
  }

  // Shape 3: a triangle core, one dangling path per corner.
  for (std::size_t ai = 0; ai < hv.size(); ++ai)
    for (std::size_t bi = ai + 1; bi < hv.size(); ++bi) {
      if (!g.adjacent(hv[ai], hv[bi])) continue;
      for (std::size_t ci = bi + 1; ci < hv.size(); ++ci) {
        if (!g.adjacent(hv[ai], hv[ci]) || !g.adjacent(hv[bi], hv[ci])) continue;
        const std::array<int, 3> tri{{hv[ai], hv[bi], hv[ci]}};
        VertexSet trio = VertexSet::of(g.size(), {tri[0], tri[1], tri[2]});
        auto comps = components(g, h - trio);
        bool tidy = true;
        std::vector<int> owner(comps.size(), -1);
        for (std::size_t t = 0; t < comps.size() && tidy; ++t) {
          int hits = 0;
          for (int u = 0; u < 3; ++u)
            if (comps[t].intersects(g.neighbors(tri[u]))) {
              hits++;
              owner[t] = u;
            }
          tidy = hits == 1;
        }
        if (!tidy) continue;
        for (const auto& pm : perms) {
          // pm maps triangle slots to corner indices.
          std::array<VertexSet, 3> vi{VertexSet(g.size()), VertexSet(g.size()),
                                      VertexSet(g.size())};
          for (int u = 0; u < 3; ++u) vi[pm[u]].add(tri[u]);
          bool ok = true;
          for (std::size_t t = 0; t < comps.size(); ++t) vi[pm[owner[t]]] |= comps[t];
          std::array<Path, 3> legs;
          std::array<int, 3> ctr{{-1, -1, -1}};
          for (int u = 0; u < 3; ++u) ctr[pm[u]] = tri[u];
          for (int t = 0; t < 3 && ok; ++t) {
            VertexSet sub = vi[t];
            sub.add(xs[t]);
            ok = detail::induced_path_between(g, sub, ctr[t], xs[t], &legs[t]);
          }
          // Legs may touch each other only through the triangle edges, and a
          // corner may not see another corner's leg.
          for (int t = 0; t < 3 && ok; ++t)
            for (int u = t + 1; u < 3 && ok; ++u) {
              VertexSet at = vi[t];
              at.remove(ctr[t]);
              VertexSet au = vi[u];
              au.remove(ctr[u]);
              ok = anticomplete(g, at, au) && neighbors_in(g, ctr[t], au).empty() &&
                   neighbors_in(g, ctr[u], at).empty() && !nx[t].intersects(vi[u]) &&
                   !nx[u].intersects(vi[t]);
            }
          if (!ok) continue;
          res.shape = MinimalShape::TriangleSpider;
          res.legs = legs;
          res.centers = ctr;
          return res;
        }
      }
    }

  throw std::logic_error("classify_minimal_connected: piece fits no shape");
}

// ---------------------------------------------------------------------------
// Census of separated triples over a three-part corner set.

struct BreakerCensus {
  long long total = 0;      // partitioned triples
  long long inspected = 0;  // triples actually scanned
  long long count = 0;      // witnessed separated triples among those
  long long unknown = 0;    // scans stopped by the budget
  bool exact = true;
  long long estimated = 0;  // count scaled to the full product when sampled
  int x_size = 0;
  std::vector<TripleWitness> samples;

  bool is_breaker(const Rational& delta) const {
    long long hits = exact ? count : estimated;
    long long cube = 1LL * x_size * x_size * x_size;
    return Rational(hits) >= delta * Rational(cube);
  }
};

namespace detail {

inline void check_corner_partition(const Graph& g, const VertexSet& x1s,
                                   const VertexSet& x2s, const VertexSet& x3s,
                                   const char* who) {
  const std::array<const VertexSet*, 3> parts{&x1s, &x2s, &x3s};
  for (int t = 0; t < 3; ++t) {
    if (parts[t]->empty())
      throw std::invalid_argument(std::string(who) + ": empty corner part");
    if (parts[t]->count() != parts[0]->count())
      throw std::invalid_argument(std::string(who) + ": corner parts differ in size");
    for (int u = t + 1; u < 3; ++u) {
      if (parts[t]->intersects(*parts[u]))
        throw std::invalid_argument(std::string(who) + ": corner parts overlap");
      if (!anticomplete(g, *parts[t], *parts[u]))
        throw std::invalid_argument(std::string(who) + ": corner parts see each other");
    }
  }
}

inline bool corner_eligible(const Graph& g, const VertexSet& dset, int b, int x) {
  return !g.adjacent(x, b) && g.neighbors(x).intersects(dset);
}

}  // namespace detail

// Counts partitioned triples admitting a separation witness. Exact when the
// triple product fits the budget; otherwise a per-stratum sample keyed by the
// seed, scaled up and flagged.
inline BreakerCensus breaker_census(const Graph& g, const VertexSet& x1s,
                                    const VertexSet& x2s, const VertexSet& x3s,
                                    int b, long long budget = 100000,
                                    std::uint64_t seed = 1,
                                    const TripleLimits& lim = {}) {
  detail::check_corner_partition(g, x1s, x2s, x3s, "breaker_census");
  const VertexSet xall = x1s | x2s | x3s;
  const VertexSet dset = VertexSet::full(g.size()) - xall;
  if (!dset.contains(b))
    throw std::invalid_argument("breaker_census: anchor is not in the part");

  BreakerCensus r;
  r.x_size = xall.count();
  auto v1 = x1s.to_vector();
  auto v2 = x2s.to_vector();
  auto v3 = x3s.to_vector();
  r.total = 1LL * v1.size() * v2.size() * v3.size();
  detail::TripleScanner scanner(g, dset, b, lim);

  auto inspect = [&](int a, int c, int d) {
    r.inspected++;
    if (!detail::corner_eligible(g, dset, b, a) ||
        !detail::corner_eligible(g, dset, b, c) ||
        !detail::corner_eligible(g, dset, b, d))
      return;
    TripleSearch s = scanner.run({a, c, d});
    if (s.found()) {
      r.count++;
      if (r.samples.size() < 8) r.samples.push_back(*s.witness);
    } else if (!s.exhausted) {
      r.unknown++;
    }
  };

  if (r.total <= budget) {
    for (int a : v1)
      for (int c : v2)
        for (int d : v3) inspect(a, c, d);
    r.exact = true;
    r.estimated = r.count;
    return r;
  }

  r.exact = false;
  const long long per = std::max<long long>(1, budget / int(v1.size()));
  for (std::size_t s1 = 0; s1 < v1.size(); ++s1) {
    Rng rng(seed * 1000003ULL + s1);
    for (long long t = 0; t < per; ++t)
      inspect(v1[s1], v2[rng.below(int(v2.size()))], v3[rng.below(int(v3.size()))]);
  }
  long double scale = static_cast<long double>(r.total) / static_cast<long double>(r.inspected);
  r.estimated = static_cast<long long>(static_cast<long double>(r.count) * scale + 0.5L);
  return r;
}

// ---------------------------------------------------------------------------
// From many local separations to one small clique-covered cut.

struct not_a_breaker : std::invalid_argument {
  explicit not_a_breaker(const std::string& m) : std::invalid_argument(m) {}
};

struct postcondition_failed : std::logic_error {
  explicit postcondition_failed(const std::string& m) : std::logic_error(m) {}
};

struct LocalGlobalReport {
  VertexSet s;             // the cut
  CliqueCoverSet cover;    // certified clique cover of s
  long long killed = 0;    // corners whose neighborhood b's side now avoids
  long long needed = 0;    // ceil(eps * |X|)
  Rational eps;            // delta^2 / (48 * 192)
  Rational kappa_cap;      // (96 / delta)^2
  std::array<int, 2> active{{-1, -1}};
  TripleType dominant = TripleType::Type1;
  int z1 = 0;
  int w1 = 0;
  long long witnessed = 0;
  bool common_pair_route = false;

  LocalGlobalReport() : s(0) {}
};

// Aggregates per-triple witnesses into one cut S with a certified small
// clique cover whose removal hides b's component from a fixed fraction of
// the corners. The construction follows the witness statistics: a dominant
// active pair, a dominant witness type, the heavy first corners Z1, a
// minimal subset W1 whose projections are hard to cover, and if that cut
// under-kills, the refinement through a heavy common pair of corners.
inline LocalGlobalReport local_to_global(const Graph& g, const VertexSet& x1s,
                                         const VertexSet& x2s, const VertexSet& x3s,
                                         int b, const Rational& delta,
                                         const TripleLimits& lim = {}) {
  detail::check_corner_partition(g, x1s, x2s, x3s, "local_to_global");
  if (!(Rational(0) < delta) || delta > Rational(1))
    throw std::invalid_argument("local_to_global: delta outside (0, 1]");
  if (detect_c4(g).found())
    throw std::invalid_argument("local_to_global: graph has a four-hole");

  const std::array<const VertexSet*, 3> parts{&x1s, &x2s, &x3s};
  const VertexSet xall = x1s | x2s | x3s;
  const VertexSet dset = VertexSet::full(g.size()) - xall;
  if (!dset.contains(b))
    throw std::invalid_argument("local_to_global: anchor is not in the part");
  const int xn = xall.count();
  const long long cube = 1LL * xn * xn * xn;

  detail::TripleScanner scanner(g, dset, b, lim);
  std::vector<TripleWitness> found;
  long long unknown = 0;
  auto v1 = x1s.to_vector();
  auto v2 = x2s.to_vector();
  auto v3 = x3s.to_vector();
  for (int a : v1)
    for (int c : v2)
      for (int d : v3) {
        if (!detail::corner_eligible(g, dset, b, a) ||
            !detail::corner_eligible(g, dset, b, c) ||
            !detail::corner_eligible(g, dset, b, d))
          continue;
        TripleSearch s = scanner.run({a, c, d});
        if (s.found())
          found.push_back(*s.witness);
        else if (!s.exhausted)
          unknown++;
      }

  LocalGlobalReport rep;
  rep.witnessed = static_cast<long long>(found.size());
  rep.eps = delta * delta * Rational(1, 48 * 192);
  rep.kappa_cap = (Rational(96) / delta) * (Rational(96) / delta);
  {
    Rational need = rep.eps * Rational(xn);
    rep.needed = static_cast<long long>((need.num() + need.den() - 1) / need.den());
  }
  if (Rational(rep.witnessed) < delta * Rational(cube))
    throw not_a_breaker("local_to_global: " + std::to_string(rep.witnessed) +
                        " witnessed triples of " + std::to_string(cube) +
                        " needed at delta=" + delta.str() +
                        (unknown ? " (" + std::to_string(unknown) + " scans hit the budget)" : ""));

  // Projection of a corner onto the central bag: its direct neighbors there
  // plus the attachments of every outside piece it sees.
  const VertexSet dcomp = component_of(g, dset, b);
  CentralBag bag = central_bag(g, dcomp, b);
  auto fringe = components(g, dset - bag.beta);
  std::vector<VertexSet> fringe_att;
  fringe_att.reserve(fringe.size());
  for (const auto& f : fringe) fringe_att.push_back(open_neighborhood(g, f) & dset);
  auto project = [&](int x) {
    VertexSet p = g.neighbors(x) & bag.beta;
    for (std::size_t t = 0; t < fringe.size(); ++t)
      if (fringe[t].intersects(g.neighbors(x))) p |= fringe_att[t];
    return p;
  };

  // Dominant active pair, then the first sufficiently common type in it.
  static const std::array<std::array<int, 2>, 6> prs{
      {{{0, 1}}, {{0, 2}}, {{1, 0}}, {{1, 2}}, {{2, 0}}, {{2, 1}}}};
  std::array<long long, 6> per_pair{};
  for (const auto& w : found)
    for (int t = 0; t < 6; ++t)
      if (w.active[0] == prs[t][0] && w.active[1] == prs[t][1]) per_pair[t]++;
  int best = 0;
  for (int t = 1; t < 6; ++t)
    if (per_pair[t] > per_pair[best]) best = t;
  rep.active = {prs[best][0], prs[best][1]};
  static const std::array<TripleType, 4> type_order{
      TripleType::Type1, TripleType::Type2a, TripleType::Type2b, TripleType::Type2c};
  std::array<long long, 4> per_type{};
  for (const auto& w : found)
    if (w.active[0] == rep.active[0] && w.active[1] == rep.active[1])
      for (int t = 0; t < 4; ++t)
        if (w.type == type_order[t]) per_type[t]++;
  int dom = -1;
  const Rational slice = delta * Rational(1, 24) * Rational(cube);
  for (int t = 0; t < 4 && dom < 0; ++t)
    if (Rational(per_type[t]) >= slice) dom = t;
  if (dom < 0)
    throw postcondition_failed("local_to_global: no witness type reaches its share");
  rep.dominant = type_order[dom];

  // Heavy first corners of the dominant kind.
  std::map<int, long long> per_first;
  for (const auto& w : found)
    if (w.active[0] == rep.active[0] && w.active[1] == rep.active[1] &&
        w.type == rep.dominant)
      per_first[w.triple[rep.active[0]]]++;
  const Rational z_cut = delta * Rational(1, 48) * Rational(1LL * xn * xn);
  std::vector<int> z1;
  for (const auto& [y, cnt] : per_first)
    if (Rational(cnt) >= z_cut) z1.push_back(y);
  std::sort(z1.begin(), z1.end());
  rep.z1 = int(z1.size());
  if (z1.empty())
    throw postcondition_failed("local_to_global: no corner carries enough witnesses");

  std::map<int, VertexSet> proj;
  for (int y : z1) proj.emplace(y, project(y));
  auto union_proj = [&](const std::vector<int>& ys) {
    VertexSet u(g.size());
    for (int y : ys) u |= proj.at(y);
    return u;
  };

  const Rational alpha_cut = Rational(96) / delta;
  auto alpha_of = [&](const VertexSet& s) {
    return independence_number_only(g, s, std::max(40, s.count() + 1));
  };

  std::vector<int> w1 = z1;
  VertexSet s = union_proj(w1);
  if (Rational(alpha_of(s)) >= alpha_cut) {
    // Peel to a minimal subset still hard to cover by cliques.
    for (int y : z1) {
      std::vector<int> trial;
      for (int u : w1)
        if (u != y) trial.push_back(u);
      if (trial.empty()) continue;
      if (Rational(alpha_of(union_proj(trial))) >= alpha_cut) w1 = std::move(trial);
    }
    s = union_proj(w1);
  }
  rep.w1 = int(w1.size());

  auto verify = [&](const VertexSet& cut, LocalGlobalReport* out) -> bool {
    if (cut.contains(b)) return false;
    CliqueCoverSet cover = clique_cover(g, cut, 30);
    if (!verify_clique_cover(g, cut, cover))
      throw postcondition_failed("local_to_global: clique cover failed its own check");
    if (Rational(cover.size()) > rep.kappa_cap) return false;
    const VertexSet side = component_of(g, dset - cut, b);
    long long killed = 0;
    auto xv = xall.to_vector();
    for (int x : xv)
      if (!side.intersects(g.neighbors(x))) killed++;
    if (Rational(killed) < rep.eps * Rational(xn)) return false;
    out->s = cut;
    out->cover = std::move(cover);
    out->killed = killed;
    return true;
  };

  if (verify(s, &rep)) return rep;

  if (rep.dominant == TripleType::Type1) {
    // The minimal-union cut under-killed; hunt for two stable cut members
    // whose corners share many witnessed partners, and cut around those
    // partners instead.
    AlphaResult ar = independence_number(g, s, std::max(40, s.count() + 1));
    int want = int((alpha_cut.num() + alpha_cut.den() - 1) / alpha_cut.den());
    auto jv = ar.witness.to_vector();
    if (int(jv.size()) > want) jv.resize(want);
    std::vector<int> rep_of;
    for (int j : jv) {
      int owner = -1;
      for (int y : w1)
        if (proj.at(y).contains(j)) {
          owner = y;
          break;
        }
      rep_of.push_back(owner);
    }
    // Witnessed partner pairs per first corner, keyed (second, third).
    std::map<int, std::set<std::pair<int, int>>> partners;
    for (const auto& w : found)
      if (w.active[0] == rep.active[0] && w.active[1] == rep.active[1] &&
          w.type == rep.dominant) {
        const int yj = w.triple[rep.active[1]];
        const int yk = w.triple[3 - rep.active[0] - rep.active[1]];
        partners[w.triple[rep.active[0]]].insert({yj, yk});
      }
    const Rational pair_cut = delta * delta * Rational(1, 48 * 192) * Rational(1LL * xn * xn);
    for (std::size_t a = 0; a < rep_of.size(); ++a)
      for (std::size_t c = a + 1; c < rep_of.size(); ++c) {
        if (rep_of[a] < 0 || rep_of[c] < 0 || rep_of[a] == rep_of[c]) continue;
        const auto& pa = partners[rep_of[a]];
        const auto& pc = partners[rep_of[c]];
        std::set<int> z2;
        long long common = 0;
        for (const auto& pr : pa)
          if (pc.count(pr)) {
            common++;
            z2.insert(pr.first);
          }
        if (Rational(common) < pair_cut) continue;
        VertexSet s2(g.size());
        for (int y : z2) s2 |= project(y);
        LocalGlobalReport alt = rep;
        if (verify(s2, &alt)) {
          alt.common_pair_route = true;
          return alt;
        }
      }
  }

  throw postcondition_failed(
      "local_to_global: no constructed cut met both bounds (kappa cap " +
      rep.kappa_cap.str() + ", needed kills " + std::to_string(rep.needed) + ")");
}

}  // namespace ehk
