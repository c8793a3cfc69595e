#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ehk/exact.hpp"
#include "ehk/graph.hpp"
#include "ehk/witness.hpp"

namespace ehk {

// Detector outcome: `certified` says the presence/absence answer is exact.
// A found witness is always certain; an absent result is certain only when
// the search ran to completion within budget and limits.
template <typename W>
struct Detection {
  std::optional<W> witness;
  bool certified = true;

  bool found() const { return witness.has_value(); }
};

struct HoleEnumLimits {
  int max_n = 64;
  std::int64_t node_budget = 50'000'000;
  std::int64_t max_holes = -1;  // <0: unbounded
};

// Enumerates every hole exactly once: the start vertex is the cycle minimum
// and the second vertex is the smaller neighbor of the start on the cycle.
// visit returning false stops early (still "complete" for certification of
// what was requested). Returns true iff enumeration was exhaustive.
inline bool enumerate_holes(const Graph& g, const HoleEnumLimits& lim,
                            const std::function<bool(const HoleWitness&)>& visit) {
  std::int64_t nodes = 0, emitted = 0;
  bool truncated = false, stopped = false;
  std::vector<int> path;
  const int n = g.size();

  for (int s = 0; s < n && !truncated && !stopped; ++s) {
    VertexSet ge(n);  // vertices > s
    for (int v = s + 1; v < n; ++v) ge.add(v);
    path.assign(1, s);
    VertexSet blocked(n);  // N[path minus tail], excluding the start's row

    std::function<void(int)> grow = [&](int tail) {
      if (truncated || stopped) return;
      if (++nodes > lim.node_budget) {
        truncated = true;
        return;
      }
      VertexSet cand = g.neighbors(tail) & ge;
      cand -= blocked;
      for (int w = cand.min(); w >= 0 && !truncated && !stopped; w = cand.next(w)) {
        if (g.adjacent(w, s)) {
          // close the cycle: need length >= 4 and canonical orientation
          if (path.size() >= 3 && path[1] < w) {
            HoleWitness h;
            h.cycle = path;
            h.cycle.push_back(w);
            if (lim.max_holes >= 0 && ++emitted > lim.max_holes) {
              truncated = true;
              return;
            }
            if (!visit(h)) stopped = true;
          }
          continue;  // a chord to s forbids extending through w
        }
        VertexSet saved = blocked;
        blocked |= g.neighbors(tail);
        blocked.add(tail);
        path.push_back(w);
        grow(w);
        path.pop_back();
        blocked = saved;
      }
    };

    // First hop: no blocking yet (s row must stay visible for closure checks).
    VertexSet first = g.neighbors(s) & ge;
    for (int p1 = first.min(); p1 >= 0 && !truncated && !stopped; p1 = first.next(p1)) {
      path.assign(1, s);
      path.push_back(p1);
      blocked = VertexSet(n);
      grow(p1);
    }
  }
  return !truncated;
}

inline Detection<HoleWitness> find_even_hole(const Graph& g, HoleEnumLimits lim = {}) {
  if (g.size() > lim.max_n) throw limit_error("find_even_hole: graph beyond exact limit");
  Detection<HoleWitness> out;
  // C4s first: cheap quadratic-pair scan catches the bulk of even holes in
  // dense inputs long before general enumeration.
  for (int a = 0; a < g.size(); ++a)
    for (int c = a + 1; c < g.size(); ++c) {
      if (g.adjacent(a, c)) continue;
      VertexSet common = g.neighbors(a) & g.neighbors(c);
      for (int b = common.min(); b >= 0; b = common.next(b)) {
        VertexSet rest = common - g.neighbors(b);
        rest.remove(b);
        int d = rest.min();
        if (d >= 0) {
          out.witness = HoleWitness{{a, std::min(b, d), c, std::max(b, d)}};
          out.certified = true;
          return out;
        }
      }
    }
  bool complete = enumerate_holes(g, lim, [&](const HoleWitness& h) {
    if (h.even()) {
      out.witness = h;
      return false;
    }
    return true;
  });
  out.certified = out.found() || complete;
  return out;
}

inline Detection<HoleWitness> find_hole_through(const Graph& g, const VertexSet& must_contain,
                                                HoleEnumLimits lim = {}) {
  if (g.size() > lim.max_n) throw limit_error("find_hole_through: graph beyond exact limit");
  Detection<HoleWitness> out;
  bool complete = enumerate_holes(g, lim, [&](const HoleWitness& h) {
    if (must_contain.subset_of(h.vertex_set(g.size()))) {
      out.witness = h;
      return false;
    }
    return true;
  });
  out.certified = out.found() || complete;
  return out;
}

struct WheelClassification {
  bool is_proper = false;
  bool is_even = false;
  bool is_universal = false;
  std::vector<Path> sectors;
  std::vector<int> long_sector_indices;
};

inline WheelClassification classify_wheel(const Graph& g, const WheelWitness& w) {
  WheelClassification c;
  VertexSet h = w.hole.vertex_set(g.size());
  VertexSet nb = g.neighbors(w.center) & h;
  int k = w.hole.length();
  c.is_even = nb.count() % 2 == 0;
  c.is_universal = nb.count() == k;
  c.is_proper = independence_number(g, nb).alpha >= 3;
  // universal wheels are even exactly when the hole is even; both flags are
  // computed independently above, so this cross-check is a real assertion
  if (c.is_universal && c.is_even != (k % 2 == 0))
    throw std::logic_error("wheel classification inconsistency");
  // Sectors: hole arcs between cyclically consecutive neighbors of x.
  std::vector<int> hits;
  for (int i = 0; i < k; ++i)
    if (nb.contains(w.hole.cycle[i])) hits.push_back(i);
  if (hits.size() >= 2) {
    for (std::size_t t = 0; t < hits.size(); ++t) {
      int from = hits[t], to = hits[(t + 1) % hits.size()];
      Path sector;
      for (int i = from;; i = (i + 1) % k) {
        sector.v.push_back(w.hole.cycle[i]);
        if (i == to && sector.v.size() > 1) break;
      }
      if (sector.v.size() > std::size_t(2))
        c.long_sector_indices.push_back(int(c.sectors.size()));
      c.sectors.push_back(std::move(sector));
    }
  }
  return c;
}

struct WheelEnumeration {
  std::vector<std::pair<WheelWitness, WheelClassification>> wheels;
  bool certified = true;  // hole enumeration exhausted under budget
};

inline WheelEnumeration enumerate_wheels(const Graph& g, HoleEnumLimits lim = {}) {
  if (g.size() > lim.max_n) throw limit_error("enumerate_wheels: graph beyond exact limit");
  WheelEnumeration out;
  out.certified = enumerate_holes(g, lim, [&](const HoleWitness& h) {
    VertexSet hs = h.vertex_set(g.size());
    for (int x = 0; x < g.size(); ++x) {
      if (hs.contains(x)) continue;
      if ((g.neighbors(x) & hs).count() >= 3) {
        WheelWitness w{h, x};
        out.wheels.emplace_back(w, classify_wheel(g, w));
      }
    }
    return true;
  });
  return out;
}

}  // namespace ehk
