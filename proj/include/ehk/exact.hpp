#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ehk/graph.hpp"

namespace ehk {

struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Greedy clique partition of G[p]; count upper-bounds alpha(G[p]).
inline int greedy_clique_cover_count(const Graph& g, VertexSet p) {
  int cliques = 0;
  while (!p.empty()) {
    int v = p.min();
    VertexSet cand = g.neighbors(v) & p;
    p.remove(v);
    while (!cand.empty()) {
      int w = cand.min();
      p.remove(w);
      cand &= g.neighbors(w);
    }
    ++cliques;
  }
  return cliques;
}

inline void mis_branch(const Graph& g, const VertexSet& p, int depth, int& best,
                       VertexSet* best_set, VertexSet& cur) {
  if (p.empty()) {
    if (depth > best) {
      best = depth;
      if (best_set) *best_set = cur;
    }
    return;
  }
  if (depth + greedy_clique_cover_count(g, p) <= best) return;
  // Branch on a max-degree vertex: either exclude it or take it.
  int pick = p.min(), pick_deg = -1;
  for (int v = p.min(); v >= 0; v = p.next(v)) {
    int d = (g.neighbors(v) & p).count();
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  VertexSet with = p - g.neighbors(pick);
  with.remove(pick);
  cur.add(pick);
  mis_branch(g, with, depth + 1, best, best_set, cur);
  cur.remove(pick);
  VertexSet without = p;
  without.remove(pick);
  mis_branch(g, without, depth, best, best_set, cur);
}

}  // namespace detail

struct AlphaResult {
  int alpha = 0;
  VertexSet witness;  // lexicographically least maximum stable set
};

inline int independence_number_only(const Graph& g, const VertexSet& s, int limit = 40) {
  if (s.count() > limit) throw limit_error("independence_number: set larger than exact limit");
  int best = 0;
  VertexSet cur(g.size());
  detail::mis_branch(g, s, 0, best, nullptr, cur);
  return best;
}

inline AlphaResult independence_number(const Graph& g, const VertexSet& s, int limit = 40) {
  AlphaResult r;
  r.alpha = independence_number_only(g, s, limit);
  r.witness = VertexSet(g.size());
  // Lexicographic extraction: take v exactly when a maximum stable set of the
  // residual still reaches the target through v.
  VertexSet rest = s;
  int target = r.alpha;
  while (target > 0) {
    int v = rest.min();
    VertexSet without_nv = rest - g.neighbors(v);
    without_nv.remove(v);
    if (1 + independence_number_only(g, without_nv, limit) == target) {
      r.witness.add(v);
      rest = without_nv;
      --target;
    } else {
      rest.remove(v);
    }
  }
  return r;
}

struct CliqueCoverSet {
  std::vector<VertexSet> cliques;
  bool exact = false;

  int size() const { return int(cliques.size()); }
};

inline bool verify_clique_cover(const Graph& g, const VertexSet& s, const CliqueCoverSet& c) {
  VertexSet seen(g.size());
  for (const auto& k : c.cliques) {
    if (k.empty()) return false;
    if (!is_clique(g, k)) return false;
    if (seen.intersects(k)) return false;
    seen |= k;
  }
  return seen == s;
}

namespace detail {

inline CliqueCoverSet greedy_clique_cover(const Graph& g, VertexSet p) {
  CliqueCoverSet out;
  out.exact = false;
  while (!p.empty()) {
    int v = p.min();
    VertexSet clique(g.size());
    clique.add(v);
    VertexSet cand = g.neighbors(v) & p;
    p.remove(v);
    while (!cand.empty()) {
      int w = cand.min();
      clique.add(w);
      p.remove(w);
      cand &= g.neighbors(w);
    }
    out.cliques.push_back(clique);
  }
  return out;
}

// Exact chromatic number of the complement of G[s] by k-feasibility search;
// color classes of the complement are cliques of G.
inline bool complement_color_rec(const Graph& g, const std::vector<int>& order,
                                 std::size_t idx, int k, std::vector<VertexSet>& classes,
                                 int used) {
  if (idx == order.size()) return true;
  int v = order[idx];
  for (int c = 0; c < std::min(used + 1, k); ++c) {
    // In the complement a class must be a clique of G around v.
    bool ok = true;
    for (int u = classes[c].min(); u >= 0; u = classes[c].next(u))
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    classes[c].add(v);
    if (complement_color_rec(g, order, idx + 1, k, classes, std::max(used, c + 1)))
      return true;
    classes[c].remove(v);
  }
  return false;
}

}  // namespace detail

// Minimum clique cover of G[s] (= chromatic number of the complement).
// Exact for |s| <= exact_limit, greedy otherwise; the partition returned is
// always a verified clique cover.
inline CliqueCoverSet clique_cover(const Graph& g, const VertexSet& s, int exact_limit = 24) {
  if (s.empty()) return CliqueCoverSet{{}, true};
  if (s.count() > exact_limit) return detail::greedy_clique_cover(g, s);

  // Lower bound: a stable set needs pairwise distinct cliques.
  int lb = independence_number_only(g, s, std::max(40, s.count()));
  CliqueCoverSet greedy = detail::greedy_clique_cover(g, s);
  int ub = greedy.size();
  std::vector<int> order = s.to_vector();
  // Most-constrained first: low G-degree inside s means few clique partners.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return (g.neighbors(a) & s).count() < (g.neighbors(b) & s).count();
  });
  for (int k = lb; k < ub; ++k) {
    std::vector<VertexSet> classes(std::size_t(k), VertexSet(g.size()));
    if (detail::complement_color_rec(g, order, 0, k, classes, 0)) {
      CliqueCoverSet out;
      out.exact = true;
      for (auto& c : classes)
        if (!c.empty()) out.cliques.push_back(c);
      return out;
    }
  }
  greedy.exact = true;  // greedy met the stable-set lower bound
  return greedy;
}

inline int clique_cover_number(const Graph& g, const VertexSet& s, int exact_limit = 24) {
  return clique_cover(g, s, exact_limit).size();
}

// Maximum clique of G[s] via alpha on the complement; ids preserved.
inline VertexSet max_clique(const Graph& g, const VertexSet& s, int limit = 64) {
  if (s.count() > limit) throw limit_error("max_clique: set larger than exact limit");
  Graph co = g.complement_within(s);
  AlphaResult r = independence_number(co, s, limit);
  return r.witness;
}

inline int clique_number(const Graph& g, const VertexSet& s, int limit = 64) {
  return max_clique(g, s, limit).count();
}

// All maximal cliques of G[s], Bron-Kerbosch with greedy pivoting. Output
// sorted lexicographically. Throws limit_error if more than `cap` cliques
// appear (guards runaway inputs; C4-free graphs stay under n^2).
inline std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g, const VertexSet& s,
                                                        std::int64_t cap = 2'000'000) {
  std::vector<VertexSet> out;
  VertexSet r(g.size());

  std::function<void(VertexSet, VertexSet)> bk = [&](VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      if (std::int64_t(out.size()) >= cap)
        throw limit_error("enumerate_maximal_cliques: clique cap exceeded");
      out.push_back(r);
      return;
    }
    // Pivot: vertex of P|X with most neighbors in P.
    int pivot = -1, best = -1;
    VertexSet px = p | x;
    for (int v = px.min(); v >= 0; v = px.next(v)) {
      int d = (g.neighbors(v) & p).count();
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    VertexSet cand = p - g.neighbors(pivot);
    for (int v = cand.min(); v >= 0; v = cand.next(v)) {
      r.add(v);
      bk(p & g.neighbors(v), x & g.neighbors(v));
      r.remove(v);
      p.remove(v);
      x.add(v);
    }
  };
  if (!s.empty()) bk(s, VertexSet(g.size()));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.lex_less(b);
  });
  return out;
}

}  // namespace ehk
