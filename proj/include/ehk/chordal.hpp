#pragma once

// Chordality: maximum-cardinality search, perfect elimination orderings,
// the membership test built from them, and the two-cut partition of a
// sparse chordal graph into three large mutually detached blocks.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehk/bitset.hpp"
#include "ehk/exact.hpp"
#include "ehk/graph.hpp"
#include "ehk/rational.hpp"

namespace ehk {

struct precondition_failed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Maximum-cardinality search order. Visits the vertex with the most
// already-visited neighbors first (ties to the smallest id); the REVERSE of
// the returned order is a perfect elimination ordering iff G is chordal.
inline std::vector<int> mcs_order(const Graph& g) {
  int n = g.size();
  std::vector<int> weight(n, 0), order;
  order.reserve(n);
  VertexSet left = g.vertices();
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = left.min(); v >= 0; v = left.next(v))
      if (best < 0 || weight[v] > weight[best]) best = v;
    order.push_back(best);
    left.remove(best);
    VertexSet nb = g.neighbors(best) & left;
    for (int v = nb.min(); v >= 0; v = nb.next(v)) ++weight[v];
  }
  return order;
}

// Checks that `elim` is a perfect elimination ordering: for each vertex,
// its neighbors later in the order form a clique. Verified through the
// standard one-representative test (every later neighbor of v must also
// neighbor v's earliest later neighbor), which keeps it near-linear.
inline bool is_peo(const Graph& g, const std::vector<int>& elim) {
  int n = g.size();
  if (int(elim.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (elim[i] < 0 || elim[i] >= n || pos[elim[i]] >= 0) return false;
    pos[elim[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    int rep = -1;
    VertexSet later(n);
    VertexSet nb = g.neighbors(v);
    for (int u = nb.min(); u >= 0; u = nb.next(u)) {
      if (pos[u] <= i) continue;
      later.add(u);
      if (rep < 0 || pos[u] < pos[rep]) rep = u;
    }
    if (rep < 0) continue;
    later.remove(rep);
    if (!later.subset_of(g.neighbors(rep))) return false;
  }
  return true;
}

inline bool is_chordal(const Graph& g) {
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  return is_peo(g, order);
}

// First clique (the empty set, then maximal cliques of G[sub] in lexicographic
// order) whose removal leaves every component of `sub` with at most half of
// sub's vertices. For chordal G[sub] one always exists: a clique tree has a
// bag whose removal balances, and bags are maximal cliques. The empty
// candidate covers scattered graphs whose components are already small.
inline VertexSet halving_clique(const Graph& g, const VertexSet& sub) {
  std::vector<VertexSet> candidates;
  candidates.push_back(VertexSet(g.size()));
  for (const auto& k : enumerate_maximal_cliques(g, sub)) candidates.push_back(k);
  for (const auto& k : candidates) {
    bool ok = true;
    for (const auto& d : components(g, sub - k))
      if (2 * d.count() > sub.count()) {
        ok = false;
        break;
      }
    if (ok) return k;
  }
  throw std::logic_error("halving_clique: no balanced clique cut (input not chordal?)");
}

struct ChordalPartition {
  CliqueCoverSet z;                // at most two cliques covering the cut
  VertexSet zset;                  // their union
  std::array<VertexSet, 3> parts;  // pairwise anticomplete, each of size target
  int target = 0;                  // ceil(n_ambient / 17)
};

namespace detail {

// Inclusion-minimal union of components reaching `goal` vertices: adding in
// descending size order means dropping any chosen piece lands below goal.
inline VertexSet min_component_mass(const Graph& g, const VertexSet& sub,
                                    const Rational& goal, const char* stage) {
  std::vector<VertexSet> comps = components(g, sub);
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
  VertexSet picked(g.size());
  long long got = 0;
  for (const auto& d : comps) {
    if (Rational(got) >= goal) break;
    picked |= d;
    got += d.count();
  }
  if (Rational(got) < goal)
    throw precondition_failed(std::string("chordal_partition: only ") + std::to_string(got) +
                              " vertices available for the " + stage +
                              " block; epsilon is too large for the size guarantees");
  return picked;
}

inline VertexSet take_prefix(const VertexSet& s, int k) {
  VertexSet out(s.universe());
  int v = s.min();
  for (int i = 0; i < k && v >= 0; ++i, v = s.next(v)) out.add(v);
  return out;
}

}  // namespace detail

// Splits a chordal graph with at least (1-eps)*n_ambient vertices and no
// clique of eps*n_ambient vertices into three pairwise anticomplete blocks of
// exactly ceil(n_ambient/17) vertices each, separated by a set covered by at
// most two cliques. Construction: a halving clique splits off a quarter-mass
// block, then a second halving clique inside a quarter-sized remainder splits
// the other two. Threshold arithmetic clamps eps at 1/544, above which the
// size guarantees lapse and the construction may fail honestly.
inline ChordalPartition chordal_partition(const Graph& g, int n_ambient, const Rational& eps) {
  if (n_ambient <= 0) throw std::invalid_argument("chordal_partition: ambient count must be positive");
  if (!(eps > Rational(0))) throw std::invalid_argument("chordal_partition: epsilon must be positive");
  if (g.size() > n_ambient)
    throw precondition_failed("chordal_partition: more vertices than the ambient count");
  if (Rational(g.size()) < (Rational(1) - eps) * Rational(n_ambient))
    throw precondition_failed("chordal_partition: fewer than (1-eps)*n vertices");
  if (!is_chordal(g)) throw precondition_failed("chordal_partition: input is not chordal");
  for (const auto& k : enumerate_maximal_cliques(g, g.vertices()))
    if (Rational(k.count()) >= eps * Rational(n_ambient))
      throw precondition_failed("chordal_partition: clique of " + std::to_string(k.count()) +
                                " vertices meets the eps*n bound");

  const Rational n(n_ambient);
  const Rational eps_a = std::min(eps, Rational(1, 544));
  const int target = (n_ambient + 16) / 17;

  // First split: detach a minimal quarter-mass union of components.
  VertexSet z1 = halving_clique(g, g.vertices());
  VertexSet x1 = detail::min_component_mass(g, g.vertices() - z1,
                                            (Rational(1, 4) - eps_a * 2) * n, "first");

  // Second split: inside a quarter-size sample of the untouched side.
  VertexSet avail = g.vertices() - x1 - z1;
  const int y_size = (n_ambient + 3) / 4;
  if (avail.count() < y_size)
    throw precondition_failed("chordal_partition: only " + std::to_string(avail.count()) +
                              " vertices left of the " + std::to_string(y_size) +
                              " needed opposite the first block");
  VertexSet y = detail::take_prefix(avail, y_size);
  VertexSet z2 = halving_clique(g, y);
  VertexSet x2 = detail::min_component_mass(g, y - z2, (Rational(1, 16) - eps_a * 2) * n, "second");
  VertexSet x3 = y - x2 - z2;

  ChordalPartition out;
  out.target = target;
  out.zset = z1 | z2;
  if (out.zset.empty()) {
    out.z.exact = true;
  } else if (is_clique(g, out.zset)) {
    out.z.cliques.push_back(out.zset);
    out.z.exact = true;
  } else {
    if (!z1.empty()) out.z.cliques.push_back(z1);
    if (!z2.empty()) out.z.cliques.push_back(z2);
    out.z.exact = true;
  }

  const std::array<VertexSet, 3> full{{x1, x2, x3}};
  for (int i = 0; i < 3; ++i) {
    if (full[i].count() < target)
      throw precondition_failed("chordal_partition: block " + std::to_string(i + 1) + " has " +
                                std::to_string(full[i].count()) + " vertices, needs " +
                                std::to_string(target) +
                                "; epsilon is too large for the size guarantees");
    out.parts[i] = detail::take_prefix(full[i], target);
  }
  for (int i = 0; i < 3; ++i) {
    if (out.parts[i].intersects(out.zset))
      throw std::logic_error("chordal_partition: block meets the cut");
    for (int j = i + 1; j < 3; ++j)
      if (!anticomplete(g, out.parts[i], out.parts[j]))
        throw std::logic_error("chordal_partition: blocks are not anticomplete");
  }
  return out;
}

}  // namespace ehk
