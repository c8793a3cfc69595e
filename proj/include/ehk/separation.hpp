#pragma once

// Clique-anchored separations and central bags. A clique K of a connected
// graph D splits D around an anchor b into the side B(K) holding b, the
// boundary C(K), and the far side A(K); intersecting the b-sides over all
// cliques with inclusion-maximal far side yields the central bag, the part
// of D that no single clique can cut away from b. The bag's laws (clique
// attachments, pairwise laminarity, every clique cutset through b) are
// re-verified on every call and a failure throws rather than returning.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ehk/bitset.hpp"
#include "ehk/exact.hpp"
#include "ehk/graph.hpp"

namespace ehk {

// Partition of an ambient set with the outer parts non-adjacent.
struct Separation {
  VertexSet a, c, b;
};

inline bool validate_separation(const Graph& g, const VertexSet& ambient,
                                const Separation& s) {
  if (s.a.intersects(s.c) || s.a.intersects(s.b) || s.c.intersects(s.b)) return false;
  if ((s.a | s.c | s.b) != ambient) return false;
  return anticomplete(g, s.a, s.b);
}

// The separation a clique induces around an anchor: sep.b is the anchor's
// side, sep.c its boundary inside the clique, sep.a everything cut off.
struct CanonicalSeparation {
  VertexSet clique;
  Separation sep;
  int anchor = -1;
};

inline CanonicalSeparation canonical_separation(const Graph& g, const VertexSet& dset,
                                                int b, const VertexSet& k);

// Recomputes the definition from scratch and compares. For an anchor inside
// the clique this checks both the component-union form of sep.b and the
// identity against the separation for K minus the anchor.
inline bool validate_canonical_separation(const Graph& g, const VertexSet& dset,
                                          const CanonicalSeparation& cs) {
  if (!dset.contains(cs.anchor)) return false;
  if (!cs.clique.subset_of(dset) || !is_clique(g, cs.clique)) return false;
  if (!validate_separation(g, dset, cs.sep)) return false;
  if (!cs.clique.contains(cs.anchor)) {
    VertexSet side = component_of(g, dset - cs.clique, cs.anchor);
    if (cs.sep.b != side) return false;
    if (cs.sep.c != (open_neighborhood(g, side) & dset)) return false;
    return true;
  }
  VertexSet side(g.size());
  for (const VertexSet& comp : components(g, dset - cs.clique))
    if (open_neighborhood(g, comp).contains(cs.anchor)) side |= comp;
  if (cs.sep.b != side) return false;
  VertexSet rest = cs.clique;
  rest.remove(cs.anchor);
  CanonicalSeparation base = canonical_separation(g, dset, cs.anchor, rest);
  VertexSet cc = base.sep.c;
  cc.add(cs.anchor);
  VertexSet bb = base.sep.b;
  bb.remove(cs.anchor);
  return cs.sep.a == base.sep.a && cs.sep.c == cc && cs.sep.b == bb;
}

inline CanonicalSeparation canonical_separation(const Graph& g, const VertexSet& dset,
                                                int b, const VertexSet& k) {
  if (!dset.contains(b)) throw std::invalid_argument("canonical_separation: anchor outside the graph");
  if (!k.subset_of(dset)) throw std::invalid_argument("canonical_separation: clique outside the graph");
  if (!is_clique(g, k)) throw std::invalid_argument("canonical_separation: K is not a clique");
  CanonicalSeparation cs;
  cs.clique = k;
  cs.anchor = b;
  if (!k.contains(b)) {
    cs.sep.b = component_of(g, dset - k, b);
    cs.sep.c = open_neighborhood(g, cs.sep.b) & dset;
    cs.sep.a = (dset - cs.sep.b) - cs.sep.c;
  } else {
    VertexSet rest = k;
    rest.remove(b);
    CanonicalSeparation base = canonical_separation(g, dset, b, rest);
    cs.sep.a = base.sep.a;
    cs.sep.c = base.sep.c;
    cs.sep.c.add(b);
    cs.sep.b = base.sep.b;
    cs.sep.b.remove(b);
  }
  if (!validate_canonical_separation(g, dset, cs))
    throw std::logic_error("canonical_separation: constructed separation fails validation");
  return cs;
}

// S is a minimal separator of G[sub] when at least two components of
// sub minus S see every vertex of S.
inline bool is_minimal_separator(const Graph& g, const VertexSet& sub, const VertexSet& s) {
  if (s.empty() || !s.subset_of(sub)) return false;
  int full = 0;
  for (const VertexSet& comp : components(g, sub - s))
    if (s.subset_of(open_neighborhood(g, comp))) ++full;
  return full >= 2;
}

// All minimal separators of G[sub]: component neighborhoods close to each
// vertex, closed under the substitution step that swaps a separator vertex
// for its neighborhood. Output is deduplicated and ordered lexicographically.
inline std::vector<VertexSet> all_minimal_separators(const Graph& g, const VertexSet& sub,
                                                     std::size_t cap = 100000) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> work;
  auto push = [&](const VertexSet& s) {
    if (s.empty()) return;
    if (!seen.insert(s).second) return;
    if (seen.size() > cap) throw limit_error("all_minimal_separators: separator cap exceeded");
    work.push_back(s);
  };
  for (int v = sub.min(); v >= 0; v = sub.next(v))
    for (const VertexSet& comp : components(g, sub - closed_neighborhood(g, v)))
      push(open_neighborhood(g, comp) & sub);
  for (std::size_t i = 0; i < work.size(); ++i) {
    VertexSet s = work[i];
    for (int x = s.min(); x >= 0; x = s.next(x))
      for (const VertexSet& comp : components(g, (sub - s) - closed_neighborhood(g, x)))
        push(open_neighborhood(g, comp) & sub);
  }
  std::vector<VertexSet> out;
  for (const VertexSet& s : work)
    if (is_minimal_separator(g, sub, s)) out.push_back(s);
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
  return out;
}

// True iff G[sub] is connected and every clique that disconnects it
// contains pin. Any clique cutset avoiding pin would contain a minimal
// separator avoiding pin, and a subset of a clique is a clique, so it is
// enough to look at clique minimal separators.
inline bool clique_cutsets_pinned(const Graph& g, const VertexSet& sub, int pin) {
  if (!is_connected(g, sub)) return false;
  for (const VertexSet& s : all_minimal_separators(g, sub))
    if (!s.contains(pin) && is_clique(g, s)) return false;
  return true;
}

// The central bag around b, with the cliques realizing it and the parts it
// cuts off. cuts holds the canonical separations of the maximal cliques
// whose far side is inclusion-maximal; beta is everything no such clique
// separates from b; outside[i] is a component of dset minus beta and
// attachments[i] its neighborhood, always a clique inside beta.
struct CentralBag {
  VertexSet beta;
  std::vector<CanonicalSeparation> cuts;
  std::vector<VertexSet> outside;
  std::vector<VertexSet> attachments;
};

inline CentralBag central_bag(const Graph& g, const VertexSet& dset, int b) {
  if (!dset.contains(b)) throw std::invalid_argument("central_bag: anchor outside the graph");
  if (!is_connected(g, dset)) throw std::invalid_argument("central_bag: graph must be connected");
  std::vector<VertexSet> cliques = enumerate_maximal_cliques(g, dset);
  std::vector<CanonicalSeparation> all;
  all.reserve(cliques.size());
  for (const VertexSet& k : cliques) all.push_back(canonical_separation(g, dset, b, k));

  CentralBag bag;
  VertexSet far(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j)
      if (all[i].sep.a != all[j].sep.a && all[i].sep.a.subset_of(all[j].sep.a)) maximal = false;
    if (!maximal) continue;
    far |= all[i].sep.a;
    bag.cuts.push_back(all[i]);
  }
  bag.beta = dset - far;

  if (!bag.beta.contains(b)) throw std::logic_error("central_bag: anchor fell out of the bag");
  for (const CanonicalSeparation& x : bag.cuts)
    for (const CanonicalSeparation& y : bag.cuts)
      if (x.sep.c.intersects(y.sep.a))
        throw std::logic_error("central_bag: boundary meets another cut's far side");
  for (const VertexSet& comp : components(g, dset - bag.beta)) {
    VertexSet att = open_neighborhood(g, comp) & dset;
    if (!att.subset_of(bag.beta))
      throw std::logic_error("central_bag: outside component attaches outside the bag");
    if (!is_clique(g, att))
      throw std::logic_error("central_bag: outside component attachment is not a clique");
    bool covered = false;
    for (const CanonicalSeparation& x : bag.cuts)
      if (comp.subset_of(x.sep.a)) {
        covered = true;
        break;
      }
    if (!covered) throw std::logic_error("central_bag: outside component escapes every cut");
    bag.outside.push_back(comp);
    bag.attachments.push_back(att);
  }
  if (!clique_cutsets_pinned(g, bag.beta, b))
    throw std::logic_error("central_bag: bag has a clique cutset avoiding the anchor");
  return bag;
}

}  // namespace ehk
