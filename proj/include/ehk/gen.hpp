#pragma once

// Seeded graph generators: random graphs, repaired even-hole-free graphs,
// chordal graphs from elimination orderings, named structures built to
// definition, and grids of cliques. Every generator is a pure function of
// its arguments; the same inputs reproduce the same edge set bit for bit.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehk/chordal.hpp"
#include "ehk/detect.hpp"
#include "ehk/graph.hpp"
#include "ehk/holes.hpp"
#include "ehk/rng.hpp"
#include "ehk/witness.hpp"

namespace ehk {

struct invalid_params : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw invalid_params("gen_random_graph: negative size");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

// Even-hole-free sample: draw G(n, p), then repair by deleting one
// uniformly chosen edge of some even hole until none remains. Each round
// removes an edge, so the loop terminates; the final graph carries a
// certificate in the form of an exhaustive no-even-hole search. When the
// bounded search cannot certify (it happens only far above typical
// densities), a uniformly random edge is dropped instead, which keeps the
// procedure total.
inline Graph gen_random_ehf(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > 60) throw invalid_params("gen_random_ehf: size must be in [0, 60]");
  Rng rng(seed);
  Graph g = gen_random_graph(n, p, rng.raw());
  for (;;) {
    auto d = find_even_hole(g);
    if (d.found()) {
      const auto& cyc = d.witness->cycle;
      int k = rng.below(int(cyc.size()));
      g = g.without_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
      continue;
    }
    if (d.certified) break;
    auto edges = g.edges();
    auto [u, v] = edges[rng.below(int(edges.size()))];
    g = g.without_edge(u, v);
  }
  return g;
}

// Chordal sample: draw G(n, density), pick a random elimination order, and
// play the elimination game (complete each vertex's not-yet-eliminated
// neighborhood). The result has that order as a perfect elimination
// ordering; an independent MCS check guards the construction.
inline Graph gen_random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 0) throw invalid_params("gen_random_chordal: negative size");
  Rng rng(seed);
  Graph g = gen_random_graph(n, density, rng.raw());
  std::vector<int> elim(n);
  for (int i = 0; i < n; ++i) elim[i] = i;
  rng.shuffle(elim);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    std::vector<int> later;
    VertexSet nb = g.neighbors(v);
    for (int u = nb.min(); u >= 0; u = nb.next(u))
      if (pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) g.add_edge(later[a], later[b]);
  }
  if (!is_chordal(g)) throw std::logic_error("gen_random_chordal: elimination game failed");
  return g;
}

namespace detail {

inline void require(bool ok, const char* msg) {
  if (!ok) throw invalid_params(msg);
}

// Distinct-vertex path layout helper: returns the vertex ids of a path of
// `len` edges from `from` to `to`, allocating interior ids from `next`.
inline std::vector<int> lay_path(Graph& g, int from, int to, int len, int& next) {
  std::vector<int> p{from};
  int prev = from;
  for (int i = 1; i < len; ++i) {
    g.add_edge(prev, next);
    p.push_back(next);
    prev = next++;
  }
  g.add_edge(prev, to);
  p.push_back(to);
  return p;
}

}  // namespace detail

// Hole: a chordless cycle of the requested length.
inline Graph gen_hole(int len) {
  detail::require(len >= 4, "hole: length must be at least 4");
  Graph g(len);
  for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
  return g;
}

// Theta: ends 0 and 1 joined by three internally disjoint paths of the
// given edge lengths, interiors pairwise anticomplete. Lengths (2,2,2)
// yield exactly the complete bipartite graph on 2+3 vertices.
inline Graph gen_theta(const std::vector<int>& lengths) {
  detail::require(lengths.size() == 3, "theta: exactly three path lengths");
  for (int l : lengths) detail::require(l >= 2, "theta: every path needs length at least 2");
  int n = 2 + (lengths[0] - 1) + (lengths[1] - 1) + (lengths[2] - 1);
  Graph g(n);
  int next = 2;
  ThetaWitness w;
  w.a = 0;
  w.b = 1;
  w.p1 = Path{detail::lay_path(g, 0, 1, lengths[0], next)};
  w.p2 = Path{detail::lay_path(g, 0, 1, lengths[1], next)};
  w.p3 = Path{detail::lay_path(g, 0, 1, lengths[2], next)};
  if (!validate_theta(g, w)) throw std::logic_error("gen_theta: construction failed");
  return g;
}

// Prism: triangles {0,1,2} and {3,4,5} with corner-to-corner paths of the
// given edge lengths. All lengths 1 yields the triangular prism.
inline Graph gen_prism(const std::vector<int>& lengths) {
  detail::require(lengths.size() == 3, "prism: exactly three path lengths");
  for (int l : lengths) detail::require(l >= 1, "prism: every path needs length at least 1");
  int n = 6 + (lengths[0] - 1) + (lengths[1] - 1) + (lengths[2] - 1);
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  int next = 6;
  PrismWitness w;
  w.a_corner = {0, 1, 2};
  w.b_corner = {3, 4, 5};
  for (int i = 0; i < 3; ++i) w.paths[i] = Path{detail::lay_path(g, i, 3 + i, lengths[i], next)};
  if (!validate_prism(g, w)) throw std::logic_error("gen_prism: construction failed");
  return g;
}

// Near-prism with a shared corner 0: triangles {0,1,2} and {0,3,4}, with
// paths 1..3 and 2..4 of the given edge lengths (both at least 2).
inline Graph gen_near_prism_shared(const std::vector<int>& lengths) {
  detail::require(lengths.size() == 2, "near-prism: two path lengths beside the shared corner");
  for (int l : lengths)
    detail::require(l >= 2, "near-prism: paths beside a shared corner need length at least 2");
  int n = 5 + (lengths[0] - 1) + (lengths[1] - 1);
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  int next = 5;
  PrismWitness w;
  w.a_corner = {0, 1, 2};
  w.b_corner = {0, 3, 4};
  w.paths[0] = Path{{0}};
  w.paths[1] = Path{detail::lay_path(g, 1, 3, lengths[0], next)};
  w.paths[2] = Path{detail::lay_path(g, 2, 4, lengths[1], next)};
  if (!validate_near_prism(g, w, /*require_disjoint=*/false))
    throw std::logic_error("gen_near_prism_shared: construction failed");
  return g;
}

// Pyramid: apex 0, base {1,2,3}, paths of the given edge lengths from the
// apex to each corner; at most one length may be 1.
inline Graph gen_pyramid(const std::vector<int>& lengths) {
  detail::require(lengths.size() == 3, "pyramid: exactly three path lengths");
  int ones = 0;
  for (int l : lengths) {
    detail::require(l >= 1, "pyramid: every path needs length at least 1");
    if (l == 1) ++ones;
  }
  detail::require(ones <= 1, "pyramid: at most one apex-corner path may have length 1");
  int n = 4 + (lengths[0] - 1) + (lengths[1] - 1) + (lengths[2] - 1);
  Graph g(n);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  int next = 4;
  PyramidWitness w;
  w.apex = 0;
  w.base = {1, 2, 3};
  for (int i = 0; i < 3; ++i) w.paths[i] = Path{detail::lay_path(g, 0, 1 + i, lengths[i], next)};
  if (!validate_pyramid(g, w)) throw std::logic_error("gen_pyramid: construction failed");
  return g;
}

// Wheel: a hole of length `rim` plus a center adjacent to `spokes` rim
// vertices spread as evenly as the rim allows.
inline Graph gen_wheel(int rim, int spokes) {
  detail::require(rim >= 4, "wheel: rim must be a hole, length at least 4");
  detail::require(spokes >= 3 && spokes <= rim, "wheel: between 3 and rim spokes");
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) g.add_edge(i, (i + 1) % rim);
  for (int s = 0; s < spokes; ++s) g.add_edge(rim, int(std::int64_t(s) * rim / spokes));
  WheelWitness w;
  for (int i = 0; i < rim; ++i) w.hole.cycle.push_back(i);
  w.center = rim;
  if (!validate_wheel(g, w)) throw std::logic_error("gen_wheel: construction failed");
  return g;
}

// Loaded pyramid: pyramid with apex edge to corner 2 (so that path has
// length 1), side paths of lengths l1, l3 >= 2, and a loading path of
// `load` vertices hooked to the apex-adjacent corner and to the interior
// vertex of path one next to its corner.
inline Graph gen_loaded_pyramid(const std::vector<int>& params) {
  detail::require(params.size() == 3, "loaded pyramid: lengths l1, l3 and loading path size");
  int l1 = params[0], l3 = params[1], load = params[2];
  detail::require(l1 >= 2 && l3 >= 2, "loaded pyramid: side paths need length at least 2");
  detail::require(load >= 1, "loaded pyramid: loading path needs at least one vertex");
  int n = 4 + (l1 - 1) + (l3 - 1) + load;
  Graph g(n);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  int next = 4;
  PyramidWitness pyr;
  pyr.apex = 0;
  pyr.base = {1, 2, 3};
  pyr.paths[0] = Path{detail::lay_path(g, 0, 1, l1, next)};
  pyr.paths[1] = Path{detail::lay_path(g, 0, 2, 1, next)};
  pyr.paths[2] = Path{detail::lay_path(g, 0, 3, l3, next)};
  // Loading path p1..pk: p1 sees corner 2, pk sees the interior neighbor
  // of corner 1 on path one, and nothing else of the pyramid.
  std::vector<int> pv;
  for (int i = 0; i < load; ++i) pv.push_back(next++);
  for (int i = 0; i + 1 < load; ++i) g.add_edge(pv[i], pv[i + 1]);
  g.add_edge(pv.front(), 2);
  int hook = pyr.paths[0].v[pyr.paths[0].v.size() - 2];
  g.add_edge(pv.back(), hook);
  LoadedPyramidWitness w;
  w.pyramid = pyr;
  w.p = Path{pv};
  if (!validate_loaded_pyramid(g, w)) throw std::logic_error("gen_loaded_pyramid: construction failed");
  return g;
}

// Extended near-prism: a prism with side path lengths (l1, l2, l3), l1 and
// l2 at least 2, plus one cross edge between the first interior vertices
// of paths one and two. The cross ends are returned through `cross`.
inline Graph gen_extended_near_prism(const std::vector<int>& lengths,
                                     std::pair<int, int>* cross = nullptr) {
  detail::require(lengths.size() == 3, "extended near-prism: exactly three path lengths");
  detail::require(lengths[0] >= 2 && lengths[1] >= 2,
                  "extended near-prism: the crossed paths need interior vertices");
  detail::require(lengths[2] >= 1, "extended near-prism: third path needs length at least 1");
  Graph g = gen_prism(lengths);
  int a = 6;                   // first interior vertex of path one
  int b = 6 + lengths[0] - 1;  // first interior vertex of path two
  Graph out = g.with_edge(a, b);
  if (cross) *cross = {a, b};
  ExtendedNearPrismWitness w;
  w.cross_a = a;
  w.cross_b = b;
  w.near_prism.a_corner = {0, 1, 2};
  w.near_prism.b_corner = {3, 4, 5};
  int next = 6;
  Graph relay(out.size());
  for (int i = 0; i < 3; ++i)
    w.near_prism.paths[i] = Path{detail::lay_path(relay, i, 3 + i, lengths[i], next)};
  if (!validate_extended_near_prism(out, w))
    throw std::logic_error("gen_extended_near_prism: construction failed");
  return out;
}

// Grid of cliques: an r x c grid of k-cliques, orthogonally adjacent cells
// joined completely. Useful as a dense yet tree-structured stress family.
inline Graph gen_grid_of_cliques(int rows, int cols, int k) {
  detail::require(rows >= 1 && cols >= 1 && k >= 1, "grid of cliques: positive dimensions");
  int n = rows * cols * k;
  Graph g(n);
  auto cell = [&](int r, int c, int i) { return (r * cols + c) * k + i; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(cell(r, c, i), cell(r, c, j));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (r + 1 < rows) g.add_edge(cell(r, c, i), cell(r + 1, c, j));
          if (c + 1 < cols) g.add_edge(cell(r, c, i), cell(r, c + 1, j));
        }
    }
  return g;
}

// Named structures, dispatched by kind string (the CLI speaks these too).
inline Graph gen_named(const std::string& kind, const std::vector<int>& params) {
  if (kind == "hole") {
    detail::require(params.size() == 1, "hole: one length parameter");
    return gen_hole(params[0]);
  }
  if (kind == "theta") return gen_theta(params);
  if (kind == "prism") return gen_prism(params);
  if (kind == "near-prism") return gen_near_prism_shared(params);
  if (kind == "pyramid") return gen_pyramid(params);
  if (kind == "wheel") {
    detail::require(params.size() == 2, "wheel: rim length and spoke count");
    return gen_wheel(params[0], params[1]);
  }
  if (kind == "loaded-pyramid") return gen_loaded_pyramid(params);
  if (kind == "extended-near-prism") return gen_extended_near_prism(params);
  if (kind == "grid-of-cliques") {
    detail::require(params.size() == 3, "grid of cliques: rows, cols, clique size");
    return gen_grid_of_cliques(params[0], params[1], params[2]);
  }
  throw invalid_params("gen_named: unknown kind '" + kind + "'");
}

enum class GenFamily { RandomGraph, RandomEHF, RandomChordal, NamedStructure, GridOfCliques };

// One reproducible recipe: equal specs generate identical edge sets.
struct GenSpec {
  GenFamily family = GenFamily::RandomGraph;
  int n = 0;
  std::uint64_t seed = 0;
  double p = 0.0;                // edge probability / density
  std::string kind;              // NamedStructure dispatch
  std::vector<int> params;       // named-structure and grid parameters
};

inline Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::RandomGraph:
      return gen_random_graph(spec.n, spec.p, spec.seed);
    case GenFamily::RandomEHF:
      return gen_random_ehf(spec.n, spec.p, spec.seed);
    case GenFamily::RandomChordal:
      return gen_random_chordal(spec.n, spec.p, spec.seed);
    case GenFamily::NamedStructure:
      return gen_named(spec.kind, spec.params);
    case GenFamily::GridOfCliques:
      detail::require(spec.params.size() == 3, "grid of cliques: rows, cols, clique size");
      return gen_grid_of_cliques(spec.params[0], spec.params[1], spec.params[2]);
  }
  throw invalid_params("generate: unknown family");
}

}  // namespace ehk
