#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehk/bitset.hpp"

namespace ehk {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices {0, ..., n-1}. Immutable after
// construction; derived graphs are built fresh so vertex ids never shift.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (adj_[u].contains(v)) throw std::invalid_argument("duplicate edge");
    adj_[u].add(v);
    adj_[v].add(u);
    ++m_;
  }

  int size() const { return n_; }
  long long edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  VertexSet vertices() const { return VertexSet::full(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
        out.emplace_back(u, v);
    return out;
  }

  Graph without_edge(int u, int v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("edge not present");
    Graph g(n_);
    for (auto [a, b] : edges())
      if (!((a == u && b == v) || (a == v && b == u))) g.add_edge(a, b);
    return g;
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
  }

  // Complement within a vertex subset; ids preserved, outside pairs stay
  // non-adjacent.
  Graph complement_within(const VertexSet& s) const {
    Graph g(n_);
    for (int u = s.min(); u >= 0; u = s.next(u))
      for (int v = s.next(u); v >= 0; v = s.next(v))
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  // Text format: "p <n> <m>" then m lines "e <u> <v>", 0-indexed.
  static Graph parse(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1, seen = 0;
    Graph g(0);
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag == "c") continue;
      if (tag == "p") {
        if (n >= 0) throw parse_error("duplicate p line");
        if (!(ls >> n >> m) || n < 0 || m < 0) throw parse_error("bad p line");
        g = Graph(n);
      } else if (tag == "e") {
        if (n < 0) throw parse_error("e line before p line");
        int u, v;
        if (!(ls >> u >> v)) throw parse_error("bad e line");
        try {
          g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
          throw parse_error(std::string("bad edge: ") + e.what());
        }
        ++seen;
      } else {
        throw parse_error("unknown line tag: " + tag);
      }
    }
    if (n < 0) throw parse_error("missing p line");
    if (seen != m) throw parse_error("edge count mismatch");
    return g;
  }

  static Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
  }

  void write(std::ostream& out) const {
    out << "p " << n_ << " " << m_ << "\n";
    for (auto [u, v] : edges()) out << "e " << u << " " << v << "\n";
  }

  std::string to_text() const {
    std::ostringstream out;
    write(out);
    return out.str();
  }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

inline VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out(g.size());
  for (int v = x.min(); v >= 0; v = x.next(v)) out |= g.neighbors(v);
  out -= x;
  return out;
}

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out = x;
  for (int v = x.min(); v >= 0; v = x.next(v)) out |= g.neighbors(v);
  return out;
}

inline VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet out = g.neighbors(v);
  out.add(v);
  return out;
}

// Neighbors of v inside s (v need not lie in s).
inline VertexSet neighbors_in(const Graph& g, int v, const VertexSet& s) {
  return g.neighbors(v) & s;
}

// Induced subgraph on s. Vertices are renumbered 0..|s|-1 in ascending id
// order; map[i] gives the original id of the new vertex i.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           const VertexSet& s) {
  std::vector<int> map = s.to_vector();
  std::vector<int> back(g.size(), -1);
  for (int i = 0; i < int(map.size()); ++i) back[map[i]] = i;
  Graph h(int(map.size()));
  for (int i = 0; i < int(map.size()); ++i) {
    VertexSet nb = g.neighbors(map[i]) & s;
    for (int v = nb.next(map[i]); v >= 0; v = nb.next(v))
      h.add_edge(i, back[v]);
  }
  return {std::move(h), std::move(map)};
}

// Connected components of G[s], ordered by smallest member id.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    int start = left.min();
    VertexSet comp(g.size());
    std::vector<int> stack{start};
    comp.add(start);
    left.remove(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(u) & left;
      for (int w = nb.min(); w >= 0; w = nb.next(w)) {
        comp.add(w);
        left.remove(w);
        stack.push_back(w);
      }
    }
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return components(g, s).size() == 1;
}

inline bool same_component(const Graph& g, const VertexSet& s, int a, int b) {
  for (const auto& c : components(g, s))
    if (c.contains(a)) return c.contains(b);
  return false;
}

inline VertexSet component_of(const Graph& g, const VertexSet& s, int v) {
  for (const auto& c : components(g, s))
    if (c.contains(v)) return c;
  throw std::invalid_argument("vertex not in set");
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (int u = s.min(); u >= 0; u = s.next(u))
    for (int v = s.next(u); v >= 0; v = s.next(v))
      if (!g.adjacent(u, v)) return false;
  return true;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  for (int u = s.min(); u >= 0; u = s.next(u))
    if (g.neighbors(u).intersects(s)) return false;
  return true;
}

// No edges between a and b (shared vertices are fine for empty intersection
// checks; callers pass disjoint sets).
inline bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v = a.min(); v >= 0; v = a.next(v))
    if (g.neighbors(v).intersects(b)) return false;
  return true;
}

inline bool complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v = a.min(); v >= 0; v = a.next(v)) {
    VertexSet need = b;
    need.remove(v);
    if (!need.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

inline bool complete_to(const Graph& g, int v, const VertexSet& b) {
  VertexSet need = b;
  if (need.contains(v)) need.remove(v);
  return need.subset_of(g.neighbors(v));
}

}  // namespace ehk
