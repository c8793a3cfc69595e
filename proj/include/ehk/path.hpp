#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "ehk/graph.hpp"

namespace ehk {

// Vertex sequence; length is the edge count (size-1). A one-vertex path has
// length 0.
struct Path {
  std::vector<int> v;

  int length() const { return int(v.size()) - 1; }
  int first() const { return v.front(); }
  int last() const { return v.back(); }
  bool empty() const { return v.empty(); }

  VertexSet vertex_set(int universe) const {
    VertexSet s(universe);
    for (int x : v) s.add(x);
    return s;
  }

  // Interior vertices: all but the two ends.
  VertexSet interior(int universe) const {
    VertexSet s(universe);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) s.add(v[i]);
    return s;
  }
};

inline bool is_path_sequence(const Graph& g, const Path& p) {
  if (p.v.empty()) return false;
  VertexSet seen(g.size());
  for (int x : p.v) {
    if (seen.contains(x)) return false;
    seen.add(x);
  }
  for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
    if (!g.adjacent(p.v[i], p.v[i + 1])) return false;
  return true;
}

inline bool is_induced_path(const Graph& g, const Path& p) {
  if (!is_path_sequence(g, p)) return false;
  for (std::size_t i = 0; i < p.v.size(); ++i)
    for (std::size_t j = i + 2; j < p.v.size(); ++j)
      if (g.adjacent(p.v[i], p.v[j])) return false;
  return true;
}

// Removes chords from a walk-free path until induced: while some p[i]p[j]
// with j > i+1 is an edge, splice out the detour. Terminates since the
// sequence strictly shrinks.
inline Path shortcut_to_induced(const Graph& g, Path p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; !changed && i + 2 < p.v.size(); ++i) {
      for (std::size_t j = p.v.size() - 1; j > i + 1; --j) {
        if (g.adjacent(p.v[i], p.v[j])) {
          std::vector<int> out(p.v.begin(), p.v.begin() + long(i) + 1);
          out.insert(out.end(), p.v.begin() + long(j), p.v.end());
          p.v = std::move(out);
          changed = true;
          break;
        }
      }
    }
  }
  return p;
}

// Shortest a-b path with all vertices inside `allowed` (ends must lie in
// it too), then chord-shortcut. BFS prefers smaller ids, so the result is
// deterministic.
inline std::optional<Path> find_induced_path(const Graph& g, int a, int b,
                                             const VertexSet& allowed) {
  if (!allowed.contains(a) || !allowed.contains(b)) return std::nullopt;
  std::vector<int> parent(g.size(), -2);
  parent[a] = -1;
  std::queue<int> q;
  q.push(a);
  while (!q.empty() && parent[b] == -2) {
    int u = q.front();
    q.pop();
    VertexSet nb = g.neighbors(u) & allowed;
    for (int w = nb.min(); w >= 0; w = nb.next(w)) {
      if (parent[w] != -2) continue;
      parent[w] = u;
      q.push(w);
    }
  }
  if (parent[b] == -2) return std::nullopt;
  Path p;
  for (int x = b; x != -1; x = parent[x]) p.v.push_back(x);
  std::reverse(p.v.begin(), p.v.end());
  return shortcut_to_induced(g, p);
}

inline std::optional<Path> find_induced_path_avoiding(const Graph& g, int a, int b,
                                                      const VertexSet& forbidden) {
  VertexSet allowed = VertexSet::full(g.size());
  allowed -= forbidden;
  allowed.add(a);
  allowed.add(b);
  return find_induced_path(g, a, b, allowed);
}

// Vertex of `a` closest to the y-end along p; p must contain y as an end.
// Returns -1 when p misses `a` entirely.
inline int last_vertex_along(const Path& p, int y, const VertexSet& a) {
  if (p.v.empty()) throw std::invalid_argument("empty path");
  if (p.v.front() == y) {
    for (int x : p.v)
      if (a.contains(x)) return x;
    return -1;
  }
  if (p.v.back() != y) throw std::invalid_argument("y is not an end of the path");
  for (auto it = p.v.rbegin(); it != p.v.rend(); ++it)
    if (a.contains(*it)) return *it;
  return -1;
}

// Enumerates induced a-b paths with all vertices inside `allowed`, calling
// visit(path) for each; visit returning false stops the walk. The budget
// counts DFS extensions and is shared across calls via the reference;
// returns false iff the budget ran out (enumeration incomplete).
// Deterministic: extensions try smaller ids first.
inline bool enumerate_induced_paths(const Graph& g, int a, int b,
                                    const VertexSet& allowed, std::int64_t& budget,
                                    const std::function<bool(const Path&)>& visit) {
  if (!allowed.contains(a) || !allowed.contains(b)) return true;
  if (a == b) {
    Path p;
    p.v = {a};
    visit(p);
    return true;
  }
  Path cur;
  cur.v = {a};
  VertexSet blocked(g.size());  // N[path minus last vertex]
  bool stopped = false;

  std::function<bool(void)> rec = [&]() -> bool {
    int tail = cur.v.back();
    if (--budget < 0) return false;
    VertexSet cand = g.neighbors(tail) & allowed;
    cand -= blocked;
    for (int w = cand.min(); w >= 0 && !stopped; w = cand.next(w)) {
      if (w == b) {
        cur.v.push_back(b);
        if (!visit(cur)) stopped = true;
        cur.v.pop_back();
        continue;
      }
      VertexSet saved = blocked;
      blocked |= g.neighbors(tail);
      blocked.add(tail);
      cur.v.push_back(w);
      bool ok = rec();
      cur.v.pop_back();
      blocked = saved;
      if (!ok) return false;
    }
    return true;
  };
  return rec();
}

inline bool enumerate_induced_paths(const Graph& g, int a, int b,
                                    const VertexSet& allowed, std::int64_t&& budget,
                                    const std::function<bool(const Path&)>& visit) {
  std::int64_t b2 = budget;
  return enumerate_induced_paths(g, a, b, allowed, b2, visit);
}

}  // namespace ehk
