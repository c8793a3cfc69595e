#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehk {

// Set of vertex ids over a fixed universe {0, ..., n-1}.
// Ids are stable: subsets taken from a graph keep the parent's ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("negative universe");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int i = 0; i < universe; ++i) s.add(i);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    check(v);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }

  void add(int v) {
    check(v);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    check(v);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }

  // Smallest id in the set, -1 if empty.
  int min() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  // Smallest id strictly greater than v, -1 if none.
  int next(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    std::size_t i = std::size_t(start) >> 6;
    std::uint64_t word = w_[i] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (word) return int(i * 64 + std::countr_zero(word));
      if (++i >= w_.size()) return -1;
      word = w_[i];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = min(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    match(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    match(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    match(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    match(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    match(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && w_ == o.w_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Lexicographic on the sorted id sequence; total order used for tie-breaks.
  bool lex_less(const VertexSet& o) const {
    int a = min(), b = o.min();
    while (a >= 0 && b >= 0) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return b >= 0;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto x : w_) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v = min(); v >= 0; v = next(v)) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of universe");
  }
  void match(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("universe mismatch");
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ehk
