#pragma once

// Separators between two non-adjacent vertices when the first one has a
// hub-free neighborhood. The main routine shrinks the neighborhood of `a`
// round by round: the attachment of the b-side component splits, behind a
// two-clique cut, into three anticomplete blocks; each round then either
// cuts behind a dangerous center, globalizes a separated-triple census, or
// peels a clique, and an exact branch-and-bound clique-cover separator
// stands in when no structural route applies. Every returned separator is
// re-verified against the original graph.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehk/bitset.hpp"
#include "ehk/chordal.hpp"
#include "ehk/constants.hpp"
#include "ehk/dangerous.hpp"
#include "ehk/detect.hpp"
#include "ehk/exact.hpp"
#include "ehk/graph.hpp"
#include "ehk/rational.hpp"
#include "ehk/triples.hpp"

namespace ehk {

// The hub-free requirement on the first endpoint failed or could not be
// certified within the detector budget.
struct hub_precondition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Separator assembled from whole cliques. `exact` marks a completed
// branch-and-bound: the clique count is then the true minimum.
struct CliqueSeparatorResult {
  std::vector<VertexSet> cliques;
  VertexSet z;
  bool exact = false;
  long long nodes = 0;
};

namespace detail {

inline int ceil_to_int(const Rational& r) {
  auto q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() > 0) q += 1;
  return int(q);
}

// Depth-bounded search for a separator made of `cand` cliques: branch on
// the cliques meeting one surviving shortest path, so every chosen clique
// is justified by a path it blocks.
struct CliqueCutSearch {
  const Graph& g;
  int a, b;
  const std::vector<VertexSet>& cand;
  std::vector<std::vector<int>> lists;  // vertex -> candidates through it
  long long nodes = 0;
  long long budget = 0;
  bool truncated = false;

  CliqueCutSearch(const Graph& g_, int a_, int b_, const std::vector<VertexSet>& cand_,
                  long long budget_)
      : g(g_), a(a_), b(b_), cand(cand_), lists(g_.size()), budget(budget_) {
    for (int i = 0; i < int(cand.size()); ++i) {
      auto vs = cand[i].to_vector();
      for (int v : vs) lists[v].push_back(i);
    }
  }

  // Interior of one shortest a-b path avoiding z, or nullopt if separated.
  std::optional<std::vector<int>> path_interior(const VertexSet& z) const {
    std::vector<int> parent(g.size(), -2);
    std::vector<int> order{a};
    parent[a] = a;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      auto nb = g.neighbors(v).to_vector();
      for (int w : nb) {
        if (w == b) {
          std::vector<int> interior;
          for (int x = v; x != a; x = parent[x]) interior.push_back(x);
          std::reverse(interior.begin(), interior.end());
          return interior;
        }
        if (parent[w] != -2 || z.contains(w)) continue;
        parent[w] = v;
        order.push_back(w);
      }
    }
    return std::nullopt;
  }

  bool extend(std::vector<char>& used, std::vector<int>& chosen, const VertexSet& z, int depth,
              std::vector<int>* out) {
    if (nodes++ >= budget) {
      truncated = true;
      return false;
    }
    auto interior = path_interior(z);
    if (!interior) {
      *out = chosen;
      return true;
    }
    if (depth == 0) return false;
    std::vector<int> options;
    for (int v : *interior)
      for (int ci : lists[v])
        if (!used[ci]) options.push_back(ci);
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (int ci : options) {
      used[ci] = 1;
      chosen.push_back(ci);
      if (extend(used, chosen, z | cand[ci], depth - 1, out)) return true;
      chosen.pop_back();
      used[ci] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Minimum number of cliques whose union separates a from b, by iterative
// deepening over the maximal cliques avoiding both ends. Restricting to
// maximal cliques loses nothing: any clique of a separator can be grown to
// a maximal one without touching a or b, and the union only gains vertices.
inline CliqueSeparatorResult min_clique_cover_separator(const Graph& g, int a, int b,
                                                        long long node_budget = 2'000'000) {
  const int n = g.size();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw std::invalid_argument("min_clique_cover_separator: need two distinct vertices");
  if (g.adjacent(a, b))
    throw std::invalid_argument("min_clique_cover_separator: adjacent ends have no separator");

  CliqueSeparatorResult res;
  res.z = VertexSet(n);

  // Upper bound: cover the smaller endpoint neighborhood by cliques; either
  // neighborhood separates because the ends are non-adjacent.
  CliqueCoverSet ca = clique_cover(g, g.neighbors(a));
  CliqueCoverSet cb = clique_cover(g, g.neighbors(b));
  const CliqueCoverSet& bound = cb.size() < ca.size() ? cb : ca;

  VertexSet ends = VertexSet::of(n, {a, b});
  std::vector<VertexSet> cand = enumerate_maximal_cliques(g, g.vertices() - ends);
  detail::CliqueCutSearch search(g, a, b, cand, node_budget);
  const int ub = bound.size();
  for (int k = 0; k <= ub; ++k) {
    std::vector<char> used(cand.size(), 0);
    std::vector<int> chosen;
    std::vector<int> out;
    if (search.extend(used, chosen, VertexSet(n), k, &out)) {
      for (int ci : out) {
        res.cliques.push_back(cand[ci]);
        res.z |= cand[ci];
      }
      res.exact = !search.truncated;
      res.nodes = search.nodes;
      return res;
    }
    if (search.truncated) break;
  }
  // Only reachable when the budget truncated the search: fall back to the
  // neighborhood cover, which always separates.
  for (const auto& k : bound.cliques) {
    res.cliques.push_back(k);
    res.z |= k;
  }
  res.exact = false;
  res.nodes = search.nodes;
  return res;
}

// Outcome of the hub-free separation loop. Once `verified` is set, `z`
// provably separates the two ends in the input graph; `cover` partitions
// `z` into cliques and `kappa` is its size. `soft_budget` is the constant
// times log n target the pipeline aims for; staying under it is reported,
// never assumed.
struct SeparatorReport {
  VertexSet z;
  CliqueCoverSet cover;
  int kappa = 0;
  bool verified = false;
  int fallbacks = 0;
  int rounds = 0;
  std::vector<std::string> trace;
  long double soft_budget = 0;
  bool within_budget = true;
};

inline SeparatorReport ab_separator_hubfree(const Graph& g, int a, int b,
                                            std::uint64_t seed = 1) {
  const int n = g.size();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw std::invalid_argument("ab_separator_hubfree: need two distinct vertices");
  if (g.adjacent(a, b))
    throw std::invalid_argument("ab_separator_hubfree: adjacent ends cannot be separated");

  DetectLimits hub_limits;
  hub_limits.certify_n = hub_limits.hard_n;
  HubSet hs;
  try {
    hs = hubs(g, hub_limits);
  } catch (const limit_error&) {
    throw hub_precondition("ab_separator_hubfree: graph too large to certify hubs");
  }
  if (!hs.certified)
    throw hub_precondition("ab_separator_hubfree: hub detection exceeded its budget");
  if (g.neighbors(a).intersects(hs.hubs))
    throw hub_precondition("ab_separator_hubfree: first endpoint neighbors a hub");

  SeparatorReport rep;
  rep.z = VertexSet(n);
  rep.soft_budget = pipeline_constants().ablogn_budget(n);
  if (!same_component(g, g.vertices(), a, b)) {
    rep.verified = true;
    return rep;
  }

  DetectLimits census_limits;
  census_limits.certify_n = census_limits.hard_n;
  census_limits.node_budget = 400'000;
  HoleEnumLimits hole_limits;
  hole_limits.node_budget = 2'000'000;

  const Rational eps_pipeline = pipeline_constants().eps;
  const Rational delta_dangerous(1, 1734);
  const Rational delta_census(1, 54);
  const Rational eps_dangerous = delta_dangerous / Rational(8);

  VertexSet cur = g.vertices();
  VertexSet zt(n);
  std::vector<VertexSet> pieces;
  bool fallback_route = false;

  for (int round = 0;; ++round) {
    if (round > 2 * n + 1) throw std::logic_error("ab_separator_hubfree: no progress");
    rep.rounds = round + 1;

    VertexSet rest_region = (cur - zt) - closed_neighborhood(g, a);
    if (!rest_region.contains(b)) throw std::logic_error("ab_separator_hubfree: lost the target");
    VertexSet dset = component_of(g, rest_region, b);
    VertexSet xset = (g.neighbors(a) & cur & open_neighborhood(g, dset)) - zt;
    cur = dset | xset;
    cur.add(a);
    cur.add(b);

    if (xset.count() <= 1) {
      if (!xset.empty()) {
        pieces.push_back(xset);
        zt |= xset;
      }
      rep.trace.push_back("round " + std::to_string(round) + ": attachment " +
                          std::to_string(xset.count()) + ", closing");
      break;
    }

    // Purity preprocessing: when a hole through both ends survives inside
    // the component plus the attachment, retreat to a large pure subset if
    // one exists; the dropped vertices come back in later rounds.
    VertexSet xwork = xset;
    std::string note;
    try {
      Detection<HoleWitness> pc = purity_check(g, dset, xset, a, b, hole_limits);
      if (pc.found()) {
        Rational target = (Rational(1) - Rational(4) * eps_pipeline) * Rational(xset.count()) /
                          Rational(2);
        int min_size = std::max(1, detail::ceil_to_int(target));
        std::optional<VertexSet> pure =
            pure_subset(g, dset, xset, a, b, min_size, hole_limits);
        if (pure) {
          xwork = *pure;
          note = " pure-subset=" + std::to_string(xwork.count());
        } else {
          note = " impure-kept";
        }
      } else if (!pc.certified) {
        note = " purity-unknown";
      }
    } catch (const limit_error&) {
      note = " purity-oversized";
    }

    VertexSet s_iter(n);

    // The target's attachment neighbors form the first piece; in a without
    // four-holes graph they are one clique.
    VertexSet zp = g.neighbors(b) & xwork;
    if (!zp.empty()) {
      if (is_clique(g, zp)) {
        pieces.push_back(zp);
      } else {
        CliqueCoverSet zc = clique_cover(g, zp);
        for (const auto& k : zc.cliques) pieces.push_back(k);
        note += " target-side-not-clique";
      }
      s_iter |= zp;
    }

    VertexSet rest = xwork - zp;
    bool routed = false;

    if (rest.count() >= 3) {
      int omega = 1;
      for (const auto& k : enumerate_maximal_cliques(g, rest))
        omega = std::max(omega, k.count());
      auto [subx, mapx] = induced_subgraph(g, rest);
      Rational eps_part(std::max<long long>(omega, zp.count()) + 1, xwork.count());
      try {
        ChordalPartition cp = chordal_partition(subx, xwork.count(), eps_part);
        std::array<VertexSet, 3> parts{VertexSet(n), VertexSet(n), VertexSet(n)};
        for (int i = 0; i < 3; ++i) {
          auto got = cp.parts[i].to_vector();
          for (int v : got) parts[i].add(mapx[v]);
        }
        const int t = cp.target;

        // Dangerous census: a center is over the line when its confirmed
        // triples reach delta times the squared size of the partitioned set.
        const Rational threshold = delta_dangerous * Rational(9LL * t * t);
        int best_center = -1;
        long long unknowns = 0;
        for (int j = 0; j < 3 && best_center < 0; ++j) {
          auto centers = parts[j].to_vector();
          auto left = parts[(j + 1) % 3].to_vector();
          auto right = parts[(j + 2) % 3].to_vector();
          for (int c : centers) {
            long long cnt = 0;
            for (int y : left) {
              for (int z : right) {
                Detection<ExtendedNearPrismWitness> dt =
                    dangerous_triple_check(g, a, y, c, z, dset, census_limits);
                if (dt.found())
                  ++cnt;
                else if (!dt.certified)
                  ++unknowns;
              }
            }
            if (Rational(cnt) >= threshold) {
              best_center = c;
              break;
            }
          }
        }
        if (unknowns > 0)
          note += " dangerous-unknown=" + std::to_string(unknowns);

        if (best_center >= 0) {
          // Dangerous regime: hunt for a cut of at most two cliques behind
          // which the target component drops enough attachment vertices.
          VertexSet dnb = dset;
          dnb.remove(b);
          std::vector<VertexSet> cands = enumerate_maximal_cliques(g, dnb);
          long long need =
              std::max(1, detail::ceil_to_int(eps_dangerous * Rational(3LL * t)));
          auto killed_by = [&](const VertexSet& cut) {
            VertexSet db = component_of(g, dset - cut, b);
            VertexSet attach = open_neighborhood(g, db);
            long long killed = 0;
            auto xv = xwork.to_vector();
            for (int x : xv)
              if (!attach.contains(x)) ++killed;
            return killed;
          };
          long long best_killed = -1;
          VertexSet best_cut(n);
          int best_size = 0;
          for (const auto& k : cands) {
            long long killed = killed_by(k);
            if (killed > best_killed) {
              best_killed = killed;
              best_cut = k;
              best_size = 1;
            }
          }
          if (best_killed < need && int(cands.size()) <= 60) {
            for (std::size_t i = 0; i < cands.size(); ++i) {
              for (std::size_t j = i + 1; j < cands.size(); ++j) {
                long long killed = killed_by(cands[i] | cands[j]);
                if (killed > best_killed) {
                  best_killed = killed;
                  best_cut = cands[i] | cands[j];
                  best_size = 2;
                }
              }
            }
          }
          if (best_killed >= need) {
            if (best_size == 1) {
              pieces.push_back(best_cut);
            } else {
              CliqueCoverSet cc = clique_cover(g, best_cut);
              for (const auto& k : cc.cliques) pieces.push_back(k);
            }
            s_iter |= best_cut;
            routed = true;
            note += " dangerous-cut=" + std::to_string(best_size) +
                    " killed=" + std::to_string(best_killed);
          } else {
            fallback_route = true;
            note += " dangerous-unresolved";
          }
        } else {
          // Safe regime: census the separated triples across the blocks and
          // globalize their guards into one cut.
          VertexSet span = dset | parts[0] | parts[1] | parts[2];
          auto [sub2, map2] = induced_subgraph(g, span);
          std::vector<int> pos2(n, -1);
          for (int i = 0; i < int(map2.size()); ++i) pos2[map2[i]] = i;
          std::array<VertexSet, 3> q{VertexSet(sub2.size()), VertexSet(sub2.size()),
                                     VertexSet(sub2.size())};
          for (int i = 0; i < 3; ++i) {
            auto got = parts[i].to_vector();
            for (int v : got) q[i].add(pos2[v]);
          }
          try {
            BreakerCensus bc = breaker_census(sub2, q[0], q[1], q[2], pos2[b], 100000, seed);
            if (bc.is_breaker(delta_census)) {
              LocalGlobalReport lg =
                  local_to_global(sub2, q[0], q[1], q[2], pos2[b], delta_census);
              VertexSet s_m(n);
              auto sv = lg.s.to_vector();
              for (int v : sv) s_m.add(map2[v]);
              for (const auto& k : lg.cover.cliques) {
                VertexSet km(n);
                auto kv = k.to_vector();
                for (int v : kv) km.add(map2[v]);
                pieces.push_back(km);
              }
              s_iter |= s_m;
              routed = true;
              note += " census=" + std::to_string(bc.count) + "/" + std::to_string(bc.total) +
                      " globalized killed=" + std::to_string(lg.killed) + "/" +
                      std::to_string(lg.needed);
            } else {
              note += " census-short=" + std::to_string(bc.count) + "/" +
                      std::to_string(bc.total);
            }
          } catch (const std::exception& e) {
            note += std::string(" census-failed: ") + e.what();
          }
        }
      } catch (const precondition_failed& e) {
        note += std::string(" partition-failed: ") + e.what();
      }
    }

    if (fallback_route) {
      zt |= s_iter;
      cur -= s_iter;
      rep.trace.push_back("round " + std::to_string(round) + ": |X|=" +
                          std::to_string(xset.count()) + note);
      break;
    }

    if (!routed && s_iter.empty()) {
      // Clique escape: peel the largest attachment clique; progress is one
      // clique piece per round in the worst case.
      VertexSet source = rest.empty() ? xwork : rest;
      VertexSet best(n);
      for (const auto& k : enumerate_maximal_cliques(g, source))
        if (k.count() > best.count()) best = k;
      if (best.empty()) throw std::logic_error("ab_separator_hubfree: empty attachment clique");
      pieces.push_back(best);
      s_iter |= best;
      note += " clique-escape=" + std::to_string(best.count());
    }

    if (s_iter.contains(a) || s_iter.contains(b))
      throw std::logic_error("ab_separator_hubfree: cut touches an end");
    zt |= s_iter;
    cur -= s_iter;
    rep.trace.push_back("round " + std::to_string(round) + ": |X|=" +
                        std::to_string(xset.count()) + note);
  }

  if (fallback_route) {
    auto [subf, mapf] = induced_subgraph(g, cur);
    std::vector<int> posf(n, -1);
    for (int i = 0; i < int(mapf.size()); ++i) posf[mapf[i]] = i;
    CliqueSeparatorResult fb = min_clique_cover_separator(subf, posf[a], posf[b]);
    for (const auto& k : fb.cliques) {
      VertexSet km(n);
      auto kv = k.to_vector();
      for (int v : kv) km.add(mapf[v]);
      pieces.push_back(km);
      zt |= km;
    }
    rep.fallbacks += 1;
    rep.trace.push_back(std::string("fallback: exact branch-and-bound separator, minimum ") +
                        (fb.exact ? "proven" : "not proven"));
  }

  // Disjointify the pieces: later pieces shed what earlier ones already
  // cover, so the cover partitions z without growing the count.
  VertexSet seen(n);
  for (const auto& piece : pieces) {
    VertexSet k = piece - seen;
    if (k.empty()) continue;
    rep.cover.cliques.push_back(k);
    seen |= k;
  }
  rep.cover.exact = false;
  if (!verify_clique_cover(g, zt, rep.cover)) {
    rep.cover = clique_cover(g, zt);
    rep.trace.push_back("cover rebuilt");
  }
  rep.z = zt;
  rep.kappa = rep.cover.size();

  if (zt.contains(a) || zt.contains(b))
    throw std::logic_error("ab_separator_hubfree: separator touches an end");
  VertexSet reach = component_of(g, g.vertices() - zt, a);
  if (reach.contains(b)) throw std::logic_error("ab_separator_hubfree: separation failed");
  rep.verified = true;
  rep.within_budget = (long double)rep.kappa <= rep.soft_budget;
  return rep;
}

}  // namespace ehk
