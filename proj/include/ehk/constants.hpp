#pragma once

// Pinned constants for the separator recursion. eps is the fraction of
// neighborhoods a local cut must kill, gamma the per-round shrink rate
// that follows from it, c the clique budget added per round, and d the
// resulting slope of the kappa-versus-log-n guarantee. eps, gamma, and c
// are exact; d is transcendental and is carried as a long double with
// base-2 logarithms throughout.

#include <cmath>

#include "ehk/rational.hpp"

namespace ehk {

struct PipelineConstants {
  Rational eps;    // 1 / (4 * 17^6 * 48 * 192)
  Rational gamma;  // eps * (1 - 4*eps) / 2
  long long c;     // 96^2 * 4 * 17^6 + 4
  long double d;   // -c / log2(1 - gamma)

  // Separator budget for an n-vertex instance: d * log2(n).
  long double ablogn_budget(int n) const {
    if (n < 2) return 0.0L;
    return d * std::log2(static_cast<long double>(n));
  }
};

inline const PipelineConstants& pipeline_constants() {
  static const PipelineConstants pc = [] {
    PipelineConstants r;
    const long long p17 = 24137569;  // 17^6
    const long long den = 4LL * 48LL * 192LL * p17;
    r.eps = Rational(1, den);
    r.gamma = (Rational(1) - Rational(4, den)) * r.eps * Rational(1, 2);
    r.c = 96LL * 96LL * 4LL * p17 + 4;
    long double g = r.gamma.to_long_double();
    r.d = -static_cast<long double>(r.c) * std::log(2.0L) / std::log1p(-g);
    return r;
  }();
  return pc;
}

}  // namespace ehk
