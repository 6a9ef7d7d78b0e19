#pragma once

#include "spp/core.hpp"

namespace spp {

enum class Scheme { K, L, K2, K3 };

struct NormalizedPair {
  u64 n = 0;
  double x = 0;  // normalized sum coordinate
  double y = 0;  // normalized product coordinate
  Scheme scheme = Scheme::K;
};

// All four schemes map the coordinate range [2n-1, n(n+1)/2] onto [1,2]
// (exactly for K, K2, K3; L is the uncorrected log).  n >= 3 throughout.

// log_n(x) + m_n*x + b_n, the affine-corrected log with both endpoints pinned:
//   m_n = log_n((4n-2)/(n+1)) / C(n-1,2)
//   b_n = (n^2-7n+4)/(n^2-3n+2)
//       + [(2n-1)*log_n(C(n+1,2)) - C(n+1,2)*log_n(2n-1)] / C(n-1,2)
double norm_K(u64 n, double x);

// Plain log_n(x).
double norm_L(u64 n, double x);

// log_n((2x-3n)/(1-2/n)); domain x > 3n/2 (every legal coordinate qualifies).
double norm_K2(u64 n, double x);

// log(n(n+1)x / (2(2n-1)^2)) / log(n(n+1)/(4n-2)).
double norm_K3(u64 n, double x);

double norm_value(Scheme s, u64 n, double x);

NormalizedPair nspp_point(const SppTriple& t, Scheme s);

}  // namespace spp
