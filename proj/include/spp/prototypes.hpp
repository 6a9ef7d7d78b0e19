#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spp/core.hpp"

namespace spp {

// Pairs (i, j) with 1 <= i <= j <= n, listed row-major:
// (1,1),(1,2),...,(1,n),(2,2),...,(n,n).
inline constexpr u32 pair_count(u32 n) { return n * (n + 1) / 2; }
inline constexpr u32 pair_ordinal(u32 n, u32 i, u32 j) {
  return (i - 1) * (2 * n - i + 2) / 2 + (j - i);
}

// A weak ordering of the pairs that is strictly monotone in both coordinates:
// rank(i,j) < rank(i+1,j) and rank(i,j) < rank(i,j+1) wherever defined, ranks
// contiguous from 0.  Models the comparison table of a_i + a_j over a tuple
// a_1 < ... < a_n (equal rank = tied sum).
struct Prototype {
  u32 n = 0;
  std::vector<u32> rank;  // indexed by pair_ordinal(n, i, j)
  u32 numClasses = 0;

  bool operator==(const Prototype&) const = default;
  auto operator<=>(const Prototype&) const = default;

  bool valid() const;

  // Rank rows by first index, e.g. "0 1 2;2 3;4" for the n=3 progression
  // {1,2,3} (the tie is 1+3 = 2+2).
  std::string to_text() const;
  static Prototype from_text(const std::string& text);
};

// Streams every prototype of order n exactly once; returns the count.
// Counts for n = 1..6: 1, 1, 3, 39, 2905, 1538369.
u64 enumerate_prototypes(u32 n, const std::function<void(const Prototype&)>& sink);

// The weak ordering induced by a_i + a_j resp. a_i * a_j over A's elements.
Prototype addition_type(const PosIntSet& A);
Prototype multiplication_type(const PosIntSet& A);

// Decides whether some real tuple a_1 < ... < a_n induces p, and returns one
// (rational, with a_1 = 0) when it exists.  Translation invariance pins
// a_1 = 0; every remaining constraint is then linear homogeneous, so positive
// scale invariance lets each strict gap be demanded as >= 1.  Ties become
// exact equalities (removed by Gaussian elimination), consecutive rank
// classes contribute one representative gap each, and feasibility is decided
// by Fourier-Motzkin elimination over exact rationals.
std::optional<std::vector<mpq_class>> realize(const Prototype& p);
bool is_realizable(const Prototype& p);

// Number of realizable prototypes of order n: 1, 1, 3, 25, 477 for n = 1..5.
u64 count_types(u32 n);

}  // namespace spp
