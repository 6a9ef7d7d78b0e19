#pragma once

#include <gmpxx.h>

#include "spp/core.hpp"
#include "spp/normalize.hpp"

namespace spp {

// (2n-1, n(n+1)/2): the elementary range both pair sizes live in.
std::pair<u64, u64> easy_bounds(u64 n);

// Sidon exclusion: |AA| <= 3n-4 forces A Sidon, so any (i,j) with
// j <= 3n-4 and i < n(n+1)/2 is unreachable by integer sets.
bool sez_excludes(u64 n, u64 i, u64 j);

// (n^2-3n+4)^2/4 - (n-2)^2(n-1)/2, the counting bound on |SPP(n)|.
u64 spp_count_upper(u64 n);

// sumSize^2 * prodSize * (1 + floor(log2 n)) >= n^4, exact integers.
bool solymosi_holds(const SppTriple& t);

// 2x + y <= 4 in K-scheme coordinates (the asymptotically forbidden corner).
bool in_solymosi_void(const NormalizedPair& p);

// Vacuously true unless prodSize < C*n; otherwise sumSize >= 36^(-C) * n^2,
// decided exactly (for C = p/q: sumSize^q * 36^p >= n^(2q)).
bool chang_bound_holds(const SppTriple& t, const mpq_class& C);

// The sum-times-product-squared conjecture exists in two readings: the
// printed constant (2n+1)^2 contradicts its own stated equality case
// (geometric progressions give exactly n(n+1)/2 * (2n-1)^2), so both are
// implemented and reported side by side, never silently merged.
enum class SvVariant { AsPrinted, GpConsistent };
bool conjecture_sv_holds(const SppTriple& t, SvVariant v = SvVariant::AsPrinted);
bool conjecture_sv_equality(const SppTriple& t, SvVariant v);

// Certified smallest integer >= n^phi, phi = (1+sqrt 5)/2 (n >= 2; n^phi is
// irrational, so this equals floor(n^phi)+1 and the comparison below is safe).
u64 golden_threshold(u64 n);

// sumSize + prodSize >= n^phi, decided by directed-rounding interval
// evaluation with escalating precision.  n >= 2.
bool golden_conjecture_holds(const SppTriple& t);

// 2^floor((3n-4)/2): conjectured cap on the smallest-maximum witness.
u64 witness_max_bound(u64 n);

struct RegionVerdict {
  SppTriple pair;
  bool excludedBySEZ = false;
  bool inSolymosiVoid = false;
  bool svAsPrinted = false;    // conjecture with the printed (2n+1)^2 factor
  bool svGpConsistent = false; // conjecture with the (2n-1)^2 factor
  bool satisfiesGoldenConjecture = false;
};

// n >= 3 (the void test needs K coordinates).
RegionVerdict region_verdict(const SppTriple& t);

}  // namespace spp
