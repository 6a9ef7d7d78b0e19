#pragma once

#include <set>

#include "spp/algebraic.hpp"
#include "spp/core.hpp"

namespace spp {

// A finite set of positive rationals, strictly increasing.
struct RationalSet {
  std::vector<mpq_class> elems;
};

// The candidate left endpoints for a small-sumset set: a = (i*j - k*l) /
// (k+l-i-j) over 0 <= i < k <= l < j <= 2n-4 with nonzero denominator and
// a > 0, deduplicated and sorted.  Any n-set with |A+A| <= 3n-4 is, after
// translation/dilation, a subset of a + {0..2n-3} for one of these a.
std::vector<mpq_class> small_sumset_avalues(u32 n);

// Streams every candidate: each n-subset of a + {0,1,...,2n-3} for each
// candidate a.  Returns the number of candidates emitted.
u64 small_sumset_candidates(u32 n, const std::function<void(const RationalSet&)>& sink);

// Clears denominators and divides out the gcd: the integer set with the same
// pair sizes.
PosIntSet rational_set_to_integer(const RationalSet& s);

struct FoundPair {
  SppTriple triple;
  PosIntSet witness;  // canonical integer witness (minimal max, then lex)
};

// Complete search result: every (i,j) with i <= 3n-4 attainable by an n-set
// of positive reals with rational ratios — equivalently by an integer set —
// with a best witness each.  Sorted by (i,j).
std::vector<FoundPair> small_sumset_pairs(u32 n);

// The candidate minimal polynomials for irrational ratios r in (1,2) of
// geometric-type sets with |S+S| <= sumCap: differences
//   sum_{d=l}^{j-1} x^d  -  sum_{d=0}^{k-1} x^d,  0 < k <= l < j <= min(sumCap-n, 2n-4),
// with (x-1)/(x+1) factors stripped, kept only when some root in (1,2) exists
// and none of them is rational, deduplicated by shared (1,2)-roots keeping the
// lowest (degree, coefficient-lex) representative.
std::vector<ZPoly> ratio_polynomials(u32 n, u64 sumCap);

struct AlgWitness {
  SppTriple triple;
  ZPoly poly;               // generating polynomial of the ratio
  mpq_class lo, hi;         // isolating interval of the ratio
  std::vector<u32> exponents;
};

// Pairs attainable by {r^e : e in E}, E an n-subset of {0..2n-4}, r an
// irrational (1,2)-root of a ratio polynomial, MINUS the integer pairs:
// the positive-real surplus of SPP.  4 <= n <= 6.
std::vector<AlgWitness> spp_real_delta(u32 n, const std::set<std::pair<u64, u64>>& integerPairs);

}  // namespace spp
