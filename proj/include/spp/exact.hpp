#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spp/core.hpp"
#include "spp/realsearch.hpp"
#include "spp/store.hpp"

namespace spp {

enum class PointStatus { Witnessed, SezExcluded, SearchExcluded, Unresolved };

const char* point_status_name(PointStatus s);

struct PointProof {
  u64 i = 0, j = 0;
  PointStatus status = PointStatus::Unresolved;
  std::string evidence;
};

// Complete classification of the grid [2n-1, n(n+1)/2]^2 for one n.
struct ExactResult {
  u64 n = 0;
  std::vector<std::pair<u64, u64>> integerPairs;  // sorted witnessed keys
  std::vector<std::pair<u64, u64>> realDelta;     // attained by positive reals only
  std::vector<AlgWitness> realWitnesses;          // one witness per realDelta pair
  std::vector<PointProof> proofLog;               // one entry per grid point, row-major
  Dataset witnesses;
};

// Computes SPP(n) exactly for 1 <= n <= 6.  Witnesses come from (a) all
// n-subsets of [36], (b) n-subsets of the powers {2^0..2^floor((3n-4)/2)},
// (c) size-n divisor subsets for moduli up to 2048, and (d) the complete
// small-sumset search.  Every unwitnessed grid point must then fall to the
// Sidon exclusion or to the small-sumset search's completeness; a leftover
// point is a hard error.  The real surplus comes from the algebraic ratio
// search (nonempty only for n >= 4).
ExactResult compute_exact(u32 n, u32 jobs = 1);

struct Spp7Report {
  std::vector<std::pair<u64, u64>> unresolved;  // sorted
  std::vector<PointProof> proofLog;
  Dataset witnesses;
};

// Same pipeline at n = 7, where the exclusions are known not to close the
// grid: unresolved points are collected instead of fatal.
Spp7Report check_spp7_partial(u32 jobs = 1);

struct TableCheck {
  std::string table;
  std::string label;   // the claim line as transcribed
  bool pass = false;
  std::string detail;  // recomputed values when the claim fails
};

// Replays a transcription fixture: every row's witness must reproduce its
// claimed (sumSize, prodSize) exactly.  Line forms ('#' starts a comment):
//   table <name>
//   row <n> <i> <j> [lcm <N>] set <elements...>
//   row <n> <i> <j> [lcm <N>] psi <m> <y> [add <elements...>] [del <elements...>]
//   row <n> <i> <j> alg <c0> <c1> ... <ck> / <e1> <e2> ... <en>
// "psi m y" is the m-element y-smooth prefix; "alg" builds {r^e} over the
// unique (1,2)-root of the polynomial with the given ascending coefficients.
std::vector<TableCheck> verify_witness_tables(const std::string& fixturePath);

}  // namespace spp
