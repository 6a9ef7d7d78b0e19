#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "spp/core.hpp"

namespace spp {

// One stored witness: spp_of(witness) == triple, witness gcd-primitive,
// maxElement == witness.max().
struct WitnessRecord {
  SppTriple triple;
  PosIntSet witness;
  u64 maxElement = 0;
  std::string sourceTag;

  // Canonicalizes and recomputes the triple from scratch.
  static WitnessRecord make(const PosIntSet& a, std::string sourceTag);

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

// (n, sumSize, prodSize)
using TripleKey = std::array<u64, 3>;

// Witness database holding at most one record per (n, sumSize, prodSize).
// Records are totally ordered by (maxElement, witness, sourceTag) and the
// smallest one is kept, which makes merge associative, commutative, and
// idempotent with no dependence on ingest order.
class Dataset {
 public:
  enum class Ingest { New, Improved, Unchanged };

  Dataset() = default;

  // Canonicalizes A, recomputes its triple, applies the minimal-record rule.
  Ingest ingest(const PosIntSet& a, const std::string& sourceTag);

  // Record-level insert for already-validated records (merge, file reads).
  Ingest upsert(const WitnessRecord& rec);

  const std::map<TripleKey, WitnessRecord>& records() const { return records_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  std::size_t size() const { return records_.size(); }

  // Sorted (sumSize, prodSize) keys stored for this n.
  std::vector<std::pair<u64, u64>> spp_set(u64 n) const;

  // |spp_set(n)| over the easy grid count (n^2-3n+4)^2/4 and over
  // spp_count_upper(n), both exact.  n >= 3.
  std::pair<mpq_class, mpq_class> coverage(u64 n) const;

  // counts[k-1] = number of stored witnesses of size n containing k.
  std::vector<u64> usage_histogram(u64 n, u64 kMax) const;

  // The record minimizing max(sumSize, prodSize); ties by smaller sum of the
  // two sizes, then smaller sumSize.  Empty if n is absent.
  std::optional<WitnessRecord> minimax_report(u64 n) const;

  // Records with K_n(sumSize) + 2*K_n(prodSize) <= threshold; n < 3 rows are
  // skipped (no K scheme there).
  std::vector<WitnessRecord> envelope_report(double threshold) const;

  // Plain-text format: header "n,sum,prod,max,set,source", then one sorted
  // record per line, LF endings.  Reading revalidates every record and
  // rejects unsorted, duplicated, or inconsistent lines.
  static Dataset read(std::istream& in);
  static Dataset read_file(const std::string& path);
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;

  // "n,i,j,kx,ky,lx,ly,k2x,k2y,k3x,k3y" — all four normalization schemes per
  // record; n < 3 rows are skipped.
  void write_plot_csv(std::ostream& out) const;

  // "n,i,j,sez,void,sv_as_printed,sv_variant,golden" region verdicts as 0/1;
  // n < 3 rows are skipped.
  void write_verdict_csv(std::ostream& out) const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.records_ == b.records_;
  }

 private:
  std::map<TripleKey, WitnessRecord> records_;
  std::vector<std::string> provenance_;
};

// Keywise minimal-record union.
Dataset merge(const Dataset& a, const Dataset& b);

}  // namespace spp
