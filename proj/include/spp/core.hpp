#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Elements are capped so that any pairwise product fits in a u64.
inline constexpr u64 kElementCap = u64{1} << 31;

// A finite set of positive integers, stored strictly increasing.
class PosIntSet {
 public:
  // Sorts its input; rejects zero, duplicates, and elements above the cap.
  explicit PosIntSet(std::vector<u64> elems);

  // Whitespace-separated positive integers.
  static PosIntSet parse(std::string_view text);

  const std::vector<u64>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  u64 max() const { return elems_.back(); }

  std::string to_text() const;  // "1 2 4 8"

  friend bool operator==(const PosIntSet&, const PosIntSet&) = default;
  friend auto operator<=>(const PosIntSet&, const PosIntSet&) = default;

 private:
  std::vector<u64> elems_;
};

struct SppTriple {
  u64 n = 0;
  u64 sumSize = 0;   // |A+A|
  u64 prodSize = 0;  // |AA|
  friend bool operator==(const SppTriple&, const SppTriple&) = default;
  friend auto operator<=>(const SppTriple&, const SppTriple&) = default;
};

u64 sumset_size(const PosIntSet& a);
u64 product_size(const PosIntSet& a);
SppTriple spp_of(const PosIntSet& a);

// Same computation for a raw strictly-increasing span; `scratch` is reused
// between calls so enumeration loops do not allocate.
SppTriple spp_of_raw(std::span<const u64> a, std::vector<u64>& scratch);

struct SetClass {
  bool isAP = false;
  bool isGP = false;
  bool isSidon = false;      // all pairwise sums distinct
  bool isMultSidon = false;  // all pairwise products distinct
};

SetClass classify(const PosIntSet& a);

// Divides out the gcd of the elements.  Both pair sizes are invariant under
// dilation, so every dataset witness is kept in this primitive form.
PosIntSet canonicalize(const PosIntSet& a);

}  // namespace spp
