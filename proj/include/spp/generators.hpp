#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string_view>

#include "spp/core.hpp"

namespace spp {

// splitmix64: the full generator is these two functions.  Documented in the
// README so samples can be reproduced in any language.
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}

  u64 next() {
    state += 0x9E3779B97F4A7C15ULL;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,k) without modulo bias: reject draws below 2^64 mod k.
  u64 bounded(u64 k) {
    const u64 threshold = (0 - k) % k;
    for (;;) {
      const u64 x = next();
      if (x >= threshold) return x % k;
    }
  }
};

// --- exhaustive enumerators ------------------------------------------------
// Sinks are callables taking std::span<const u64> (elements ascending).  The
// span is only valid during the call.

// Every nonempty A ⊆ {1..N} with |A| ≤ nMax, lexicographic, each exactly once.
// Returns the count emitted (= sum of C(N,k) for k = 1..nMax).
template <class Sink>
u64 enumerate_interval_subsets(u32 N, u32 nMax, Sink&& sink) {
  if (N < 1 || N > 64) throw std::invalid_argument("N must be in [1,64]");
  std::array<u64, 64> buf;
  u64 count = 0;
  auto rec = [&](auto&& self, u32 next, u32 depth) -> void {
    for (u32 v = next; v <= N; ++v) {
      buf[depth] = v;
      ++count;
      sink(std::span<const u64>(buf.data(), depth + 1));
      if (depth + 1 < nMax) self(self, v + 1, depth + 1);
    }
  };
  if (nMax >= 1) rec(rec, 1, 0);
  return count;
}

// Every k-subset of `base` (ascending input gives ascending outputs).
template <class Sink>
u64 enumerate_ksubsets(std::span<const u64> base, u32 k, Sink&& sink) {
  if (k == 0 || k > base.size()) return 0;
  std::array<u64, 64> buf;
  if (k > buf.size()) throw std::invalid_argument("subset size too large");
  u64 count = 0;
  auto rec = [&](auto&& self, std::size_t next, u32 depth) -> void {
    if (depth == k) {
      ++count;
      sink(std::span<const u64>(buf.data(), k));
      return;
    }
    for (std::size_t i = next; i + (k - depth) <= base.size(); ++i) {
      buf[depth] = base[i];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

// For each pattern B ⊆ {0..dMax} with {0,dMax} ⊆ B, emits c·B + t for every
// 1 ≤ c ≤ dilMax, 1 ≤ t ≤ shiftMax.  One emission per (pattern,c,t) triple;
// coinciding sets from distinct triples are left to the store's dedupe.
template <class Sink>
u64 enumerate_diameter_family(u32 dMax, u32 dilMax, u32 shiftMax, Sink&& sink) {
  if (dMax < 1) throw std::invalid_argument("dMax must be >= 1");
  if (dMax > 40) throw std::invalid_argument("dMax too large to enumerate");
  if (u64(dilMax) * dMax + shiftMax > kElementCap)
    throw std::overflow_error("dilation/shift bounds exceed the element cap");
  std::array<u64, 64> pattern, buf;
  u64 count = 0;
  const u64 innerBits = dMax >= 1 ? (u64{1} << (dMax - 1)) : 1;
  for (u64 bits = 0; bits < innerBits; ++bits) {
    u32 len = 0;
    pattern[len++] = 0;
    for (u32 b = 1; b < dMax; ++b)
      if (bits >> (b - 1) & 1) pattern[len++] = b;
    pattern[len++] = dMax;
    for (u64 c = 1; c <= dilMax; ++c)
      for (u64 t = 1; t <= shiftMax; ++t) {
        for (u32 i = 0; i < len; ++i) buf[i] = c * pattern[i] + t;
        ++count;
        sink(std::span<const u64>(buf.data(), len));
      }
  }
  return count;
}

// Divisors of N, ascending.
std::vector<u64> divisors(u64 N);
u64 divisor_count(u64 N);

// Every nonempty subset of divisors(N).  N with more than 30 divisors is
// rejected: 2^d(N) subsets would be intractable (the same cutoff excludes
// exactly {1260,1440,1680,1800,1980,2016} below 2^11).
template <class Sink>
u64 divisor_subsets(u64 N, Sink&& sink) {
  const std::vector<u64> divs = divisors(N);
  if (divs.size() > 30)
    throw std::invalid_argument("N has more than 30 divisors: " + std::to_string(N));
  u64 count = 0;
  for (u32 k = 1; k <= divs.size(); ++k)
    count += enumerate_ksubsets(std::span<const u64>(divs), k, sink);
  return count;
}

// --- random samples ---------------------------------------------------------

// k distinct values from {0..m-1} via a sparse Fisher-Yates (the virtual
// array {0..m-1} is never materialized); ascending output.
std::vector<u64> sample_distinct(u64 m, u64 k, SplitMix64& rng);

PosIntSet random_interval_subset(u64 N, u64 n, u64 seed);
PosIntSet random_divisor_subset(u64 N, u64 n, u64 seed);

// --- friable (smooth) prefixes ----------------------------------------------

struct FriableSet {
  u64 y = 0;  // prime bound
  u64 n = 0;
  PosIntSet elements;
};

// The n smallest y-smooth positive integers (1 included), generated by a
// priority-queue merge of multiplicative streams.  Throws std::overflow_error
// if the n-th y-smooth number exceeds the element cap.
FriableSet friable_prefix(u64 n, u64 y);

// Number of y-smooth integers in [1, bound].
u64 friable_count_within(u64 y, u64 bound);

bool is_prime(u64 p);

// --- closures ----------------------------------------------------------------

template <class Sink>
u64 shift_closure(const PosIntSet& a, u64 tMax, Sink&& sink) {
  if (tMax < 1) throw std::invalid_argument("tMax must be >= 1");
  if (a.max() + tMax > kElementCap) throw std::overflow_error("shift exceeds the element cap");
  std::vector<u64> buf(a.elements());
  for (u64 t = 1; t <= tMax; ++t) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = a.elements()[i] + t;
    sink(std::span<const u64>(buf));
  }
  return tMax;
}

template <class Sink>
u64 augment_closure(const PosIntSet& a, u64 bMax, Sink&& sink) {
  if (bMax < 1) throw std::invalid_argument("bMax must be >= 1");
  std::vector<u64> buf;
  u64 count = 0;
  for (u64 b = 1; b <= bMax; ++b) {
    if (std::binary_search(a.elements().begin(), a.elements().end(), b)) continue;
    buf = a.elements();
    buf.insert(std::lower_bound(buf.begin(), buf.end(), b), b);
    sink(std::span<const u64>(buf));
    ++count;
  }
  return count;
}

// --- campaigns ----------------------------------------------------------------

enum class Strategy {
  ExhaustiveInterval,
  DiameterFamily,
  DivisorSubsets,
  RandomInterval,
  RandomDivisors,
  FriablePrefix,
  Shift,
  Augment,
};

std::string_view strategy_name(Strategy s);
Strategy strategy_from_name(std::string_view name);

struct SearchCampaign {
  Strategy strategy = Strategy::ExhaustiveInterval;
  u64 N = 0;          // interval / divisor / diameter bound; FriablePrefix: max element (0 = none)
  u32 nMin = 1;
  u32 nMax = 0;
  u64 y = 0;          // prime bound (FriablePrefix)
  u64 seed = 0;
  bool hasSeed = false;
  u64 sampleCount = 0;
  u32 shiftMax = 0;
  u32 augmentMax = 0;
  u32 dilMax = 1;     // DiameterFamily dilation bound
  std::string sourceTag = "campaign";

  void validate() const;  // throws std::invalid_argument
};

// key=value lines, whitespace around '=' ignored; '#' starts a comment.  Keys:
// strategy, N, nMin, nMax, y, seed, sampleCount, shiftMax, augmentMax, dilMax,
// sourceTag.
SearchCampaign parse_campaign(std::string_view text);

namespace detail {
u64 run_campaign_impl(const SearchCampaign& c, std::span<const PosIntSet> inputs,
                      const std::function<void(std::span<const u64>)>& sink);
}

// Runs a campaign, feeding every emitted set (elements ascending, size in
// [nMin,nMax]) to the sink.  `inputs` is consumed by Shift/Augment only.
// Fully deterministic for a fixed campaign.
template <class Sink>
u64 run_campaign(const SearchCampaign& c, std::span<const PosIntSet> inputs, Sink&& sink) {
  return detail::run_campaign_impl(c, inputs, std::function<void(std::span<const u64>)>(sink));
}

}  // namespace spp
