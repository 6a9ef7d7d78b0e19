#include "spp/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace spp {

std::vector<u64> divisors(u64 N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<u64> lo, hi;
  for (u64 d = 1; d * d <= N; ++d) {
    if (N % d) continue;
    lo.push_back(d);
    if (d != N / d) hi.push_back(N / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

u64 divisor_count(u64 N) { return divisors(N).size(); }

std::vector<u64> sample_distinct(u64 m, u64 k, SplitMix64& rng) {
  if (k > m) throw std::invalid_argument("cannot sample more values than the range holds");
  // Partial Fisher-Yates over the virtual array v[i] = i, with only the
  // displaced entries materialized.
  std::map<u64, u64> displaced;
  std::vector<u64> out;
  out.reserve(k);
  auto at = [&](u64 i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  for (u64 i = 0; i < k; ++i) {
    const u64 j = i + rng.bounded(m - i);
    const u64 vi = at(i), vj = at(j);
    out.push_back(vj);
    displaced[j] = vi;
  }
  std::sort(out.begin(), out.end());
  return out;
}

PosIntSet random_interval_subset(u64 N, u64 n, u64 seed) {
  if (n > N) throw std::invalid_argument("subset size exceeds N");
  SplitMix64 rng(seed);
  std::vector<u64> idx = sample_distinct(N, n, rng);
  for (u64& v : idx) ++v;  // {0..N-1} -> {1..N}
  return PosIntSet(std::move(idx));
}

PosIntSet random_divisor_subset(u64 N, u64 n, u64 seed) {
  const std::vector<u64> divs = divisors(N);
  if (n > divs.size()) throw std::invalid_argument("subset size exceeds the divisor count");
  SplitMix64 rng(seed);
  std::vector<u64> idx = sample_distinct(divs.size(), n, rng);
  std::vector<u64> out;
  out.reserve(n);
  for (u64 i : idx) out.push_back(divs[i]);
  return PosIntSet(std::move(out));
}

bool is_prime(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::vector<u64> primes_upto(u64 y) {
  std::vector<u64> ps;
  for (u64 p = 2; p <= y; ++p)
    if (is_prime(p)) ps.push_back(p);
  return ps;
}

// Smooth numbers in increasing order: min-heap of (value, index of largest
// prime used).  Each value is extended only by primes >= that index, so every
// smooth number is generated exactly once — no trial division anywhere.
template <class Emit>
void smooth_stream(u64 y, u64 cap, Emit&& emit) {
  const std::vector<u64> ps = primes_upto(y);
  using Node = std::pair<u64, u32>;  // (value, min extension prime index)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
  heap.push({1, 0});
  while (!heap.empty()) {
    const auto [v, pi] = heap.top();
    heap.pop();
    if (!emit(v)) return;
    for (u32 i = pi; i < ps.size(); ++i) {
      if (v > cap / ps[i]) break;  // ps ascending: later primes overflow too
      heap.push({v * ps[i], i});
    }
  }
}

}  // namespace

FriableSet friable_prefix(u64 n, u64 y) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!is_prime(y)) throw std::invalid_argument("y must be prime");
  std::vector<u64> elems;
  elems.reserve(n);
  smooth_stream(y, kElementCap, [&](u64 v) {
    elems.push_back(v);
    return elems.size() < n;
  });
  if (elems.size() < n)
    throw std::overflow_error("the " + std::to_string(n) + "-th " + std::to_string(y) +
                              "-smooth number exceeds the element cap");
  return FriableSet{y, n, PosIntSet(std::move(elems))};
}

u64 friable_count_within(u64 y, u64 bound) {
  if (!is_prime(y)) throw std::invalid_argument("y must be prime");
  u64 count = 0;
  smooth_stream(y, bound, [&](u64 v) {
    if (v > bound) return true;  // siblings in the heap may still be <= bound
    ++count;
    return true;
  });
  return count;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::ExhaustiveInterval: return "exhaustive-interval";
    case Strategy::DiameterFamily: return "diameter-family";
    case Strategy::DivisorSubsets: return "divisor-subsets";
    case Strategy::RandomInterval: return "random-interval";
    case Strategy::RandomDivisors: return "random-divisors";
    case Strategy::FriablePrefix: return "friable-prefix";
    case Strategy::Shift: return "shift";
    case Strategy::Augment: return "augment";
  }
  throw std::logic_error("unknown strategy");
}

Strategy strategy_from_name(std::string_view name) {
  for (Strategy s : {Strategy::ExhaustiveInterval, Strategy::DiameterFamily,
                     Strategy::DivisorSubsets, Strategy::RandomInterval, Strategy::RandomDivisors,
                     Strategy::FriablePrefix, Strategy::Shift, Strategy::Augment})
    if (strategy_name(s) == name) return s;
  throw std::invalid_argument("unknown strategy: '" + std::string(name) + "'");
}

void SearchCampaign::validate() const {
  if (nMin < 1) throw std::invalid_argument("nMin must be >= 1");
  if (nMax > 64) throw std::invalid_argument("nMax must be <= 64");
  if (nMin > nMax) throw std::invalid_argument("nMin must not exceed nMax");
  const bool random = strategy == Strategy::RandomInterval || strategy == Strategy::RandomDivisors;
  if (random && !hasSeed)
    throw std::invalid_argument("random campaigns require an explicit seed");
  if (random && sampleCount < 1) throw std::invalid_argument("sampleCount must be >= 1");
  switch (strategy) {
    case Strategy::ExhaustiveInterval:
    case Strategy::DiameterFamily:
    case Strategy::DivisorSubsets:
    case Strategy::RandomInterval:
    case Strategy::RandomDivisors:
      if (N < 1) throw std::invalid_argument("N must be >= 1");
      break;
    case Strategy::FriablePrefix:
      if (!is_prime(y)) throw std::invalid_argument("y must be prime");
      break;
    case Strategy::Shift:
      if (shiftMax < 1) throw std::invalid_argument("shiftMax must be >= 1");
      break;
    case Strategy::Augment:
      if (augmentMax < 1) throw std::invalid_argument("augmentMax must be >= 1");
      break;
  }
}

SearchCampaign parse_campaign(std::string_view text) {
  SearchCampaign c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("campaign line " + std::to_string(lineNo) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b2 = s.find_first_not_of(" \t");
      if (b2 == std::string::npos) return std::string();
      return s.substr(b2, s.find_last_not_of(" \t") - b2 + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto num = [&]() -> u64 {
      try {
        std::size_t pos = 0;
        u64 v = std::stoull(val, &pos);
        if (pos != val.size()) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        throw std::invalid_argument("campaign line " + std::to_string(lineNo) +
                                    ": bad integer '" + val + "'");
      }
    };
    if (key == "strategy") c.strategy = strategy_from_name(val);
    else if (key == "N") c.N = num();
    else if (key == "nMin") c.nMin = static_cast<u32>(num());
    else if (key == "nMax") c.nMax = static_cast<u32>(num());
    else if (key == "y") c.y = num();
    else if (key == "seed") { c.seed = num(); c.hasSeed = true; }
    else if (key == "sampleCount") c.sampleCount = num();
    else if (key == "shiftMax") c.shiftMax = static_cast<u32>(num());
    else if (key == "augmentMax") c.augmentMax = static_cast<u32>(num());
    else if (key == "dilMax") c.dilMax = static_cast<u32>(num());
    else if (key == "sourceTag") c.sourceTag = val;
    else throw std::invalid_argument("campaign line " + std::to_string(lineNo) +
                                     ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

namespace detail {

u64 run_campaign_impl(const SearchCampaign& c, std::span<const PosIntSet> inputs,
                      const std::function<void(std::span<const u64>)>& sink) {
  c.validate();
  u64 emitted = 0;
  auto filtered = [&](std::span<const u64> s) {
    if (s.size() >= c.nMin && s.size() <= c.nMax) {
      ++emitted;
      sink(s);
    }
  };
  switch (c.strategy) {
    case Strategy::ExhaustiveInterval:
      enumerate_interval_subsets(static_cast<u32>(c.N), c.nMax, filtered);
      break;
    case Strategy::DiameterFamily:
      enumerate_diameter_family(static_cast<u32>(c.N), c.dilMax, std::max(c.shiftMax, u32{1}),
                                filtered);
      break;
    case Strategy::DivisorSubsets:
      // Sweeps every modulus up to N, skipping the > 30-divisor rejects.
      for (u64 m = 1; m <= c.N; ++m) {
        if (divisor_count(m) > 30) continue;
        divisor_subsets(m, filtered);
      }
      break;
    case Strategy::RandomInterval: {
      SplitMix64 rng(c.seed);
      for (u32 n = c.nMin; n <= c.nMax && n <= c.N; ++n)
        for (u64 s = 0; s < c.sampleCount; ++s) {
          std::vector<u64> idx = sample_distinct(c.N, n, rng);
          for (u64& v : idx) ++v;
          ++emitted;
          sink(std::span<const u64>(idx));
        }
      break;
    }
    case Strategy::RandomDivisors: {
      SplitMix64 rng(c.seed);
      const std::vector<u64> divs = divisors(c.N);
      for (u32 n = c.nMin; n <= c.nMax && n <= divs.size(); ++n)
        for (u64 s = 0; s < c.sampleCount; ++s) {
          std::vector<u64> idx = sample_distinct(divs.size(), n, rng);
          std::vector<u64> vals;
          vals.reserve(idx.size());
          for (u64 i : idx) vals.push_back(divs[i]);
          ++emitted;
          sink(std::span<const u64>(vals));
        }
      break;
    }
    case Strategy::FriablePrefix: {
      u64 top = c.nMax;
      if (c.N > 0) top = std::min(top, friable_count_within(c.y, c.N));
      if (top >= c.nMin) {
        const FriableSet f = friable_prefix(top, c.y);
        const std::span<const u64> all(f.elements.elements());
        for (u64 n = c.nMin; n <= top; ++n) {
          ++emitted;
          sink(all.first(n));
        }
      }
      break;
    }
    case Strategy::Shift:
      for (const PosIntSet& a : inputs) shift_closure(a, c.shiftMax, filtered);
      break;
    case Strategy::Augment:
      for (const PosIntSet& a : inputs) augment_closure(a, c.augmentMax, filtered);
      break;
  }
  return emitted;
}

}  // namespace detail

}  // namespace spp
