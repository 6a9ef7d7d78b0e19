#include "spp/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spp {

PosIntSet::PosIntSet(std::vector<u64> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw std::invalid_argument("set must be nonempty");
  std::sort(elems_.begin(), elems_.end());
  if (elems_.front() == 0) throw std::invalid_argument("elements must be positive");
  if (elems_.back() > kElementCap)
    throw std::invalid_argument("element exceeds 2^31 cap: " + std::to_string(elems_.back()));
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("elements must be distinct");
}

PosIntSet PosIntSet::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<u64> v;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
      x = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a positive integer: '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("not a positive integer: '" + tok + "'");
    v.push_back(x);
  }
  return PosIntSet(std::move(v));
}

std::string PosIntSet::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(elems_[i]);
  }
  return out;
}

namespace {

// Collect the n(n+1)/2 pairwise values, then sort + unique.  Sizes stay tiny
// (n <= 64 in every search), so this beats hashing and is allocation-free
// with a reused scratch buffer.
template <class Op>
u64 distinct_pairwise(std::span<const u64> a, std::vector<u64>& scratch, Op op) {
  scratch.clear();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) scratch.push_back(op(a[i], a[j]));
  std::sort(scratch.begin(), scratch.end());
  return static_cast<u64>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

}  // namespace

SppTriple spp_of_raw(std::span<const u64> a, std::vector<u64>& scratch) {
  SppTriple t;
  t.n = a.size();
  t.sumSize = distinct_pairwise(a, scratch, [](u64 x, u64 y) { return x + y; });
  t.prodSize = distinct_pairwise(a, scratch, [](u64 x, u64 y) { return x * y; });
  return t;
}

u64 sumset_size(const PosIntSet& a) {
  std::vector<u64> scratch;
  return distinct_pairwise(a.elements(), scratch, [](u64 x, u64 y) { return x + y; });
}

u64 product_size(const PosIntSet& a) {
  std::vector<u64> scratch;
  return distinct_pairwise(a.elements(), scratch, [](u64 x, u64 y) { return x * y; });
}

SppTriple spp_of(const PosIntSet& a) {
  std::vector<u64> scratch;
  return spp_of_raw(a.elements(), scratch);
}

SetClass classify(const PosIntSet& a) {
  const auto& v = a.elements();
  const std::size_t n = v.size();
  SetClass c;
  c.isAP = true;
  c.isGP = true;
  if (n >= 3) {
    const u64 d = v[1] - v[0];
    for (std::size_t i = 2; i < n && c.isAP; ++i) c.isAP = (v[i] - v[i - 1] == d);
    // Ratio check in exact arithmetic: v[i+1]/v[i] == p/q with p/q reduced.
    const u64 g = std::gcd(v[1], v[0]);
    const u64 p = v[1] / g, q = v[0] / g;
    for (std::size_t i = 1; i + 1 < n && c.isGP; ++i) c.isGP = (v[i + 1] * q == v[i] * p);
  }
  const u64 full = static_cast<u64>(n) * (n + 1) / 2;
  c.isSidon = (sumset_size(a) == full);
  c.isMultSidon = (product_size(a) == full);
  return c;
}

PosIntSet canonicalize(const PosIntSet& a) {
  u64 g = 0;
  for (u64 x : a.elements()) g = std::gcd(g, x);
  if (g == 1) return a;
  std::vector<u64> v = a.elements();
  for (u64& x : v) x /= g;
  return PosIntSet(std::move(v));
}

}  // namespace spp
