#include "spp/realsearch.hpp"

#include <algorithm>
#include <map>

#include "spp/generators.hpp"

namespace spp {

std::vector<mpq_class> small_sumset_avalues(u32 n) {
  if (n < 3 || n > 10) throw std::invalid_argument("n must be in [3,10]");
  std::set<mpq_class> vals;
  const i64 top = 2 * i64(n) - 4;
  for (i64 i = 0; i < top; ++i)
    for (i64 k = i + 1; k <= top; ++k)
      for (i64 l = k; l <= top; ++l)
        for (i64 j = l + 1; j <= top; ++j) {
          const i64 den = k + l - i - j;
          if (den == 0) continue;
          mpq_class a(mpz_class(i * j - k * l), mpz_class(den));
          a.canonicalize();
          if (a > 0) vals.insert(a);
        }
  return {vals.begin(), vals.end()};
}

u64 small_sumset_candidates(u32 n, const std::function<void(const RationalSet&)>& sink) {
  const std::vector<mpq_class> as = small_sumset_avalues(n);
  u64 count = 0;
  std::vector<u64> offsets(2 * n - 2);
  for (u32 t = 0; t < offsets.size(); ++t) offsets[t] = t;
  for (const mpq_class& a : as) {
    enumerate_ksubsets(std::span<const u64>(offsets), n, [&](std::span<const u64> pick) {
      RationalSet s;
      s.elems.reserve(n);
      for (u64 t : pick) s.elems.push_back(a + static_cast<long>(t));
      ++count;
      sink(s);
    });
  }
  return count;
}

PosIntSet rational_set_to_integer(const RationalSet& s) {
  if (s.elems.empty()) throw std::invalid_argument("empty set");
  mpz_class lcm = 1;
  for (const mpq_class& q : s.elems)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<u64> v;
  v.reserve(s.elems.size());
  for (const mpq_class& q : s.elems) {
    const mpq_class scaled = q * lcm;
    if (scaled.get_den() != 1) throw std::logic_error("lcm failed to clear a denominator");
    const mpz_class z = scaled.get_num();
    if (!z.fits_ulong_p() || z <= 0)
      throw std::invalid_argument("element out of range after clearing denominators");
    v.push_back(z.get_ui());
  }
  return canonicalize(PosIntSet(std::move(v)));
}

namespace {

// True if a's witness is preferable: smaller max, then lexicographically
// smaller elements.  Mirrors the store's tie-break.
bool witness_less(const PosIntSet& a, const PosIntSet& b) {
  if (a.max() != b.max()) return a.max() < b.max();
  return a.elements() < b.elements();
}

}  // namespace

std::vector<FoundPair> small_sumset_pairs(u32 n) {
  std::map<std::pair<u64, u64>, PosIntSet> best;
  small_sumset_candidates(n, [&](const RationalSet& s) {
    const PosIntSet w = rational_set_to_integer(s);
    const SppTriple t = spp_of(w);
    if (t.sumSize > 3 * u64(n) - 4) return;
    const auto key = std::make_pair(t.sumSize, t.prodSize);
    auto it = best.find(key);
    if (it == best.end())
      best.emplace(key, w);
    else if (witness_less(w, it->second))
      it->second = w;
  });
  std::vector<FoundPair> out;
  out.reserve(best.size());
  for (auto& [key, w] : best)
    out.push_back(FoundPair{SppTriple{n, key.first, key.second}, std::move(w)});
  return out;
}

std::vector<ZPoly> ratio_polynomials(u32 n, u64 sumCap) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  const i64 jCap = std::min<i64>(i64(sumCap) - i64(n), 2 * i64(n) - 4);
  std::vector<ZPoly> raw;
  for (i64 k = 1; k <= jCap; ++k)
    for (i64 l = k; l <= jCap; ++l)
      for (i64 j = l + 1; j <= jCap; ++j) {
        ZPoly q(j, 0);
        for (i64 d = l; d < j; ++d) q[d] += 1;
        for (i64 d = 0; d < k; ++d) q[d] -= 1;
        zp_trim(q);
        // x = 1 and x = -1 are never admissible ratios; strip those factors.
        static const ZPoly xm1{-1, 1}, xp1{1, 1};
        while (!q.empty() && zp_sign_at(q, 1) == 0) q = zp_div_exact(q, xm1);
        while (!q.empty() && zp_sign_at(q, -1) == 0) q = zp_div_exact(q, xp1);
        if (zp_deg(q) < 2) continue;
        if (zp_count_roots_open(q, 1, 2) < 1) continue;
        if (zp_has_rational_root_open(q, 1, 2)) continue;
        raw.push_back(zp_primitive(q));
      }
  // Lowest (degree, coefficient-lex) representative per shared (1,2)-root.
  std::sort(raw.begin(), raw.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = cmp(a[i], b[i]); c != 0) return c < 0;
    return false;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<ZPoly> kept;
  for (const ZPoly& q : raw) {
    bool fresh = true;
    for (const ZPoly& k2 : kept) {
      const ZPoly g = zp_gcd(q, k2);
      if (zp_deg(g) >= 1 && zp_count_roots_open(g, 1, 2) >= 1) {
        fresh = false;
        break;
      }
    }
    if (fresh) kept.push_back(q);
  }
  return kept;
}

std::vector<AlgWitness> spp_real_delta(u32 n, const std::set<std::pair<u64, u64>>& integerPairs) {
  if (n < 4 || n > 6) throw std::invalid_argument("n must be in [4,6]");
  const u64 sumCap = u64(n) * (n + 1) / 2 - 1;
  const std::vector<ZPoly> polys = ratio_polynomials(n, sumCap);

  const u32 eTop = 2 * n - 4;  // exponents range over {0..eTop}
  std::vector<u64> domain(eTop + 1);
  for (u32 e = 0; e <= eTop; ++e) domain[e] = e;
  struct PairRef {
    u32 a, b;
  };
  std::vector<PairRef> pairs;
  for (u32 a = 0; a <= eTop; ++a)
    for (u32 b = a; b <= eTop; ++b) pairs.push_back({a, b});

  std::map<std::pair<u64, u64>, AlgWitness> found;
  for (const ZPoly& poly : polys) {
    for (const auto& [rlo, rhi] : zp_isolate_roots_open(poly, 1, 2)) {
      AlgebraicNumber r = make_algebraic(poly, rlo, rhi);
      // Equality classes of r^a + r^b over the whole exponent domain; each
      // subset below then just counts distinct class ids.
      std::vector<u32> classOf(pairs.size());
      std::vector<ZPoly> reps;
      std::vector<u32> repClass;
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        ZPoly v(std::max(pairs[pi].a, pairs[pi].b) + 1, 0);
        v[pairs[pi].a] += 1;
        v[pairs[pi].b] += 1;
        u32 cls = static_cast<u32>(reps.size());
        for (std::size_t k = 0; k < reps.size(); ++k)
          if (alg_is_zero(zp_sub(v, reps[k]), r)) {
            cls = repClass[k];
            break;
          }
        if (cls == reps.size()) {
          repClass.push_back(cls);
          reps.push_back(std::move(v));
        }
        classOf[pi] = cls;
      }
      auto pairIndex = [&](u32 a, u32 b) {
        // index of (a,b), a <= b, in the row-major triangular listing
        return a * (2 * eTop + 3 - a) / 2 + (b - a);
      };
      enumerate_ksubsets(std::span<const u64>(domain), n, [&](std::span<const u64> pick) {
        bool sumSeen[64] = {};
        bool classSeen[64] = {};
        u64 i = 0, j = 0;
        for (std::size_t x = 0; x < pick.size(); ++x)
          for (std::size_t y = x; y < pick.size(); ++y) {
            const u32 a = static_cast<u32>(pick[x]), b = static_cast<u32>(pick[y]);
            if (!sumSeen[a + b]) {
              sumSeen[a + b] = true;
              ++j;
            }
            const u32 cls = classOf[pairIndex(a, b)];
            if (!classSeen[cls]) {
              classSeen[cls] = true;
              ++i;
            }
          }
        const auto key = std::make_pair(i, j);
        if (integerPairs.contains(key) || found.contains(key)) return;
        AlgWitness w;
        w.triple = SppTriple{n, i, j};
        w.poly = poly;
        w.lo = rlo;
        w.hi = rhi;
        w.exponents.assign(pick.begin(), pick.end());
        found.emplace(key, std::move(w));
      });
    }
  }
  std::vector<AlgWitness> out;
  out.reserve(found.size());
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

}  // namespace spp
