#include "spp/algebraic.hpp"

#include <algorithm>

namespace spp {

AlgebraicNumber make_algebraic(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
  AlgebraicNumber r{zp_squarefree_part(p), lo, hi};
  if (zp_deg(r.poly) < 1) throw std::invalid_argument("polynomial has no roots");
  if (zp_sign_at(r.poly, lo) == 0 || zp_sign_at(r.poly, hi) == 0)
    throw std::invalid_argument("interval endpoint is a root");
  if (zp_count_roots_open(r.poly, lo, hi) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root");
  return r;
}

void alg_refine(AlgebraicNumber& r) {
  const mpq_class m = (r.lo + r.hi) / 2;
  const int sm = zp_sign_at(r.poly, m);
  if (sm == 0) throw std::logic_error("algebraic number is rational; refinement hit it");
  if (zp_sign_at(r.poly, r.lo) * sm < 0)
    r.hi = m;
  else
    r.lo = m;
}

bool alg_is_zero(const ZPoly& q, const AlgebraicNumber& r) {
  if (q.empty()) return true;
  const ZPoly g = zp_gcd(q, r.poly);
  if (zp_deg(g) < 1) return false;
  // g | r.poly and r.poly has exactly one root in (lo,hi), so g has at most
  // one there; having one is equivalent to a sign change (g is squarefree as
  // a divisor of a squarefree polynomial, and the endpoints are non-roots).
  return zp_sign_at(g, r.lo) * zp_sign_at(g, r.hi) < 0;
}

namespace {

// Exact interval Horner: the image of [lo,hi] under p, as a rational interval.
std::pair<mpq_class, mpq_class> interval_eval(const ZPoly& p, const mpq_class& lo,
                                              const mpq_class& hi) {
  mpq_class a = 0, b = 0;  // running interval [a,b]
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const mpq_class p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    a = std::min(std::min(p1, p2), std::min(p3, p4)) + mpq_class(*it);
    b = std::max(std::max(p1, p2), std::max(p3, p4)) + mpq_class(*it);
  }
  return {a, b};
}

}  // namespace

int alg_compare(const ZPoly& p, const ZPoly& q, AlgebraicNumber& r) {
  const ZPoly d = zp_sub(p, q);
  if (alg_is_zero(d, r)) return 0;
  for (int step = 0; step < 256; ++step) {
    const auto [a, b] = interval_eval(d, r.lo, r.hi);
    if (a > 0) return 1;
    if (b < 0) return -1;
    alg_refine(r);
  }
  throw std::logic_error("alg_compare failed to separate after 256 refinements");
}

double alg_approx(const AlgebraicNumber& r) {
  AlgebraicNumber t = r;
  for (int i = 0; i < 64; ++i) alg_refine(t);
  return mpq_class((t.lo + t.hi) / 2).get_d();
}

SppTriple alg_spp(const AlgebraicSet& s) {
  const auto& e = s.exponents;
  const std::size_t n = e.size();
  if (n == 0) throw std::invalid_argument("empty exponent set");
  if (!std::is_sorted(e.begin(), e.end()) ||
      std::adjacent_find(e.begin(), e.end()) != e.end())
    throw std::invalid_argument("exponents must be strictly increasing");
  if (s.ratio.lo < 1) throw std::invalid_argument("ratio must exceed 1");

  // Products r^(ei+ej) are faithful to exponent sums since r > 1.
  std::vector<u64> sums;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) sums.push_back(u64(e[i]) + e[j]);
  std::sort(sums.begin(), sums.end());
  const u64 prodSize = std::unique(sums.begin(), sums.end()) - sums.begin();

  // Sums r^ei + r^ej are deduplicated by exact zero-testing of differences.
  std::vector<ZPoly> reps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ZPoly v(std::max(e[i], e[j]) + 1, 0);
      v[e[i]] += 1;
      v[e[j]] += 1;
      bool fresh = true;
      for (const ZPoly& rep : reps)
        if (alg_is_zero(zp_sub(v, rep), s.ratio)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(std::move(v));
    }
  return SppTriple{n, reps.size(), prodSize};
}

}  // namespace spp
