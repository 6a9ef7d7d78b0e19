#include "spp/bounds.hpp"

#include <mpfr.h>

#include <bit>

namespace spp {

std::pair<u64, u64> easy_bounds(u64 n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return {2 * n - 1, n * (n + 1) / 2};
}

bool sez_excludes(u64 n, u64 i, u64 j) {
  if (n < 2) return false;  // 3n-4 < 1: no product count qualifies
  return j <= 3 * n - 4 && i < n * (n + 1) / 2;
}

u64 spp_count_upper(u64 n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 50000) throw std::overflow_error("spp_count_upper overflows u64");
  const u64 a = n * n - 3 * n + 4;  // always even
  return (a / 2) * (a / 2) - (n - 2) * (n - 2) * (n - 1) / 2;
}

bool solymosi_holds(const SppTriple& t) {
  if (t.n < 1) throw std::invalid_argument("n must be >= 1");
  if (t.n >= (u64{1} << 30)) throw std::overflow_error("n too large for exact check");
  using u128 = unsigned __int128;
  const u128 lhs = u128(t.sumSize) * t.sumSize * t.prodSize * std::bit_width(t.n);
  const u128 rhs = u128(t.n) * t.n * t.n * t.n;
  return lhs >= rhs;
}

bool in_solymosi_void(const NormalizedPair& p) {
  if (p.scheme != Scheme::K) throw std::invalid_argument("void test is defined in K coordinates");
  return 2 * p.x + p.y <= 4;
}

bool chang_bound_holds(const SppTriple& t, const mpq_class& C) {
  if (C <= 0) throw std::invalid_argument("C must be positive");
  if (mpq_class(t.prodSize) >= C * mpq_class(t.n)) return true;  // hypothesis empty
  // sumSize >= 36^(-C) n^2  <=>  sumSize^q * 36^p >= n^(2q)  for C = p/q > 0.
  const mpz_class p = C.get_num(), q = C.get_den();
  if (p > 256 || q > 256) throw std::invalid_argument("C too intricate for exact evaluation");
  mpz_class lhs, pw, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), mpz_class(t.sumSize).get_mpz_t(), q.get_ui());
  mpz_pow_ui(pw.get_mpz_t(), mpz_class(36).get_mpz_t(), p.get_ui());
  lhs *= pw;
  mpz_pow_ui(rhs.get_mpz_t(), mpz_class(t.n).get_mpz_t(), 2 * q.get_ui());
  return lhs >= rhs;
}

namespace {

using u128 = unsigned __int128;

// lhs = i * j^2, rhs = n(n+1)/2 * (2n +- 1)^2.
std::pair<u128, u128> sv_sides(const SppTriple& t, SvVariant v) {
  if (t.n >= (u64{1} << 20)) throw std::overflow_error("n too large for exact check");
  const u128 lhs = u128(t.sumSize) * t.prodSize * t.prodSize;
  const u64 f = v == SvVariant::AsPrinted ? 2 * t.n + 1 : 2 * t.n - 1;
  const u128 rhs = u128(t.n) * (t.n + 1) / 2 * f * f;
  return {lhs, rhs};
}

}  // namespace

bool conjecture_sv_holds(const SppTriple& t, SvVariant v) {
  const auto [lhs, rhs] = sv_sides(t, v);
  return lhs >= rhs;
}

bool conjecture_sv_equality(const SppTriple& t, SvVariant v) {
  const auto [lhs, rhs] = sv_sides(t, v);
  return lhs == rhs;
}

u64 golden_threshold(u64 n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  // ceil of n^phi from certified lower/upper bounds; escalate precision until
  // both round to the same integer.  n^phi is irrational (Gelfond-Schneider),
  // so the bounds eventually separate it from every integer.
  for (mpfr_prec_t prec = 128; prec <= 1 << 14; prec *= 2) {
    mpfr_t phi, v;
    mpfr_init2(phi, prec);
    mpfr_init2(v, prec);
    auto bound = [&](mpfr_rnd_t rnd) {
      mpfr_sqrt_ui(phi, 5, rnd);
      mpfr_add_ui(phi, phi, 1, rnd);
      mpfr_div_ui(phi, phi, 2, rnd);
      mpfr_set_ui(v, n, MPFR_RNDN);  // exact
      mpfr_pow(v, v, phi, rnd);      // monotone in the exponent for n >= 2
      mpfr_t r;
      mpfr_init2(r, prec);
      mpfr_ceil(r, v);
      const u64 c = mpfr_get_ui(r, MPFR_RNDN);
      mpfr_clear(r);
      return c;
    };
    const u64 lo = bound(MPFR_RNDD), hi = bound(MPFR_RNDU);
    mpfr_clear(phi);
    mpfr_clear(v);
    if (lo == hi) return lo;
  }
  throw std::runtime_error("golden threshold: precision cap reached");
}

bool golden_conjecture_holds(const SppTriple& t) {
  if (t.n < 2) throw std::invalid_argument("n must be >= 2");
  return t.sumSize + t.prodSize >= golden_threshold(t.n);
}

u64 witness_max_bound(u64 n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const u64 e = (3 * n - 4) / 2;
  if (e >= 64) throw std::overflow_error("bound exceeds u64");
  return u64{1} << e;
}

RegionVerdict region_verdict(const SppTriple& t) {
  RegionVerdict v;
  v.pair = t;
  v.excludedBySEZ = sez_excludes(t.n, t.sumSize, t.prodSize);
  v.inSolymosiVoid = in_solymosi_void(nspp_point(t, Scheme::K));
  v.svAsPrinted = conjecture_sv_holds(t, SvVariant::AsPrinted);
  v.svGpConsistent = conjecture_sv_holds(t, SvVariant::GpConsistent);
  v.satisfiesGoldenConjecture = golden_conjecture_holds(t);
  return v;
}

}  // namespace spp
