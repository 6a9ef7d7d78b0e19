#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <vector>

#include "spp/bounds.hpp"
#include "spp/generators.hpp"

using namespace spp;

TEST_CASE("easy bounds") {
  CHECK(easy_bounds(1) == std::pair<u64, u64>{1, 1});
  CHECK(easy_bounds(5) == std::pair<u64, u64>{9, 15});
  CHECK(easy_bounds(6) == std::pair<u64, u64>{11, 21});
}

TEST_CASE("sez region") {
  // n=5: product sizes up to 11 force a Sidon sumset of 15
  CHECK(sez_excludes(5, 12, 11));
  CHECK(sez_excludes(5, 14, 9));
  CHECK_FALSE(sez_excludes(5, 15, 11));  // Sidon point itself is allowed
  CHECK_FALSE(sez_excludes(5, 12, 12));
  CHECK(sez_excludes(6, 20, 14));
  CHECK_FALSE(sez_excludes(6, 21, 14));
  CHECK_FALSE(sez_excludes(2, 3, 2));
  CHECK_FALSE(sez_excludes(1, 1, 1));
}

TEST_CASE("grid count upper bound") {
  CHECK(spp_count_upper(3) == 3);
  CHECK(spp_count_upper(4) == 10);
  CHECK(spp_count_upper(5) == 31);
  CHECK(spp_count_upper(6) == 81);
  CHECK(spp_count_upper(7) == 181);  // (49-21+4)^2/4 - 25*6/2
}

TEST_CASE("small product sizes force Sidon sumsets (brute corroboration)") {
  // |AA| <= 3n-4 implies |A+A| = n(n+1)/2, over all A in [18], 3 <= |A| <= 5.
  std::vector<u64> scratch;
  u64 hypothesisMet = 0, exceptions = 0;
  enumerate_interval_subsets(18, 5, [&](std::span<const u64> s) {
    const u64 n = s.size();
    if (n < 3) return;
    const SppTriple t = spp_of_raw(s, scratch);
    if (t.prodSize <= 3 * n - 4) {
      ++hypothesisMet;
      if (t.sumSize != n * (n + 1) / 2) ++exceptions;
    }
  });
  CHECK(exceptions == 0);
  CHECK(hypothesisMet > 0);
}

TEST_CASE("solymosi inequality") {
  CHECK(solymosi_holds(SppTriple{5, 15, 9}));
  CHECK(solymosi_holds(SppTriple{1, 1, 1}));
  CHECK(solymosi_holds(SppTriple{6, 11, 18}));
  // i^2 j floor(log2 n + 1) < n^4: impossible coordinates, but the predicate
  // is pure arithmetic.
  CHECK_FALSE(solymosi_holds(SppTriple{100, 199, 199}));
}

TEST_CASE("solymosi void membership in K coordinates") {
  // GP corner (x,y) = (2,1): 2x+y = 5 > 4, outside.
  CHECK_FALSE(in_solymosi_void(nspp_point(SppTriple{6, 21, 11}, Scheme::K)));
  // (11,20): x = 1, y < 2, safely below the 2x+y = 4 boundary.
  CHECK(in_solymosi_void(nspp_point(SppTriple{6, 11, 20}, Scheme::K)));
}

TEST_CASE("chang bound") {
  // prodSize >= C n makes it vacuous
  CHECK(chang_bound_holds(SppTriple{6, 11, 21}, mpq_class(1)));
  // C=1, j=5 < 6: need i >= 36^-1 * 36, i.e. i^1 * 36^1 >= 6^2
  CHECK(chang_bound_holds(SppTriple{6, 11, 5}, mpq_class(1)));
  CHECK_FALSE(chang_bound_holds(SppTriple{36, 35, 35}, mpq_class(1)));
}

TEST_CASE("sum-times-product-squared conjecture, both readings") {
  // GP pair (n(n+1)/2, 2n-1): equality for the GP-consistent constant,
  // violation for the printed one.
  for (u64 n = 3; n <= 8; ++n) {
    const SppTriple gp{n, n * (n + 1) / 2, 2 * n - 1};
    CHECK(conjecture_sv_holds(gp, SvVariant::GpConsistent));
    CHECK(conjecture_sv_equality(gp, SvVariant::GpConsistent));
    CHECK_FALSE(conjecture_sv_holds(gp, SvVariant::AsPrinted));
  }
  // generic interior point: both hold, neither with equality
  const SppTriple mid{5, 13, 13};
  CHECK(conjecture_sv_holds(mid, SvVariant::GpConsistent));
  CHECK(conjecture_sv_holds(mid, SvVariant::AsPrinted));
  CHECK_FALSE(conjecture_sv_equality(mid, SvVariant::GpConsistent));
}

TEST_CASE("golden threshold is the certified ceiling of n^phi") {
  // 300-bit directed-rounding oracle: value strictly between floor and
  // ceiling brackets n^phi, and golden_threshold returns the ceiling.
  mpfr_t phi, v, lo, hi;
  mpfr_inits2(300, phi, v, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt_ui(phi, 5, MPFR_RNDN);
  mpfr_add_ui(phi, phi, 1, MPFR_RNDN);
  mpfr_div_ui(phi, phi, 2, MPFR_RNDN);
  for (u64 n = 2; n <= 64; ++n) {
    mpfr_set_ui(v, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_log(v, v, MPFR_RNDN);
    mpfr_mul(v, v, phi, MPFR_RNDN);
    mpfr_exp(v, v, MPFR_RNDN);
    // n^phi is irrational (Gelfond-Schneider), so its ceiling is floor+1.
    const u64 expect = mpfr_get_ui(v, MPFR_RNDD) + 1;
    INFO("n=", n);
    CHECK(golden_threshold(n) == expect);
  }
  mpfr_clears(phi, v, lo, hi, static_cast<mpfr_ptr>(nullptr));
  CHECK(golden_threshold(2) == 4);   // 2^phi = 3.069...
  CHECK(golden_threshold(4) == 10);  // 9.44...
}

TEST_CASE("golden conjecture on concrete pairs") {
  CHECK(golden_conjecture_holds(SppTriple{2, 3, 3}));
  CHECK(golden_conjecture_holds(SppTriple{5, 10, 12}));
  // sums+products below the threshold
  CHECK_FALSE(golden_conjecture_holds(SppTriple{32, 100, 90}));
}

TEST_CASE("witness max bound") {
  CHECK(witness_max_bound(5) == 32);    // 2^5
  CHECK(witness_max_bound(6) == 128);   // 2^7
  CHECK(witness_max_bound(12) == 65536);
}

TEST_CASE("region verdict composes the individual tests") {
  const RegionVerdict v = region_verdict(SppTriple{5, 15, 9});
  CHECK_FALSE(v.excludedBySEZ);
  CHECK_FALSE(v.inSolymosiVoid);
  CHECK(v.svGpConsistent);
  CHECK_FALSE(v.svAsPrinted);
  CHECK(v.satisfiesGoldenConjecture);

  CHECK(region_verdict(SppTriple{5, 12, 11}).excludedBySEZ);
}
