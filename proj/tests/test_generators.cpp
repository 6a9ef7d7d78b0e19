#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "spp/generators.hpp"

using namespace spp;

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 a(0);
  CHECK(a.next() == 0xE220A8397B1DCDAFULL);
  CHECK(a.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(a.next() == 0x06C45D188009454FULL);
  SplitMix64 b(1234567);
  CHECK(b.next() == 6457827717110365317ULL);
  CHECK(b.next() == 3203168211198807973ULL);
  CHECK(b.next() == 9817491932198370423ULL);
}

TEST_CASE("bounded draws stay in range and are deterministic") {
  SplitMix64 a(99), b(99);
  for (int k = 0; k < 200; ++k) {
    const u64 x = a.bounded(37);
    CHECK(x < 37);
    CHECK(x == b.bounded(37));
  }
}

TEST_CASE("interval subset enumeration is exhaustive and duplicate-free") {
  std::set<std::vector<u64>> seen;
  const u64 count = enumerate_interval_subsets(4, 4, [&](std::span<const u64> s) {
    CHECK(std::is_sorted(s.begin(), s.end()));
    seen.insert(std::vector<u64>(s.begin(), s.end()));
  });
  CHECK(count == 15);  // 2^4 - 1
  CHECK(seen.size() == 15);
  CHECK(enumerate_interval_subsets(4, 2, [](std::span<const u64>) {}) == 10);
  CHECK(enumerate_interval_subsets(20, 1, [](std::span<const u64>) {}) == 20);
}

TEST_CASE("k-subset enumeration") {
  const std::vector<u64> base{1, 2, 3, 4, 5, 6};
  std::set<std::vector<u64>> seen;
  const u64 count = enumerate_ksubsets(std::span<const u64>(base), 3, [&](std::span<const u64> s) {
    CHECK(s.size() == 3);
    CHECK(std::is_sorted(s.begin(), s.end()));
    seen.insert(std::vector<u64>(s.begin(), s.end()));
  });
  CHECK(count == 20);  // C(6,3)
  CHECK(seen.size() == 20);
  CHECK(enumerate_ksubsets(std::span<const u64>(base), 7, [](std::span<const u64>) {}) == 0);
}

TEST_CASE("diameter family: one emission per (pattern, dilation, shift)") {
  u64 withEndpoints = 0;
  const u64 count = enumerate_diameter_family(3, 2, 2, [&](std::span<const u64> s) {
    CHECK(std::is_sorted(s.begin(), s.end()));
    ++withEndpoints;
  });
  CHECK(count == 16);  // 2^(3-1) patterns, 2 dilations, 2 shifts
  CHECK(withEndpoints == 16);
}

TEST_CASE("divisors and divisor subsets") {
  CHECK(divisors(36) == std::vector<u64>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(divisor_count(36) == 9);
  CHECK(divisor_count(2048) == 12);
  CHECK(divisor_subsets(6, [](std::span<const u64>) {}) == 15);  // 4 divisors
  // 720720 has 240 divisors; the guard rejects it.
  CHECK_THROWS_AS(divisor_subsets(720720, [](std::span<const u64>) {}), std::invalid_argument);
}

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(19));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(21));
  CHECK(is_prime(1000003));
}

TEST_CASE("friable prefixes") {
  CHECK(friable_prefix(8, 3).elements == PosIntSet({1, 2, 3, 4, 6, 8, 9, 12}));
  CHECK(friable_prefix(5, 2).elements == PosIntSet({1, 2, 4, 8, 16}));
  CHECK(friable_prefix(7, 5).elements == PosIntSet({1, 2, 3, 4, 5, 6, 8}));
  // prefix chain
  const auto big = friable_prefix(40, 3).elements.elements();
  const auto small = friable_prefix(25, 3).elements.elements();
  CHECK(std::equal(small.begin(), small.end(), big.begin()));
  // 3-smooth numbers up to 100: 2^a 3^b, twenty of them
  CHECK(friable_count_within(3, 100) == 20);
  CHECK(friable_count_within(2, 1024) == 11);
}

TEST_CASE("friable elements have no prime factor above y") {
  for (u64 y : {3ULL, 5ULL, 7ULL, 13ULL}) {
    const FriableSet f = friable_prefix(60, y);
    for (u64 v : f.elements.elements()) {
      u64 m = v;
      for (u64 p = 2; p <= y; ++p)
        while (m % p == 0) m /= p;
      CHECK(m == 1);
    }
  }
}

TEST_CASE("distinct sampling is deterministic and in range") {
  SplitMix64 g1(7), g2(7);
  const std::vector<u64> s1 = sample_distinct(100, 10, g1);
  const std::vector<u64> s2 = sample_distinct(100, 10, g2);
  CHECK(s1 == s2);
  CHECK(s1.size() == 10);
  CHECK(std::is_sorted(s1.begin(), s1.end()));
  CHECK(std::adjacent_find(s1.begin(), s1.end()) == s1.end());
  CHECK(s1.back() <= 100);
}

TEST_CASE("random subsets reproduce under the same seed") {
  CHECK(random_interval_subset(50, 6, 123) == random_interval_subset(50, 6, 123));
  CHECK(random_interval_subset(50, 6, 123).size() == 6);
  CHECK(random_divisor_subset(360, 5, 9) == random_divisor_subset(360, 5, 9));
  const PosIntSet d = random_divisor_subset(360, 5, 9);
  for (u64 v : d.elements()) CHECK(360 % v == 0);
}

TEST_CASE("shift and augment closures") {
  const PosIntSet a({1, 2, 4});
  u64 shifts = shift_closure(a, 3, [&](std::span<const u64> s) { CHECK(s.size() == 3); });
  CHECK(shifts == 3);  // t = 1..3
  u64 augments = augment_closure(a, 8, [&](std::span<const u64> s) { CHECK(s.size() == 4); });
  CHECK(augments == 5);  // b in {3,5,6,7,8}
}

TEST_CASE("campaign parsing and validation") {
  const SearchCampaign c = parse_campaign(
      "strategy = exhaustive-interval\n"
      "# comment\n"
      "N = 12\n"
      "nMax = 5\n"
      "sourceTag = demo\n");
  CHECK(c.strategy == Strategy::ExhaustiveInterval);
  CHECK(c.N == 12);
  CHECK(c.nMax == 5);
  CHECK(c.sourceTag == "demo");
  CHECK_NOTHROW(c.validate());

  CHECK_THROWS_AS(parse_campaign("strategy = no-such-thing\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_campaign("bogusKey = 3\n"), std::invalid_argument);

  SearchCampaign random;
  random.strategy = Strategy::RandomInterval;
  random.N = 100;
  random.nMax = 5;
  random.sampleCount = 10;
  // randomized strategies demand an explicit seed
  CHECK_THROWS_AS(random.validate(), std::invalid_argument);
  random.seed = 1;
  random.hasSeed = true;
  CHECK_NOTHROW(random.validate());
}

TEST_CASE("campaigns emit exactly the strategy's sets") {
  SearchCampaign c;
  c.strategy = Strategy::ExhaustiveInterval;
  c.N = 5;
  c.nMax = 5;
  CHECK(run_campaign(c, {}, [](std::span<const u64>) {}) == 31);

  SearchCampaign f;
  f.strategy = Strategy::FriablePrefix;
  f.N = 100;  // max element bound
  f.y = 3;
  f.nMin = 3;
  f.nMax = 32;
  std::vector<std::size_t> sizes;
  run_campaign(f, {}, [&](std::span<const u64> s) { sizes.push_back(s.size()); });
  // twenty 3-smooth numbers <= 100, prefixes of size 3..20
  CHECK(sizes.size() == 18);
  CHECK(sizes.front() == 3);
  CHECK(sizes.back() == 20);
}
