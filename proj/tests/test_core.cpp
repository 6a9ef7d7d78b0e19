#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "spp/core.hpp"

using namespace spp;

TEST_CASE("pair sizes on hand-computed sets") {
  // {1,2,3,4}: sums 2..8, products 1,2,3,4,6,8,9,12,16.
  CHECK(spp_of(PosIntSet({1, 2, 3, 4})) == SppTriple{4, 7, 9});
  // singleton and pair
  CHECK(spp_of(PosIntSet({7})) == SppTriple{1, 1, 1});
  CHECK(spp_of(PosIntSet({2, 3})) == SppTriple{2, 3, 3});
  // GP: minimal products 2n-1, Sidon sums n(n+1)/2
  CHECK(spp_of(PosIntSet({1, 2, 4, 8, 16})) == SppTriple{5, 15, 9});
  // AP: minimal sums 2n-1
  CHECK(sumset_size(PosIntSet({5, 8, 11, 14})) == 7);
  CHECK(spp_of(PosIntSet({1, 2, 3, 4, 5, 6})) == SppTriple{6, 11, 18});
}

TEST_CASE("pair sizes are dilation invariant") {
  const PosIntSet a({1, 2, 3, 4, 6});
  const PosIntSet b({7, 14, 21, 28, 42});
  CHECK(spp_of(a) == spp_of(b));
}

TEST_CASE("spp_of_raw matches spp_of and reuses scratch") {
  std::vector<u64> scratch;
  const std::vector<u64> xs{1, 2, 5, 10, 12};
  const SppTriple first = spp_of_raw(xs, scratch);
  CHECK(first == spp_of(PosIntSet(xs)));
  CHECK(first == SppTriple{5, 15, 14});
  const std::vector<u64> ys{3, 4, 5, 6, 8};
  CHECK(spp_of_raw(ys, scratch) == SppTriple{5, 10, 14});
  CHECK(spp_of_raw(xs, scratch) == first);
}

TEST_CASE("construction rejects bad element lists") {
  CHECK_THROWS_AS(PosIntSet({}), std::invalid_argument);
  CHECK_THROWS_AS(PosIntSet({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PosIntSet({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PosIntSet({kElementCap + 1}), std::invalid_argument);
  CHECK(PosIntSet({3, 2}).elements() == std::vector<u64>{2, 3});  // input is sorted
}

TEST_CASE("element cap keeps products inside u64") {
  // Largest admissible elements: products reach 2^62 < 2^64.
  const PosIntSet a({kElementCap - 1, kElementCap});
  CHECK(spp_of(a) == SppTriple{2, 3, 3});
}

TEST_CASE("parse and to_text round-trip") {
  const PosIntSet a = PosIntSet::parse("1 2 4 8");
  CHECK(a.elements() == std::vector<u64>{1, 2, 4, 8});
  CHECK(a.to_text() == "1 2 4 8");
  CHECK(PosIntSet::parse(a.to_text()) == a);
  CHECK_THROWS_AS(PosIntSet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PosIntSet::parse("1 x 3"), std::invalid_argument);
}

TEST_CASE("canonicalize divides out the gcd only") {
  CHECK(canonicalize(PosIntSet({2, 4, 8})) == PosIntSet({1, 2, 4}));
  CHECK(canonicalize(PosIntSet({3, 6, 12})) == PosIntSet({1, 2, 4}));
  CHECK(canonicalize(PosIntSet({6, 10, 15})) == PosIntSet({6, 10, 15}));
  CHECK(canonicalize(PosIntSet({5})) == PosIntSet({1}));
}

TEST_CASE("classify recognizes structure") {
  const SetClass ap = classify(PosIntSet({3, 5, 7, 9}));
  CHECK(ap.isAP);
  CHECK_FALSE(ap.isGP);
  CHECK_FALSE(ap.isSidon);

  const SetClass gp = classify(PosIntSet({1, 2, 4, 8}));
  CHECK(gp.isGP);
  CHECK_FALSE(gp.isAP);
  CHECK(gp.isSidon);
  CHECK_FALSE(gp.isMultSidon);

  // {1,2,5,11}: Sidon both ways.
  const SetClass s = classify(PosIntSet({1, 2, 5, 11}));
  CHECK(s.isSidon);
  CHECK(s.isMultSidon);

  // two-element sets are everything at once
  const SetClass two = classify(PosIntSet({2, 3}));
  CHECK(two.isAP);
  CHECK(two.isGP);
  CHECK(two.isSidon);
  CHECK(two.isMultSidon);
}

TEST_CASE("triple ordering is lexicographic") {
  CHECK(SppTriple{5, 10, 12} < SppTriple{5, 10, 13});
  CHECK(SppTriple{5, 10, 12} < SppTriple{5, 11, 1});
  CHECK(SppTriple{5, 10, 12} < SppTriple{6, 1, 1});
}
