#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spp/generators.hpp"
#include "spp/store.hpp"

using namespace spp;

namespace {

Dataset random_dataset(u64 seed, int sets) {
  SplitMix64 rng(seed);
  Dataset d;
  for (int k = 0; k < sets; ++k) {
    const u64 n = 2 + rng.bounded(4);
    d.ingest(random_interval_subset(30, n, rng.next()), "r" + std::to_string(seed));
  }
  return d;
}

std::string to_text(const Dataset& d) {
  std::ostringstream out;
  d.write(out);
  return out.str();
}

}  // namespace

TEST_CASE("records canonicalize on construction") {
  const WitnessRecord r = WitnessRecord::make(PosIntSet({2, 4, 8}), "t");
  CHECK(r.witness == PosIntSet({1, 2, 4}));
  CHECK(r.maxElement == 4);
  CHECK(r.triple == SppTriple{3, 6, 5});
  CHECK(r.sourceTag == "t");
}

TEST_CASE("ingest keeps the best witness per pair") {
  Dataset d;
  // {1,2,4,16,64} and {1,2,4,16,32} both give (5,15,11)
  CHECK(d.ingest(PosIntSet({1, 2, 4, 16, 64}), "big") == Dataset::Ingest::New);
  CHECK(d.size() == 1);
  CHECK(d.ingest(PosIntSet({1, 2, 4, 16, 32}), "small") == Dataset::Ingest::Improved);
  CHECK(d.size() == 1);
  // same canonical witness, later tag: sorts after the stored record
  CHECK(d.ingest(PosIntSet({2, 4, 8, 32, 64}), "t-dup") == Dataset::Ingest::Unchanged);
  const TripleKey key{5, 15, 11};
  CHECK(d.records().at(key).maxElement == 32);
  CHECK(d.records().at(key).sourceTag == "small");
  // ...but an equal witness under an earlier tag takes the slot: the order
  // is total, so merge results cannot depend on ingest order
  CHECK(d.ingest(PosIntSet({1, 2, 4, 16, 32}), "earlier") == Dataset::Ingest::Improved);
  CHECK(d.records().at(key).sourceTag == "earlier");
  CHECK(d.ingest(PosIntSet({1, 2, 3}), "other") == Dataset::Ingest::New);
  CHECK(d.size() == 2);
}

TEST_CASE("ties break on witness then source tag") {
  // same triple, same max: lexicographically smaller witness wins
  Dataset d;
  d.ingest(PosIntSet({1, 3, 4, 8, 9}), "w1");    // (14,14), max 9
  const auto st = d.ingest(PosIntSet({1, 2, 6, 7, 9}), "w2");  // (14,15) different pair
  CHECK(st == Dataset::Ingest::New);
}

TEST_CASE("upsert validates the record invariants") {
  Dataset d;
  WitnessRecord bad = WitnessRecord::make(PosIntSet({1, 2, 4}), "t");
  bad.maxElement = 5;
  CHECK_THROWS_AS(d.upsert(bad), std::invalid_argument);
  WitnessRecord wrongN = WitnessRecord::make(PosIntSet({1, 2, 4}), "t");
  wrongN.triple.n = 4;
  CHECK_THROWS_AS(d.upsert(wrongN), std::invalid_argument);
}

TEST_CASE("merge is commutative, associative, idempotent") {
  for (u64 seed = 1; seed <= 12; ++seed) {
    const Dataset a = random_dataset(seed, 25);
    const Dataset b = random_dataset(seed + 100, 25);
    const Dataset c = random_dataset(seed + 200, 25);
    CHECK(merge(a, b) == merge(b, a));
    CHECK(merge(merge(a, b), c) == merge(a, merge(b, c)));
    CHECK(merge(a, a) == a);
    CHECK(merge(merge(a, b), b) == merge(a, b));
  }
}

TEST_CASE("file round-trip is byte identical") {
  const Dataset d = merge(random_dataset(5, 40), random_dataset(6, 40));
  const std::string first = to_text(d);
  std::istringstream in(first);
  const Dataset back = Dataset::read(in);
  CHECK(back == d);
  CHECK(to_text(back) == first);
  CHECK(first.find("\r") == std::string::npos);
  CHECK(first.rfind("n,sum,prod,max,set,source\n", 0) == 0);
}

TEST_CASE("the reader rejects every tampered field") {
  Dataset d;
  d.ingest(PosIntSet({1, 2, 4}), "t");
  d.ingest(PosIntSet({1, 2, 3, 4}), "t");
  const std::string good = to_text(d);
  // "3,6,5,4,1 2 4,t" and "4,7,9,4,1 2 3 4,t" under the header

  auto rejects = [](std::string text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(Dataset::read(in), std::runtime_error);
  };

  {  // claimed pair differs from the recomputation
    std::string t = good;
    const auto pos = t.find("3,6,5");
    REQUIRE(pos != std::string::npos);
    t.replace(pos, 5, "3,7,5");
    rejects(t);
  }
  {  // witness not gcd-primitive
    std::string t = good;
    const auto pos = t.find("3,6,5,4,1 2 4,t");
    REQUIRE(pos != std::string::npos);
    t.replace(pos, 15, "3,6,5,8,2 4 8,t");
    rejects(t);
  }
  {  // max element claim wrong
    std::string t = good;
    const auto pos = t.find("3,6,5,4");
    REQUIRE(pos != std::string::npos);
    t.replace(pos, 7, "3,6,5,9");
    rejects(t);
  }
  {  // header missing
    rejects(good.substr(good.find('\n') + 1));
  }
  {  // records out of order: swap the two data lines
    const auto h = good.find('\n');
    const auto m = good.find('\n', h + 1);
    std::string t = good.substr(0, h + 1) + good.substr(m + 1) + good.substr(h + 1, m - h);
    rejects(t);
  }
  {  // duplicate key
    const auto h = good.find('\n');
    const auto m = good.find('\n', h + 1);
    const std::string line = good.substr(h + 1, m - h);
    rejects(good.substr(0, m + 1) + line + good.substr(m + 1));
  }
}

TEST_CASE("pair listing and exact coverage") {
  Dataset d;
  d.ingest(PosIntSet({1, 2, 3, 4, 6}), "t");  // (10,12)
  d.ingest(PosIntSet({1, 2, 4, 8, 16}), "t");  // (15,9)
  d.ingest(PosIntSet({1, 2, 4}), "t");         // different n
  CHECK(d.spp_set(5) == std::vector<std::pair<u64, u64>>{{10, 12}, {15, 9}});
  const auto [grid, upper] = d.coverage(5);
  CHECK(grid == mpq_class(2, 49));   // ((25-15+4)/2)^2 = 49
  CHECK(upper == mpq_class(2, 31));  // spp_count_upper(5) = 31
}

TEST_CASE("usage histogram counts witnesses containing k") {
  Dataset d;
  d.ingest(PosIntSet({1, 2, 3, 4, 6}), "t");
  d.ingest(PosIntSet({1, 2, 4, 8, 16}), "t");
  const std::vector<u64> h = d.usage_histogram(5, 4);
  REQUIRE(h.size() == 4);
  CHECK(h[0] == 2);  // element 1 in both
  CHECK(h[1] == 2);
  CHECK(h[2] == 1);  // element 3 only in the first
  CHECK(h[3] == 2);
}

TEST_CASE("minimax report") {
  Dataset d;
  CHECK_FALSE(d.minimax_report(5).has_value());
  d.ingest(PosIntSet({1, 2, 4, 8, 16}), "t");  // max(15,9) = 15
  d.ingest(PosIntSet({1, 2, 3, 4, 6}), "t");   // max(10,12) = 12
  d.ingest(PosIntSet({1, 2, 3, 4, 5}), "t");   // (9,14): max 14
  const auto best = d.minimax_report(5);
  REQUIRE(best.has_value());
  CHECK(best->triple == SppTriple{5, 10, 12});
}

TEST_CASE("envelope report filters by the K-coordinate line") {
  Dataset d;
  d.ingest(PosIntSet({1, 2}), "t");      // n=2: skipped
  d.ingest(PosIntSet({1, 2, 4}), "t");   // (6,5) -> K coords (2,1), score 4
  d.ingest(PosIntSet({1, 2, 5}), "t");   // (6,6) -> (2,2), score 6
  const auto rows = d.envelope_report(4.1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].triple == SppTriple{3, 6, 5});
  CHECK(d.envelope_report(3.9).empty());
  CHECK(d.envelope_report(6.1).size() == 2);
}

TEST_CASE("plot csv carries all four schemes, skipping n < 3") {
  Dataset d;
  d.ingest(PosIntSet({1, 2}), "t");
  d.ingest(PosIntSet({1, 2, 4}), "t");
  std::ostringstream out;
  d.write_plot_csv(out);
  std::istringstream lines(out.str());
  std::string header, row, extra;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "n,i,j,kx,ky,lx,ly,k2x,k2y,k3x,k3y");
  REQUIRE(std::getline(lines, row));
  CHECK_FALSE(std::getline(lines, extra));  // the n=2 record is absent
  // K, K2, K3 at the corner (6,5) are exactly (2,1); L is log_3
  CHECK(row.rfind("3,6,5,", 0) == 0);
  std::istringstream fields(row);
  std::string tok;
  std::vector<std::string> cols;
  while (std::getline(fields, tok, ',')) cols.push_back(tok);
  REQUIRE(cols.size() == 11);
  CHECK(std::stod(cols[3]) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::stod(cols[4]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::stod(cols[5]) == doctest::Approx(std::log(6.0) / std::log(3.0)).epsilon(1e-9));
  CHECK(std::stod(cols[9]) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::stod(cols[10]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("verdict csv flags the sez region") {
  Dataset d;
  d.ingest(PosIntSet({1, 2, 4, 8, 16}), "t");  // (15,9): sv equality pair
  std::ostringstream out;
  d.write_verdict_csv(out);
  std::istringstream lines(out.str());
  std::string header, row;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "n,i,j,sez,void,sv_as_printed,sv_variant,golden");
  REQUIRE(std::getline(lines, row));
  CHECK(row == "5,15,9,0,0,0,1,1");
}

TEST_CASE("provenance log records every accepted ingest") {
  Dataset d;
  d.ingest(PosIntSet({1, 2, 4, 16, 64}), "a");
  d.ingest(PosIntSet({1, 2, 4, 16, 32}), "b");
  d.ingest(PosIntSet({1, 2, 4, 16, 64}), "c");  // unchanged: no log line
  REQUIRE(d.provenance().size() == 2);
  CHECK(d.provenance()[0].rfind("new", 0) == 0);
  CHECK(d.provenance()[1].rfind("improved", 0) == 0);
}
