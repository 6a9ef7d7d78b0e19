#include "spp/store.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "spp/bounds.hpp"
#include "spp/normalize.hpp"

namespace spp {

namespace {

void check_tag(const std::string& tag) {
  if (tag.find_first_of(",\r\n") != std::string::npos)
    throw std::invalid_argument("source tag must not contain commas or line breaks");
}

// Total order deciding which record a key keeps.
bool record_less(const WitnessRecord& a, const WitnessRecord& b) {
  if (a.maxElement != b.maxElement) return a.maxElement < b.maxElement;
  if (a.witness != b.witness) return a.witness < b.witness;
  return a.sourceTag < b.sourceTag;
}

std::string key_text(const TripleKey& k) {
  return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]);
}

u64 parse_u64_field(const std::string& s, std::size_t lineNo, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error("dataset line " + std::to_string(lineNo) + ": bad " + what +
                             " field '" + s + "'");
  return std::stoull(s);
}

}  // namespace

WitnessRecord WitnessRecord::make(const PosIntSet& a, std::string sourceTag) {
  check_tag(sourceTag);
  PosIntSet canon = canonicalize(a);
  SppTriple t = spp_of(canon);
  u64 maxEl = canon.max();
  return WitnessRecord{t, std::move(canon), maxEl, std::move(sourceTag)};
}

Dataset::Ingest Dataset::ingest(const PosIntSet& a, const std::string& sourceTag) {
  return upsert(WitnessRecord::make(a, sourceTag));
}

Dataset::Ingest Dataset::upsert(const WitnessRecord& rec) {
  if (rec.maxElement != rec.witness.max() || rec.triple.n != rec.witness.size())
    throw std::invalid_argument("inconsistent witness record");
  TripleKey key{rec.triple.n, rec.triple.sumSize, rec.triple.prodSize};
  auto it = records_.find(key);
  if (it == records_.end()) {
    records_.emplace(key, rec);
    provenance_.push_back("new " + key_text(key) + " max " + std::to_string(rec.maxElement) +
                          " source " + rec.sourceTag);
    return Ingest::New;
  }
  if (record_less(rec, it->second)) {
    provenance_.push_back("improved " + key_text(key) + " max " +
                          std::to_string(rec.maxElement) + " source " + rec.sourceTag +
                          " (was max " + std::to_string(it->second.maxElement) + ")");
    it->second = rec;
    return Ingest::Improved;
  }
  return Ingest::Unchanged;
}

Dataset merge(const Dataset& a, const Dataset& b) {
  Dataset out = a;
  for (const auto& [key, rec] : b.records()) out.upsert(rec);
  return out;
}

std::vector<std::pair<u64, u64>> Dataset::spp_set(u64 n) const {
  std::vector<std::pair<u64, u64>> out;
  for (auto it = records_.lower_bound(TripleKey{n, 0, 0});
       it != records_.end() && it->first[0] == n; ++it)
    out.emplace_back(it->first[1], it->first[2]);
  return out;
}

std::pair<mpq_class, mpq_class> Dataset::coverage(u64 n) const {
  if (n < 3) throw std::invalid_argument("coverage requires n >= 3");
  mpz_class count(static_cast<unsigned long>(spp_set(n).size()));
  mpz_class nn(static_cast<unsigned long>(n));
  mpz_class half = (nn * nn - 3 * nn + 4) / 2;  // n^2-3n+4 is always even
  mpq_class easy(count, half * half);
  easy.canonicalize();
  mpq_class corollary(count, mpz_class(static_cast<unsigned long>(spp_count_upper(n))));
  corollary.canonicalize();
  return {easy, corollary};
}

std::vector<u64> Dataset::usage_histogram(u64 n, u64 kMax) const {
  std::vector<u64> counts(kMax, 0);
  for (auto it = records_.lower_bound(TripleKey{n, 0, 0});
       it != records_.end() && it->first[0] == n; ++it)
    for (u64 e : it->second.witness.elements())
      if (e <= kMax) ++counts[e - 1];
  return counts;
}

std::optional<WitnessRecord> Dataset::minimax_report(u64 n) const {
  std::optional<WitnessRecord> best;
  auto score = [](const TripleKey& k) {
    u64 i = k[1], j = k[2];
    return std::array<u64, 3>{std::max(i, j), i + j, i};
  };
  std::array<u64, 3> bestScore{};
  for (auto it = records_.lower_bound(TripleKey{n, 0, 0});
       it != records_.end() && it->first[0] == n; ++it) {
    std::array<u64, 3> s = score(it->first);
    if (!best || s < bestScore) {
      best = it->second;
      bestScore = s;
    }
  }
  return best;
}

std::vector<WitnessRecord> Dataset::envelope_report(double threshold) const {
  std::vector<WitnessRecord> out;
  for (const auto& [key, rec] : records_) {
    if (key[0] < 3) continue;
    double x = norm_K(key[0], static_cast<double>(key[1]));
    double y = norm_K(key[0], static_cast<double>(key[2]));
    if (x + 2 * y <= threshold) out.push_back(rec);
  }
  return out;
}

Dataset Dataset::read(std::istream& in) {
  static const std::string kHeader = "n,sum,prod,max,set,source";
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::runtime_error("dataset line 1: expected header '" + kHeader + "'");
  Dataset ds;
  TripleKey prev{0, 0, 0};
  std::size_t lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 6)
      throw std::runtime_error("dataset line " + std::to_string(lineNo) + ": expected 6 fields, got " +
                               std::to_string(fields.size()));
    TripleKey key{parse_u64_field(fields[0], lineNo, "n"),
                  parse_u64_field(fields[1], lineNo, "sum"),
                  parse_u64_field(fields[2], lineNo, "prod")};
    u64 maxClaim = parse_u64_field(fields[3], lineNo, "max");
    WitnessRecord rec = [&] {
      try {
        return WitnessRecord::make(PosIntSet::parse(fields[4]), fields[5]);
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error("dataset line " + std::to_string(lineNo) + ": " + e.what());
      }
    }();
    TripleKey recomputed{rec.triple.n, rec.triple.sumSize, rec.triple.prodSize};
    if (recomputed != key)
      throw std::runtime_error("dataset line " + std::to_string(lineNo) + ": stored triple " +
                               key_text(key) + " disagrees with recomputed " +
                               key_text(recomputed));
    if (rec.maxElement != maxClaim)
      throw std::runtime_error("dataset line " + std::to_string(lineNo) + ": stored max " +
                               std::to_string(maxClaim) + " disagrees with " +
                               std::to_string(rec.maxElement));
    if (rec.witness.to_text() != fields[4])
      throw std::runtime_error("dataset line " + std::to_string(lineNo) +
                               ": set field is not in canonical primitive form");
    if (!(prev < key))
      throw std::runtime_error("dataset line " + std::to_string(lineNo) +
                               ": keys out of order or duplicated");
    prev = key;
    ds.records_.emplace(key, std::move(rec));
  }
  ds.provenance_.push_back("loaded " + std::to_string(ds.records_.size()) + " records");
  return ds;
}

Dataset Dataset::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file " + path);
  return read(in);
}

void Dataset::write(std::ostream& out) const {
  out << "n,sum,prod,max,set,source\n";
  for (const auto& [key, rec] : records_)
    out << key[0] << ',' << key[1] << ',' << key[2] << ',' << rec.maxElement << ','
        << rec.witness.to_text() << ',' << rec.sourceTag << '\n';
}

void Dataset::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

namespace {

std::string fmt_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void Dataset::write_plot_csv(std::ostream& out) const {
  out << "n,i,j,kx,ky,lx,ly,k2x,k2y,k3x,k3y\n";
  for (const auto& [key, rec] : records_) {
    if (key[0] < 3) continue;
    u64 n = key[0];
    double i = static_cast<double>(key[1]);
    double j = static_cast<double>(key[2]);
    out << n << ',' << key[1] << ',' << key[2] << ',' << fmt_coord(norm_K(n, i)) << ','
        << fmt_coord(norm_K(n, j)) << ',' << fmt_coord(norm_L(n, i)) << ','
        << fmt_coord(norm_L(n, j)) << ',' << fmt_coord(norm_K2(n, i)) << ','
        << fmt_coord(norm_K2(n, j)) << ',' << fmt_coord(norm_K3(n, i)) << ','
        << fmt_coord(norm_K3(n, j)) << '\n';
  }
}

void Dataset::write_verdict_csv(std::ostream& out) const {
  out << "n,i,j,sez,void,sv_as_printed,sv_variant,golden\n";
  for (const auto& [key, rec] : records_) {
    if (key[0] < 3) continue;
    RegionVerdict v = region_verdict(rec.triple);
    out << key[0] << ',' << key[1] << ',' << key[2] << ',' << (v.excludedBySEZ ? 1 : 0) << ','
        << (v.inSolymosiVoid ? 1 : 0) << ',' << (v.svAsPrinted ? 1 : 0) << ','
        << (v.svGpConsistent ? 1 : 0) << ',' << (v.satisfiesGoldenConjecture ? 1 : 0) << '\n';
  }
}

}  // namespace spp
