#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spp/bounds.hpp"
#include "spp/core.hpp"
#include "spp/exact.hpp"
#include "spp/generators.hpp"
#include "spp/prototypes.hpp"
#include "spp/store.hpp"

namespace {

using namespace spp;

// Data goes to --out when given, stdout otherwise; diagnostics go to stderr.
void with_output(const std::string& outPath, const std::function<void(std::ostream&)>& fn) {
  if (outPath.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream f(outPath, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + outPath);
  fn(f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + outPath);
}

std::string campaign_text(const SearchCampaign& c) {
  std::ostringstream ss;
  ss << "strategy=" << strategy_name(c.strategy) << " N=" << c.N << " nMin=" << c.nMin
     << " nMax=" << c.nMax << " y=" << c.y << " seed=";
  if (c.hasSeed)
    ss << c.seed;
  else
    ss << '-';
  ss << " sampleCount=" << c.sampleCount << " shiftMax=" << c.shiftMax
     << " augmentMax=" << c.augmentMax << " dilMax=" << c.dilMax << " source=" << c.sourceTag;
  return ss.str();
}

void write_certificate(const std::string& path, const std::vector<PointProof>& log) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open certificate file " + path);
  f << "i\tj\tstatus\tevidence\n";
  for (const PointProof& pp : log)
    f << pp.i << '\t' << pp.j << '\t' << point_status_name(pp.status) << '\t' << pp.evidence
      << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sum-product pair toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "run a search campaign and emit a dataset");
  std::string genStrategy, genConfig, genInput, genOut, genSource;
  SearchCampaign camp;
  u64 genSeed = 0;
  auto* optStrategy = gen->add_option("--strategy", genStrategy, "campaign strategy name");
  auto* optN = gen->add_option("--N", camp.N, "interval / divisor / diameter bound");
  auto* optNMin = gen->add_option("--n-min", camp.nMin, "smallest set size kept");
  auto* optNMax = gen->add_option("--n-max", camp.nMax, "largest set size kept");
  auto* optY = gen->add_option("--y", camp.y, "prime bound for friable prefixes");
  auto* optSeed = gen->add_option("--seed", genSeed, "PRNG seed (required for random strategies)");
  auto* optSamples = gen->add_option("--sample-count", camp.sampleCount, "random samples per size");
  auto* optShift = gen->add_option("--shift-max", camp.shiftMax, "largest translate");
  auto* optAugment = gen->add_option("--augment-max", camp.augmentMax, "largest added element");
  auto* optDil = gen->add_option("--dil-max", camp.dilMax, "largest dilation (diameter family)");
  auto* optSource = gen->add_option("--source", genSource, "source tag stored with each witness");
  gen->add_option("--config", genConfig, "campaign config file (key=value lines)");
  gen->add_option("--input", genInput, "dataset whose witnesses seed shift/augment");
  gen->add_option("--out", genOut, "output dataset file (default stdout)");

  // merge
  auto* mrg = app.add_subcommand("merge", "merge dataset files keywise");
  std::vector<std::string> mrgInputs;
  std::string mrgOut;
  mrg->add_option("inputs", mrgInputs, "dataset files")->required()->expected(-1);
  mrg->add_option("--out", mrgOut, "output dataset file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "revalidate a dataset and check invariants");
  std::string verDataset, verCheck = "all", verVerdicts;
  ver->add_option("--dataset", verDataset, "dataset file")->required();
  ver->add_option("--check", verCheck, "which check to run")
      ->check(CLI::IsMember({"all", "revalidate", "bounds", "sez", "solymosi", "golden", "sv"}));
  ver->add_option("--verdicts", verVerdicts, "write region-verdict CSV here");

  // exact
  auto* exa = app.add_subcommand("exact", "compute SPP(n) exactly (n <= 6) or the n=7 partial");
  u32 exactN = 0, exactJobs = 1;
  std::string exactCert;
  exa->add_option("--n", exactN, "set size (1..7)")->required()->check(CLI::Range(1, 7));
  exa->add_option("--jobs", exactJobs, "worker threads")->check(CLI::Range(1, 256));
  exa->add_option("--certificate", exactCert, "write per-grid-point status file here");

  // export
  auto* exp = app.add_subcommand("export", "emit normalized plot CSV for a dataset");
  std::string expDataset, expOut;
  exp->add_option("--dataset", expDataset, "dataset file")->required();
  exp->add_option("--out", expOut, "output CSV file (default stdout)");

  // stats
  auto* sta = app.add_subcommand("stats", "dataset reports");
  std::string staDataset;
  u64 staN = 0, staKmax = 0;
  double staEnvelope = 0;
  bool staCoverage = false, staMinimax = false;
  sta->add_option("--dataset", staDataset, "dataset file")->required();
  auto* optStaN = sta->add_option("--n", staN, "set size the report is about");
  sta->add_flag("--coverage", staCoverage, "pair-count coverage ratios (needs --n)");
  sta->add_flag("--minimax", staMinimax, "minimal max(|A+A|,|AA|) record (needs --n)");
  auto* optKmax = sta->add_option("--kmax", staKmax, "usage histogram over 1..kmax (needs --n)");
  auto* optEnv = sta->add_option("--envelope", staEnvelope, "records with K(i)+2K(j) <= threshold");

  // prototypes
  auto* pro = app.add_subcommand("prototypes", "count or list addition-table prototypes");
  u32 proN = 0;
  bool proRealizable = false, proList = false;
  pro->add_option("--n", proN, "order (1..7; realizability needs <= 6)")
      ->required()
      ->check(CLI::Range(1, 7));
  pro->add_flag("--realizable", proRealizable, "also decide realizability");
  pro->add_flag("--list", proList, "print prototype text forms");

  // check-tables
  auto* chk = app.add_subcommand("check-tables", "replay the transcribed witness tables");
  std::string chkFixtures = "data/witness_tables.txt";
  chk->add_option("--fixtures", chkFixtures, "fixture file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(gen)) {
      if (!genConfig.empty()) {
        std::ifstream f(genConfig);
        if (!f) throw std::invalid_argument("cannot open config file " + genConfig);
        std::ostringstream buf;
        buf << f.rdbuf();
        camp = parse_campaign(buf.str());
      }
      if (optStrategy->count()) camp.strategy = strategy_from_name(genStrategy);
      if (optSeed->count()) {
        camp.seed = genSeed;
        camp.hasSeed = true;
      }
      if (optSource->count()) camp.sourceTag = genSource;
      // Numeric flags were parsed straight into camp; a loaded config just
      // replaced them, so re-apply any that were given explicitly.
      if (!genConfig.empty()) {
        if (optN->count()) camp.N = std::stoull(optN->results()[0]);
        if (optNMin->count()) camp.nMin = static_cast<u32>(std::stoul(optNMin->results()[0]));
        if (optNMax->count()) camp.nMax = static_cast<u32>(std::stoul(optNMax->results()[0]));
        if (optY->count()) camp.y = std::stoull(optY->results()[0]);
        if (optSamples->count()) camp.sampleCount = std::stoull(optSamples->results()[0]);
        if (optShift->count()) camp.shiftMax = static_cast<u32>(std::stoul(optShift->results()[0]));
        if (optAugment->count())
          camp.augmentMax = static_cast<u32>(std::stoul(optAugment->results()[0]));
        if (optDil->count()) camp.dilMax = static_cast<u32>(std::stoul(optDil->results()[0]));
      }
      camp.validate();
      std::vector<PosIntSet> inputs;
      if (!genInput.empty()) {
        Dataset in = Dataset::read_file(genInput);
        for (const auto& [key, rec] : in.records()) inputs.push_back(rec.witness);
      }
      if ((camp.strategy == Strategy::Shift || camp.strategy == Strategy::Augment) &&
          inputs.empty())
        throw std::invalid_argument("shift/augment campaigns need --input with a nonempty dataset");
      Dataset ds;
      u64 emitted = run_campaign(camp, std::span<const PosIntSet>(inputs),
                                 [&](std::span<const u64> s) {
                                   ds.ingest(PosIntSet(std::vector<u64>(s.begin(), s.end())),
                                             camp.sourceTag);
                                 });
      std::cerr << "config: generate " << campaign_text(camp) << "\n";
      std::cerr << "emitted " << emitted << " sets, dataset holds " << ds.size() << " records\n";
      with_output(genOut, [&](std::ostream& os) { ds.write(os); });
      return 0;
    }

    if (app.got_subcommand(mrg)) {
      Dataset acc = Dataset::read_file(mrgInputs[0]);
      for (std::size_t k = 1; k < mrgInputs.size(); ++k)
        acc = merge(acc, Dataset::read_file(mrgInputs[k]));
      std::cerr << "config: merge " << mrgInputs.size() << " files\n";
      std::cerr << "merged dataset holds " << acc.size() << " records\n";
      with_output(mrgOut, [&](std::ostream& os) { acc.write(os); });
      return 0;
    }

    if (app.got_subcommand(ver)) {
      std::cerr << "config: verify dataset=" << verDataset << " check=" << verCheck << "\n";
      Dataset ds = Dataset::read_file(verDataset);  // revalidates every record
      std::vector<std::string> problems;
      u64 asPrintedViolations = 0;
      bool doAll = verCheck == "all";
      for (const auto& [key, rec] : ds.records()) {
        const auto [n, i, j] = key;
        const SppTriple& t = rec.triple;
        std::string at = "(" + std::to_string(n) + "," + std::to_string(i) + "," +
                         std::to_string(j) + ")";
        if (doAll || verCheck == "bounds") {
          auto [lo, hi] = easy_bounds(n);
          if (i < lo || i > hi || j < lo || j > hi)
            problems.push_back(at + " outside the easy bounds");
        }
        if (doAll || verCheck == "sez")
          if (sez_excludes(n, i, j)) problems.push_back(at + " lies in the Sidon-excluded region");
        if (doAll || verCheck == "solymosi")
          if (n >= 1 && !solymosi_holds(t)) problems.push_back(at + " violates the Solymosi bound");
        if (doAll || verCheck == "golden")
          if (n >= 2 && !golden_conjecture_holds(t))
            problems.push_back(at + " violates the golden-ratio conjecture");
        if (doAll || verCheck == "sv") {
          if (!conjecture_sv_holds(t, SvVariant::GpConsistent))
            problems.push_back(at + " violates the sum-product-squared conjecture (GP-consistent)");
          if (!conjecture_sv_holds(t, SvVariant::AsPrinted)) ++asPrintedViolations;
        }
      }
      if (!verVerdicts.empty())
        with_output(verVerdicts, [&](std::ostream& os) { ds.write_verdict_csv(os); });
      if (asPrintedViolations > 0)
        std::cerr << "note: " << asPrintedViolations
                  << " records violate the as-printed (2n+1)^2 conjecture form (informational)\n";
      for (const std::string& p : problems) std::cerr << "FAIL: " << p << "\n";
      std::cerr << (problems.empty() ? "verify: clean, " : "verify: FAILED, ") << ds.size()
                << " records\n";
      return problems.empty() ? 0 : 1;
    }

    if (app.got_subcommand(exa)) {
      std::cerr << "config: exact n=" << exactN << " jobs=" << exactJobs << "\n";
      if (exactN <= 6) {
        ExactResult r = compute_exact(exactN, exactJobs);
        std::cout << "# SPP(" << exactN << "): " << r.integerPairs.size() << " pairs\n";
        for (auto [i, j] : r.integerPairs) std::cout << i << ',' << j << '\n';
        if (exactN >= 4) {
          std::cout << "# real delta: " << r.realDelta.size() << " pairs\n";
          for (auto [i, j] : r.realDelta) std::cout << i << ',' << j << '\n';
        }
        write_certificate(exactCert, r.proofLog);
        std::cerr << "grid fully classified, " << r.witnesses.size() << " witnesses stored\n";
      } else {
        Spp7Report r = check_spp7_partial(exactJobs);
        std::cout << "# SPP(7) partial: " << r.unresolved.size() << " unresolved\n";
        for (auto [i, j] : r.unresolved) std::cout << i << ',' << j << '\n';
        write_certificate(exactCert, r.proofLog);
        std::cerr << "witnessed " << r.witnesses.size() << " triples\n";
      }
      return 0;
    }

    if (app.got_subcommand(exp)) {
      std::cerr << "config: export dataset=" << expDataset << "\n";
      Dataset ds = Dataset::read_file(expDataset);
      with_output(expOut, [&](std::ostream& os) { ds.write_plot_csv(os); });
      return 0;
    }

    if (app.got_subcommand(sta)) {
      std::cerr << "config: stats dataset=" << staDataset << "\n";
      Dataset ds = Dataset::read_file(staDataset);
      bool any = false;
      if (staCoverage) {
        any = true;
        if (!optStaN->count()) throw std::invalid_argument("--coverage needs --n");
        auto [easy, corollary] = ds.coverage(staN);
        std::cout << "coverage n=" << staN << ": " << easy.get_str() << " of the easy grid, "
                  << corollary.get_str() << " of the counting bound\n";
      }
      if (staMinimax) {
        any = true;
        if (!optStaN->count()) throw std::invalid_argument("--minimax needs --n");
        auto best = ds.minimax_report(staN);
        if (best)
          std::cout << "minimax n=" << staN << ": (" << best->triple.sumSize << ","
                    << best->triple.prodSize << ") witness " << best->witness.to_text() << "\n";
        else
          std::cout << "minimax n=" << staN << ": no records\n";
      }
      if (optKmax->count()) {
        any = true;
        if (!optStaN->count()) throw std::invalid_argument("--kmax needs --n");
        std::vector<u64> counts = ds.usage_histogram(staN, staKmax);
        for (u64 k = 1; k <= staKmax; ++k) std::cout << k << ',' << counts[k - 1] << '\n';
      }
      if (optEnv->count()) {
        any = true;
        for (const WitnessRecord& rec : ds.envelope_report(staEnvelope))
          std::cout << rec.triple.n << ',' << rec.triple.sumSize << ',' << rec.triple.prodSize
                    << ',' << rec.witness.to_text() << '\n';
      }
      if (!any) {
        std::cout << ds.size() << " records\n";
        u64 lastN = 0;
        for (const auto& [key, rec] : ds.records()) {
          if (key[0] != lastN) {
            lastN = key[0];
            std::cout << "n=" << lastN << ": " << ds.spp_set(lastN).size() << " pairs\n";
          }
        }
      }
      return 0;
    }

    if (app.got_subcommand(pro)) {
      std::cerr << "config: prototypes n=" << proN << (proRealizable ? " realizable" : "")
                << (proList ? " list" : "") << "\n";
      if (proRealizable && proN > 6)
        throw std::invalid_argument("realizability decisions support n <= 6");
      if (proList) {
        enumerate_prototypes(proN, [&](const Prototype& p) {
          if (!proRealizable || is_realizable(p)) std::cout << p.to_text() << '\n';
        });
      } else if (proRealizable) {
        u64 total = 0, realizable = 0;
        enumerate_prototypes(proN, [&](const Prototype& p) {
          ++total;
          if (is_realizable(p)) ++realizable;
        });
        std::cout << total << " prototypes, " << realizable << " realizable\n";
      } else {
        u64 total = enumerate_prototypes(proN, [](const Prototype&) {});
        std::cout << total << " prototypes\n";
      }
      return 0;
    }

    if (app.got_subcommand(chk)) {
      std::cerr << "config: check-tables fixtures=" << chkFixtures << "\n";
      std::vector<TableCheck> checks = verify_witness_tables(chkFixtures);
      u64 failures = 0;
      for (const TableCheck& c : checks) {
        if (c.pass) {
          std::cout << "ok   " << c.table << ": " << c.label << '\n';
        } else {
          ++failures;
          std::cout << "FAIL " << c.table << ": " << c.label << " -> " << c.detail << '\n';
        }
      }
      std::cerr << checks.size() << " rows, " << failures << " failures\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
