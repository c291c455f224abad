// f5gb: Groebner bases with the signature engine and a Buchberger oracle.
//
// Exit codes: 0 success, 1 parse error, 2 engine error, 3 oracle mismatch,
// 4 certificate failure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "f5/buchberger.hpp"
#include "f5/certificate.hpp"
#include "f5/f5_engine.hpp"
#include "f5/falsifier.hpp"
#include "f5/ideal_spec.hpp"

namespace {

enum Exit { ok = 0, parse_failure = 1, engine_failure = 2, mismatch = 3, certificate_failure = 4 };

struct Options {
  std::string file;
  std::string engine = "f5";
  bool trace = false;
  bool certify = false;
  bool stats = false;
  bool improved_scan = false;
  bool print_ideal = false;
  std::string random;
  bool homogeneous = false;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t jobs = 1;
};

struct Outcome {
  int status = ok;
  std::string text;
};

std::string render_basis(std::string_view engine, const auto& basis, const auto& ring) {
  std::string out = "basis " + std::string(engine) + " " + std::to_string(basis.size()) + "\n";
  for (const auto& p : basis) out += "  " + ring.to_string(p) + "\n";
  return out;
}

template <class Field>
Outcome run_spec(const f5::IdealSpec& spec, const Field& field, const Options& opt) {
  using Poly = f5::Polynomial<Field>;
  f5::PolyRing<Field> ring(field, f5::order_of(spec), spec.variables);
  std::vector<Poly> gens = f5::generators_of(spec, ring);
  Outcome res;
  std::ostringstream out;
  if (opt.print_ideal) out << f5::render_ideal(spec);

  const bool run_f5 = opt.engine != "gm";
  const bool run_gm = opt.engine != "f5";
  std::vector<Poly> f5_basis, gm_basis;

  if (run_f5) {
    f5::EngineOptions<Field> eo;
    eo.trace = opt.trace;
    eo.witnesses = opt.certify;
    eo.verify_witnesses = opt.certify;
    f5::ShadowCheck<Field> shadow(ring);
    if (opt.improved_scan) eo.on_pair_created = shadow;
    auto result = f5::incremental_basis<Field>(gens, ring, eo);
    const auto& st = result.state;
    for (const auto& e : result.trace) out << e.text << "\n";
    f5_basis = f5::interreduce(st, ring);
    out << render_basis("f5", f5_basis, ring);
    if (opt.stats) out << f5::render_stats(st.stats, "f5", f5_basis.size());
    if (run_gm) {
      std::size_t unsound = f5::unsound_rejections(st, ring).size();
      out << "rejection-soundness: " << st.rejections.size() - unsound << " sound, " << unsound
          << " unsound\n";
      if (unsound) res.status = mismatch;
    }
    if (opt.improved_scan) {
      f5::ImprovedCheckReport report = f5::scan_run(st, ring);
      report.merge(shadow.report());
      out << f5::render_report(report);
      if (!report.clean()) res.status = mismatch;
    }
    if (opt.certify) {
      std::size_t valid = 0, invalid = 0;
      for (const auto& r : st.rejections) {
        if (r.criterion == f5::Criterion::collision) continue;
        try {
          out << f5::render_certificate(f5::certify_rejection(r, st, ring), ring);
          ++valid;
        } catch (const std::exception& e) {
          out << "certificate pair=" << f5::pair_label(r.pair) << " FAILED: " << e.what() << "\n";
          ++invalid;
        }
      }
      out << "certificates: " << valid << " valid, " << invalid << " invalid\n";
      if (invalid) res.status = certificate_failure;
    }
  }
  if (run_gm) {
    auto result = f5::buchberger_basis<Field>(gens, ring);
    gm_basis = f5::reduced_basis<Field>(result.basis, ring);
    out << render_basis("gm", gm_basis, ring);
    if (opt.stats) out << f5::render_stats(result.stats, "gm", gm_basis.size());
  }
  if (run_f5 && run_gm) {
    bool equal = f5::ideal_equal<Field>(f5_basis, gm_basis, ring);
    out << "oracle: " << (equal ? "match" : "MISMATCH") << "\n";
    if (!equal) res.status = mismatch;
  }
  res.text = out.str();
  return res;
}

Outcome run_any(const f5::IdealSpec& spec, const Options& opt) {
  try {
    if (spec.field == f5::FieldKind::rationals) return run_spec(spec, f5::RationalField{}, opt);
    return run_spec(spec, f5::PrimeField(spec.prime), opt);
  } catch (const f5::ParseError& e) {
    return {parse_failure, std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {engine_failure, std::string("engine error: ") + e.what() + "\n"};
  }
}

f5::RandomIdealParams parse_random(const std::string& text) {
  f5::RandomIdealParams p;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> p.generators >> c1 >> p.degree >> c2 >> p.variables) || c1 != ',' || c2 != ',' ||
      p.generators == 0 || p.degree == 0 || p.variables == 0)
    throw f5::ParseError(1, 1, "--random expects k,d,n with positive integers");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases with the F5 signature engine and a Gebauer-Moeller oracle"};
  Options opt;
  app.add_option("file", opt.file, "ideal file ('-' for stdin)");
  app.add_option("--engine", opt.engine, "f5, gm or both")->check(CLI::IsMember({"f5", "gm", "both"}));
  app.add_flag("--trace-criteria", opt.trace, "print the engine event trace");
  app.add_flag("--certify", opt.certify, "track witnesses and certify every rejected pair");
  app.add_flag("--stats", opt.stats, "print counters as key: value lines");
  app.add_flag("--improved-scan", opt.improved_scan, "run the relaxed-criterion falsifier");
  app.add_flag("--print-ideal", opt.print_ideal, "echo the ideal before the results");
  app.add_option("--random", opt.random, "random ideal k,d,n over GF(32003)");
  app.add_flag("--homogeneous", opt.homogeneous, "random generators are homogeneous");
  app.add_option("--seed", opt.seed, "seed of the first random ideal");
  app.add_option("--count", opt.count, "number of random ideals (seeds seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "parallel runs in corpus mode")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : parse_failure;
  }

  if (opt.random.empty()) {
    if (opt.file.empty()) {
      std::cerr << "f5gb: no ideal file given (use --random for generated input)\n";
      return parse_failure;
    }
    std::string text;
    if (opt.file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(opt.file, std::ios::binary);
      if (!in) {
        std::cerr << "f5gb: cannot open " << opt.file << "\n";
        return parse_failure;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    f5::IdealSpec spec;
    try {
      spec = f5::parse_ideal(text);
    } catch (const f5::ParseError& e) {
      std::cerr << opt.file << ":" << e.what() << "\n";
      return parse_failure;
    }
    Outcome res = run_any(spec, opt);
    (res.status == engine_failure || res.status == parse_failure ? std::cerr : std::cout) << res.text;
    return res.status;
  }

  f5::RandomIdealParams params;
  try {
    params = parse_random(opt.random);
  } catch (const f5::ParseError& e) {
    std::cerr << "f5gb: " << e.message() << "\n";
    return parse_failure;
  }
  params.homogeneous = opt.homogeneous;

  if (opt.count == 1) {
    Outcome res = run_any(f5::random_ideal(params, opt.seed), opt);
    (res.status == engine_failure ? std::cerr : std::cout) << res.text;
    return res.status;
  }

  // Corpus mode: one summary line per seed, engines compared.
  Options corpus = opt;
  corpus.engine = "both";
  corpus.improved_scan = true;
  std::vector<Outcome> results(opt.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < opt.count;) {
      std::uint64_t seed = opt.seed + k;
      Outcome r = run_any(f5::random_ideal(params, seed), corpus);
      const char* verdict = r.status == ok ? "ok" : r.status == mismatch ? "MISMATCH" : "ERROR";
      r.text = "seed=" + std::to_string(seed) + " " + verdict + "\n" + (r.status == ok ? "" : r.text);
      results[k] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::min(opt.jobs, opt.count); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  int status = ok;
  for (const auto& r : results) {
    std::cout << r.text;
    if (r.status != ok && status == ok) status = r.status;
  }
  return status;
}
