#include "hilb/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <sstream>
#include <thread>

#include "hilb/apolarity.hpp"
#include "hilb/compressed.hpp"
#include "hilb/corpus.hpp"
#include "hilb/local.hpp"

#ifndef HILB_DEFAULT_CORPUS
#define HILB_DEFAULT_CORPUS "corpus"
#endif

namespace hilb {

namespace {

enum class Format { text, tsv };

struct Options {
  Format format = Format::text;
  std::uint64_t seed = 1;
  std::string corpus = HILB_DEFAULT_CORPUS;
  unsigned jobs = 1;
};

// Tabs and newlines inside a field would break the TSV layout.
std::string clean(std::string s) {
  for (auto& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

void print_outcome(const EntryOutcome& o, const Options& opt, std::ostream& out) {
  if (opt.format == Format::tsv) {
    for (const auto& c : o.report.clauses)
      out << o.file << '\t' << clean(o.locus) << '\t' << c.check << '\t' << (c.ok ? "pass" : "fail") << '\t'
          << clean(c.detail) << '\n';
    out << o.file << '\t' << clean(o.locus) << "\tresult\t" << (o.ok ? "pass" : "fail") << '\t'
        << (o.expected_failure ? "expected failure at " + *o.expected_failure : o.kind) << '\n';
    return;
  }
  out << (o.ok ? "PASS " : "FAIL ") << o.file << "  [" << o.kind << "] " << o.locus << '\n';
  if (o.expected_failure)
    out << "     negative control: expected failure at " << *o.expected_failure << ", got "
        << (o.report.passed() ? std::string("no failure") : o.report.first_failure()) << '\n';
  else if (!o.ok)
    for (const auto& c : o.report.clauses)
      out << "     " << (c.ok ? "ok   " : "FAIL ") << c.check << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
}

int verify_entries(const std::vector<CorpusEntry>& entries, const Options& opt, std::ostream& out) {
  auto outcomes = run_corpus(entries, opt.jobs);
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    print_outcome(o, opt, out);
    if (o.ok) ++passed;
  }
  std::size_t failed = outcomes.size() - passed;
  if (opt.format == Format::tsv)
    out << "summary\t\tentries\t" << outcomes.size() << "\tpassed " << passed << ", failed " << failed << '\n';
  else
    out << outcomes.size() << " certificates, " << passed << " passed, " << failed << " failed\n";
  for (const auto& o : outcomes)
    if (!o.report.clauses.empty() && o.report.clauses.back().check == "internal") return kExitInternal;
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

RingPtr ring_for(unsigned vars) {
  if (vars < 1 || vars > 4) throw std::invalid_argument("--vars must be between 1 and 4");
  return operator_ring(vars);
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned trial) {
  // splitmix64 step, so that neighbouring seeds give unrelated streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int run_kstar(long d, unsigned trials, const Options& opt, std::ostream& out) {
  std::vector<std::optional<KstarResult>> slots(trials);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned k; (k = next.fetch_add(1)) < trials;) slots[k] = kstar_limit_experiment(d, trial_seed(opt.seed, k));
  };
  unsigned jobs = std::max(1u, std::min(opt.jobs, trials));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto params = d >= 2 ? very_compressed_params(d) : CompressedParams{1, 0, 1, 1, 0, {1}};
  unsigned good = 0;
  if (opt.format == Format::tsv)
    out << "trial\thilbert_function\tstatus\tdraws\n";
  else
    out << "d = " << d << ", expected very compressed Hilbert function " << format_sequence(params.hilbert_function)
        << '\n';
  for (unsigned k = 0; k < trials; ++k) {
    const auto& r = *slots[k];
    if (r.status == KstarStatus::very_compressed) ++good;
    if (opt.format == Format::tsv)
      out << k + 1 << '\t' << format_sequence(r.hilbert_function) << '\t' << status_name(r.status) << '\t' << r.draws
          << '\n';
    else
      out << "trial " << k + 1 << ": " << format_sequence(r.hilbert_function) << "  " << status_name(r.status)
          << "  (draws " << r.draws << ")\n";
  }
  if (opt.format == Format::text) out << good << " of " << trials << " trials very compressed\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string format = "text";
  CLI::App app{"Exact verification tools for length-11 punctual Hilbert schemes in three variables", "hilb11"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--corpus", opt.corpus, "Certificate directory");

  auto* verify = app.add_subcommand("verify", "Verify certificates")->require_subcommand(1);
  auto* vcorpus = verify->add_subcommand("corpus", "Verify every certificate in the corpus directory");
  std::string filter;
  vcorpus->add_option("--filter", filter, "Only entries whose locus or file name contains this text");
  vcorpus->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* vfile = verify->add_subcommand("file", "Verify one certificate file");
  std::string path;
  vfile->add_option("path", path, "Certificate file")->required();

  auto* tangent = app.add_subcommand("tangent", "Print (dimension, degree, tangent dimension)");
  std::string ideal_text;
  unsigned vars = 3;
  tangent->add_option("--ideal", ideal_text, "Comma-separated generators in a,b,c")->required();
  tangent->add_option("--vars", vars, "Number of variables (a,b,c,d)");

  auto* apolar = app.add_subcommand("apolar", "Reduced Groebner basis of the apolar ideal");
  std::string forms;
  apolar->add_option("--forms", forms, "Comma-separated polynomials in x,y,z")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions")->require_subcommand(1);
  auto* enumerate = hilbert->add_subcommand("enumerate", "All admissible local Hilbert functions");
  long hn = 3, hd = 11;
  enumerate->add_option("--n", hn, "Embedding dimension h(1)");
  enumerate->add_option("--d", hd, "Length");

  auto* compressed = app.add_subcommand("compressed", "Very compressed algebras")->require_subcommand(1);
  auto* scan = compressed->add_subcommand("scan", "Grassmannian dimension against 3d");
  long dmax = 120;
  scan->add_option("--dmax", dmax, "Largest length");
  auto* kstar = compressed->add_subcommand("kstar", "k*-limits of random point sets");
  long kd = 11;
  unsigned trials = 10;
  kstar->add_option("--d", kd, "Number of points");
  kstar->add_option("--seed", opt.seed, "Random seed");
  kstar->add_option("--trials", trials, "Independent experiments");
  kstar->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* fiber = app.add_subcommand("fiber", "Fiber parametrizations")->require_subcommand(1);
  auto* sample = fiber->add_subcommand("sample", "Spot-check a fiber parametrization at random points");
  std::string fiber_file;
  unsigned fiber_trials = 20;
  sample->add_option("path", fiber_file, "fiber_param certificate")->required();
  sample->add_option("--seed", opt.seed, "Random seed");
  sample->add_option("--trials", fiber_trials, "Random points");

  std::vector<const char*> argv{"hilb11"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  opt.format = format == "tsv" ? Format::tsv : Format::text;

  try {
    if (*vcorpus) {
      auto entries = load_corpus(opt.corpus);
      if (!filter.empty()) {
        std::vector<CorpusEntry> keep;
        for (auto& e : entries)
          if (e.file.find(filter) != std::string::npos || locus_of(e.cert).find(filter) != std::string::npos)
            keep.push_back(std::move(e));
        entries = std::move(keep);
      }
      return verify_entries(entries, opt, out);
    }
    if (*vfile) {
      std::vector<CorpusEntry> one{load_certificate(path)};
      auto outcome = run_entry(one.front());
      if (opt.format == Format::text) {
        out << (outcome.ok ? "PASS " : "FAIL ") << outcome.file << "  [" << outcome.kind << "] " << outcome.locus
            << '\n';
        for (const auto& c : outcome.report.clauses)
          out << "     " << (c.ok ? "ok   " : "FAIL ") << c.check << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        if (outcome.expected_failure)
          out << "negative control: expected failure at " << *outcome.expected_failure << '\n';
      } else {
        print_outcome(outcome, opt, out);
      }
      if (!outcome.report.clauses.empty() && outcome.report.clauses.back().check == "internal") return kExitInternal;
      return outcome.ok ? kExitOk : kExitVerificationFailed;
    }
    if (*tangent) {
      Ideal ideal = Ideal::parse(ideal_text, ring_for(vars));
      out << invariants(ideal).str() << '\n';
      return kExitOk;
    }
    if (*apolar) {
      auto fs = parse_polynomial_list(forms, dual_ring());
      Ideal ann = apolar_ideal(fs);
      if (opt.format == Format::tsv) {
        for (const auto& g : ann.groebner_basis()) out << g.str() << '\n';
      } else {
        out << format_list(ann.groebner_basis()) << '\n';
      }
      return kExitOk;
    }
    if (*enumerate) {
      auto hs = enumerate_hilbert_functions(hn, hd);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        if (opt.format == Format::tsv)
          out << i + 1 << '\t' << format_sequence(hs[i]) << '\n';
        else
          out << format_sequence(hs[i]) << '\n';
      }
      return kExitOk;
    }
    if (*scan) {
      auto rows = reducibility_threshold_scan(dmax);
      if (opt.format == Format::tsv) {
        out << "d\ts\th\tdim\t3d\tflag\n";
        for (const auto& r : rows)
          out << r.d << '\t' << r.s << '\t' << r.h << '\t' << r.dim << '\t' << r.three_d << '\t' << (r.flag ? 1 : 0)
              << '\n';
      } else {
        long first = -1;
        for (const auto& r : rows) {
          out << "d=" << r.d << " s=" << r.s << " h=" << r.h << " dim=" << r.dim << " 3d=" << r.three_d
              << (r.flag ? "  dim >= 3d" : "") << '\n';
          if (r.flag && first < 0) first = r.d;
        }
        if (first < 0)
          out << "no d <= " << dmax << " with dim >= 3d\n";
        else
          out << "first d with dim >= 3d: " << first << '\n';
      }
      return kExitOk;
    }
    if (*kstar) return run_kstar(kd, trials, opt, out);
    if (*sample) {
      auto entry = load_certificate(fiber_file);
      auto* fp = std::get_if<FiberParametrization>(&entry.cert);
      if (!fp) throw CertificateFormatError(fiber_file + ": not a fiber_param certificate");
      auto rep = verify_fiber_sample(*fp, opt.seed, fiber_trials);
      for (const auto& c : rep.clauses) {
        if (opt.format == Format::tsv)
          out << c.check << '\t' << (c.ok ? "pass" : "fail") << '\t' << clean(c.detail) << '\n';
        else
          out << (c.ok ? "ok   " : "FAIL ") << c.check << ": " << c.detail << '\n';
      }
      return rep.passed() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const CertificateFormatError& e) {
    err << "certificate error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "no command\n";
  return kExitParseError;
}

}  // namespace hilb
