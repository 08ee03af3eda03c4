#include "hilb/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "hilb/apolarity.hpp"

namespace hilb {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw CertificateFormatError(what); }

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string text_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  fail(std::string("field '") + what + "' must be a string");
}

RingPtr ring_from(const json& j) {
  if (!j.is_array()) fail("field 'ring' must be a list of variable names");
  std::vector<std::string> names;
  for (const auto& v : j) names.push_back(text_of(v, "ring"));
  if (names == std::vector<std::string>{"a", "b", "c"}) return operator_ring(3);
  if (names == std::vector<std::string>{"a", "b", "c", "t"}) return family_ring();
  if (names == std::vector<std::string>{"a", "b", "c", "d"}) return operator_ring(4);
  fail("unsupported ring; expected [a,b,c] or [a,b,c,t]");
}

std::vector<Polynomial> polys(const json& j, const RingPtr& ring, const char* what) {
  if (j.is_string()) return parse_polynomial_list(j.get<std::string>(), ring);
  if (!j.is_array()) fail(std::string("field '") + what + "' must be a list of polynomials");
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(parse_polynomial(text_of(p, what), ring));
  return out;
}

Rational rational(const json& j, const char* what) {
  std::string s = text_of(j, what);
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    fail(std::string("bad rational '") + s + "' in '" + what + "'");
  }
}

std::string locus(const json& j) { return j.contains("paper_locus") ? text_of(j.at("paper_locus"), "paper_locus") : ""; }

RingPtr base_ring_of(const RingPtr& r) { return r->parameter() ? ring_without_parameter(r) : r; }

std::vector<Polynomial> dual_polys(const json& j, const RingPtr& operator_side) {
  RingPtr s = dual_ring(operator_side->nvars());
  return polys(j, s, "inverse_system");
}

FlatFamilyCertificate parse_flat(const json& j, const RingPtr& ring, const std::optional<Ideal>& default_fiber,
                                 const std::string& loc) {
  if (!ring->parameter()) fail("flat_family needs a ring with parameter t");
  RingPtr base = base_ring_of(ring);
  Ideal family(ring, polys(field(j, "family"), ring, "family"));
  std::optional<Ideal> fiber;
  if (j.contains("special_fiber")) fiber.emplace(base, polys(j.at("special_fiber"), base, "special_fiber"));
  else if (j.contains("inverse_system")) fiber.emplace(apolar_ideal(dual_polys(j.at("inverse_system"), base)));
  else if (default_fiber) fiber = default_fiber;
  else fail("flat_family needs 'special_fiber' or 'inverse_system'");
  std::vector<Point> points;
  const json& wp = field(j, "witness_points");
  if (!wp.is_array()) fail("'witness_points' must be a list of points");
  for (const auto& p : wp) {
    if (!p.is_array()) fail("each witness point must be a list of coordinates");
    Point pt;
    for (const auto& c : p) pt.push_back(rational(c, "witness_points"));
    points.push_back(std::move(pt));
  }
  Rational v = j.contains("witness_parameter") ? rational(j.at("witness_parameter"), "witness_parameter") : Rational(1);
  std::size_t d = j.contains("degree") ? j.at("degree").get<std::size_t>() : 11;
  return FlatFamilyCertificate{family, *fiber, points, v, d, loc};
}

CleavabilityCertificate parse_cleavability(const json& j, const RingPtr& ring, const std::optional<Ideal>& default_ideal,
                                           const std::string& loc) {
  std::optional<Ideal> ideal;
  if (j.contains("ideal")) ideal.emplace(ring, polys(j.at("ideal"), ring, "ideal"));
  else if (default_ideal) ideal = default_ideal;
  else fail("cleavability needs 'ideal'");
  std::string var = text_of(field(j, "variable"), "variable");
  auto idx = ring->index_of(var);
  if (!idx) fail("unknown variable '" + var + "'");
  unsigned c = j.contains("exponent") ? j.at("exponent").get<unsigned>() : 1;
  std::string variant = j.contains("variant") ? text_of(j.at("variant"), "variant") : "general";
  CleavabilityVariant kind;
  if (variant == "general") kind = CleavabilityVariant::general;
  else if (variant == "union_of_line") kind = CleavabilityVariant::union_of_line;
  else fail("variant must be 'general' or 'union_of_line'");
  std::vector<Polynomial> products;
  if (j.contains("products")) products = polys(j.at("products"), ring, "products");
  if (kind == CleavabilityVariant::union_of_line && products.size() != 2) fail("union_of_line names two products");
  bool ray = j.contains("ray_family") && j.at("ray_family").get<bool>();
  return CleavabilityCertificate{*ideal, *idx, c, kind, products, ray, loc};
}

// Without an explicit ideal the point is the special fiber of its family, or else the
// apolar ideal of its inverse system.
Ideal smooth_point_ideal(const json& j, const RingPtr& ring, const std::optional<std::vector<Polynomial>>& inv) {
  if (j.contains("ideal")) return Ideal(ring, polys(j.at("ideal"), ring, "ideal"));
  const json& js = field(j, "justification");
  if (js.is_object() && js.contains("kind") && js.at("kind") == "flat_family") {
    RingPtr fr = js.contains("ring") ? ring_from(js.at("ring")) : family_ring();
    return specialize_parameter(Ideal(fr, polys(field(js, "family"), fr, "family")), Rational(0));
  }
  if (inv) return apolar_ideal(*inv);
  fail("smooth_point needs 'ideal', a flat family or an inverse system");
}

SmoothPointCertificate parse_smooth(const json& j, const RingPtr& ring, const std::string& loc) {
  std::optional<std::vector<Polynomial>> inv;
  if (j.contains("inverse_system")) inv = dual_polys(j.at("inverse_system"), ring);
  Ideal ideal = smooth_point_ideal(j, ring, inv);
  std::optional<HilbertSequence> hf;
  if (j.contains("hilbert_function")) hf = parse_sequence(text_of(j.at("hilbert_function"), "hilbert_function"));
  std::size_t tan = j.contains("expected_tangent") ? j.at("expected_tangent").get<std::size_t>() : 33;
  const json& js = field(j, "justification");
  std::string kind = js.is_string() ? js.get<std::string>() : text_of(field(js, "kind"), "justification.kind");
  auto sub_ring = [&]() { return js.contains("ring") ? ring_from(js.at("ring")) : family_ring(); };
  std::optional<Justification> just;
  if (kind == "monomial") just = MonomialAxiom{};
  else if (kind == "gorenstein") just = GorensteinAxiom{};
  else if (kind == "flat_family") just = parse_flat(js, sub_ring(), ideal, loc);
  else if (kind == "cleavability") just = parse_cleavability(js, ring, ideal, loc);
  else fail("unknown justification '" + kind + "'");
  return SmoothPointCertificate{ideal, inv, hf, tan, *just, loc};
}

FiberParametrization parse_fiber(const json& j, const RingPtr& ring, const std::string& loc) {
  auto names = [&](const char* f) {
    std::vector<std::string> out;
    for (const auto& v : field(j, f)) out.push_back(text_of(v, f));
    return out;
  };
  Ideal base(ring, polys(field(j, "base_ideal"), ring, "base_ideal"));
  std::vector<std::string> coeffs = names("coefficients");
  std::vector<std::string> free = names("free");
  for (const auto& f : free)
    if (std::find(coeffs.begin(), coeffs.end(), f) == coeffs.end()) fail("free coordinate " + f + " is not a coefficient");
  std::vector<std::string> cons;
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints")) cons.push_back(text_of(c, "constraints"));
  std::vector<TemplateGenerator> gens;
  for (const auto& g : field(j, "generators")) {
    TemplateGenerator tg{parse_polynomial(text_of(field(g, "base"), "base"), ring), {}};
    if (g.contains("terms"))
      for (const auto& [name, mono] : g.at("terms").items()) {
        if (std::find(coeffs.begin(), coeffs.end(), name) == coeffs.end()) fail("unknown coefficient " + name);
        tg.terms.emplace_back(name, parse_polynomial(text_of(mono, "terms"), ring));
      }
    gens.push_back(std::move(tg));
  }
  FiberParametrization fp{base, coeffs, free, cons, gens, 6, 11, 20, 1, loc};
  if (j.contains("truncation")) fp.truncation = j.at("truncation").get<unsigned>();
  if (j.contains("degree")) fp.degree = j.at("degree").get<std::size_t>();
  if (j.contains("trials")) fp.trials = j.at("trials").get<unsigned>();
  if (j.contains("seed")) fp.seed = j.at("seed").get<std::uint64_t>();
  return fp;
}

}  // namespace

CorpusEntry parse_certificate(const std::string& text, const std::string& file) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(file + ": " + e.what());
  }
  try {
    std::string kind = text_of(field(j, "kind"), "kind");
    RingPtr ring = ring_from(field(j, "ring"));
    std::string loc = locus(j);
    std::optional<std::string> expected;
    if (j.contains("expect_failure")) expected = text_of(j.at("expect_failure"), "expect_failure");
    auto entry = [&](Certificate c) { return CorpusEntry{file, std::move(c), expected}; };
    if (kind == "flat_family") return entry(parse_flat(j, ring, std::nullopt, loc));
    if (kind == "cleavability") return entry(parse_cleavability(j, ring, std::nullopt, loc));
    if (kind == "smooth_point") return entry(parse_smooth(j, ring, loc));
    if (kind == "fiber_param") return entry(parse_fiber(j, ring, loc));
    fail("unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    fail(file + ": " + e.what());
  } catch (const CertificateFormatError& e) {
    fail(file + ": " + e.what());
  }
}

CorpusEntry load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CertificateFormatError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str(), path.filename().string());
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw CertificateFormatError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".cert") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(load_certificate(f));
  return out;
}

EntryOutcome run_entry(const CorpusEntry& entry) {
  auto start = std::chrono::steady_clock::now();
  EntryOutcome out{entry.file, locus_of(entry.cert), kind_name(entry.cert), {}, entry.expected_failure};
  try {
    out.report = verify(entry.cert);
  } catch (const std::exception& e) {
    out.report = CertificateReport{out.locus, out.kind, {}};
    out.report.add("internal", false, e.what());
  }
  if (entry.expected_failure)
    out.ok = !out.report.passed() && out.report.first_failure() == *entry.expected_failure;
  else
    out.ok = out.report.passed();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<EntryOutcome> run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs) {
  std::vector<EntryOutcome> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) out[i] = run_entry(entries[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace hilb
