#include <doctest.h>

#include <algorithm>

#include "hilb/certificates.hpp"
#include "hilb/corpus.hpp"
#include "hilb/local.hpp"
#include "support.hpp"

using namespace hilb;
using hilb::testing::I;
using hilb::testing::P;

namespace {

const char* kRunning = "b*c, a*b, a^2*c, a^3-c^2, b^5";

FlatFamilyCertificate running_family(const std::string& last = "b^5+t*b^4") {
  return FlatFamilyCertificate{I(std::string("b*c, a*b, a^2*c, a^3-c^2, ") + last, family_ring()), I(kRunning),
                               {Point(3, Rational(0)), Point{Rational(0), Rational(-1), Rational(0)}}, Rational(1), 11,
                               "running"};
}

const ClauseResult* clause(const CertificateReport& rep, const std::string& name) {
  for (const auto& c : rep.clauses)
    if (c.check == name) return &c;
  return nullptr;
}

// Length of the part of a zero-dimensional scheme supported at the origin.
std::size_t local_length_at_origin(const Ideal& fiber) { return degree(fiber + maximal_power(fiber.ring(), 16)); }

}  // namespace

TEST_CASE("flat family of the running example passes every clause") {
  auto rep = verify_flat_family(running_family());
  CHECK(rep.passed());
  for (const char* name : {"a:colon", "b:specialization", "c:witnesses", "d:degree", "e:fiber_lengths"})
    CHECK_MESSAGE(clause(rep, name) != nullptr, name);
  CHECK(clause(rep, "e:fiber_lengths")->detail == "lengths t=0:11 t=1:11 t=2:11");
}

TEST_CASE("flat family failures name the failing clause") {
  SUBCASE("t-torsion") {
    auto cert = running_family("t*b^4, b^5");
    auto rep = verify_flat_family(cert);
    CHECK(rep.first_failure() == "a:colon");
    CHECK(clause(rep, "a:colon")->detail.find("b^4") != std::string::npos);
  }
  SUBCASE("wrong special fiber") {
    auto cert = running_family();
    cert.special_fiber = I("b*c, a*b, a^2*c, a^3-c^2, b^4");
    CHECK(verify_flat_family(cert).first_failure() == "b:specialization");
  }
  SUBCASE("witness off the fiber") {
    auto cert = running_family();
    cert.witness_points[1] = Point{Rational(0), Rational(1), Rational(0)};
    CHECK(verify_flat_family(cert).first_failure() == "c:witnesses");
  }
  SUBCASE("declared degree") {
    auto cert = running_family();
    cert.degree = 12;
    CHECK(verify_flat_family(cert).first_failure() == "d:degree");
  }
  SUBCASE("malformed witnesses") {
    auto cert = running_family();
    cert.witness_points.pop_back();
    CHECK(verify_flat_family(cert).first_failure() == "well_formed");
  }
}

TEST_CASE("ray family is flat and cleaves the running example") {
  Ideal ideal = I(kRunning);
  auto fam = ray_family(ideal, 1);
  CHECK(verify_flat_family(fam).passed());
  Ideal fiber1 = specialize_parameter(fam.family, Rational(1));
  REQUIRE(is_zero_dimensional(fiber1));
  CHECK(degree(fiber1) == 11);
  // The general fiber is not concentrated at the origin: some length moved away.
  std::size_t at_origin = local_length_at_origin(fiber1);
  CHECK(at_origin > 0);
  CHECK(at_origin < 11);
  CHECK(std::all_of(fiber1.generators().begin(), fiber1.generators().end(),
                    [](const Polynomial& g) { return g.evaluate({Rational(0), Rational(1), Rational(0)}).is_zero(); }));
}

TEST_CASE("cleavability corollary") {
  Ideal hesse = I("a*b^2, a^2*b, a*c^2, a^2*c, b*c^2, b^2*c, a^3-b^3, a^3-c^3, a*b*c-c^3");
  CHECK(verify_cleavability({hesse, 0, 2, CleavabilityVariant::general, {}, false, ""}).passed());
  CHECK(verify_cleavability({hesse, 0, 1, CleavabilityVariant::general, {}, false, ""}).first_failure() ==
        "product:a*b");

  Ideal i1352 = I("a*b, a^3, b^3, c^3, a*c^2, a^2*c+b*c^2");
  auto rep = verify_cleavability({i1352, 0, 2, CleavabilityVariant::general, {}, false, ""});
  CHECK(rep.first_failure() == "product:a^2*c");
  CHECK(clause(rep, "product:a^2*b")->ok);

  CHECK(verify_cleavability({I("a, b^2, b*c, c^2"), 0, 1, CleavabilityVariant::general, {}, false, ""})
            .first_failure() == "power_outside");
  CHECK(verify_cleavability({I("a^2, b, c"), 0, 1, CleavabilityVariant::general, {}, false, ""}).passed());
  CHECK(verify_cleavability({I("a^2, b^2"), 0, 1, CleavabilityVariant::general, {}, false, ""}).first_failure() ==
        "m_primary");

  Ideal line = I("a*b, a*c, a^2+b^3, b^2*c^2, b*c^3, c^4");
  CleavabilityCertificate u{line, 0, 1, CleavabilityVariant::union_of_line, {P("a*b"), P("a*c")}, false, ""};
  CHECK(verify_cleavability(u).passed());
  u.products = {P("a*b")};
  CHECK(verify_cleavability(u).first_failure() == "products_named");
}

TEST_CASE("smooth point justifications") {
  SUBCASE("flat family") {
    SmoothPointCertificate c{I(kRunning), std::nullopt, HilbertSequence{1, 3, 3, 2, 2}, 33, running_family(), ""};
    auto rep = verify_smooth_point(c);
    CHECK(rep.passed());
    CHECK(clause(rep, "justification.a:colon") != nullptr);
  }
  SUBCASE("monomial") {
    SmoothPointCertificate c{I("a^2, b^2, c^3, a*b*c^2"), std::nullopt, std::nullopt, 33, MonomialAxiom{}, ""};
    CHECK(verify_smooth_point(c).passed());
    c.ideal = I(kRunning);
    CHECK(verify_smooth_point(c).first_failure() == "justification:monomial");
  }
  SUBCASE("gorenstein axiom checks the socle") {
    Ideal g = I("a*b, a*c, b*c, a^4-b^4, a^4-c^4");
    REQUIRE(degree(g) == 11);
    SmoothPointCertificate c{g, std::nullopt, std::nullopt, tangent_dimension(g), GorensteinAxiom{}, ""};
    CHECK(verify_smooth_point(c).passed());
    c.ideal = I(kRunning);
    c.expected_tangent = 33;
    CHECK(verify_smooth_point(c).first_failure() == "justification:gorenstein");
  }
  SUBCASE("tangent mismatch") {
    SmoothPointCertificate c{I("a^2, a*b, b^2, c"), std::nullopt, std::nullopt, 33, MonomialAxiom{}, ""};
    auto rep = verify_smooth_point(c);
    CHECK(rep.first_failure() == "tangent");
    CHECK(clause(rep, "tangent")->detail.find("degree 3") != std::string::npos);
  }
  SUBCASE("inverse system must match") {
    auto dual = dual_ring();
    SmoothPointCertificate c{I(kRunning), std::vector<Polynomial>{parse_polynomial("x^3*y+z^2", dual)},
                             std::nullopt, 33, running_family(), ""};
    CHECK(verify_smooth_point(c).first_failure() == "inverse_system");
  }
}

TEST_CASE("constraint back-substitution") {
  FiberParametrization fp{I("a, b, c"), {"p", "q", "r", "s"}, {"p", "q"}, {"r - p*q", "s + 2*r = p"}, {}};
  auto v = solve_constraints(fp, {{"p", Rational(3)}, {"q", Rational(-2)}});
  CHECK(v.at("r") == Rational(-6));
  CHECK(v.at("s") == Rational(15));

  fp.constraints = {"r^2 - p"};
  CHECK_THROWS_AS(solve_constraints(fp, {{"p", Rational(1)}, {"q", Rational(1)}}), std::invalid_argument);
  fp.constraints = {"r - 1", "s - 1", "p - q"};
  CHECK_THROWS_AS(solve_constraints(fp, {{"p", Rational(1)}, {"q", Rational(2)}}), std::invalid_argument);
  fp.constraints = {"r - u"};
  CHECK_THROWS_AS(solve_constraints(fp, {{"p", Rational(1)}, {"q", Rational(2)}}), std::invalid_argument);
}

TEST_CASE("fiber parametrization sampling") {
  auto entry = load_certificate(HILB_CORPUS_DIR "/case_132221_x5x3y_fiber.cert");
  auto fp = std::get<FiberParametrization>(entry.cert);
  auto rep = verify_fiber_sample(fp, 7, 5);
  CHECK(rep.passed());
  CHECK(rep.clauses.size() == 6);
  CHECK(rep.clauses.front().check == "homogeneous");
  CHECK(rep.clauses.front().detail.rfind("all zero", 0) == 0);

  // With b^5 as the extra generator the homogeneous fiber is too long.
  auto bad = fp;
  for (auto& g : bad.generators)
    if (g.base == P("a^4*b")) g.base = P("b^5");
  bad.base_ideal = I("a*c, b^2, b*c, c^2, b^5, a^6");
  auto badrep = verify_fiber_sample(bad, 7, 2);
  CHECK(badrep.first_failure() == "homogeneous");
  CHECK(clause(badrep, "homogeneous")->detail.find("degree 11") == std::string::npos);
}

TEST_CASE("certificate file parsing") {
  const std::string good = R"({"kind":"cleavability","paper_locus":"x","ring":["a","b","c"],
    "ideal":["a^2","b","c"],"variable":"a","exponent":1,"variant":"general"})";
  auto e = parse_certificate(good);
  CHECK(kind_name(e.cert) == "cleavability");
  CHECK(locus_of(e.cert) == "x");
  CHECK_FALSE(e.expected_failure);
  CHECK(run_entry(e).ok);

  CHECK_THROWS_AS(parse_certificate("{not json"), CertificateFormatError);
  CHECK_THROWS_AS(parse_certificate(R"({"kind":"nope","ring":["a","b","c"]})"), CertificateFormatError);
  CHECK_THROWS_AS(parse_certificate(R"({"kind":"cleavability","ring":["u","v"]})"), CertificateFormatError);
  CHECK_THROWS_AS(parse_certificate(R"({"kind":"cleavability","ring":["a","b","c"],"variable":"a"})"),
                  CertificateFormatError);
  CHECK_THROWS_AS(parse_certificate(R"({"kind":"cleavability","ring":["a","b","c"],"ideal":["a^^2"],
    "variable":"a","exponent":1,"variant":"general"})"),
                  ParseError);
}

TEST_CASE("negative controls are ok only when they fail where declared") {
  const std::string base = R"({"kind":"cleavability","ring":["a","b","c"],"ideal":["a","b^2","b*c","c^2"],
    "variable":"a","exponent":1,"variant":"general","expect_failure":")";
  CHECK(run_entry(parse_certificate(base + "power_outside\"}")).ok);
  CHECK_FALSE(run_entry(parse_certificate(base + "product:a*b\"}")).ok);
}

TEST_CASE("corpus runs identically on several threads") {
  auto entries = load_corpus(HILB_CORPUS_DIR);
  REQUIRE(entries.size() >= 25);
  std::vector<CorpusEntry> some(entries.begin(), entries.begin() + 12);
  auto one = run_corpus(some, 1);
  auto three = run_corpus(some, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].file == some[i].file);
    CHECK(one[i].file == three[i].file);
    CHECK(one[i].ok == three[i].ok);
    CHECK(one[i].report.clauses.size() == three[i].report.clauses.size());
  }
}
