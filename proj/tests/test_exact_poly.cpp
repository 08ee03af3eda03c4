#include <doctest.h>

#include "hilb/linalg.hpp"
#include "support.hpp"

using namespace hilb;
using hilb::testing::P;
using hilb::testing::random_poly;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational(4, -6).denominator() == 3);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(7, 3) == Rational(35));
}

TEST_CASE("monomial orders") {
  auto r = operator_ring();
  auto a = P("a").leading_monomial();
  auto b = P("b").leading_monomial();
  auto c = P("c").leading_monomial();
  CHECK(r->greater(a, b));
  CHECK(r->greater(b, c));
  auto b2 = P("b^2").leading_monomial();
  auto ac = P("a*c").leading_monomial();
  CHECK(r->greater(b2, ac));
  auto lex = make_ring({"a", "b", "c"}, OrderKind::lex);
  CHECK(lex->greater(ac, b2));
  auto blk = make_ring({"a", "b", "c"}, OrderKind::block, 1);
  CHECK(blk->greater(a, P("b^5").leading_monomial()));
  CHECK(P("c + b^2 + a*c").str() == "b^2 + a*c + c");
}

TEST_CASE("monomial enumeration counts") {
  for (unsigned d = 0; d < 8; ++d)
    CHECK(monomials_of_degree(3, d).size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  CHECK(monomials_up_to(3, 4).size() == 35);
  auto deg2 = monomials_of_degree(3, 2);
  auto r = operator_ring();
  for (std::size_t i = 0; i + 1 < deg2.size(); ++i) CHECK(r->greater(deg2[i], deg2[i + 1]));
}

TEST_CASE("parser accepts the grammar and reports errors") {
  auto r = operator_ring();
  CHECK(P("a^3-6bc") == P("a^3 - 6*b*c"));
  CHECK(P("3/2a") == P("a") * Rational(3, 2));
  CHECK(P("(a+b)^2") == P("a^2 + 2ab + b^2"));
  CHECK(P("-a + 0") == -P("a"));
  CHECK(parse_polynomial_list("(bc, ab, a^2c, a^3-c^2, b^5)", r).size() == 5);
  CHECK(parse_polynomial_list("<x^4, y^4, z^2+xy>", dual_ring()).size() == 3);
  CHECK_THROWS_AS(P("a^"), ParseError);
  CHECK_THROWS_AS(P("a + * b"), ParseError);
  CHECK_THROWS_AS(P("q"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  try {
    P("a + b + ?");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
  auto coeffs = make_ring({"a1", "a2", "c3", "a", "b", "c"});
  CHECK(parse_polynomial("a1*a2 + c3", coeffs).size() == 2);
  CHECK(parse_polynomial("a1a^3", coeffs).leading_monomial().degree() == 4);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(7);
  auto r = make_ring({"a", "b", "c", "t"}, OrderKind::grevlex, 0, 3);
  for (int k = 0; k < 200; ++k) {
    Polynomial f = random_poly(rng, r, 6, 6, 40);
    f *= Rational(1, 1 + k % 7);
    CHECK(parse_polynomial(f.str(), r) == f);
  }
}

TEST_CASE("commutative ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  auto r = operator_ring();
  for (int k = 0; k < 60; ++k) {
    auto f = random_poly(rng, r, 4, 5);
    auto g = random_poly(rng, r, 4, 5);
    auto h = random_poly(rng, r, 3, 4);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f - f == Polynomial(r));
    auto parts = graded_parts(f);
    Polynomial sum(r);
    for (auto& [d, p] : parts) {
      CHECK(p.is_homogeneous());
      CHECK(p.degree() == d);
      sum += p;
    }
    CHECK(sum == f);
  }
}

namespace {
// Partial derivative in one variable, written independently of the contraction code.
Polynomial d_var(const Polynomial& f, std::size_t i) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono.e[i] == 0) continue;
    Monomial m = t.mono;
    --m.e[i];
    out.push_back({m, t.coef * Rational(static_cast<long>(t.mono.e[i]))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}
}  // namespace

TEST_CASE("contraction agrees with iterated partial derivatives") {
  std::mt19937_64 rng(5);
  auto s = dual_ring();
  auto t = operator_ring();
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, s, 6, 6);
    auto theta = random_poly(rng, t, 3, 3);
    Polynomial expect(s);
    for (const auto& term : theta.terms()) {
      Polynomial g = f;
      for (std::size_t i = 0; i < 3; ++i)
        for (unsigned e = 0; e < term.mono.e[i]; ++e) g = d_var(g, i);
      expect += g * term.coef;
    }
    CHECK(apolar_apply(theta, f) == expect);
  }
  CHECK(apolar_apply(P("a^3 - 6bc"), parse_polynomial("x^3 + yz", s)).is_zero());
  CHECK(apolar_apply(P("a*b"), parse_polynomial("x^2y", s)) == parse_polynomial("2x", s));
}

TEST_CASE("evaluation and substitution") {
  auto r = family_ring();
  auto f = parse_polynomial("b^5 + t*b^4", r);
  CHECK(f.evaluate({Rational(0), Rational(-1), Rational(0), Rational(1)}).is_zero());
  CHECK(f.substitute(3, Rational(0)) == parse_polynomial("b^5", r));
  auto g = parse_polynomial("a^2 + b", operator_ring());
  CHECK(g.substitute(1, P("a - c")) == P("a^2 + a - c"));
}

TEST_CASE("exact linear algebra") {
  QMatrix m(3, 4);
  long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Rational(vals[i][j]);
  CHECK(rank(m) == 2);
  QMatrix k = kernel(m);
  CHECK(k.rows() == 2);
  for (Index i = 0; i < k.rows(); ++i)
    for (Index r = 0; r < m.rows(); ++r) {
      Rational s;
      for (Index j = 0; j < 4; ++j) s += m(r, j) * k(i, j);
      CHECK(s.is_zero());
    }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix a(7, 6);
    for (Index i = 0; i < 7; ++i)
      for (Index j = 0; j < 6; ++j) a(i, j) = Rational(d(rng), 1 + trial % 3);
    if (trial % 2) a.row(3) = a.row(1) + a.row(2);
    QMatrix e = a;
    CHECK(static_cast<Index>(rref(e).size()) == rank(a));
  }
}

TEST_CASE("fraction-free elimination over Q[t] tracks the generic rank") {
  Matrix<UniPoly> m(2, 2);
  UniPoly t = UniPoly::variable();
  m(0, 0) = t;
  m(0, 1) = UniPoly(1);
  m(1, 0) = UniPoly(1);
  m(1, 1) = t;
  auto res = bareiss<UniPoly>(m);
  CHECK(res.rank == 2);
  CHECK(res.last_pivot == t * t - UniPoly(1));
  CHECK(res.last_pivot(Rational(1)).is_zero());
}
