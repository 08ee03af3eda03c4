#include <doctest.h>

#include <random>

#include "hilb/compressed.hpp"
#include "hilb/linalg.hpp"
#include "hilb/local.hpp"
#include "support.hpp"

using namespace hilb;
using hilb::testing::I;
using hilb::testing::P;

namespace {

Point pt(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

Ideal ideal_of_point(const Point& p) {
  auto r = operator_ring(3);
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < 3; ++i) g.push_back(Polynomial::variable(r, i) - Polynomial::constant(r, p[i]));
  return Ideal(r, g);
}

std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  std::vector<Point> out;
  while (out.size() < n) {
    Point p = pt(c(rng), c(rng), c(rng));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("very compressed parameters") {
  auto p = very_compressed_params(11);
  CHECK(p.s == 3);
  CHECK(p.h == 1);
  CHECK(p.D == 10);
  CHECK(p.dim == 9);
  CHECK(p.hilbert_function == HilbertSequence{1, 3, 6, 1});

  p = very_compressed_params(96);
  CHECK(p.s == 7);
  CHECK(p.h == 12);
  CHECK(p.D == 36);
  CHECK(p.dim == 288);
  CHECK(p.hilbert_function == HilbertSequence{1, 3, 6, 10, 15, 21, 28, 12});

  p = very_compressed_params(4);
  CHECK(p.s == 1);
  CHECK(p.h == 3);
  CHECK(p.dim == 0);
  CHECK(p.hilbert_function == HilbertSequence{1, 3});

  CHECK_THROWS_AS(very_compressed_params(1), std::invalid_argument);

  // Oracle: count monomials of degree < s and <= s directly.
  for (long d = 2; d <= 300; ++d) {
    auto q = very_compressed_params(d);
    long below = static_cast<long>(monomials_up_to(3, static_cast<unsigned>(q.s - 1)).size());
    long upto = static_cast<long>(monomials_up_to(3, static_cast<unsigned>(q.s)).size());
    CHECK(below < d);
    CHECK(d <= upto);
    CHECK(q.D == static_cast<long>(monomials_of_degree(3, static_cast<unsigned>(q.s)).size()));
    CHECK(q.h > 0);
    CHECK(q.h <= q.D);
    long sum = 0;
    for (long v : q.hilbert_function) sum += v;
    CHECK(sum == d);
  }
}

TEST_CASE("reducibility threshold") {
  auto rows = reducibility_threshold_scan(120);
  REQUIRE(rows.size() == 113);
  long first = -1;
  for (const auto& r : rows) {
    CHECK(r.flag == (r.dim >= 3 * r.d));
    if (r.flag && first < 0) first = r.d;
    if (r.d < 96) CHECK_FALSE(r.flag);
    if (r.d == 95) CHECK(r.dim == 275);
    if (r.d == 11) CHECK(r.dim == 9);
  }
  CHECK(first == 96);
  CHECK_THROWS_AS(reducibility_threshold_scan(7), std::invalid_argument);
}

TEST_CASE("vanishing ideal of points") {
  CHECK(points_vanishing_ideal({pt(0, 0, 0)}) == I("a, b, c"));

  Ideal three = points_vanishing_ideal({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  for (const char* g : {"a*b", "a*c", "b*c", "a+b+c-1"}) CHECK(three.contains(P(g)));
  CHECK(degree(three) == 3);

  // Oracle: the kernel of the evaluation matrix on monomials of degree <= 2.
  auto mons = monomials_up_to(3, 2);
  std::vector<Point> pts = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
  QMatrix ev(static_cast<Index>(pts.size()), static_cast<Index>(mons.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Polynomial m = Polynomial::term(operator_ring(), mons[j]);
      ev(static_cast<Index>(i), static_cast<Index>(j)) = m.evaluate(pts[i]);
    }
  QMatrix ker = kernel(ev);
  CHECK(ker.rows() == static_cast<Index>(mons.size() - 3));
  for (Index k = 0; k < ker.rows(); ++k) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < mons.size(); ++j) terms.push_back({mons[j], ker(k, static_cast<Index>(j))});
    CHECK(three.contains(Polynomial::from_terms(operator_ring(), terms)));
  }

  std::mt19937_64 rng(3);
  for (std::size_t n : {2u, 5u, 9u, 14u}) {
    auto ps = random_points(rng, n, 6);
    Ideal v = points_vanishing_ideal(ps);
    CHECK(degree(v) == n);
    for (const auto& g : v.groebner_basis())
      for (const auto& p : ps) CHECK(g.evaluate(p).is_zero());
    Ideal inter = ideal_of_point(ps[0]);
    for (std::size_t i = 1; i < ps.size(); ++i) inter = intersect(inter, ideal_of_point(ps[i]));
    CHECK(inter == v);
  }

  CHECK_THROWS_AS(points_vanishing_ideal({pt(1, 2, 3), pt(1, 2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(points_vanishing_ideal({Point{Rational(1)}}), std::invalid_argument);
}

TEST_CASE("k*-limits of random points") {
  int compressed = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto r = kstar_limit_experiment(11, seed, 1);
    if (r.hilbert_function == HilbertSequence{1, 3, 6, 1} && r.status == KstarStatus::very_compressed) ++compressed;
  }
  CHECK(compressed >= 9);

  auto r8 = kstar_limit_experiment(8, 4);
  CHECK(r8.hilbert_function == HilbertSequence{1, 3, 4});
  CHECK(r8.status == KstarStatus::very_compressed);

  auto r1 = kstar_limit_experiment(1, 9);
  CHECK(r1.limit == I("a, b, c"));
  CHECK(r1.hilbert_function == HilbertSequence{1});

  for (long d = 2; d <= 14; d += 3)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto r = kstar_limit_experiment(d, seed);
      CHECK(degree(r.limit) == static_cast<std::size_t>(d));
      CHECK(r.contains_next_power);
    }

  // Collinear points are the textbook degenerate configuration.
  std::vector<Point> line;
  for (long k = 1; k <= 4; ++k) line.push_back(pt(k, 2 * k, 3 * k));
  auto deg = kstar_limit(line);
  CHECK(deg.status == KstarStatus::degenerate);
  CHECK(degree(deg.limit) == 4);
  CHECK(status_name(deg.status) == "DEGENERATE");

  auto again = kstar_limit_experiment(11, 5);
  CHECK(again.points == kstar_limit_experiment(11, 5).points);
}

TEST_CASE("four-variable length 8 ideal") {
  auto r4 = operator_ring(4);
  Ideal i = Ideal::parse("a^2, a*b, b^2, a*d+b*c, c^2, c*d, d^2", r4);
  CHECK(degree(i) == 8);
  CHECK(tangent_dimension(i) == 25);
}
