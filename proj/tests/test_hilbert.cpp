#include <doctest.h>

#include <algorithm>
#include <set>

#include "hilb/hilbert.hpp"
#include "hilb/local.hpp"
#include "support.hpp"

using namespace hilb;
using hilb::testing::P;

namespace {

// Maximal growth from degree d to d+1 in three variables, realised by a lex segment:
// keep the h lex-smallest monomials of degree d and count what the complement misses.
long lex_segment_growth(long h, long d) {
  auto deg_d = monomials_of_degree(3, static_cast<unsigned>(d));
  auto lex = make_ring({"a", "b", "c"}, OrderKind::lex);
  std::sort(deg_d.begin(), deg_d.end(), [&](const Monomial& x, const Monomial& y) { return lex->greater(x, y); });
  std::size_t gens = deg_d.size() - static_cast<std::size_t>(h);
  std::set<std::array<std::uint16_t, kMaxVars>> ideal_part;
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t v = 0; v < 3; ++v) ideal_part.insert((deg_d[i] * Monomial::variable(v)).e);
  return static_cast<long>(monomials_of_degree(3, static_cast<unsigned>(d + 1)).size() - ideal_part.size());
}

bool oracle_admissible(const HilbertSequence& h) {
  if (h[0] != 1) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] > static_cast<long>((i + 1) * (i + 2) / 2)) return false;
    if (h[i + 1] > lex_segment_growth(h[i], static_cast<long>(i))) return false;
  }
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] <= static_cast<long>(i)) {
      for (std::size_t j = i; j + 1 < h.size(); ++j)
        if (h[j + 1] > h[j]) return false;
      break;
    }
  return true;
}

void compositions(long left, HilbertSequence& cur, std::vector<HilbertSequence>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (long v = 1; v <= left; ++v) {
    cur.push_back(v);
    compositions(left - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("binomial expansions and Macaulay bounds") {
  auto e = binomial_expansion(3, 5);
  REQUIRE(e.size() == 3);
  CHECK(e[0].top == 5);
  CHECK(e[2].top == 3);
  CHECK(macaulay_bound(3, 5) == 3);
  CHECK(macaulay_bound(2, 2) == 2);
  CHECK(macaulay_bound(3, 1) == 6);
  CHECK(macaulay_bound(4, 2) == 5);
  CHECK(macaulay_bound(0, 4) == 0);
  for (long d = 1; d <= 6; ++d)
    for (long h = 0; h <= (d + 1) * (d + 2) / 2; ++h) {
      CAPTURE(h);
      CAPTURE(d);
      long sum = 0;
      for (const auto& t : binomial_expansion(h, d)) {
        long c = 1;
        for (long i = 1; i <= t.bottom; ++i) c = c * (t.top - t.bottom + i) / i;
        sum += c;
      }
      CHECK(sum == h);
      CHECK(macaulay_bound(h, d) == lex_segment_growth(h, d));
      if (h <= d) CHECK(macaulay_bound(h, d) == h);
    }
}

TEST_CASE("admissibility of specific sequences") {
  auto r = check_admissible({1, 3, 2, 3});
  CHECK_FALSE(r.ok);
  CHECK(r.violation == 2);
  CHECK_FALSE(check_macaulay({1, 3, 2, 3}).ok);
  CHECK_FALSE(check_tail({1, 3, 2, 3}).ok);
  CHECK(check_admissible({1, 3, 3, 2, 2}).ok);
  CHECK(check_admissible({1, 3, 6, 1}).ok);
  CHECK_FALSE(check_admissible({1, 3, 7}).ok);
  CHECK_FALSE(check_admissible({1, 3, 1, 2}).ok);
  CHECK(parse_sequence("(1,3,4,2,1)") == HilbertSequence{1, 3, 4, 2, 1});
  CHECK(format_sequence({1, 3, 6, 1}) == "(1,3,6,1)");
}

TEST_CASE("enumeration of length-11 local Hilbert functions in three variables") {
  auto got = enumerate_hilbert_functions(3, 11);
  std::set<HilbertSequence> expected = {
      {1, 3, 1, 1, 1, 1, 1, 1, 1}, {1, 3, 2, 1, 1, 1, 1, 1}, {1, 3, 2, 2, 1, 1, 1}, {1, 3, 3, 1, 1, 1, 1},
      {1, 3, 4, 1, 1, 1},          {1, 3, 5, 1, 1},          {1, 3, 3, 4},          {1, 3, 4, 3},
      {1, 3, 5, 2},                {1, 3, 4, 2, 1},          {1, 3, 2, 2, 2, 1},    {1, 3, 3, 2, 2},
      {1, 3, 3, 3, 1},             {1, 3, 3, 2, 1, 1},       {1, 3, 6, 1},
  };
  CHECK(got.size() == 15);
  CHECK(std::set<HilbertSequence>(got.begin(), got.end()) == expected);

  for (long d = 5; d <= 12; ++d) {
    CAPTURE(d);
    std::vector<HilbertSequence> all;
    HilbertSequence cur{1, 3};
    compositions(d - 4, cur, all);
    std::set<HilbertSequence> brute;
    for (const auto& h : all)
      if (oracle_admissible(h)) brute.insert(h);
    auto fast = enumerate_hilbert_functions(3, d);
    CHECK(std::set<HilbertSequence>(fast.begin(), fast.end()) == brute);
  }
}

TEST_CASE("Gotzmann persistence") {
  CHECK(gotzmann_persistence_applies(3, 3, 3, true));
  CHECK_FALSE(gotzmann_persistence_applies(3, 3, 3, false));
  CHECK_FALSE(gotzmann_persistence_applies(5, 4, 2, true));
}

TEST_CASE("quadric span equality detects a common linear factor") {
  auto r = operator_ring();
  CHECK(quadric_span_analysis({P("a*b"), P("a*c"), P("a^2")}).equality);
  CHECK(quadric_span_analysis({P("a*b"), P("a*c"), P("a^2")}).common_factor == P("a"));
  auto gen = quadric_span_analysis({P("a*b"), P("b*c"), P("a*c")});
  CHECK_FALSE(gen.equality);
  CHECK_FALSE(gen.common_factor.has_value());

  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> c(-4, 4);
  auto linear = [&]() {
    Polynomial l(r);
    for (std::size_t v = 0; v < 3; ++v) l += Polynomial::variable(r, v) * Rational(c(rng));
    return l;
  };
  auto quadric = [&]() {
    Polynomial q(r);
    for (const auto& m : monomials_of_degree(3, 2)) q += Polynomial::term(r, m, Rational(c(rng)));
    return q;
  };
  int with_factor = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t k = 2 + static_cast<std::size_t>(trial % 2);
    std::vector<Polynomial> qs;
    bool plant = trial % 4 < 2;
    Polynomial ell = linear();
    if (ell.is_zero()) ell = P("a");
    for (std::size_t i = 0; i < k; ++i) qs.push_back(plant ? ell * linear() : quadric());
    // Skip dependent draws; the analysis assumes independent quadrics.
    QMatrix m(static_cast<Index>(k), 6);
    auto deg2 = monomials_of_degree(3, 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = qs[i].coefficient(deg2[j]);
    if (rank(m) < static_cast<Index>(k)) continue;
    auto rep = quadric_span_analysis(qs);
    CHECK(rep.equality == rep.common_factor.has_value());
    if (plant) CHECK(rep.common_factor.has_value());
    if (rep.common_factor) {
      ++with_factor;
      for (const auto& q : qs) CHECK(exact_quotient(q, *rep.common_factor).has_value());
    }
  }
  CHECK(with_factor > 100);
}
