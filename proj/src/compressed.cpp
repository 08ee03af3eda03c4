#include "hilb/compressed.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "hilb/local.hpp"

namespace hilb {

namespace {

long choose(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Level s for any d >= 1: C(s+2,3) < d <= C(s+3,3).
CompressedParams level(long d) {
  CompressedParams p;
  p.d = d;
  while (!(choose(p.s + 2, 3) < d && d <= choose(p.s + 3, 3))) ++p.s;
  p.h = d - choose(p.s + 2, 3);
  p.D = choose(p.s + 2, 2);
  p.dim = p.h * (p.D - p.h);
  for (long k = 0; k < p.s; ++k) p.hilbert_function.push_back(choose(k + 2, 2));
  p.hilbert_function.push_back(p.h);
  return p;
}

Rational monomial_value(const Monomial& m, const Point& p) {
  Rational v(1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (unsigned k = 0; k < m.e[i]; ++k) v *= p[i];
  return v;
}

}  // namespace

CompressedParams very_compressed_params(long d) {
  if (d < 2) throw std::invalid_argument("very compressed parameters need d >= 2");
  return level(d);
}

std::vector<ThresholdRow> reducibility_threshold_scan(long dmax) {
  if (dmax < 8) throw std::invalid_argument("scan needs dmax >= 8");
  std::vector<ThresholdRow> rows;
  for (long d = 8; d <= dmax; ++d) {
    auto p = level(d);
    rows.push_back({d, p.s, p.h, p.dim, 3 * d, p.dim >= 3 * d});
  }
  return rows;
}

Ideal points_vanishing_ideal(const std::vector<Point>& points, const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  const std::size_t npts = points.size();
  for (std::size_t i = 0; i < npts; ++i) {
    if (points[i].size() != n) throw std::invalid_argument("point has the wrong number of coordinates");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("repeated point");
  }
  if (npts == 0) return Ideal(ring, {Polynomial::constant(ring, Rational(1))});

  // Each stored row: evaluation vector in echelon form, plus the polynomial it evaluates.
  struct Row {
    std::vector<Rational> values;
    std::size_t pivot;
    Polynomial poly;
  };
  std::vector<Row> rows;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; };
  std::set<Monomial, decltype(cmp)> todo(cmp);
  todo.insert(Monomial{});
  while (!todo.empty()) {
    Monomial m = *todo.begin();
    todo.erase(todo.begin());
    if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
    std::vector<Rational> v(npts);
    for (std::size_t k = 0; k < npts; ++k) v[k] = monomial_value(m, points[k]);
    Polynomial f = Polynomial::term(ring, m);
    for (const auto& r : rows) {
      if (v[r.pivot].is_zero()) continue;
      Rational c = v[r.pivot];
      for (std::size_t k = 0; k < npts; ++k)
        if (!r.values[k].is_zero()) v[k] -= c * r.values[k];
      f -= r.poly * c;
    }
    auto piv = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (piv == v.end()) {
      basis.push_back(f);
      leads.push_back(m);
      continue;
    }
    std::size_t p = static_cast<std::size_t>(piv - v.begin());
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    f *= inv;
    for (auto& r : rows) {
      if (r.values[p].is_zero()) continue;
      Rational c = r.values[p];
      for (std::size_t k = 0; k < npts; ++k)
        if (!v[k].is_zero()) r.values[k] -= c * v[k];
      r.poly -= f * c;
    }
    rows.push_back({std::move(v), p, std::move(f)});
    for (std::size_t i = 0; i < n; ++i) todo.insert(m * Monomial::variable(i));
  }
  return Ideal(ring, basis);
}

KstarResult kstar_limit(const std::vector<Point>& points) {
  RingPtr r = operator_ring(3);
  Ideal vanishing = points_vanishing_ideal(points, r);
  std::vector<Polynomial> tops;
  for (const auto& g : vanishing.groebner_basis()) tops.push_back(g.top_form());
  KstarResult out{points, Ideal(r, tops), {}, false, KstarStatus::degenerate, 1};
  out.hilbert_function = local_hilbert_function(out.limit);
  auto p = level(static_cast<long>(points.size()));
  out.contains_next_power = out.limit.contains(maximal_power(r, static_cast<unsigned>(p.s + 1)));
  bool inside_power = std::all_of(out.limit.groebner_basis().begin(), out.limit.groebner_basis().end(),
                                  [&](const Polynomial& g) { return g.order() >= p.s; });
  if (out.contains_next_power && inside_power && out.hilbert_function == p.hilbert_function)
    out.status = KstarStatus::very_compressed;
  return out;
}

KstarResult kstar_limit_experiment(long d, std::uint64_t seed, unsigned max_draws) {
  if (d < 1 || d > 200) throw std::invalid_argument("k*-limit experiment supports 1 <= d <= 200");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::optional<KstarResult> res;
  for (unsigned draw = 1; draw <= std::max(1u, max_draws); ++draw) {
    std::vector<Point> pts;
    while (pts.size() < static_cast<std::size_t>(d)) {
      Point p{Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    res = kstar_limit(pts);
    res->draws = draw;
    if (res->status == KstarStatus::very_compressed) break;
  }
  return *res;
}

std::string status_name(KstarStatus s) { return s == KstarStatus::very_compressed ? "very_compressed" : "DEGENERATE"; }

}  // namespace hilb
