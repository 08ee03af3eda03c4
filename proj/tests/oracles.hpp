#pragma once

#include <random>
#include <unordered_map>

#include "hilb/apolarity.hpp"
#include "hilb/linalg.hpp"
#include "support.hpp"

// Independent computations used to cross-check the library: plain linear algebra, no
// Groebner bases unless stated.
namespace hilb::testing {

// First-order deformation oracle. With m^N in I, every T-linear map I -> T/I kills
// m^{2N}, so it is determined by its values on the generators subject to every linear
// relation among the truncated multiples mu * f_l below degree 2N. No Groebner bases.
inline std::size_t tangent_by_first_order_deformations(const std::vector<Polynomial>& gens, unsigned n_exp) {
  const std::size_t n = gens.front().ring()->nvars();
  const unsigned k = 2 * n_exp;
  auto monos = monomials_up_to(n, k - 1);
  std::unordered_map<Monomial, Index, MonomialHash> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = static_cast<Index>(i);
  const Index cols = static_cast<Index>(monos.size());
  const Index rows = static_cast<Index>(gens.size() * monos.size());
  QMatrix a(rows, cols);
  a.setConstant(Rational(0));
  for (std::size_t l = 0; l < gens.size(); ++l)
    for (std::size_t j = 0; j < monos.size(); ++j)
      for (const auto& t : gens[l].terms()) {
        Monomial m = t.mono * monos[j];
        if (m.degree() < k) a(static_cast<Index>(l * monos.size() + j), idx.at(m)) = t.coef;
      }
  QMatrix ech = a;
  auto pivots = rref(ech);
  std::vector<char> is_pivot(monos.size(), 0);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<Index> quotient_cols;
  for (Index j = 0; j < cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) quotient_cols.push_back(j);
  const std::size_t d = quotient_cols.size();
  std::unordered_map<Index, std::size_t> qpos;
  for (std::size_t i = 0; i < d; ++i) qpos[quotient_cols[i]] = i;

  // Coordinates in T/I of a monomial below degree k (monomials of degree >= k vanish).
  auto reduce_monomial = [&](const Monomial& m) {
    std::vector<Rational> v(d);
    if (m.degree() >= k) return v;
    Index c = idx.at(m);
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      v[qpos.at(c)] = Rational(1);
      return v;
    }
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] == c)
        for (std::size_t i = 0; i < d; ++i) v[i] = -ech(static_cast<Index>(r), quotient_cols[i]);
    return v;
  };

  QMatrix rel = left_kernel(a);
  const std::size_t r = gens.size();
  QMatrix cons(rel.rows() * static_cast<Index>(d), static_cast<Index>(r * d));
  cons.setConstant(Rational(0));
  for (Index s = 0; s < rel.rows(); ++s)
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t j = 0; j < monos.size(); ++j) {
        const Rational& c = rel(s, static_cast<Index>(l * monos.size() + j));
        if (c.is_zero()) continue;
        for (std::size_t q = 0; q < d; ++q) {
          auto v = reduce_monomial(monos[j] * monos[static_cast<std::size_t>(quotient_cols[q])]);
          for (std::size_t row = 0; row < d; ++row)
            if (!v[row].is_zero()) cons(s * static_cast<Index>(d) + static_cast<Index>(row), static_cast<Index>(l * d + q)) += c * v[row];
        }
      }
  QMatrix e = cons;
  return r * d - rref(e).size();
}

inline bool s_pairs_reduce(const std::vector<Polynomial>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      Monomial l = Monomial::lcm(gb[i].leading_monomial(), gb[j].leading_monomial());
      Polynomial s = gb[i].mul_monomial(l / gb[i].leading_monomial());
      s.sub_mul(Rational(1), l / gb[j].leading_monomial(), gb[j]);
      if (!divide(s, gb).remainder.is_zero()) return false;
    }
  return true;
}

inline Polynomial derivative(const Polynomial& f, std::size_t v) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono.e[v] == 0) continue;
    Monomial m = t.mono;
    --m.e[v];
    out.push_back({m, t.coef * Rational(static_cast<long>(t.mono.e[v]))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

// Dimension of the span of all iterated first-order derivatives, by breadth-first search.
inline std::size_t derivative_span_dim(const std::vector<Polynomial>& fs) {
  const RingPtr& r = fs.front().ring();
  std::vector<Polynomial> all;
  std::vector<Polynomial> frontier;
  for (const auto& f : fs)
    if (!f.is_zero()) frontier.push_back(f);
  while (!frontier.empty()) {
    std::vector<Polynomial> next;
    for (const auto& f : frontier) {
      all.push_back(f);
      for (std::size_t v = 0; v < r->nvars(); ++v) {
        Polynomial g = derivative(f, v);
        if (!g.is_zero()) next.push_back(g);
      }
    }
    frontier = echelon_span(next);
  }
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, Index, MonomialHash> idx;
  for (const auto& f : all)
    for (const auto& t : f.terms())
      if (idx.emplace(t.mono, static_cast<Index>(monos.size())).second) monos.push_back(t.mono);
  QMatrix m(static_cast<Index>(all.size()), static_cast<Index>(monos.size()));
  m.setConstant(Rational(0));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& t : all[i].terms()) m(static_cast<Index>(i), idx.at(t.mono)) = t.coef;
  return static_cast<std::size_t>(rank(m));
}

inline std::vector<Polynomial> random_system(std::mt19937_64& rng, const RingPtr& s, unsigned maxdeg = 4) {
  std::uniform_int_distribution<int> count(1, 2);
  std::uniform_int_distribution<int> terms(2, 4);
  std::vector<Polynomial> fs;
  int k = count(rng);
  while (static_cast<int>(fs.size()) < k) {
    Polynomial f = hilb::testing::random_poly(rng, s, maxdeg, terms(rng), 4);
    if (f.degree() >= 1) fs.push_back(f);
  }
  return fs;
}

}  // namespace hilb::testing
