#include "hilb/local.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

int krull_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  auto leads = ideal.leading_monomials();
  std::size_t n = ideal.ring()->nvars();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (m.e[i] && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool is_zero_dimensional(const Ideal& ideal) { return krull_dimension(ideal) == 0; }

std::vector<Monomial> standard_monomials(const Ideal& ideal) {
  if (ideal.is_unit()) return {};
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensional("ideal is not zero-dimensional");
  auto leads = ideal.leading_monomials();
  std::size_t n = ideal.ring()->nvars();
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : leads) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.e[i]) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
  }
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (const auto& l : leads)
        if (l.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k < bound[i]; ++k) {
      cur.e[i] = static_cast<std::uint16_t>(k);
      rec(i + 1);
    }
    cur.e[i] = 0;
  };
  rec(0);
  const Ring& r = *ideal.ring();
  std::sort(out.begin(), out.end(), [&r](const Monomial& a, const Monomial& b) { return r.greater(a, b); });
  return out;
}

std::size_t degree(const Ideal& ideal) { return standard_monomials(ideal).size(); }

unsigned m_primary_exponent(const Ideal& ideal, unsigned cap) {
  if (ideal.is_unit()) return 0;
  std::size_t n = ideal.ring()->nvars();
  Monomial witness;
  for (unsigned k = 1; k <= cap; ++k) {
    bool all = true;
    for (const auto& m : monomials_of_degree(n, k))
      if (!ideal.contains(Polynomial::term(ideal.ring(), m))) {
        all = false;
        witness = m;
        break;
      }
    if (all) return k;
  }
  throw NotMPrimary("ideal is not m-primary: " + ideal.ring()->format(witness) + " (degree " + std::to_string(cap) +
                        ") is not in the ideal",
                    witness);
}

bool is_m_primary(const Ideal& ideal, unsigned cap) {
  try {
    m_primary_exponent(ideal, cap);
    return true;
  } catch (const NotMPrimary&) {
    return false;
  }
}

Quotient::Quotient(Ideal ideal) : ideal_(std::move(ideal)), basis_(standard_monomials(ideal_)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

const std::vector<Rational>& Quotient::coords(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  std::vector<Rational> v(basis_.size());
  Polynomial nf = ideal_.normal_form(Polynomial::term(ideal_.ring(), m));
  for (const auto& t : nf.terms()) v[index_.at(t.mono)] = t.coef;
  return cache_.emplace(m, std::move(v)).first->second;
}

std::vector<Rational> Quotient::coords(const Polynomial& f) {
  std::vector<Rational> v(basis_.size());
  for (const auto& t : f.terms()) {
    const auto& c = coords(t.mono);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) v[i] += t.coef * c[i];
  }
  return v;
}

namespace {

// Basis (as matrix rows over `monos`) of I intersected with the span of `monos`,
// where `monos` lists every monomial of degree < N and m^N lies in I.
QMatrix truncated_ideal_space(Quotient& q, const std::vector<Monomial>& monos) {
  QMatrix nf(static_cast<Index>(q.dim()), static_cast<Index>(monos.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const auto& c = q.coords(monos[j]);
    for (std::size_t i = 0; i < c.size(); ++i) nf(static_cast<Index>(i), static_cast<Index>(j)) = c[i];
  }
  return kernel(nf);
}

std::vector<Monomial> ascending_monomials(std::size_t n, unsigned below) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d < below; ++d) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

std::vector<long> local_hilbert_function(const Ideal& ideal) {
  unsigned n_exp = m_primary_exponent(ideal);
  if (n_exp == 0) return {};
  std::size_t n = ideal.ring()->nvars();
  Quotient q(ideal);
  auto monos = ascending_monomials(n, n_exp);
  QMatrix w = truncated_ideal_space(q, monos);
  // colen(e) = dim T/(I + m^e) = #monomials of degree < e minus rank of W truncated below e.
  std::vector<long> colen(n_exp + 1, 0);
  std::size_t count = 0;
  for (unsigned e = 1; e <= n_exp; ++e) {
    count += monomials_of_degree(n, e - 1).size();
    Index r = w.rows() == 0 ? 0 : rank(w.leftCols(static_cast<Index>(count)));
    colen[e] = static_cast<long>(count) - static_cast<long>(r);
  }
  std::vector<long> h;
  for (unsigned e = 0; e < n_exp; ++e) h.push_back(colen[e + 1] - colen[e]);
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

Ideal initial_ideal_lowest(const Ideal& ideal) {
  unsigned n_exp = m_primary_exponent(ideal);
  const RingPtr& ring = ideal.ring();
  if (n_exp == 0) return Ideal(ring, {Polynomial::constant(ring, Rational(1))});
  std::size_t n = ring->nvars();
  Quotient q(ideal);
  auto monos = ascending_monomials(n, n_exp);
  QMatrix w = truncated_ideal_space(q, monos);
  auto pivots = rref(w);
  std::vector<Polynomial> gens = maximal_power(ring, n_exp).generators();
  for (Index r = 0; r < w.rows(); ++r) {
    unsigned d = monos[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])].degree();
    std::vector<Term> terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (monos[j].degree() == d && !w(r, static_cast<Index>(j)).is_zero())
        terms.push_back({monos[j], w(r, static_cast<Index>(j))});
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

unsigned embedding_dimension(const Ideal& ideal) {
  auto h = local_hilbert_function(ideal);
  return h.size() > 1 ? static_cast<unsigned>(h[1]) : 0;
}

std::size_t tangent_dimension(const Ideal& ideal) {
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensional("tangent dimension needs a zero-dimensional ideal");
  Quotient q(ideal);
  const auto& gb = ideal.groebner_basis();
  const std::size_t r = gb.size();
  const std::size_t d = q.dim();
  if (d == 0) return 0;
  auto syz = schreyer_syzygies(gb);
  QMatrix m(static_cast<Index>(syz.size() * d), static_cast<Index>(r * d));
  m.setConstant(Rational(0));
  for (std::size_t s = 0; s < syz.size(); ++s) {
    for (std::size_t i = 0; i < r; ++i) {
      const Polynomial& coef = syz[s].coords[i];
      if (coef.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        auto v = q.coords(coef.mul_monomial(q.basis()[k]));
        for (std::size_t row = 0; row < d; ++row)
          if (!v[row].is_zero()) m(static_cast<Index>(s * d + row), static_cast<Index>(i * d + k)) += v[row];
      }
    }
  }
  return r * d - static_cast<std::size_t>(rank(m));
}

std::size_t socle_dimension(const Ideal& ideal) {
  Quotient q(ideal);
  const std::size_t d = q.dim();
  const std::size_t n = ideal.ring()->nvars();
  QMatrix m(static_cast<Index>(n * d), static_cast<Index>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = q.coords(q.basis()[k] * Monomial::variable(j));
      for (std::size_t row = 0; row < d; ++row) m(static_cast<Index>(j * d + row), static_cast<Index>(k)) = v[row];
    }
  return d - static_cast<std::size_t>(rank(m));
}

bool is_gorenstein(const Ideal& ideal) { return socle_dimension(ideal) == 1; }

bool is_monomial_ideal(const Ideal& ideal) {
  const auto& gb = ideal.groebner_basis();
  return std::all_of(gb.begin(), gb.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::string Invariants::str() const {
  std::ostringstream os;
  os << '(' << dimension << ", ";
  if (degree)
    os << *degree;
  else
    os << "inf";
  os << ", ";
  if (tangent)
    os << *tangent;
  else
    os << "-";
  os << ')';
  return os.str();
}

Invariants invariants(const Ideal& ideal) {
  Invariants inv;
  inv.dimension = krull_dimension(ideal);
  if (inv.dimension == 0) {
    inv.degree = degree(ideal);
    inv.tangent = tangent_dimension(ideal);
  } else if (inv.dimension < 0) {
    inv.degree = 0;
    inv.tangent = 0;
  }
  return inv;
}

}  // namespace hilb
