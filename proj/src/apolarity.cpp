#include "hilb/apolarity.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "hilb/linalg.hpp"
#include "hilb/local.hpp"

namespace hilb {

namespace {

struct MonomialIndex {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, Index, MonomialHash> pos;

  explicit MonomialIndex(std::vector<Monomial> m) : monos(std::move(m)) {
    for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = static_cast<Index>(i);
  }
  Index size() const { return static_cast<Index>(monos.size()); }
};

Polynomial row_to_poly(const RingPtr& ring, const QMatrix& m, Index r, const MonomialIndex& idx) {
  std::vector<Term> terms;
  for (Index j = 0; j < idx.size(); ++j)
    if (!m(r, j).is_zero()) terms.push_back({idx.monos[static_cast<std::size_t>(j)], m(r, j)});
  return Polynomial::from_terms(ring, std::move(terms));
}

int max_degree(const std::vector<Polynomial>& fs) {
  int d = -1;
  for (const auto& f : fs) d = std::max(d, f.degree());
  return d;
}

// Degree in the first n variables only.
unsigned spatial_degree(const Polynomial& f, std::size_t n) {
  unsigned d = 0;
  for (const auto& t : f.terms()) {
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i) s += t.mono.e[i];
    d = std::max(d, s);
  }
  return d;
}

}  // namespace

InverseSystem::InverseSystem(RingPtr ring, std::vector<Polynomial> echelon_basis)
    : ring_(std::move(ring)), basis_(std::move(echelon_basis)) {}

HilbertSequence InverseSystem::filtered_hilbert_function() const {
  HilbertSequence h;
  for (const auto& f : basis_) {
    auto d = static_cast<std::size_t>(f.degree());
    if (h.size() <= d) h.resize(d + 1, 0);
    ++h[d];
  }
  return h;
}

std::vector<Polynomial> echelon_span(const std::vector<Polynomial>& fs) {
  std::vector<Polynomial> out;
  if (fs.empty()) return out;
  const RingPtr& ring = fs.front().ring();
  std::vector<Monomial> support;
  {
    std::unordered_map<Monomial, char, MonomialHash> seen;
    for (const auto& f : fs)
      for (const auto& t : f.terms())
        if (seen.emplace(t.mono, 1).second) support.push_back(t.mono);
  }
  const Ring& r = *ring;
  std::sort(support.begin(), support.end(), [&r](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return r.greater(a, b);
  });
  MonomialIndex idx(std::move(support));
  QMatrix m(static_cast<Index>(fs.size()), idx.size());
  m.setConstant(Rational(0));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& t : fs[i].terms()) m(static_cast<Index>(i), idx.pos.at(t.mono)) = t.coef;
  rref(m);
  for (Index i = 0; i < m.rows(); ++i) out.push_back(row_to_poly(ring, m, i, idx));
  return out;
}

InverseSystem inverse_system_closure(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw std::invalid_argument("inverse_system_closure needs at least one polynomial");
  const RingPtr& ring = fs.front().ring();
  std::size_t n = ring->nvars();
  std::vector<Polynomial> rows;
  for (const auto& f : fs) {
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("inverse system generators from different rings");
    if (f.is_zero()) continue;
    for (const auto& theta : monomials_up_to(n, static_cast<unsigned>(f.degree()))) {
      Polynomial g = apolar_apply(theta, f);
      if (!g.is_zero()) rows.push_back(std::move(g));
    }
  }
  return InverseSystem(ring, echelon_span(rows));
}

RingPtr paired_operator_ring(const RingPtr& dual) {
  std::size_t n = dual->nvars() - (dual->parameter() ? 1 : 0);
  return operator_ring(n);
}

Ideal apolar_ideal(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw std::invalid_argument("apolar_ideal needs at least one polynomial");
  const RingPtr& s = fs.front().ring();
  RingPtr t = paired_operator_ring(s);
  std::size_t n = t->nvars();
  int dmax = max_degree(fs);
  if (dmax < 0) return Ideal(t, {Polynomial::constant(t, Rational(1))});
  auto d = static_cast<unsigned>(dmax);
  MonomialIndex cols(monomials_up_to(n, d));
  MonomialIndex srows(monomials_up_to(n, d));
  QMatrix m(static_cast<Index>(fs.size()) * srows.size(), cols.size());
  m.setConstant(Rational(0));
  for (Index j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (Polynomial g = apolar_apply(cols.monos[static_cast<std::size_t>(j)], fs[i]); const auto& term : g.terms())
        m(static_cast<Index>(i) * srows.size() + srows.pos.at(term.mono), j) = term.coef;
  QMatrix ker = kernel(m);
  rref(ker);
  std::vector<Polynomial> cand;
  for (Index r = 0; r < ker.rows(); ++r) cand.push_back(row_to_poly(t, ker, r, cols));
  for (const auto& mono : monomials_of_degree(n, d + 1)) cand.push_back(Polynomial::term(t, mono));
  // Echelon rows together with m^{D+1} already form a Groebner basis; keep the minimal part.
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < cand.size() && !redundant; ++k)
      if (k != i && cand[k].leading_monomial().divides(cand[i].leading_monomial()) &&
          cand[k].leading_monomial() != cand[i].leading_monomial())
        redundant = true;
    if (!redundant) gens.push_back(cand[i]);
  }
  return Ideal(t, std::move(gens));
}

InverseSystem lead_system(const InverseSystem& j) {
  std::vector<Polynomial> tops;
  for (const auto& f : j.basis()) tops.push_back(f.top_form());
  if (tops.empty()) return j;
  return inverse_system_closure(tops);
}

DualityReport check_lead_init_duality(const std::vector<Polynomial>& fs) {
  InverseSystem j = inverse_system_closure(fs);
  Ideal from_lead = apolar_ideal(lead_system(j).basis());
  Ideal from_init = initial_ideal_lowest(apolar_ideal(fs));
  bool eq = from_lead == from_init;
  return DualityReport{eq, from_lead, from_init};
}

std::vector<Polynomial> dual_transform(const std::vector<Polynomial>& sigma, const std::vector<Polynomial>& fs) {
  if (fs.empty()) return {};
  const RingPtr& s = fs.front().ring();
  std::size_t n = s->nvars();
  if (sigma.size() != n) throw std::invalid_argument("dual_transform: substitution has the wrong length");
  const RingPtr& t = sigma.front().ring();
  QMatrix lin(static_cast<Index>(n), static_cast<Index>(n));
  std::vector<Polynomial> delta;
  for (std::size_t i = 0; i < n; ++i) {
    if (!sigma[i].coefficient(Monomial{}).is_zero())
      throw std::invalid_argument("dual_transform: substitution has a constant term");
    for (std::size_t j = 0; j < n; ++j)
      lin(static_cast<Index>(i), static_cast<Index>(j)) = sigma[i].coefficient(Monomial::variable(j));
    delta.push_back(sigma[i] - Polynomial::variable(t, i));
  }
  if (rank(lin) != static_cast<Index>(n))
    throw std::invalid_argument("dual_transform: linear part of the substitution is singular");
  int dmax = max_degree(fs);
  std::vector<Polynomial> out;
  out.assign(fs.size(), Polynomial(s));
  if (dmax < 0) return out;
  // Powers of each delta, reused across multi-indices.
  std::vector<std::vector<Polynomial>> pw(n);
  for (std::size_t i = 0; i < n; ++i) {
    pw[i].push_back(Polynomial::constant(t, Rational(1)));
    for (int k = 1; k <= dmax; ++k) pw[i].push_back(pw[i].back() * delta[i]);
  }
  for (const auto& mu : monomials_up_to(n, static_cast<unsigned>(dmax))) {
    Polynomial op = Polynomial::constant(t, Rational(1));
    Rational denom(1);
    for (std::size_t i = 0; i < n; ++i) {
      op = op * pw[i][mu.e[i]];
      denom *= factorial(mu.e[i]);
    }
    if (op.is_zero()) continue;
    Polynomial x_mu = Polynomial::term(s, mu, Rational(1) / denom);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      Polynomial c = apolar_apply(op, fs[k]);
      if (!c.is_zero()) out[k] += x_mu * c;
    }
  }
  return out;
}

FamilyLimitReport family_limit_check(const std::vector<Polynomial>& family, const std::vector<Rational>& samples,
                                     std::uint64_t seed) {
  if (family.empty()) throw std::invalid_argument("family_limit_check needs generators");
  const RingPtr& fr = family.front().ring();
  auto p = fr->parameter();
  if (!p || *p + 1 != fr->nvars()) throw std::invalid_argument("family must live in S[t] with t last");
  const std::size_t n = *p;
  RingPtr s = ring_without_parameter(fr);
  std::vector<int> to_s(fr->nvars());
  for (std::size_t i = 0; i < n; ++i) to_s[i] = static_cast<int>(i);
  to_s[n] = -1;

  auto fiber = [&](const Rational& v) {
    std::vector<Polynomial> gens;
    for (const auto& f : family) gens.push_back(f.substitute(n, v).map_to(s, to_s));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); }), gens.end());
    if (gens.empty()) gens.push_back(Polynomial(s));
    return inverse_system_closure(gens);
  };

  std::vector<Rational> values = samples;
  {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(2, 997);
    Rational extra;
    do {
      extra = Rational(pick(rng));
    } while (std::find(values.begin(), values.end(), extra) != values.end());
    values.push_back(extra);
  }
  std::vector<std::pair<Rational, HilbertSequence>> sample_hf;
  for (const auto& v : values) {
    if (v.is_zero()) throw std::invalid_argument("family_limit_check: samples must be nonzero");
    HilbertSequence h = fiber(v).filtered_hilbert_function();
    if (!sample_hf.empty() && h != sample_hf.front().second)
      throw HilbertFunctionJump("Hilbert function jumps between t = " + sample_hf.front().first.str() + " " +
                                    format_sequence(sample_hf.front().second) + " and t = " + v.str() + " " +
                                    format_sequence(h),
                                sample_hf.front().first, v);
    sample_hf.emplace_back(v, h);
  }

  // Contractions over Q[t], columns by degree then grevlex, largest first.
  unsigned dmax = 0;
  for (const auto& f : family) dmax = std::max(dmax, spatial_degree(f, n));
  std::vector<Monomial> cols_m;
  for (const auto& m : monomials_up_to(n, dmax)) cols_m.push_back(m);
  MonomialIndex cols(cols_m);
  std::vector<std::vector<UniPoly>> rows;
  for (const auto& f : family) {
    if (f.is_zero()) continue;
    for (const auto& theta : monomials_up_to(n, spatial_degree(f, n))) {
      Polynomial g = apolar_apply(theta, f);
      if (g.is_zero()) continue;
      std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(cols.size()));
      for (const auto& t : g.terms()) {
        Monomial sm = t.mono;
        unsigned tdeg = sm.e[n];
        sm.e[n] = 0;
        auto& c = coeffs[static_cast<std::size_t>(cols.pos.at(sm))];
        if (c.size() <= tdeg) c.resize(tdeg + 1);
        c[tdeg] = t.coef;
      }
      std::vector<UniPoly> row;
      for (auto& c : coeffs) row.emplace_back(std::move(c));
      rows.push_back(std::move(row));
    }
  }
  const Index nrows = static_cast<Index>(rows.size());
  Matrix<UniPoly> m(nrows, cols.size());
  for (Index i = 0; i < nrows; ++i)
    for (Index j = 0; j < cols.size(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  std::vector<UniPoly> pivots;
  // generic_rank_above[k + 1] = rank of the columns of degree > k.
  std::vector<Index> rank_above(dmax + 2, 0);
  Index prefix = cols.size();
  BareissResult<UniPoly> full = bareiss<UniPoly>(m);
  for (int k = -1; k <= static_cast<int>(dmax); ++k) {
    prefix = 0;
    for (const auto& mono : cols.monos)
      if (static_cast<int>(mono.degree()) > k) ++prefix;
    if (prefix == 0) continue;
    BareissResult<UniPoly> res = k < 0 ? full : bareiss<UniPoly>(Matrix<UniPoly>(m.leftCols(prefix)));
    rank_above[static_cast<std::size_t>(k + 1)] = res.rank;
    if (res.rank > 0 && res.last_pivot.degree() > 0 &&
        std::find(pivots.begin(), pivots.end(), res.last_pivot) == pivots.end())
      pivots.push_back(res.last_pivot);
  }
  HilbertSequence generic;
  for (unsigned k = 0; k <= dmax; ++k) generic.push_back(rank_above[k] - rank_above[k + 1]);
  while (!generic.empty() && generic.back() == 0) generic.pop_back();
  for (const auto& [v, h] : sample_hf)
    if (h != generic) {
      bool special = std::any_of(pivots.begin(), pivots.end(), [&](const UniPoly& q) { return q(v).is_zero(); });
      if (!special)
        throw std::logic_error("family_limit_check: sample " + v.str() + " disagrees with the generic Hilbert function");
      throw HilbertFunctionJump("sample t = " + v.str() + " is a special value", v, v);
    }

  // Flat limit: saturate a Q(t)-basis of the rows at t = 0.
  std::vector<std::vector<UniPoly>> basis;
  for (Index r : full.pivot_rows) basis.push_back(rows[static_cast<std::size_t>(r)]);
  auto normalize = [](std::vector<UniPoly>& row) {
    int v = -1;
    for (const auto& e : row) {
      int ev = e.valuation();
      if (ev >= 0 && (v < 0 || ev < v)) v = ev;
    }
    if (v > 0)
      for (auto& e : row) e = e.shift_down(v);
  };
  for (auto& row : basis) normalize(row);
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw std::logic_error("family_limit_check: saturation did not terminate");
    QMatrix v0(static_cast<Index>(basis.size()), cols.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (Index j = 0; j < cols.size(); ++j) v0(static_cast<Index>(i), j) = basis[i][static_cast<std::size_t>(j)].coefficient(0);
    QMatrix dep = left_kernel(v0);
    if (dep.rows() == 0) {
      std::vector<Polynomial> limit_polys;
      for (Index i = 0; i < v0.rows(); ++i) {
        std::vector<Term> terms;
        for (Index j = 0; j < cols.size(); ++j)
          if (!v0(i, j).is_zero()) terms.push_back({cols.monos[static_cast<std::size_t>(j)], v0(i, j)});
        limit_polys.push_back(Polynomial::from_terms(s, std::move(terms)));
      }
      InverseSystem limit = inverse_system_closure(limit_polys);
      InverseSystem at_zero = fiber(Rational(0));
      Ideal limit_ideal = apolar_ideal(limit.basis());
      return FamilyLimitReport{generic,
                               sample_hf,
                               pivots,
                               at_zero.filtered_hilbert_function(),
                               at_zero == limit,
                               limit,
                               limit_ideal};
    }
    std::size_t j = 0;
    while (dep(0, static_cast<Index>(j)).is_zero()) ++j;
    std::vector<UniPoly> combo(static_cast<std::size_t>(cols.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational& c = dep(0, static_cast<Index>(i));
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < combo.size(); ++k)
        if (!basis[i][k].is_zero()) combo[k] += UniPoly(c) * basis[i][k];
    }
    normalize(combo);
    basis[j] = std::move(combo);
  }
}

}  // namespace hilb
