#include "hilb/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "hilb/linalg.hpp"

namespace hilb {

namespace {

struct Elem {
  Polynomial p;
  std::vector<Polynomial> cof;
};

const Elem* find_reducer(const Monomial& m, const std::vector<Elem>& basis, std::size_t skip = SIZE_MAX) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (i != skip && basis[i].p.leading_monomial().divides(m)) return &basis[i];
  return nullptr;
}

// Full reduction against a monic basis.
void reduce(Elem& h, const std::vector<Elem>& basis, bool track, std::size_t skip = SIZE_MAX) {
  std::size_t pos = 0;
  while (pos < h.p.size()) {
    const Term& t = h.p.terms()[pos];
    const Elem* g = find_reducer(t.mono, basis, skip);
    if (!g) {
      ++pos;
      continue;
    }
    Monomial q = t.mono / g->p.leading_monomial();
    Rational c = t.coef;
    h.p.sub_mul(c, q, g->p);
    if (track)
      for (std::size_t l = 0; l < h.cof.size(); ++l) h.cof[l].sub_mul(c, q, g->cof[l]);
  }
}

void make_monic(Elem& e, bool track) {
  if (e.p.is_zero()) return;
  Rational inv = Rational(1) / e.p.leading_coefficient();
  if (inv.is_one()) return;
  e.p *= inv;
  if (track)
    for (auto& c : e.cof) c *= inv;
}

Elem s_polynomial(const Elem& a, const Elem& b, bool track) {
  Monomial l = Monomial::lcm(a.p.leading_monomial(), b.p.leading_monomial());
  Monomial ma = l / a.p.leading_monomial();
  Monomial mb = l / b.p.leading_monomial();
  Elem s{a.p.mul_monomial(ma), {}};
  s.p.sub_mul(Rational(1), mb, b.p);
  if (track) {
    s.cof.reserve(a.cof.size());
    for (std::size_t i = 0; i < a.cof.size(); ++i) {
      Polynomial c = a.cof[i].mul_monomial(ma);
      c.sub_mul(Rational(1), mb, b.cof[i]);
      s.cof.push_back(std::move(c));
    }
  }
  return s;
}

std::vector<Elem> buchberger(const RingPtr& ring, std::vector<Elem> input, bool track) {
  const Ring& r = *ring;
  std::vector<Elem> g;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;

  auto add = [&](Elem e) {
    make_monic(e, track);
    std::size_t k = g.size();
    g.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i) {
      pending.emplace_back(i, k);
      pending_set.emplace(i, k);
    }
  };

  for (auto& e : input) {
    reduce(e, g, track);
    if (!e.p.is_zero()) add(std::move(e));
  }

  auto key = [](std::size_t i, std::size_t j) { return i < j ? std::make_pair(i, j) : std::make_pair(j, i); };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    std::size_t best = 0;
    Monomial best_lcm;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      auto [i, j] = pending[k];
      Monomial l = Monomial::lcm(g[i].p.leading_monomial(), g[j].p.leading_monomial());
      if (k == 0 || r.compare(l, best_lcm) < 0) {
        best = k;
        best_lcm = l;
      }
    }
    auto [i, j] = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_set.erase({i, j});

    const Monomial& li = g[i].p.leading_monomial();
    const Monomial& lj = g[j].p.leading_monomial();
    if (Monomial::coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!g[k].p.leading_monomial().divides(best_lcm)) continue;
      if (pending_set.count(key(i, k)) || pending_set.count(key(j, k))) continue;
      chain = true;
    }
    if (chain) continue;

    Elem s = s_polynomial(g[i], g[j], track);
    reduce(s, g, track);
    if (!s.p.is_zero()) add(std::move(s));
  }

  // Minimalize, then interreduce.
  std::vector<Monomial> lead;
  for (const auto& e : g) lead.push_back(e.p.leading_monomial());
  std::vector<Elem> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k)
      if (k != i && lead[k].divides(lead[i]) && (lead[k] != lead[i] || k < i)) redundant = true;
    if (!redundant) minimal.push_back(std::move(g[i]));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduce(minimal[i], minimal, track, i);
    make_monic(minimal[i], track);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&r](const Elem& a, const Elem& b) { return r.greater(a.p.leading_monomial(), b.p.leading_monomial()); });
  return minimal;
}

std::vector<int> shift_map(std::size_t n, int by) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i) + by;
  return m;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(std::string_view text, const RingPtr& ring) { return Ideal(ring, parse_polynomial_list(text, ring)); }

const std::vector<Polynomial>& Ideal::groebner_basis() const& {
  std::call_once(cache_->once, [this] {
    std::vector<Elem> input;
    input.reserve(gens_.size());
    for (const auto& g : gens_) input.push_back({g, {}});
    for (auto& e : buchberger(ring_, std::move(input), false)) cache_->basis.push_back(std::move(e.p));
  });
  return cache_->basis;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.leading_monomial());
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("normal_form: polynomial from a different ring");
  const auto& gb = groebner_basis();
  Polynomial h = f;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term& t = h.terms()[pos];
    const Polynomial* red = nullptr;
    for (const auto& g : gb)
      if (g.leading_monomial().divides(t.mono)) {
        red = &g;
        break;
      }
    if (!red) {
      ++pos;
      continue;
    }
    Rational c = t.coef;
    h.sub_mul(c, t.mono / red->leading_monomial(), *red);
  }
  return h;
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.groebner_basis() == b.groebner_basis();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("sum of ideals in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("product of ideals in different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal with(const Ideal& a, const Polynomial& f) {
  auto gens = a.generators();
  gens.push_back(f);
  return Ideal(a.ring(), std::move(gens));
}

Ideal maximal_power(const RingPtr& ring, unsigned k) {
  std::size_t n = ring->nvars();
  std::optional<std::size_t> p = ring->parameter();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (!p || *p != i) vars.push_back(i);
  std::vector<Polynomial> gens;
  for (const auto& m : monomials_of_degree(vars.size(), k)) {
    Monomial full;
    for (std::size_t i = 0; i < vars.size(); ++i) full.e[vars[i]] = m.e[i];
    gens.push_back(Polynomial::term(ring, full));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal) { return ideal.groebner_basis(); }

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) { return ideal.normal_form(f); }

Division divide(const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<std::vector<Term>> q(basis.size());
  Polynomial h = f;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term& t = h.terms()[pos];
    std::size_t k = 0;
    while (k < basis.size() && !basis[k].leading_monomial().divides(t.mono)) ++k;
    if (k == basis.size()) {
      ++pos;
      continue;
    }
    Monomial m = t.mono / basis[k].leading_monomial();
    Rational c = t.coef / basis[k].leading_coefficient();
    q[k].push_back({m, c});
    h.sub_mul(c, m, basis[k]);
  }
  Division d{h, {}};
  for (auto& terms : q) d.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  return d;
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Division d = divide(f, {g});
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotients.front();
}

TrackedBasis groebner_with_cofactors(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<Elem> input;
  for (std::size_t l = 0; l < gens.size(); ++l) {
    Elem e{gens[l], std::vector<Polynomial>(gens.size(), Polynomial(ring))};
    e.cof[l] = Polynomial::constant(ring, Rational(1));
    input.push_back(std::move(e));
  }
  TrackedBasis out;
  for (auto& e : buchberger(ring, std::move(input), true)) {
    out.basis.push_back(std::move(e.p));
    out.cofactors.push_back(std::move(e.cof));
  }
  return out;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("intersection of ideals in different rings");
  const RingPtr& r = a.ring();
  std::size_t n = r->nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("intersection needs a spare variable");
  std::vector<std::string> names{"_w"};
  names.insert(names.end(), r->names().begin(), r->names().end());
  RingPtr e = make_ring(names, OrderKind::block, 1);
  auto up = shift_map(n, 1);
  Polynomial w = Polynomial::variable(e, 0);
  Polynomial one_minus_w = Polynomial::constant(e, Rational(1)) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(w * f.map_to(e, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * g.map_to(e, up));
  Ideal big(e, std::move(gens));
  std::vector<int> down(n + 1);
  down[0] = -1;
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Polynomial> kept;
  for (const auto& g : big.groebner_basis())
    if (g.degree_in(0) == 0) kept.push_back(g.map_to(r, down));
  return Ideal(r, std::move(kept));
}

Ideal colon_by_element(const Ideal& k, const Polynomial& f) {
  if (f.is_zero()) return Ideal(k.ring(), {Polynomial::constant(k.ring(), Rational(1))});
  Ideal meet = intersect(k, Ideal(k.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = exact_quotient(g, f);
    if (!q) throw std::logic_error("colon: intersection generator not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(k.ring(), std::move(gens));
}

RingPtr ring_without_parameter(const RingPtr& ring) {
  auto p = ring->parameter();
  if (!p) throw std::invalid_argument("ring has no parameter");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (i != *p) names.push_back(ring->names()[i]);
  OrderKind order = ring->order() == OrderKind::block ? OrderKind::grevlex : ring->order();
  return make_ring(std::move(names), order);
}

Ideal specialize_parameter(const Ideal& k, const Rational& value) {
  RingPtr target = ring_without_parameter(k.ring());
  std::size_t p = *k.ring()->parameter();
  std::vector<int> map;
  for (std::size_t i = 0; i < k.ring()->nvars(); ++i)
    map.push_back(i == p ? -1 : static_cast<int>(i < p ? i : i - 1));
  std::vector<Polynomial> gens;
  for (const auto& g : k.generators()) gens.push_back(g.substitute(p, value).map_to(target, map));
  return Ideal(target, std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  const RingPtr& r = ideal.ring();
  std::size_t n = r->nvars();
  std::vector<char> dropped(n, 0);
  for (auto i : drop) dropped.at(i) = 1;
  std::vector<std::string> names;
  std::vector<int> to_e(n);
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) {
      to_e[i] = static_cast<int>(names.size());
      names.push_back(r->names()[i]);
    }
  std::size_t block = names.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) {
      to_e[i] = static_cast<int>(names.size());
      names.push_back(r->names()[i]);
    }
  if (block == 0) return ideal;
  if (block == n) throw std::invalid_argument("eliminate: nothing left");
  RingPtr e = make_ring(names, OrderKind::block, block);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(e, to_e));
  Ideal big(e, std::move(gens));
  std::vector<int> back(n, -1);
  for (std::size_t i = 0; i < n; ++i) back[static_cast<std::size_t>(to_e[i])] = dropped[i] ? -1 : static_cast<int>(i);
  std::vector<Polynomial> kept;
  for (const auto& g : big.groebner_basis()) {
    bool free = true;
    for (std::size_t i = 0; i < block; ++i) free = free && g.degree_in(i) == 0;
    if (free) kept.push_back(g.map_to(r, back));
  }
  return Ideal(r, std::move(kept));
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.degree() == 0 || g.degree() == 0) return Polynomial::constant(f.ring(), Rational(1));
  Ideal meet = intersect(Ideal(f.ring(), {f}), Ideal(f.ring(), {g}));
  const auto& gb = meet.groebner_basis();
  if (gb.size() != 1) throw std::logic_error("gcd: intersection of principal ideals is not principal");
  auto q = exact_quotient(f * g, gb.front());
  if (!q) throw std::logic_error("gcd: lcm does not divide the product");
  return q->monic();
}

std::vector<Syzygy> schreyer_syzygies(const std::vector<Polynomial>& basis) {
  std::vector<Syzygy> out;
  if (basis.empty()) return out;
  const RingPtr& ring = basis.front().ring();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      Monomial l = Monomial::lcm(li, lj);
      Rational ci = Rational(1) / basis[i].leading_coefficient();
      Rational cj = Rational(1) / basis[j].leading_coefficient();
      Polynomial s = basis[i].mul_monomial(l / li, ci);
      s.sub_mul(cj, l / lj, basis[j]);
      Division d = divide(s, basis);
      if (!d.remainder.is_zero()) throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
      Syzygy z;
      z.coords.assign(basis.size(), Polynomial(ring));
      for (std::size_t k = 0; k < basis.size(); ++k) z.coords[k] = -d.quotients[k];
      z.coords[i] += Polynomial::term(ring, l / li, ci);
      z.coords[j] -= Polynomial::term(ring, l / lj, cj);
      out.push_back(std::move(z));
    }
  return out;
}

Polynomial apply_syzygy(const Syzygy& s, const std::vector<Polynomial>& gens) {
  if (s.coords.size() != gens.size()) throw std::invalid_argument("syzygy length mismatch");
  Polynomial acc(gens.empty() ? s.coords.front().ring() : gens.front().ring());
  for (std::size_t i = 0; i < gens.size(); ++i) acc += s.coords[i] * gens[i];
  return acc;
}

namespace {

// Degree-by-degree count of minimal generators of a graded submodule of a free module
// with shifts `shift`, spanned by the homogeneous vectors `gens`.
std::map<int, int> minimal_generator_degrees(const RingPtr& ring, const std::vector<int>& shift,
                                             const std::vector<std::vector<Polynomial>>& gens) {
  std::size_t n = ring->nvars();
  std::map<int, std::vector<std::vector<Polynomial>>> by_degree;
  for (const auto& v : gens) {
    int deg = -1;
    for (std::size_t l = 0; l < v.size(); ++l)
      if (!v[l].is_zero()) deg = v[l].degree() + shift[l];
    if (deg >= 0) by_degree[deg].push_back(v);
  }
  std::map<int, int> counts;
  if (by_degree.empty()) return counts;
  int lo = by_degree.begin()->first;
  int hi = by_degree.rbegin()->first;
  std::vector<std::vector<Polynomial>> previous;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::pair<std::size_t, Index>> offsets;
    std::vector<std::unordered_map<Monomial, Index, MonomialHash>> index(shift.size());
    std::vector<std::vector<Monomial>> monos(shift.size());
    Index cols = 0;
    for (std::size_t l = 0; l < shift.size(); ++l) {
      if (d - shift[l] < 0) continue;
      monos[l] = monomials_of_degree(n, static_cast<unsigned>(d - shift[l]));
      for (const auto& m : monos[l]) index[l][m] = cols++;
    }
    auto to_row = [&](const std::vector<Polynomial>& v, QMatrix& mat, Index row) {
      for (Index j = 0; j < cols; ++j) mat(row, j) = Rational(0);
      for (std::size_t l = 0; l < v.size(); ++l)
        for (const auto& t : v[l].terms()) mat(row, index[l].at(t.mono)) = t.coef;
    };
    std::vector<std::vector<Polynomial>> mult;
    for (const auto& v : previous)
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<Polynomial> w;
        for (const auto& c : v) w.push_back(c.mul_monomial(Monomial::variable(x)));
        mult.push_back(std::move(w));
      }
    const auto& fresh = by_degree[d];
    QMatrix a(static_cast<Index>(mult.size()), cols);
    for (std::size_t i = 0; i < mult.size(); ++i) to_row(mult[i], a, static_cast<Index>(i));
    QMatrix all(static_cast<Index>(mult.size() + fresh.size()), cols);
    for (std::size_t i = 0; i < mult.size(); ++i) to_row(mult[i], all, static_cast<Index>(i));
    for (std::size_t i = 0; i < fresh.size(); ++i) to_row(fresh[i], all, static_cast<Index>(mult.size() + i));
    rref(a);
    rref(all);
    int extra = static_cast<int>(all.rows() - a.rows());
    if (extra > 0) counts[d] = extra;
    previous.clear();
    for (Index i = 0; i < all.rows(); ++i) {
      std::vector<Polynomial> v;
      for (std::size_t l = 0; l < shift.size(); ++l) {
        std::vector<Term> terms;
        for (const auto& m : monos[l]) {
          const Rational& c = all(i, index[l].at(m));
          if (!c.is_zero()) terms.push_back({m, c});
        }
        v.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
      previous.push_back(std::move(v));
    }
  }
  return counts;
}

}  // namespace

SyzygyModule syzygy_basis(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const auto& f = ideal.generators();
  SyzygyModule out;
  if (f.empty()) return out;
  TrackedBasis tb = groebner_with_cofactors(ring, f);
  const auto& g = tb.basis;
  const auto& b = tb.cofactors;

  auto add = [&](std::vector<Polynomial> v) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (!zero) out.generators.push_back({std::move(v)});
  };
  for (const auto& s : schreyer_syzygies(g)) {
    std::vector<Polynomial> v(f.size(), Polynomial(ring));
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (s.coords[k].is_zero()) continue;
      for (std::size_t l = 0; l < f.size(); ++l) v[l] += s.coords[k] * b[k][l];
    }
    add(std::move(v));
  }
  for (std::size_t l = 0; l < f.size(); ++l) {
    Division d = divide(f[l], g);
    if (!d.remainder.is_zero()) throw std::logic_error("syzygy_basis: generator not reduced to zero");
    std::vector<Polynomial> v(f.size(), Polynomial(ring));
    v[l] = Polynomial::constant(ring, Rational(1));
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (d.quotients[k].is_zero()) continue;
      for (std::size_t m = 0; m < f.size(); ++m) v[m] -= d.quotients[k] * b[k][m];
    }
    add(std::move(v));
  }

  out.homogeneous = std::all_of(f.begin(), f.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
  if (out.homogeneous) {
    std::vector<int> shift;
    for (const auto& p : f) shift.push_back(p.degree());
    std::vector<std::vector<Polynomial>> pieces;
    for (const auto& s : out.generators) {
      std::map<int, std::vector<Polynomial>> comp;
      for (std::size_t l = 0; l < f.size(); ++l)
        for (const auto& t : s.coords[l].terms()) {
          int d = static_cast<int>(t.mono.degree()) + shift[l];
          auto it = comp.find(d);
          if (it == comp.end()) it = comp.emplace(d, std::vector<Polynomial>(f.size(), Polynomial(ring))).first;
          it->second[l] += Polynomial::term(ring, t.mono, t.coef);
        }
      for (auto& [d, v] : comp) pieces.push_back(std::move(v));
    }
    out.minimal_degrees = minimal_generator_degrees(ring, shift, pieces);
  }
  return out;
}

}  // namespace hilb
