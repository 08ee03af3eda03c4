#include "hilb/certificates.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "hilb/apolarity.hpp"
#include "hilb/local.hpp"

namespace hilb {

namespace {

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

// Some element of `a` that `b` does not contain, as evidence for a != b.
std::string non_member(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.groebner_basis())
    if (!b.contains(g)) return g.str();
  return {};
}

std::string inequality_witness(const Ideal& got, const Ideal& want) {
  std::string w = non_member(got, want);
  if (!w.empty()) return "computed ideal has " + w + " outside the expected one";
  w = non_member(want, got);
  if (!w.empty()) return "expected ideal has " + w + " outside the computed one";
  return {};
}

void merge(CertificateReport& into, const CertificateReport& sub, const std::string& prefix) {
  for (const auto& c : sub.clauses) into.add(prefix + c.check, c.ok, c.detail);
}

}  // namespace

bool CertificateReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.ok; });
}

std::string CertificateReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.ok) return c.check;
  return {};
}

void CertificateReport::add(std::string check, bool ok, std::string detail) {
  clauses.push_back({std::move(check), ok, std::move(detail)});
}

CertificateReport verify_flat_family(const FlatFamilyCertificate& cert) {
  CertificateReport rep{cert.locus, "flat_family", {}};
  const Ideal& k = cert.family;
  auto p = k.ring()->parameter();
  if (!p) {
    rep.add("well_formed", false, "family ring has no parameter");
    return rep;
  }
  RingPtr base = ring_without_parameter(k.ring());
  {
    std::string why;
    if (cert.witness_points.size() < 2) why = "need at least two witness points";
    if (cert.witness_parameter.is_zero()) why = "witness parameter must be nonzero";
    for (std::size_t i = 0; i < cert.witness_points.size() && why.empty(); ++i) {
      if (cert.witness_points[i].size() != base->nvars()) why = "witness " + point_str(cert.witness_points[i]) + " has wrong length";
      for (std::size_t j = 0; j < i && why.empty(); ++j)
        if (cert.witness_points[i] == cert.witness_points[j]) why = "witness points repeat";
    }
    if (!same_ring(cert.special_fiber.ring(), base)) why = "special fiber lives in the wrong ring";
    rep.add("well_formed", why.empty(), why);
    if (!why.empty()) return rep;
  }

  Polynomial t = Polynomial::variable(k.ring(), *p);
  Ideal colon = colon_by_element(k, t);
  bool flat = colon == k;
  rep.add("a:colon", flat, flat ? "K:t == K" : "K:t contains " + non_member(colon, k) + " not in K");

  Ideal fiber0 = specialize_parameter(k, Rational(0));
  bool same = fiber0 == cert.special_fiber;
  rep.add("b:specialization", same, same ? "K|t=0 equals the special fiber" : inequality_witness(fiber0, cert.special_fiber));

  Ideal fiber_v = specialize_parameter(k, cert.witness_parameter);
  std::string bad;
  for (const auto& pt : cert.witness_points) {
    for (const auto& g : fiber_v.generators())
      if (!g.evaluate(pt).is_zero()) {
        bad = g.str() + " does not vanish at " + point_str(pt);
        break;
      }
    if (!bad.empty()) break;
  }
  std::string pts;
  for (const auto& pt : cert.witness_points) pts += (pts.empty() ? "" : " ") + point_str(pt);
  rep.add("c:witnesses", bad.empty(),
          bad.empty() ? "fiber at t=" + cert.witness_parameter.str() + " vanishes at " + pts : bad);

  if (!is_zero_dimensional(cert.special_fiber)) {
    rep.add("d:degree", false, "special fiber is not zero-dimensional");
  } else {
    std::size_t d = degree(cert.special_fiber);
    rep.add("d:degree", d == cert.degree, "degree " + std::to_string(d) + ", declared " + std::to_string(cert.degree));
  }

  std::string lengths;
  bool constant = true;
  for (long v : {0L, 1L, 2L}) {
    Ideal f = specialize_parameter(k, Rational(v));
    if (!is_zero_dimensional(f)) {
      constant = false;
      lengths += " t=" + std::to_string(v) + ":inf";
      continue;
    }
    std::size_t d = degree(f);
    constant = constant && d == cert.degree;
    lengths += " t=" + std::to_string(v) + ":" + std::to_string(d);
  }
  rep.add("e:fiber_lengths", constant, "lengths" + lengths);
  return rep;
}

FlatFamilyCertificate ray_family(const Ideal& ideal, std::size_t variable) {
  const RingPtr& tr = ideal.ring();
  const std::size_t n = tr->nvars();
  if (n != 3 || variable >= n) throw std::invalid_argument("ray_family works in three variables");
  std::vector<Polynomial> others;
  for (std::size_t j = 0; j < n; ++j)
    if (j != variable) others.push_back(Polynomial::variable(tr, j));
  Ideal line(tr, others);
  Ideal sum = ideal + line;
  unsigned r = 1;
  Polynomial x = Polynomial::variable(tr, variable);
  while (!sum.contains(x.pow(r))) {
    if (++r > 64) throw std::invalid_argument("ray_family: the ideal does not meet the line in a finite scheme");
  }
  // x^r = F + q with F in the ideal and q in the ideal of the line.
  std::vector<Polynomial> gens = ideal.generators();
  const std::size_t ni = gens.size();
  gens.insert(gens.end(), others.begin(), others.end());
  TrackedBasis tb = groebner_with_cofactors(tr, gens);
  Division dv = divide(x.pow(r), tb.basis);
  if (!dv.remainder.is_zero()) throw std::logic_error("ray_family: membership lost in cofactor tracking");
  Polynomial f(tr);
  for (std::size_t k = 0; k < tb.basis.size(); ++k) {
    if (dv.quotients[k].is_zero()) continue;
    Polynomial part(tr);
    for (std::size_t l = 0; l < ni; ++l) part += tb.cofactors[k][l] * gens[l];
    f += dv.quotients[k] * part;
  }
  Polynomial q = x.pow(r) - f;
  if (!line.contains(q)) throw std::logic_error("ray_family: q is not in the ideal of the line");
  Ideal union_ideal = intersect(ideal, line);

  RingPtr fr = family_ring();
  std::vector<int> to_f(n);
  for (std::size_t i = 0; i < n; ++i) to_f[i] = static_cast<int>(i);
  std::vector<Polynomial> kg;
  Polynomial xf = x.map_to(fr, to_f);
  Polynomial t = Polynomial::variable(fr, 3);
  kg.push_back(xf.pow(r) - t * xf.pow(r - 1) - q.map_to(fr, to_f));
  for (const auto& g : union_ideal.groebner_basis()) kg.push_back(g.map_to(fr, to_f));
  Point origin(n, Rational(0));
  Point moved = origin;
  moved[variable] = Rational(1);
  return FlatFamilyCertificate{Ideal(fr, kg), ideal, {origin, moved}, Rational(1), degree(ideal),
                               "ray family along " + tr->names()[variable]};
}

CertificateReport verify_cleavability(const CleavabilityCertificate& cert) {
  CertificateReport rep{cert.locus, "cleavability", {}};
  const Ideal& ideal = cert.ideal;
  const RingPtr& r = ideal.ring();
  if (cert.variable >= r->nvars() || cert.exponent < 1) {
    rep.add("well_formed", false, "variable index or exponent out of range");
    return rep;
  }
  if (!is_m_primary(ideal)) {
    rep.add("m_primary", false, "ideal is not primary to the maximal ideal at the origin");
    return rep;
  }
  rep.add("m_primary", true);
  const std::string& vname = r->names()[cert.variable];
  Polynomial x = Polynomial::variable(r, cert.variable);
  if (cert.variant == CleavabilityVariant::general) {
    Polynomial xc = x.pow(cert.exponent);
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < r->nvars(); ++j) {
      if (j == cert.variable) continue;
      Polynomial y = Polynomial::variable(r, j);
      others.push_back(y);
      Polynomial prod = xc * y;
      Polynomial nf = ideal.normal_form(prod);
      rep.add("product:" + prod.str(), nf.is_zero(), nf.is_zero() ? "in I" : "normal form " + nf.str());
    }
    Ideal sum = ideal + Ideal(r, others);
    Polynomial nf = sum.normal_form(xc);
    rep.add("power_outside", !nf.is_zero(),
            nf.is_zero() ? xc.str() + " lies in I + (other variables)" : xc.str() + " not in I + (other variables)");
  } else {
    std::set<std::string> want;
    for (std::size_t j = 0; j < r->nvars(); ++j)
      if (j != cert.variable) want.insert((x * Polynomial::variable(r, j)).str());
    std::set<std::string> named;
    for (const auto& p : cert.products) named.insert(p.str());
    rep.add("products_named", named == want, "products of " + vname + " with the other variables");
    for (const auto& p : cert.products) {
      Polynomial nf = ideal.normal_form(p);
      rep.add("product:" + p.str(), nf.is_zero(), nf.is_zero() ? "in I" : "normal form " + nf.str());
    }
    std::size_t d = degree(ideal);
    rep.add("length", d <= 11, "degree " + std::to_string(d));
  }
  if (cert.check_ray_family) {
    try {
      merge(rep, verify_flat_family(ray_family(ideal, cert.variable)), "ray_family.");
    } catch (const std::exception& e) {
      rep.add("ray_family", false, e.what());
    }
  }
  return rep;
}

CertificateReport verify_smooth_point(const SmoothPointCertificate& cert) {
  CertificateReport rep{cert.locus, "smooth_point", {}};
  const Ideal& ideal = cert.ideal;
  if (!is_m_primary(ideal)) {
    rep.add("m_primary", false, "ideal is not primary to the maximal ideal at the origin");
    return rep;
  }
  std::size_t tan = tangent_dimension(ideal);
  rep.add("tangent", tan == cert.expected_tangent,
          "tangent " + std::to_string(tan) + ", expected " + std::to_string(cert.expected_tangent) + ", degree " +
              std::to_string(degree(ideal)));
  if (cert.inverse_system) {
    Ideal ann = apolar_ideal(*cert.inverse_system);
    bool eq = ann == ideal;
    rep.add("inverse_system", eq, eq ? "ideal is the apolar ideal of " + format_list(*cert.inverse_system)
                                     : inequality_witness(ann, ideal));
  }
  HilbertSequence h = local_hilbert_function(ideal);
  Admissibility adm = check_admissible(h);
  rep.add("admissible", adm.ok, format_sequence(h) + (adm.ok ? "" : ": " + adm.reason));
  if (cert.hilbert_function)
    rep.add("hilbert_function", h == *cert.hilbert_function,
            "computed " + format_sequence(h) + ", declared " + format_sequence(*cert.hilbert_function));

  std::visit(
      [&](const auto& j) {
        using J = std::decay_t<decltype(j)>;
        if constexpr (std::is_same_v<J, MonomialAxiom>) {
          bool mono = is_monomial_ideal(ideal);
          rep.add("justification:monomial", mono, mono ? "monomial ideals are smoothable" : "not a monomial ideal");
        } else if constexpr (std::is_same_v<J, GorensteinAxiom>) {
          std::size_t s = socle_dimension(ideal);
          rep.add("justification:gorenstein", s == 1,
                  "socle dimension " + std::to_string(s) + (s == 1 ? "; Gorenstein in three variables is smoothable" : ""));
        } else if constexpr (std::is_same_v<J, FlatFamilyCertificate>) {
          bool eq = j.special_fiber == ideal;
          rep.add("justification:fiber_matches", eq, eq ? "family degenerates to this ideal" : inequality_witness(j.special_fiber, ideal));
          merge(rep, verify_flat_family(j), "justification.");
        } else {
          bool eq = j.ideal == ideal;
          rep.add("justification:ideal_matches", eq, eq ? "cleavability certificate is for this ideal" : inequality_witness(j.ideal, ideal));
          merge(rep, verify_cleavability(j), "justification.");
        }
      },
      cert.justification);
  return rep;
}

std::map<std::string, Rational> solve_constraints(const FiberParametrization& fp,
                                                  const std::map<std::string, Rational>& free_values) {
  std::map<std::string, Rational> known = free_values;
  std::set<std::string> coeffs(fp.coefficients.begin(), fp.coefficients.end());
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  struct Equation {
    std::string text;
    Polynomial poly;
    bool done = false;
  };
  std::vector<Equation> eqs;
  for (const auto& c : fp.constraints) {
    std::string text = c;
    auto eqpos = text.find('=');
    if (eqpos != std::string::npos) text = "(" + text.substr(0, eqpos) + ") - (" + text.substr(eqpos + 1) + ")";
    std::vector<std::string> names;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
      std::string name = it->str();
      if (!coeffs.count(name)) throw std::invalid_argument("constraint '" + c + "' uses unknown name " + name);
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
    if (names.size() > kMaxVars) throw std::invalid_argument("constraint '" + c + "' has too many unknowns");
    if (names.empty()) names.push_back("_unused");
    RingPtr ring = make_ring(names);
    eqs.push_back({c, parse_polynomial(text, ring)});
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& e : eqs) {
      if (e.done) continue;
      Polynomial p = e.poly;
      std::vector<std::size_t> unknown;
      for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
        if (p.degree_in(i) == 0) continue;
        auto it = known.find(p.ring()->names()[i]);
        if (it != known.end())
          p = p.substitute(i, it->second);
        else
          unknown.push_back(i);
      }
      if (unknown.empty()) {
        if (!p.is_zero()) throw std::invalid_argument("constraint '" + e.text + "' is violated by the assignment");
        e.done = true;
        progress = true;
      } else if (unknown.size() == 1 && p.degree_in(unknown[0]) == 1 && p.degree() == 1) {
        Polynomial rest = p.substitute(unknown[0], Rational(0));
        Rational lead = p.coefficient(Monomial::variable(unknown[0]));
        Rational c = rest.is_zero() ? Rational(0) : rest.coefficient(Monomial{});
        known[p.ring()->names()[unknown[0]]] = -c / lead;
        e.done = true;
        progress = true;
      }
    }
  }
  for (const auto& e : eqs)
    if (!e.done) throw std::invalid_argument("constraint '" + e.text + "' cannot be solved by back-substitution");
  for (const auto& c : fp.coefficients)
    if (!known.count(c)) throw std::invalid_argument("coefficient " + c + " is neither free nor determined");
  return known;
}

Ideal instantiate_fiber(const FiberParametrization& fp, const std::map<std::string, Rational>& values) {
  const RingPtr& r = fp.base_ideal.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : fp.generators) {
    Polynomial f = g.base;
    for (const auto& [name, mono] : g.terms) {
      auto it = values.find(name);
      if (it == values.end()) throw std::invalid_argument("no value for coefficient " + name);
      if (!it->second.is_zero()) f += mono * it->second;
    }
    gens.push_back(f);
  }
  for (const auto& m : monomials_of_degree(r->nvars(), fp.truncation)) gens.push_back(Polynomial::term(r, m));
  return Ideal(r, gens);
}

CertificateReport verify_fiber_sample(const FiberParametrization& fp, std::uint64_t seed, unsigned trials) {
  CertificateReport rep{fp.locus, "fiber_param", {}};
  auto check = [&](const std::string& name, const std::map<std::string, Rational>& free_values) {
    std::string assignment;
    for (const auto& [k, v] : free_values)
      if (!v.is_zero()) assignment += (assignment.empty() ? "" : " ") + k + "=" + v.str();
    if (assignment.empty()) assignment = "all zero";
    try {
      auto values = solve_constraints(fp, free_values);
      Ideal ip = instantiate_fiber(fp, values);
      Ideal init = initial_ideal_lowest(ip);
      bool init_ok = init == fp.base_ideal;
      std::size_t d = degree(ip);
      bool ok = init_ok && d == fp.degree;
      std::string detail = assignment + "; degree " + std::to_string(d);
      if (!init_ok) detail += "; " + inequality_witness(init, fp.base_ideal);
      rep.add(name, ok, detail);
    } catch (const std::exception& e) {
      rep.add(name, false, assignment + ": " + e.what());
    }
  };
  std::map<std::string, Rational> zero;
  for (const auto& f : fp.free) zero[f] = Rational(0);
  check("homogeneous", zero);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-9, 9);
  for (unsigned k = 0; k < trials; ++k) {
    std::map<std::string, Rational> vals;
    for (const auto& f : fp.free) vals[f] = Rational(draw(rng));
    check("trial " + std::to_string(k + 1), vals);
  }
  return rep;
}

CertificateReport verify(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> CertificateReport {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, FlatFamilyCertificate>)
          return verify_flat_family(c);
        else if constexpr (std::is_same_v<C, CleavabilityCertificate>)
          return verify_cleavability(c);
        else if constexpr (std::is_same_v<C, SmoothPointCertificate>)
          return verify_smooth_point(c);
        else
          return verify_fiber_sample(c, c.seed, c.trials);
      },
      cert);
}

std::vector<Ideal> ideals_of(const Certificate& cert) {
  std::vector<Ideal> out;
  auto flat = [&](const FlatFamilyCertificate& f) {
    out.push_back(f.family);
    out.push_back(f.special_fiber);
  };
  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, FlatFamilyCertificate>) {
          flat(c);
        } else if constexpr (std::is_same_v<C, CleavabilityCertificate>) {
          out.push_back(c.ideal);
        } else if constexpr (std::is_same_v<C, SmoothPointCertificate>) {
          out.push_back(c.ideal);
          if (auto* f = std::get_if<FlatFamilyCertificate>(&c.justification)) flat(*f);
          if (auto* cl = std::get_if<CleavabilityCertificate>(&c.justification)) out.push_back(cl->ideal);
        } else {
          out.push_back(c.base_ideal);
        }
      },
      cert);
  return out;
}

std::string kind_name(const Certificate& cert) {
  static const char* names[] = {"flat_family", "cleavability", "smooth_point", "fiber_param"};
  return names[cert.index()];
}

const std::string& locus_of(const Certificate& cert) {
  return std::visit([](const auto& c) -> const std::string& { return c.locus; }, cert);
}

}  // namespace hilb
