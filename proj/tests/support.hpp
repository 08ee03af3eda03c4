#pragma once

#include <random>

#include "hilb/groebner.hpp"

namespace hilb::testing {

inline Polynomial P(const std::string& s, const RingPtr& r = operator_ring()) { return parse_polynomial(s, r); }
inline Ideal I(const std::string& s, const RingPtr& r = operator_ring()) { return Ideal::parse(s, r); }

/// Random polynomial with small integer coefficients and up to `terms` terms of degree <= maxdeg.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned maxdeg, int terms, int coef = 5) {
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<unsigned> e(0, maxdeg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    unsigned left = e(rng);
    for (std::size_t i = 0; i < r->nvars() && left > 0; ++i) {
      std::uniform_int_distribution<unsigned> take(0, left);
      unsigned v = i + 1 == r->nvars() ? left : take(rng);
      m.e[i] = static_cast<std::uint16_t>(v);
      left -= v;
    }
    out.push_back({m, Rational(c(rng))});
  }
  return Polynomial::from_terms(r, std::move(out));
}

}  // namespace hilb::testing
