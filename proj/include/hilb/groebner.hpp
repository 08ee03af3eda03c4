#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hilb/polynomial.hpp"

namespace hilb {

/// Ideal given by generators. The reduced monic Groebner basis is computed on first
/// use, once, and shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal parse(std::string_view text, const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Groebner basis, monic, sorted by leading monomial descending.
  const std::vector<Polynomial>& groebner_basis() const&;
  std::vector<Polynomial> groebner_basis() && { return static_cast<const Ideal&>(*this).groebner_basis(); }
  std::vector<Monomial> leading_monomials() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  std::string str() const { return format_list(gens_); }

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
/// Ideal generated by one more polynomial.
Ideal with(const Ideal& a, const Polynomial& f);
/// (v_0,...,v_{n-1})^k, skipping the parameter variable.
Ideal maximal_power(const RingPtr& ring, unsigned k);

std::vector<Polynomial> groebner_basis(const Ideal& ideal);
Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};
/// Full multivariate division: f = sum quotients[i] * basis[i] + remainder, with no
/// term of the remainder divisible by a leading monomial of the basis.
Division divide(const Polynomial& f, const std::vector<Polynomial>& basis);
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);

/// Reduced basis together with cofactors: basis[k] = sum_l cofactors[k][l] * gens[l].
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};
TrackedBasis groebner_with_cofactors(const RingPtr& ring, const std::vector<Polynomial>& gens);

Ideal intersect(const Ideal& a, const Ideal& b);
/// K : (f), via K intersected with (f) and exact division by f.
Ideal colon_by_element(const Ideal& k, const Polynomial& f);
/// Substitutes the ring's parameter by a value; the result lives in the ring without it.
Ideal specialize_parameter(const Ideal& k, const Rational& value);
RingPtr ring_without_parameter(const RingPtr& ring);
/// Ideal of the polynomials obtained by eliminating variables not in `keep`.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

struct Syzygy {
  std::vector<Polynomial> coords;
};

struct SyzygyModule {
  std::vector<Syzygy> generators;
  bool homogeneous = false;
  /// For homogeneous input: number of minimal generators in each total degree.
  std::map<int, int> minimal_degrees;
};

/// Syzygies of a Groebner basis from its S-pair reductions, one per pair.
std::vector<Syzygy> schreyer_syzygies(const std::vector<Polynomial>& basis);
/// Generators of the syzygy module of the ideal's given generators.
SyzygyModule syzygy_basis(const Ideal& ideal);
/// Sum of coords[i] * gens[i].
Polynomial apply_syzygy(const Syzygy& s, const std::vector<Polynomial>& gens);

}  // namespace hilb
