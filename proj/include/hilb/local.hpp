#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/linalg.hpp"

namespace hilb {

/// Raised when an operation needs m^N inside the ideal and no such N <= cap exists.
class NotMPrimary : public std::runtime_error {
 public:
  NotMPrimary(const std::string& what, Monomial witness) : std::runtime_error(what), witness_(witness) {}
  const Monomial& witness() const { return witness_; }

 private:
  Monomial witness_;
};

class NotZeroDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Krull dimension of T/I read off the leading monomials; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
bool is_zero_dimensional(const Ideal& ideal);
/// Monomials outside the initial ideal, descending in the ring order.
std::vector<Monomial> standard_monomials(const Ideal& ideal);
/// dim_Q T/I for a zero-dimensional ideal.
std::size_t degree(const Ideal& ideal);

/// Smallest N with m^N contained in I, searching N = 1..cap.
unsigned m_primary_exponent(const Ideal& ideal, unsigned cap = 24);
bool is_m_primary(const Ideal& ideal, unsigned cap = 24);

/// T/I with the standard-monomial basis; normal forms of monomials are cached.
class Quotient {
 public:
  explicit Quotient(Ideal ideal);
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// Coordinates of the normal form of m.
  const std::vector<Rational>& coords(const Monomial& m);
  std::vector<Rational> coords(const Polynomial& f);

 private:
  Ideal ideal_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::unordered_map<Monomial, std::vector<Rational>, MonomialHash> cache_;
};

/// h(e) = dim (I + m^e) / (I + m^{e+1}) for an m-primary ideal, trailing zeros dropped.
std::vector<long> local_hilbert_function(const Ideal& ideal);
/// Ideal of lowest-degree forms of elements of an m-primary ideal.
Ideal initial_ideal_lowest(const Ideal& ideal);
/// dim m / (m^2 + I).
unsigned embedding_dimension(const Ideal& ideal);
/// dim Hom_T(I, T/I), the tangent space to the Hilbert scheme at a zero-dimensional ideal.
std::size_t tangent_dimension(const Ideal& ideal);
/// dim (I : m) / I.
std::size_t socle_dimension(const Ideal& ideal);
bool is_gorenstein(const Ideal& ideal);
/// Every element of the reduced Groebner basis is a monomial.
bool is_monomial_ideal(const Ideal& ideal);

struct Invariants {
  int dimension = 0;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> tangent;
  std::string str() const;
};
/// (Krull dimension, degree, tangent dimension); the last two only for dimension 0.
Invariants invariants(const Ideal& ideal);

}  // namespace hilb
