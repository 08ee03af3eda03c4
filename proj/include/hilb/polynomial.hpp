#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hilb/rational.hpp"
#include "hilb/ring.hpp"

namespace hilb {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial over Q. Terms are kept sorted by the ring order, largest first,
/// with no zero coefficients and no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c = Rational(1));
  /// Sorts and merges arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest total degree of a term; -1 for zero.
  int degree() const;
  /// Smallest total degree of a term; -1 for zero.
  int order() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Polynomial homogeneous_part(int d) const;
  Polynomial top_form() const { return homogeneous_part(degree()); }
  Polynomial lowest_form() const { return homogeneous_part(order()); }
  /// Highest exponent of variable i.
  unsigned degree_in(std::size_t i) const;

  Polynomial monic() const;
  /// this -= c * m * g, in place.
  void sub_mul(const Rational& c, const Monomial& m, const Polynomial& g);
  Polynomial mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Replaces variable i by a rational value, staying in the same ring.
  Polynomial substitute(std::size_t i, const Rational& value) const;
  /// Substitutes variable i by a polynomial q of the same ring.
  Polynomial substitute(std::size_t i, const Polynomial& q) const;
  /// Moves into another ring; var_map[i] is the target index of variable i, or -1 when
  /// variable i must not occur.
  Polynomial map_to(const RingPtr& target, const std::vector<int>& var_map) const;

  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;

 private:
  void add_scaled(const Rational& c, const Monomial& m, const Polynomial& g);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Thrown for malformed polynomial text; carries the byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), message_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  /// The description without the offset suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Grammar: sums of terms; a term is a product of rational numbers, variables,
/// parenthesised sums, each optionally raised to a nonnegative integer power.
/// `*` between factors is optional. Variables are matched by longest name.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
/// Comma-separated list; surrounding parentheses or angle brackets are ignored.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

/// Contraction of f by theta: each operator variable acts as the partial derivative in
/// the dual variable of the same index. Extra variables of f (a parameter) are scalars.
Polynomial apolar_apply(const Polynomial& theta, const Polynomial& f);
Polynomial apolar_apply(const Monomial& theta, const Polynomial& f);

/// Homogeneous components keyed by degree; zero components are omitted.
std::map<int, Polynomial> graded_parts(const Polynomial& f);

std::string format_list(const std::vector<Polynomial>& ps);

}  // namespace hilb
