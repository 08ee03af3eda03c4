#pragma once

#include <string>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

/// Dense univariate polynomial over the rationals, coefficients stored from degree 0 upward.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(const Rational& c);                // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly variable();

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Multiplicity of 0 as a root; -1 for the zero polynomial.
  int valuation() const;
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator()(const Rational& x) const;
  /// Divides by t^k; the low coefficients must vanish.
  UniPoly shift_down(int k) const;
  std::string str(const std::string& var = "t") const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Quotient and remainder of Euclidean division; throws on division by zero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
/// Division known to be exact; throws std::logic_error when a remainder appears.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

}  // namespace hilb

namespace Eigen {
template <>
struct NumTraits<hilb::UniPoly> : GenericNumTraits<hilb::UniPoly> {
  using Real = hilb::UniPoly;
  using NonInteger = hilb::UniPoly;
  using Nested = hilb::UniPoly;
  using Literal = hilb::UniPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
