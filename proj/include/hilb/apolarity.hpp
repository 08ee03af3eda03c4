#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/univariate.hpp"

namespace hilb {

/// Finite-dimensional subspace of S closed under contraction, stored as the reduced
/// echelon basis over monomials ordered by degree then grevlex (largest first).
class InverseSystem {
 public:
  InverseSystem(RingPtr ring, std::vector<Polynomial> echelon_basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const& { return basis_; }
  std::vector<Polynomial> basis() && { return std::move(basis_); }
  std::size_t dim() const { return basis_.size(); }
  /// h(k) = dim J_{<=k} / J_{<=k-1}.
  HilbertSequence filtered_hilbert_function() const;

  friend bool operator==(const InverseSystem& a, const InverseSystem& b) {
    return same_ring(a.ring_, b.ring_) && a.basis_ == b.basis_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

/// Span of all contractions of the given polynomials.
InverseSystem inverse_system_closure(const std::vector<Polynomial>& fs);
/// Canonical echelon basis of the span of fs (no closure).
std::vector<Polynomial> echelon_span(const std::vector<Polynomial>& fs);
/// The operator ring paired with a dual ring: same number of variables, names a, b, c, d.
RingPtr paired_operator_ring(const RingPtr& dual);

/// Annihilator of the polynomials under contraction.
Ideal apolar_ideal(const std::vector<Polynomial>& fs);
/// Span of the top-degree forms of the elements of J.
InverseSystem lead_system(const InverseSystem& j);

struct DualityReport {
  bool equal = false;
  Ideal from_lead;
  Ideal from_init;
};
/// lead(J)^perp against the lowest-form initial ideal of J^perp.
DualityReport check_lead_init_duality(const std::vector<Polynomial>& fs);

/// Image of fs under the dual of the automorphism a_i -> sigma_i of T. The substitution
/// must have no constant terms and an invertible linear part.
std::vector<Polynomial> dual_transform(const std::vector<Polynomial>& sigma, const std::vector<Polynomial>& fs);

class HilbertFunctionJump : public std::runtime_error {
 public:
  HilbertFunctionJump(const std::string& what, Rational t1, Rational t2)
      : std::runtime_error(what), t1_(std::move(t1)), t2_(std::move(t2)) {}
  const Rational& first() const { return t1_; }
  const Rational& second() const { return t2_; }

 private:
  Rational t1_;
  Rational t2_;
};

struct FamilyLimitReport {
  HilbertSequence hilbert_function;
  std::vector<std::pair<Rational, HilbertSequence>> samples;
  /// Nonzero minors from fraction-free elimination over Q[t]; the Hilbert function is
  /// constant at every t where none of them vanishes.
  std::vector<UniPoly> pivot_polynomials;
  HilbertSequence special_fiber_hilbert_function;
  bool special_fiber_is_limit = false;
  InverseSystem limit;
  Ideal limit_ideal;
};

/// Flat limit at t = 0 of the inverse systems generated by a family in S[t], after
/// confirming a constant Hilbert function at the samples plus one seeded random value.
FamilyLimitReport family_limit_check(const std::vector<Polynomial>& family, const std::vector<Rational>& samples,
                                     std::uint64_t seed = 1);

}  // namespace hilb
