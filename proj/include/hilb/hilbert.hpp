#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/polynomial.hpp"

namespace hilb {

/// Local Hilbert function (h_0, h_1, ...) with trailing zeros dropped.
using HilbertSequence = std::vector<long>;

std::string format_sequence(const HilbertSequence& h);
/// Accepts "(1,3,3,2,2)" or "1 3 3 2 2".
HilbertSequence parse_sequence(const std::string& text);

struct BinomialTerm {
  long top;
  long bottom;
};

/// Greedy d-binomial expansion h = C(k_d, d) + C(k_{d-1}, d-1) + ... with k_d > k_{d-1} > ...
std::vector<BinomialTerm> binomial_expansion(long h, long d);
/// h^<d>: every top and bottom of the expansion raised by one.
long macaulay_bound(long h, long d);

struct Admissibility {
  bool ok = true;
  /// Index i at which the rule failed (h_{i+1} or the tail starting at i).
  int violation = -1;
  std::string reason;
};

/// Macaulay's growth bound h_{i+1} <= h_i^<i> for i >= 1.
Admissibility check_macaulay(const HilbertSequence& h);
/// Once h_i <= i for some i >= 1, the sequence is nonincreasing from i on.
Admissibility check_tail(const HilbertSequence& h);
/// h_0 = 1, all entries positive, Macaulay's bound and the tail rule.
Admissibility check_admissible(const HilbertSequence& h);

/// All admissible local Hilbert functions with h_1 = n summing to d, sorted by length
/// then lexicographically.
std::vector<HilbertSequence> enumerate_hilbert_functions(long n, long d);

/// Gotzmann: if the ideal is generated in degrees <= d and h_{d+1} = h_d^<d>, the
/// growth stays maximal from d on.
bool gotzmann_persistence_applies(long h_d, long h_d1, long d, bool generated_in_degree_le_d);

struct QuadricSpanReport {
  long dimension = 0;
  /// n k - C(k, 2), the value forced by a common linear factor.
  long expected_if_common_factor = 0;
  bool equality = false;
  std::optional<Polynomial> common_factor;
};

/// Dimension of T_1 * span(qs) for linearly independent quadrics, and their common factor.
QuadricSpanReport quadric_span_analysis(const std::vector<Polynomial>& qs);

}  // namespace hilb
