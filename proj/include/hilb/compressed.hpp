#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/hilbert.hpp"

namespace hilb {

using Point = std::vector<Rational>;

/// Very compressed algebras of length d: m^(s+1) in I in m^s, with I_s of
/// codimension h in T_s, where dim T_s = D.
struct CompressedParams {
  long d = 0;
  long s = 0;
  long h = 0;
  long D = 0;
  /// Dimension of the Grassmannian of codimension-h subspaces of T_s.
  long dim = 0;
  HilbertSequence hilbert_function;
};

/// Throws std::invalid_argument for d < 2.
CompressedParams very_compressed_params(long d);

struct ThresholdRow {
  long d = 0;
  long s = 0;
  long h = 0;
  long dim = 0;
  long three_d = 0;
  /// dim >= 3d: the very compressed locus alone is too large to lie in the smoothable component.
  bool flag = false;
};

/// Rows for 8 <= d <= dmax.
std::vector<ThresholdRow> reducibility_threshold_scan(long dmax);

/// Reduced grevlex basis of the ideal of a finite point set (Buchberger-Moeller).
/// Throws std::invalid_argument on repeated points or points of the wrong length.
Ideal points_vanishing_ideal(const std::vector<Point>& points, const RingPtr& ring = operator_ring(3));

enum class KstarStatus { very_compressed, degenerate };

struct KstarResult {
  std::vector<Point> points;
  /// Limit of t * points as t -> 0: generated by the top forms of a degree-compatible basis.
  Ideal limit;
  HilbertSequence hilbert_function;
  bool contains_next_power = false;
  KstarStatus status = KstarStatus::degenerate;
  unsigned draws = 0;
};

/// k*-limit of a fixed configuration.
KstarResult kstar_limit(const std::vector<Point>& points);
/// Draws d distinct integer points in [-20, 20]^3 and takes the k*-limit, redrawing a
/// degenerate configuration up to `max_draws` times in total.
KstarResult kstar_limit_experiment(long d, std::uint64_t seed, unsigned max_draws = 5);

std::string status_name(KstarStatus s);

}  // namespace hilb
