#pragma once

#include <Eigen/Core>
#include <numeric>
#include <vector>

#include "hilb/rational.hpp"
#include "hilb/univariate.hpp"

namespace hilb {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using QMatrix = Matrix<Rational>;
using Index = Eigen::Index;

template <typename Scalar>
struct BareissResult {
  Index rank = 0;
  /// Determinant of the rank x rank submatrix on the pivot rows and columns (up to sign).
  Scalar last_pivot = Scalar(1);
  std::vector<Index> pivot_rows;
  std::vector<Index> pivot_cols;
};

/// Fraction-free Gaussian elimination over an integral domain with exact division.
template <typename Scalar>
BareissResult<Scalar> bareiss(Matrix<Scalar> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> origin(static_cast<std::size_t>(rows));
  std::iota(origin.begin(), origin.end(), Index{0});
  std::vector<char> zero_row(static_cast<std::size_t>(rows), 0);
  for (Index i = 0; i < rows; ++i) {
    bool z = true;
    for (Index j = 0; j < cols && z; ++j) z = is_zero(m(i, j));
    zero_row[static_cast<std::size_t>(i)] = z;
  }
  BareissResult<Scalar> out;
  Scalar prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (!zero_row[static_cast<std::size_t>(i)] && !is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      std::swap(origin[static_cast<std::size_t>(p)], origin[static_cast<std::size_t>(r)]);
      std::swap(zero_row[static_cast<std::size_t>(p)], zero_row[static_cast<std::size_t>(r)]);
    }
    const Scalar piv = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      if (zero_row[static_cast<std::size_t>(i)]) continue;
      const Scalar lead = m(i, c);
      bool z = true;
      for (Index j = c + 1; j < cols; ++j) {
        Scalar v = m(i, j) * piv;
        if (!is_zero(lead) && !is_zero(m(r, j))) v -= lead * m(r, j);
        m(i, j) = is_zero(v) ? Scalar(0) : exact_div(v, prev);
        if (!is_zero(m(i, j))) z = false;
      }
      m(i, c) = Scalar(0);
      zero_row[static_cast<std::size_t>(i)] = z;
    }
    prev = piv;
    out.pivot_rows.push_back(origin[static_cast<std::size_t>(r)]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

/// Exact rank: rows are scaled to integers, then eliminated fraction-free.
Index rank(const QMatrix& m);

/// Reduced row echelon form in place over the rationals. Rows past the rank are dropped.
/// Returns the pivot column of each remaining row.
std::vector<Index> rref(QMatrix& m);

/// Rows form a basis of the right null space {v : m v = 0}.
QMatrix kernel(const QMatrix& m);

/// Rows form a basis of the left null space {w : w m = 0}.
QMatrix left_kernel(const QMatrix& m);

/// Stacks b below a.
QMatrix vstack(const QMatrix& a, const QMatrix& b);

}  // namespace hilb
