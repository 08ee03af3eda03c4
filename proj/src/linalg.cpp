#include "hilb/linalg.hpp"

namespace hilb {

Index rank(const QMatrix& m) {
  QMatrix scaled = m;
  for (Index i = 0; i < scaled.rows(); ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < scaled.cols(); ++j)
      if (!scaled(i, j).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), scaled(i, j).value().get_den_mpz_t());
    if (l != 1) {
      Rational f(l);
      for (Index j = 0; j < scaled.cols(); ++j)
        if (!scaled(i, j).is_zero()) scaled(i, j) *= f;
    }
  }
  return bareiss<Rational>(std::move(scaled)).rank;
}

std::vector<Index> rref(QMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  std::vector<Index> support;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = Rational(1) / m(r, c);
    support.clear();
    for (Index j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (Index j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  m.conservativeResize(r, cols);
  return pivots;
}

QMatrix kernel(const QMatrix& m) {
  QMatrix e = m;
  auto pivots = rref(e);
  const Index cols = m.cols();
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  QMatrix out(cols - static_cast<Index>(pivots.size()), cols);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    for (Index j = 0; j < cols; ++j) out(k, j) = Rational(0);
    out(k, f) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!e(static_cast<Index>(r), f).is_zero()) out(k, pivots[r]) = -e(static_cast<Index>(r), f);
    ++k;
  }
  return out;
}

QMatrix left_kernel(const QMatrix& m) { return kernel(m.transpose()); }

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  QMatrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

}  // namespace hilb
