#include "hilb/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hilb/groebner.hpp"
#include "hilb/linalg.hpp"

namespace hilb {

namespace {
long choose(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

std::string format_sequence(const HilbertSequence& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h[i]);
  }
  return s + ")";
}

HilbertSequence parse_sequence(const std::string& text) {
  HilbertSequence h;
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad Hilbert function entry '" + tok + "'");
    h.push_back(v);
  }
  return h;
}

std::vector<BinomialTerm> binomial_expansion(long h, long d) {
  if (h < 0 || d < 1) throw std::invalid_argument("binomial_expansion needs h >= 0 and d >= 1");
  std::vector<BinomialTerm> out;
  long rest = h;
  for (long j = d; j >= 1 && rest > 0; --j) {
    long k = j;
    while (choose(k + 1, j) <= rest) ++k;
    out.push_back({k, j});
    rest -= choose(k, j);
  }
  return out;
}

long macaulay_bound(long h, long d) {
  long s = 0;
  for (const auto& t : binomial_expansion(h, d)) s += choose(t.top + 1, t.bottom + 1);
  return s;
}

Admissibility check_macaulay(const HilbertSequence& h) {
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    long bound = macaulay_bound(h[i], static_cast<long>(i));
    if (h[i + 1] > bound)
      return {false, static_cast<int>(i),
              "h_" + std::to_string(i + 1) + " = " + std::to_string(h[i + 1]) + " exceeds h_" + std::to_string(i) +
                  "^<" + std::to_string(i) + "> = " + std::to_string(bound)};
  }
  return {};
}

Admissibility check_tail(const HilbertSequence& h) {
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] > static_cast<long>(i)) continue;
    for (std::size_t j = i; j + 1 < h.size(); ++j)
      if (h[j + 1] > h[j])
        return {false, static_cast<int>(i),
                "h_" + std::to_string(i) + " <= " + std::to_string(i) + " but the sequence increases at " +
                    std::to_string(j + 1)};
    break;
  }
  return {};
}

Admissibility check_admissible(const HilbertSequence& h) {
  if (h.empty() || h[0] != 1) return {false, 0, "h_0 must be 1"};
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] <= 0) return {false, static_cast<int>(i), "entries must be positive"};
  auto m = check_macaulay(h);
  if (!m.ok) return m;
  return check_tail(h);
}

std::vector<HilbertSequence> enumerate_hilbert_functions(long n, long d) {
  std::vector<HilbertSequence> out;
  if (d < 1 + n) return out;
  HilbertSequence cur{1, n};
  std::function<void(long)> rec = [&](long left) {
    if (left == 0) {
      if (check_admissible(cur).ok) out.push_back(cur);
      return;
    }
    long i = static_cast<long>(cur.size()) - 1;
    long cap = std::min(left, macaulay_bound(cur.back(), i));
    if (cur.back() <= i) cap = std::min(cap, cur.back());
    for (long v = 1; v <= cap; ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(d - 1 - n);
  std::sort(out.begin(), out.end(), [](const HilbertSequence& a, const HilbertSequence& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool gotzmann_persistence_applies(long h_d, long h_d1, long d, bool generated_in_degree_le_d) {
  return generated_in_degree_le_d && h_d1 == macaulay_bound(h_d, d);
}

QuadricSpanReport quadric_span_analysis(const std::vector<Polynomial>& qs) {
  if (qs.empty()) throw std::invalid_argument("quadric_span_analysis needs at least one quadric");
  const RingPtr& ring = qs.front().ring();
  std::size_t n = ring->nvars();
  for (const auto& q : qs)
    if (!q.is_homogeneous() || q.degree() != 2) throw std::invalid_argument("quadric_span_analysis: not a quadric");
  auto cubics = monomials_of_degree(n, 3);
  std::unordered_map<Monomial, Index, MonomialHash> idx;
  for (std::size_t i = 0; i < cubics.size(); ++i) idx[cubics[i]] = static_cast<Index>(i);
  QMatrix m(static_cast<Index>(n * qs.size()), static_cast<Index>(cubics.size()));
  m.setConstant(Rational(0));
  for (std::size_t k = 0; k < qs.size(); ++k)
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& t : qs[k].terms()) m(static_cast<Index>(k * n + v), idx.at(t.mono * Monomial::variable(v))) = t.coef;
  QuadricSpanReport rep;
  rep.dimension = static_cast<long>(rank(m));
  long k = static_cast<long>(qs.size());
  rep.expected_if_common_factor = static_cast<long>(n) * k - k * (k - 1) / 2;
  rep.equality = rep.dimension == rep.expected_if_common_factor;
  if (qs.size() < 2) return rep;
  Polynomial g = qs.front();
  for (std::size_t i = 1; i < qs.size() && g.degree() > 0; ++i) g = gcd(g, qs[i]);
  if (g.degree() == 2) throw std::invalid_argument("quadric_span_analysis: quadrics are not independent");
  if (g.degree() > 0) rep.common_factor = g.monic();
  return rep;
}

}  // namespace hilb
