#include "hilb/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilb {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, OrderKind order, std::size_t block_size,
           std::optional<std::size_t> parameter)
    : names_(std::move(names)), order_(order), block_(block_size), parameter_(parameter) {
  if (names_.empty() || names_.size() > kMaxVars) throw std::invalid_argument("ring needs 1..8 variables");
  if (order_ == OrderKind::block && (block_ == 0 || block_ >= names_.size()))
    throw std::invalid_argument("block order needs 0 < block < nvars");
  if (parameter_ && *parameter_ >= names_.size()) throw std::invalid_argument("parameter index out of range");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (order_) {
    case OrderKind::grevlex:
      return grevlex_range(a, b, 0, names_.size());
    case OrderKind::lex:
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case OrderKind::block: {
      int c = grevlex_range(a, b, 0, block_);
      return c != 0 ? c : grevlex_range(a, b, block_, names_.size());
    }
  }
  return 0;
}

std::string Ring::format(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names_[i];
    if (m.e[i] > 1) os << '^' << m.e[i];
  }
  if (first) os << '1';
  return os.str();
}

RingPtr make_ring(std::vector<std::string> names, OrderKind order, std::size_t block_size,
                  std::optional<std::size_t> parameter) {
  return std::make_shared<const Ring>(std::move(names), order, block_size, parameter);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

RingPtr operator_ring(std::size_t n) {
  static const RingPtr r3 = make_ring({"a", "b", "c"});
  static const RingPtr r4 = make_ring({"a", "b", "c", "d"});
  if (n == 3) return r3;
  if (n == 4) return r4;
  throw std::invalid_argument("operator ring supports 3 or 4 variables");
}

RingPtr dual_ring(std::size_t n) {
  static const RingPtr r3 = make_ring({"x", "y", "z"});
  static const RingPtr r4 = make_ring({"x", "y", "z", "w"});
  if (n == 3) return r3;
  if (n == 4) return r4;
  throw std::invalid_argument("dual ring supports 3 or 4 variables");
}

RingPtr family_ring() {
  static const RingPtr r = make_ring({"a", "b", "c", "t"}, OrderKind::grevlex, 0, 3);
  return r;
}

RingPtr dual_family_ring() {
  static const RingPtr r = make_ring({"x", "y", "z", "t"}, OrderKind::grevlex, 0, 3);
  return r;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  // Recursive fill of the exponent of variable i given what remains.
  std::function<void(std::size_t, unsigned, Monomial&)> rec = [&](std::size_t i, unsigned left, Monomial& m) {
    if (i + 1 == n) {
      m.e[i] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      m.e[i] = static_cast<std::uint16_t>(k);
      rec(i + 1, left - k, m);
    }
    m.e[i] = 0;
  };
  Monomial m;
  rec(0, d, m);
  std::sort(out.begin(), out.end(), [n](const Monomial& a, const Monomial& b) {
    for (std::size_t i = n; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  });
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = d + 1; k-- > 0;) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hilb
