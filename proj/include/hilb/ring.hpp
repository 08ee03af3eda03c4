#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

constexpr std::size_t kMaxVars = 8;

/// Exponent vector; entries past the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return m;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

enum class OrderKind { grevlex, lex, block };

/// Polynomial ring over Q: variable names, a monomial order and an optional
/// distinguished parameter variable.
///
/// The block order compares the first `block_size` variables by grevlex and breaks
/// ties with grevlex on the remaining ones.
class Ring {
 public:
  Ring(std::vector<std::string> names, OrderKind order = OrderKind::grevlex, std::size_t block_size = 0,
       std::optional<std::size_t> parameter = std::nullopt);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  OrderKind order() const { return order_; }
  std::size_t block_size() const { return block_; }
  std::optional<std::size_t> parameter() const { return parameter_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Three-way comparison under the ring's order.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string format(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.order_ == b.order_ && a.block_ == b.block_ && a.parameter_ == b.parameter_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  std::vector<std::string> names_;
  OrderKind order_;
  std::size_t block_;
  std::optional<std::size_t> parameter_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, OrderKind order = OrderKind::grevlex, std::size_t block_size = 0,
                  std::optional<std::size_t> parameter = std::nullopt);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Q[a,b,c] with grevlex, the ring acting by contraction.
RingPtr operator_ring(std::size_t n = 3);
/// Q[x,y,z], the ring of inverse systems.
RingPtr dual_ring(std::size_t n = 3);
/// Q[a,b,c,t] with t the parameter.
RingPtr family_ring();
/// Q[x,y,z,t] with t the parameter.
RingPtr dual_family_ring();

/// All monomials of exactly degree d in the first n variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);
/// All monomials of degree at most d, by descending degree then descending grevlex.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d);

}  // namespace hilb
