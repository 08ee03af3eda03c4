#include "hilb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hilb {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) { return term(std::move(ring), Monomial{}, c); }

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw std::out_of_range("variable index");
  return term(std::move(ring), Monomial::variable(i));
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) { return r.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero");
  return terms_.front().mono;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
  return terms_.front().coef;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return Rational(0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().mono.degree());
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const { return degree() == order(); }

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.mono.degree()) == d) p.terms_.push_back(t);
  return p;
}

unsigned Polynomial::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.e[i]);
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coef.is_one()) return *this;
  Polynomial p = *this;
  Rational inv = Rational(1) / terms_.front().coef;
  for (auto& t : p.terms_) t.coef *= inv;
  return p;
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
  if (c.is_zero() || g.terms_.empty()) return;
  const Ring& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      out.push_back(std::move(*it++));
      continue;
    }
    Monomial mj = jt->mono * m;
    int cmp = it == terms_.end() ? -1 : r.compare(it->mono, mj);
    if (cmp > 0) {
      out.push_back(std::move(*it++));
    } else if (cmp < 0) {
      out.push_back({mj, c * jt->coef});
      ++jt;
    } else {
      Rational v = it->coef + c * jt->coef;
      if (!v.is_zero()) out.push_back({mj, std::move(v)});
      ++it;
      ++jt;
    }
  }
  terms_ = std::move(out);
}

void Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) { add_scaled(-c, m, g); }

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluate: point has wrong dimension");
  Rational acc;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.mono.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::size_t i, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{t.mono, t.coef};
    for (unsigned k = 0; k < t.mono.e[i]; ++k) n.coef *= value;
    n.mono.e[i] = 0;
    out.push_back(std::move(n));
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t i, const Polynomial& q) const {
  Polynomial acc(ring_);
  std::vector<Polynomial> powers{constant(ring_, Rational(1))};
  for (const auto& t : terms_) {
    unsigned k = t.mono.e[i];
    while (powers.size() <= k) powers.push_back(powers.back() * q);
    Monomial rest = t.mono;
    rest.e[i] = 0;
    acc.add_scaled(t.coef, rest, powers[k]);
  }
  return acc;
}

Polynomial Polynomial::map_to(const RingPtr& target, const std::vector<int>& var_map) const {
  if (var_map.size() != ring_->nvars()) throw std::invalid_argument("map_to: variable map size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (var_map[i] < 0) throw std::invalid_argument("map_to: variable " + ring_->names()[i] + " cannot be mapped");
      m.e[static_cast<std::size_t>(var_map[i])] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(var_map[i])] + t.mono.e[i]);
    }
    out.push_back({m, t.coef});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef.sign() < 0;
    Rational a = neg ? -t.coef : t.coef;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      os << a;
    } else {
      if (!a.is_one()) os << a << '*';
      os << ring_->format(t.mono);
    }
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(Rational(1), Monomial{}, o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(Rational(-1), Monomial{}, o);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coef * t.coef;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, c});
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingPtr& ring) : s_(s), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    skip();
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc += neg ? -t : t;
    while (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
      t = term();
      acc += neg ? -t : t;
    }
    return acc;
  }

  bool factor_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  Polynomial term() {
    if (!factor_starts()) {
      if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    }
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (factor_starts()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 4096) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        if (den.empty()) throw ParseError("expected denominator", pos_);
        if (std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; }))
          throw ParseError("zero denominator", pos_);
        return Polynomial::constant(ring_, Rational::parse(num + "/" + den));
      }
      pos_ = save;
      return Polynomial::constant(ring_, Rational::parse(num));
    }
    std::size_t best = 0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const auto& name = ring_->names()[i];
      if (name.size() > best && s_.substr(pos_, name.size()) == name) {
        best = name.size();
        best_index = i;
      }
    }
    if (best == 0) throw ParseError(std::string("unknown variable starting with '") + c + "'", pos_);
    pos_ += best;
    return Polynomial::variable(ring_, best_index);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '<' && s.back() == '>') || (s.front() == '[' && s.back() == ']'))) {
    s = trim(s.substr(1, s.size() - 2));
  } else if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) wraps = false;
    }
    if (wraps) s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<Polynomial> out;
  if (s.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  std::size_t offset = static_cast<std::size_t>(s.data() - text.data());
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_polynomial(s.substr(start, i - start), ring));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in item ") + std::to_string(out.size() + 1) + ": " + e.message(),
                         offset + start + e.offset());
      }
      start = i + 1;
    }
  }
  return out;
}

Polynomial apolar_apply(const Monomial& theta, const Polynomial& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!theta.divides(t.mono)) continue;
    Rational c = t.coef;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      for (unsigned k = 0; k < theta.e[i]; ++k) c *= Rational(static_cast<long>(t.mono.e[i] - k));
    out.push_back({t.mono / theta, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial apolar_apply(const Polynomial& theta, const Polynomial& f) {
  std::size_t n = theta.ring()->nvars();
  const auto& fr = *f.ring();
  if (n > fr.nvars() || (fr.parameter() && *fr.parameter() < n))
    throw std::invalid_argument("apolar_apply: rings are not paired");
  Polynomial acc(f.ring());
  for (const auto& t : theta.terms()) acc += apolar_apply(t.mono, f) * t.coef;
  return acc;
}

std::map<int, Polynomial> graded_parts(const Polynomial& f) {
  std::map<int, Polynomial> out;
  for (const auto& t : f.terms()) {
    int d = static_cast<int>(t.mono.degree());
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Polynomial(f.ring())).first;
    it->second += Polynomial::term(f.ring(), t.mono, t.coef);
  }
  return out;
}

std::string format_list(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].str();
  }
  return s + ")";
}

}  // namespace hilb
