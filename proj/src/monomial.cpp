#include "wog/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace wog {

namespace {

Exponent checked(std::uint64_t e) {
  if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
  return static_cast<Exponent>(e);
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials live in rings of different dimension");
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent e) {
  if (i >= n) throw std::out_of_range("variable index out of range");
  Monomial m(n);
  m.exps_[i] = e;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.insert(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::colon(const Monomial& m) const {
  require_same_size(*this, m);
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] > m.exps_[i] ? exps_[i] - m.exps_[i] : 0;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked(std::uint64_t{exps_[i]} + other.exps_[i]);
  return r;
}

Monomial Monomial::pow(std::uint64_t t) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && t > std::numeric_limits<Exponent>::max() / exps_[i])
      throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = checked(exps_[i] * t);
  }
  return r;
}

Monomial Monomial::scaled(const std::vector<Exponent>& w) const {
  if (w.size() != exps_.size()) throw std::invalid_argument("weight vector has the wrong length");
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked(std::uint64_t{exps_[i]} * w[i]);
  return r;
}

Monomial Monomial::without(VertexSet vars) const {
  Monomial r = *this;
  for (Vertex v : vars.members())
    if (v < r.exps_.size()) r.exps_[v] = 0;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return exps_ <=> other.exps_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

std::uint64_t box_size(const std::vector<Exponent>& bound) {
  std::uint64_t total = 1;
  for (Exponent b : bound) {
    const std::uint64_t f = std::uint64_t{b} + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    total *= f;
  }
  return total;
}

Monomial box_point(const std::vector<Exponent>& bound, std::uint64_t k) {
  std::vector<Exponent> a(bound.size(), 0);
  for (std::size_t i = bound.size(); i > 0; --i) {
    const std::uint64_t radix = std::uint64_t{bound[i - 1]} + 1;
    a[i - 1] = static_cast<Exponent>(k % radix);
    k /= radix;
  }
  return Monomial(std::move(a));
}

}  // namespace wog
