#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "wog/vertex_set.hpp"

namespace wog {

using Exponent = std::uint32_t;

/// x^a for an exponent vector a over a fixed number of variables.
class Monomial {
public:
  Monomial() = default;
  /// The unit monomial in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_i^e in n variables.
  static Monomial variable(std::size_t n, std::size_t i, Exponent e = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::uint64_t degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  /// Variables with nonzero exponent.
  VertexSet support() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, m).
  Monomial colon(const Monomial& m) const;
  /// Throws std::overflow_error if an exponent leaves the 32-bit range.
  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint64_t t) const;
  /// Exponent i multiplied by w[i].
  Monomial scaled(const std::vector<Exponent>& w) const;
  /// Exponents of variables in `vars` set to zero.
  Monomial without(VertexSet vars) const;

  /// Graded lexicographic order with x_1 > x_2 > ... > x_n.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  /// Human-readable form such as "x1*x2^2"; "1" for the unit monomial.
  std::string to_string() const;

private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Product of (bound_i + 1) over i, saturating at UINT64_MAX.
std::uint64_t box_size(const std::vector<Exponent>& bound);

/// Calls f(x^a) for every a with 0 <= a_i <= bound_i, in lexicographic order
/// with the last coordinate varying fastest.
template <class F>
void for_each_box_point(const std::vector<Exponent>& bound, F&& f) {
  std::vector<Exponent> a(bound.size(), 0);
  while (true) {
    f(Monomial(a));
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (a[i] < bound[i]) {
        ++a[i];
        break;
      }
      a[i] = 0;
      if (i == 0) return;
    }
    if (a.empty()) return;
  }
}

/// Decodes the k-th box point in the order used by for_each_box_point.
Monomial box_point(const std::vector<Exponent>& bound, std::uint64_t k);

}  // namespace wog
