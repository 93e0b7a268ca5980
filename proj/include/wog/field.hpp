#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wog {

/// Coefficient field for homology: the rationals or a prime field GF(p).
class Field {
public:
  constexpr Field() = default;
  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);
  /// Parses "q" or "gf:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const { return p_ == 0 ? "q" : "gf:" + std::to_string(p_); }

  bool operator==(const Field&) const = default;

private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t p);

}  // namespace wog
