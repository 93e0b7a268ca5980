#include "wog/field.hpp"

namespace wog {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  // Keeps products of two residues inside 64 bits.
  if (p >= (1u << 31)) throw std::invalid_argument("field characteristic too large");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("bad field specification '" + text + "'");
    return prime(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw std::invalid_argument("bad field specification '" + text + "' (expected q or gf:<p>)");
}

}  // namespace wog
