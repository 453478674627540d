#include "entwine/field.hpp"

#include <limits>
#include <stdexcept>

namespace entwine::la {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::of_characteristic(std::uint64_t p) {
  if (p == 0) return Field{};
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("characteristic must be 0 or a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace entwine::la
