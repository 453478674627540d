#pragma once

#include <cstdint>
#include <string>

namespace entwine::la {

/// The ground field: characteristic 0 means the rationals, otherwise GF(p).
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless `p` is 0 or a prime below 2^31.
  static Field of_characteristic(std::uint64_t p);

  constexpr std::uint32_t characteristic() const { return characteristic_; }
  constexpr bool is_rational() const { return characteristic_ == 0; }

  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : characteristic_(p) {}

  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace entwine::la
