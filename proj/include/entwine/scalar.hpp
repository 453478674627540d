#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "entwine/field.hpp"

namespace entwine::la {

/// Exact element of a Field. Rationals are arbitrary precision; residues are
/// kept reduced in [0, p). Mixing characteristics throws std::domain_error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  /// Accepts "n", "-n" and "n/d". In characteristic p the fraction is
  /// mapped through the residue map; a denominator divisible by p throws.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical text: "p/q" in lowest terms with q > 0 ("p" when q = 1) for
  /// rationals, the decimal residue for GF(p).
  std::string str() const;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this += a * b without a temporary.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace entwine::la
