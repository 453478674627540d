#include "entwine/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace entwine::la {

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const auto p = field.characteristic();
  const auto den = reduce(value.get_den(), p);
  if (den == 0) {
    throw std::domain_error("denominator " + value.get_den().get_str() + " vanishes in " + field.name());
  }
  r_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed scalar \"" + s + "\"");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

std::string Scalar::str() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    out.r_ = pow_mod(r_, p - 2, p);
  }
  return out;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw std::domain_error("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = (r_ + p - o.r_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    q_ += a.q_ * b.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = (r_ + a.r_ * b.r_ % p) % p;
  }
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace entwine::la
