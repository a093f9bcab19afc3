#include "stein/scalar.hpp"

#include <stdexcept>

#include "stein/prime.hpp"

namespace stein {

std::string Ring::name() const {
  switch (kind) {
    case Kind::Integers:
      return "Z";
    case Kind::PLocalRationals:
      return "Z_(" + std::to_string(p) + ")";
    case Kind::PrimeField:
      return "F_" + std::to_string(p);
  }
  return "?";
}

Rational canonicalize(const Ring& ring, const Rational& v) {
  const Integer den = boost::multiprecision::denominator(v);
  switch (ring.kind) {
    case Ring::Kind::Integers:
      if (den != 1) throw std::domain_error("Scalar: non-integer value in Z");
      return v;
    case Ring::Kind::PLocalRationals:
      if (Integer(den % ring.p).is_zero()) throw std::domain_error("Scalar: denominator divisible by p in Z_(p)");
      return v;
    case Ring::Kind::PrimeField: {
      const Integer pp = ring.p;
      const Integer dr = den % pp;
      if (dr.is_zero()) throw std::domain_error("Scalar: denominator divisible by p in F_p");
      Integer num = boost::multiprecision::numerator(v) % pp;
      if (num < 0) num += pp;
      const int d = inv_mod(static_cast<int>(dr.convert_to<long long>()), ring.p);
      return Rational(Integer(num * d % pp));
    }
  }
  return v;
}

Scalar::Scalar(Ring ring, const Rational& value) : ring_(ring), value_(canonicalize(ring, value)) {}

namespace {
void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("Scalar: ring mismatch " + a.ring().name() + " vs " + b.ring().name());
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return {a.ring_, a.value_ + b.value_};
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return {a.ring_, a.value_ - b.value_};
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return {a.ring_, a.value_ * b.value_};
}

Scalar Scalar::inverse() const {
  if (value_.is_zero()) throw std::domain_error("Scalar: zero is not invertible");
  const Rational inv = 1 / value_;
  if (ring_.kind == Ring::Kind::Integers && boost::multiprecision::denominator(inv) != 1)
    throw std::domain_error("Scalar: not a unit in Z");
  if (ring_.kind == Ring::Kind::PLocalRationals &&
      Integer(boost::multiprecision::numerator(value_) % ring_.p).is_zero())
    throw std::domain_error("Scalar: not a unit in Z_(p)");
  return {ring_, inv};
}

}  // namespace stein
