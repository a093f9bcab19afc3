#pragma once

// Exact coefficients with an explicit ring tag: Z, Z_(p) (p-local rationals) or F_p.

#include <ostream>
#include <string>

#include "stein/exact.hpp"

namespace stein {

struct Ring {
  enum class Kind { Integers, PLocalRationals, PrimeField };
  Kind kind = Kind::Integers;
  int p = 0;  // unused for Integers

  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring plocal(int p) { return {Kind::PLocalRationals, p}; }
  static Ring prime_field(int p) { return {Kind::PrimeField, p}; }

  bool characteristic_zero() const { return kind != Kind::PrimeField; }
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.kind == b.kind && a.p == b.p; }
};

/// An element of a Ring. Values are kept canonical: integers for Z, reduced
/// fractions with denominator prime to p for Z_(p), residues in [0, p) for F_p.
class Scalar {
 public:
  Scalar(Ring ring, const Rational& value);
  Scalar(Ring ring, long value) : Scalar(ring, Rational(value)) {}

  const Ring& ring() const { return ring_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  /// Throws std::domain_error if the value is not a unit of the ring.
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return {ring_, -value_}; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.value_; }

 private:
  Ring ring_;
  Rational value_;
};

/// Brings an exact rational into the canonical form of `ring`; throws
/// std::domain_error if the value does not lie in the ring.
Rational canonicalize(const Ring& ring, const Rational& v);

}  // namespace stein
