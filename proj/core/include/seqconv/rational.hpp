#pragma once
// rational.hpp - Exact reduced rational over BigInt.
//
// Invariants: gcd(|num|, den) == 1 and den > 0, established on construction
// and preserved by every operation. All probabilities and moments in this
// library are values of this type, so equality is exact value equality.

#include "seqconv/bigint.hpp"

#include <compare>
#include <string>

namespace seqconv {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt integer) : num_(std::move(integer)), den_(1) {}
  Rational(std::int64_t integer) : num_(integer), den_(1) {}
  // Reduces num/den; throws std::invalid_argument when den == 0.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator-() const;
  Rational abs() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws std::invalid_argument when b == 0.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  bool operator==(const Rational& rhs) const = default;
  std::strong_ordering operator<=>(const Rational& rhs) const;

  // "num/den" (den omitted when 1); exact, parseable by from_fraction.
  std::string to_fraction() const;
  static Rational from_fraction(std::string_view text);

  double to_double() const;

 private:
  BigInt num_;
  BigInt den_;
};

// Spec-facing constructor name: lowest terms with positive denominator.
inline Rational reduce(BigInt num, BigInt den) {
  return Rational(std::move(num), std::move(den));
}

}  // namespace seqconv
