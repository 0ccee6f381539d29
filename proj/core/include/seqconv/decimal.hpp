#pragma once
// decimal.hpp - Fixed-scale decimal rendering and scaled-integer arithmetic.
//
// A Decimal is a rendered value: `text` holds "-?\d+\.\d{scale}" and equals
// the round-half-even value of the source quantity at that scale. Decimals
// convert back to exact rationals, so test comparisons stay exact.

#include "seqconv/bigint.hpp"
#include "seqconv/rational.hpp"

#include <string>

namespace seqconv {

struct Decimal {
  std::string text;
  int scale = 0;

  // Exact value of the rendered text (text is always exactly representable).
  Rational to_rational() const;

  bool operator==(const Decimal& rhs) const = default;
};

// value = scaled / 10^scale, rendered without further rounding.
Decimal decimal_from_scaled(const BigInt& scaled, int scale);

// Round-half-even rendering with exactly `digits` fractional digits (>= 1).
Decimal to_decimal(const Rational& r, int digits);

// Parses "-?\d+(\.\d+)?" into an exact rational.
Rational rational_from_decimal_text(std::string_view text);

// (1 + sqrt 5) / 2 to `digits` fractional digits, computed by integer square
// root of 5*10^(2*(digits+guard)) with 5 guard digits.
Decimal golden_ratio(int digits);

// floor(sqrt(5) * 10^scale) as a big integer (shared by golden_ratio and the
// Binet evaluator).
BigInt sqrt5_scaled(int scale);

// Round-half-even sqrt rendering of a nonnegative rational.
Decimal sqrt_decimal(const Rational& r, int digits);

// Scaled fixed-point helpers: a value x is carried as round(x * 10^scale).
namespace fixed {

// round(a / b), half-even, b > 0.
BigInt round_div(const BigInt& a, const BigInt& b);

// fixed-point multiply: round(a * b / one) where one = 10^scale.
BigInt mul(const BigInt& a, const BigInt& b, const BigInt& one);

// fixed-point integer power with rounding at every step.
BigInt pow(const BigInt& base, unsigned long long exponent, const BigInt& one);

// round(exp(-u) * 10^scale) for rational u >= 0, accurate to a few ulps.
BigInt exp_neg(const Rational& u, int scale);

}  // namespace fixed

}  // namespace seqconv
