#include "seqconv/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace seqconv {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  if (den_.is_negative()) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = out.num_.abs();
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  return num_ * rhs.den_ <=> rhs.num_ * den_;
}

std::string Rational::to_fraction() const {
  std::string out = num_.to_decimal();
  if (den_ != BigInt(1)) {
    out += '/';
    out += den_.to_decimal();
  }
  return out;
}

Rational Rational::from_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_decimal(text));
  return Rational(BigInt::from_decimal(text.substr(0, slash)),
                  BigInt::from_decimal(text.substr(slash + 1)));
}

double Rational::to_double() const {
  // scale to ~18 significant digits before dividing
  if (is_zero()) return 0.0;
  std::size_t nd = num_.digit_count();
  std::size_t dd = den_.digit_count();
  std::size_t shift = dd + 18 > nd ? dd + 18 - nd : 0;
  BigInt scaled = (num_ * BigInt::pow10(shift)) / den_;
  return scaled.to_double() / std::pow(10.0, static_cast<double>(shift));
}

}  // namespace seqconv
