#include "seqconv/decimal.hpp"

#include <stdexcept>

namespace seqconv {

namespace {

// half-even rounding of |a| / b with b > 0, sign reapplied afterwards
BigInt round_div_signed(const BigInt& a, const BigInt& b) {
  auto [q, r] = BigInt::div_mod(a.abs(), b);
  BigInt twice = r * BigInt(2);
  auto cmp = twice <=> b;
  if (cmp == std::strong_ordering::greater) {
    q += BigInt(1);
  } else if (cmp == std::strong_ordering::equivalent) {
    if ((q % BigInt(2)) != BigInt(0)) q += BigInt(1);
  }
  return a.is_negative() ? -q : q;
}

BigInt round_to_scale(const BigInt& scaled, int from_scale, int to_scale) {
  if (from_scale == to_scale) return scaled;
  if (from_scale < to_scale)
    return scaled * BigInt::pow10(static_cast<std::size_t>(to_scale - from_scale));
  return round_div_signed(scaled, BigInt::pow10(static_cast<std::size_t>(from_scale - to_scale)));
}

constexpr int kIrrationalGuardDigits = 5;

}  // namespace

Decimal decimal_from_scaled(const BigInt& scaled, int scale) {
  Decimal out;
  out.scale = scale;
  std::string mag = scaled.abs().to_decimal();
  if (scale > 0) {
    const auto s = static_cast<std::size_t>(scale);
    if (mag.size() <= s) mag.insert(0, s + 1 - mag.size(), '0');
    mag.insert(mag.size() - s, 1, '.');
  }
  if (scaled.is_negative()) mag.insert(0, 1, '-');
  out.text = std::move(mag);
  return out;
}

Rational Decimal::to_rational() const {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c != '.') digits.push_back(c);
  }
  return Rational(BigInt::from_decimal(digits), BigInt::pow10(static_cast<std::size_t>(scale)));
}

Decimal to_decimal(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  BigInt scaled = round_div_signed(r.num() * BigInt::pow10(static_cast<std::size_t>(digits)), r.den());
  return decimal_from_scaled(scaled, digits);
}

Rational rational_from_decimal_text(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(BigInt::from_decimal(text));
  std::string digits(text.substr(0, dot));
  digits += text.substr(dot + 1);
  return Rational(BigInt::from_decimal(digits), BigInt::pow10(text.size() - dot - 1));
}

BigInt sqrt5_scaled(int scale) {
  return BigInt::isqrt(BigInt(5) * BigInt::pow10(2 * static_cast<std::size_t>(scale)));
}

Decimal golden_ratio(int digits) {
  if (digits < 1) throw std::invalid_argument("golden_ratio: digits must be >= 1");
  const int work = digits + kIrrationalGuardDigits;
  BigInt phi = (BigInt::pow10(static_cast<std::size_t>(work)) + sqrt5_scaled(work)) / BigInt(2);
  return decimal_from_scaled(round_to_scale(phi, work, digits), digits);
}

Decimal sqrt_decimal(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("sqrt_decimal: digits must be >= 1");
  if (r.sign() < 0) throw std::invalid_argument("sqrt_decimal: negative argument");
  const int work = digits + kIrrationalGuardDigits;
  BigInt inner = (r.num() * BigInt::pow10(2 * static_cast<std::size_t>(work))) / r.den();
  BigInt root = BigInt::isqrt(inner);
  return decimal_from_scaled(round_to_scale(root, work, digits), digits);
}

namespace fixed {

BigInt round_div(const BigInt& a, const BigInt& b) {
  if (b.sign() <= 0) throw std::invalid_argument("fixed::round_div: divisor must be positive");
  return round_div_signed(a, b);
}

BigInt mul(const BigInt& a, const BigInt& b, const BigInt& one) {
  return round_div(a * b, one);
}

BigInt pow(const BigInt& base, unsigned long long exponent, const BigInt& one) {
  BigInt result = one;
  BigInt acc = base;
  while (exponent != 0) {
    if (exponent & 1ull) result = mul(result, acc, one);
    exponent >>= 1;
    if (exponent != 0) acc = mul(acc, acc, one);
  }
  return result;
}

BigInt exp_neg(const Rational& u, int scale) {
  if (u.sign() < 0) throw std::invalid_argument("fixed::exp_neg: argument must be >= 0");
  if (u.is_zero()) return BigInt::pow10(static_cast<std::size_t>(scale));
  // underflow cutoff: 2.303 > ln 10, so u >= 2.303*(scale+1) forces exp(-u) < 10^-(scale+1)
  Rational cutoff = Rational(BigInt(2303) * BigInt(scale + 1), BigInt(1000));
  if (u >= cutoff) return BigInt();

  const int guard = 10;
  const int work = scale + guard;
  const BigInt one = BigInt::pow10(static_cast<std::size_t>(work));

  // halve the argument until it is <= 1/2, square the series result back up
  Rational t = u;
  const Rational half(BigInt(1), BigInt(2));
  int halvings = 0;
  while (t > half) {
    t = t / Rational(2);
    ++halvings;
  }

  BigInt t_scaled = round_div(t.num() * one, t.den());
  BigInt term = one;
  BigInt sum = one;
  int sign = -1;
  for (std::int64_t j = 1; !term.is_zero(); ++j) {
    term = mul(term, t_scaled, one);
    term = round_div(term, BigInt(j));
    if (term.is_zero()) break;
    sum += sign > 0 ? term : -term;
    sign = -sign;
  }
  for (int i = 0; i < halvings; ++i) sum = mul(sum, sum, one);
  if (sum.is_negative()) sum = BigInt();  // series noise below one ulp
  return round_to_scale(sum, work, scale);
}

}  // namespace fixed

}  // namespace seqconv
