#include "seqconv/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqconv {

namespace {
constexpr std::uint64_t kBase64 = 1000000000ull;
}

BigInt::BigInt(std::int64_t value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // careful with INT64_MIN: negate as unsigned
  std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag % kBase64));
    mag /= kBase64;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("BigInt: empty decimal string");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad decimal digit");
  }
  BigInt out;
  out.limbs_.reserve(text.size() / kBaseDigits + 1);
  for (std::size_t end = text.size(); end > 0;) {
    std::size_t begin = end >= kBaseDigits ? end - kBaseDigits : 0;
    std::uint32_t limb = 0;
    for (std::size_t i = begin; i < end; ++i) limb = limb * 10 + (text[i] - '0');
    out.limbs_.push_back(limb);
    end = begin;
  }
  out.sign_ = negative ? -1 : 1;
  out.trim();
  return out;
}

std::string BigInt::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  out.reserve(limbs_.size() * kBaseDigits + 1);
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out.append(kBaseDigits - part.size(), '0');
    out += part;
  }
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<std::uint32_t> out;
  out.reserve(hi.size() + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint32_t sum = hi[i] + carry;
    if (i < lo.size()) sum += lo[i];
    if (sum >= kBase) {
      sum -= kBase;
      carry = 1;
    } else {
      carry = 0;
    }
    out.push_back(sum);
  }
  if (carry) out.push_back(carry);
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(cur));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t carry = 0;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur % kBase64);
      carry = cur / kBase64;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur % kBase64);
      carry = cur / kBase64;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (sign_ == rhs.sign_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
    return *this;
  }
  int cmp = compare_mag(limbs_, rhs.limbs_);
  if (cmp == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (cmp > 0) {
    limbs_ = sub_mag(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_mag(rhs.limbs_, limbs_);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.sign_ = lhs.sign_ * rhs.sign_;
  out.limbs_ = BigInt::mul_mag(lhs.limbs_, rhs.limbs_);
  return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

void BigInt::divmod_mag(const std::vector<std::uint32_t>& u,
                        const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
  quot.clear();
  rem.clear();
  if (compare_mag(u, v) < 0) {
    rem = u;
    return;
  }
  if (v.size() == 1) {
    const std::uint64_t d = v[0];
    quot.assign(u.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
      std::uint64_t cur = r * kBase64 + u[i];
      quot[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    if (r != 0) rem.push_back(static_cast<std::uint32_t>(r));
    return;
  }

  // Knuth algorithm D on base-1e9 limbs.
  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  const std::uint32_t d = static_cast<std::uint32_t>(kBase64 / (v.back() + 1ull));
  std::vector<std::uint32_t> un(u.size() + 1, 0), vn(n, 0);
  {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(u[i]) * d + carry;
      un[i] = static_cast<std::uint32_t>(cur % kBase64);
      carry = cur / kBase64;
    }
    un[u.size()] = static_cast<std::uint32_t>(carry);
    carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(v[i]) * d + carry;
      vn[i] = static_cast<std::uint32_t>(cur % kBase64);
      carry = cur / kBase64;
    }
  }

  quot.assign(m + 1, 0);
  const std::uint64_t v1 = vn[n - 1];
  const std::uint64_t v2 = vn[n - 2];
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = un[j + n] * kBase64 + un[j + n - 1];
    std::uint64_t qhat = num / v1;
    std::uint64_t rhat = num % v1;
    while (qhat >= kBase64 || qhat * v2 > rhat * kBase64 + un[j + n - 2]) {
      --qhat;
      rhat += v1;
      if (rhat >= kBase64) break;
    }
    // multiply-subtract qhat * vn from un[j .. j+n]
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i] + carry;
      carry = p / kBase64;
      std::int64_t cur = static_cast<std::int64_t>(un[i + j]) -
                         static_cast<std::int64_t>(p % kBase64) - borrow;
      if (cur < 0) {
        cur += static_cast<std::int64_t>(kBase64);
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<std::uint32_t>(cur);
    }
    std::int64_t top = static_cast<std::int64_t>(un[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
    if (top < 0) {
      // qhat was one too large; add vn back (carry out always restores top to 0)
      --qhat;
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<std::uint32_t>(cur % kBase64);
        c = static_cast<std::uint32_t>(cur / kBase64);
      }
      top += c;
    }
    un[j + n] = static_cast<std::uint32_t>(top);
    quot[j] = static_cast<std::uint32_t>(qhat);
  }
  while (!quot.empty() && quot.back() == 0) quot.pop_back();

  // denormalize remainder: un[0..n) / d
  rem.assign(n, 0);
  std::uint64_t r = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t cur = r * kBase64 + un[i];
    rem[i] = static_cast<std::uint32_t>(cur / d);
    r = cur % d;
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigIntDivMod BigInt::div_mod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
  BigIntDivMod out;
  if (a.is_zero()) return out;
  divmod_mag(a.limbs_, b.limbs_, out.quot.limbs_, out.rem.limbs_);
  out.quot.sign_ = out.quot.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  out.rem.sign_ = out.rem.limbs_.empty() ? 0 : a.sign_;
  return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int cmp = compare_mag(limbs_, rhs.limbs_);
  if (sign_ < 0) cmp = -cmp;
  return cmp <=> 0;
}

BigInt BigInt::pow10(std::size_t n) {
  BigInt out;
  out.sign_ = 1;
  out.limbs_.assign(n / kBaseDigits, 0);
  std::uint32_t top = 1;
  for (std::size_t i = 0; i < n % kBaseDigits; ++i) top *= 10;
  out.limbs_.push_back(top);
  return out;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.limbs_.empty() ? 0 : 1;
  b.sign_ = b.limbs_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::isqrt(const BigInt& a) {
  if (a.is_negative()) throw std::invalid_argument("BigInt: isqrt of negative value");
  if (a.is_zero()) return BigInt();
  BigInt x = pow10((a.digit_count() + 1) / 2);  // x >= sqrt(a)
  while (true) {
    BigInt y = (x + a / x);
    y = y / BigInt(2);
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::size_t BigInt::digit_count() const {
  if (is_zero()) return 1;
  std::size_t digits = (limbs_.size() - 1) * kBaseDigits;
  std::uint32_t top = limbs_.back();
  while (top != 0) {
    ++digits;
    top /= 10;
  }
  return digits;
}

double BigInt::to_double() const {
  double out = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) out = out * 1e9 + limbs_[i];
  return sign_ < 0 ? -out : out;
}

}  // namespace seqconv
