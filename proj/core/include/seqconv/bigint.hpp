#pragma once
// bigint.hpp - Arbitrary-precision signed integer on base-10^9 limbs.
//
// Sign-magnitude representation: `sign` is -1/0/+1, `limbs` is the magnitude
// in little-endian base-1e9 digits with no trailing zero limbs. Zero is the
// unique state {sign 0, empty limbs}. The decimal base keeps string I/O and
// power-of-ten scaling exact and cheap, which is where this library lives.

#include <cstdint>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seqconv {

class BigInt;

struct BigIntDivMod;  // {quot, rem}, defined below

class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);

  // Parses "-?[0-9]+"; throws std::invalid_argument on anything else.
  static BigInt from_decimal(std::string_view text);
  std::string to_decimal() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }

  BigInt abs() const;
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  // Truncated division. Throws std::invalid_argument on zero divisor.
  static BigIntDivMod div_mod(const BigInt& a, const BigInt& b);

  bool operator==(const BigInt& rhs) const = default;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  static BigInt pow10(std::size_t n);
  // gcd of magnitudes; gcd(0,0) = 0.
  static BigInt gcd(BigInt a, BigInt b);
  // floor(sqrt(a)); throws std::invalid_argument for negative a.
  static BigInt isqrt(const BigInt& a);

  // Decimal digits of the magnitude (1 for zero).
  std::size_t digit_count() const;

  // Lossy conversion for plotting/diagnostics.
  double to_double() const;

 private:
  static constexpr std::uint32_t kBase = 1000000000u;
  static constexpr int kBaseDigits = 9;

  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& u,
                         const std::vector<std::uint32_t>& v,
                         std::vector<std::uint32_t>& quot,
                         std::vector<std::uint32_t>& rem);
  void trim();

  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;
};

struct BigIntDivMod {
  BigInt quot;
  BigInt rem;  // sign follows the dividend; |rem| < |divisor|
};

inline BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::div_mod(a, b).quot; }
inline BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::div_mod(a, b).rem; }

}  // namespace seqconv
