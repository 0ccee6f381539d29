#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqconv/bigint.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

using seqconv::BigInt;

namespace {

BigInt random_bigint(std::mt19937_64& rng, int max_digits, bool allow_negative = true) {
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_digits));
  std::string s;
  s.reserve(len);
  for (int i = 0; i < len; ++i) s += static_cast<char>('0' + rng() % 10);
  BigInt v = BigInt::from_decimal(s);
  if (allow_negative && (rng() & 1)) v = -v;
  return v;
}

}  // namespace

TEST_CASE("construction and decimal round trip") {
  CHECK(BigInt().to_decimal() == "0");
  CHECK(BigInt(0).to_decimal() == "0");
  CHECK(BigInt(42).to_decimal() == "42");
  CHECK(BigInt(-42).to_decimal() == "-42");
  CHECK(BigInt(1000000000).to_decimal() == "1000000000");
  CHECK(BigInt(INT64_MIN).to_decimal() == "-9223372036854775808");
  CHECK(BigInt(INT64_MAX).to_decimal() == "9223372036854775807");

  CHECK(BigInt::from_decimal("000123").to_decimal() == "123");
  CHECK(BigInt::from_decimal("-007") == BigInt(-7));
  CHECK(BigInt::from_decimal("+9") == BigInt(9));
  CHECK(BigInt::from_decimal("-0") == BigInt(0));

  CHECK_THROWS_AS(BigInt::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal("-"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal(" 1"), std::invalid_argument);
}

TEST_CASE("small arithmetic agrees with native integers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    auto a = static_cast<std::int64_t>(rng() % 2000000000ull) - 1000000000;
    auto b = static_cast<std::int64_t>(rng() % 2000000000ull) - 1000000000;
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      auto [q, r] = BigInt::div_mod(BigInt(a), BigInt(b));
      CHECK(q == BigInt(a / b));
      CHECK(r == BigInt(a % b));
    }
  }
}

TEST_CASE("div_mod property: a = q*b + r with |r| < |b| and sign(r) = sign(a)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    BigInt a = random_bigint(rng, 45);
    BigInt b = random_bigint(rng, 22);
    if (b.is_zero()) continue;
    auto [q, r] = BigInt::div_mod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("division edge patterns around the limb base") {
  // divisors built from base-1e9 boundary limbs exercise the qhat correction
  const char* dividends[] = {
      "999999999999999999999999999999999999",
      "1000000000000000000000000000000000000",
      "999999998999999999000000001999999999",
      "123456789012345678901234567890123456789",
  };
  const char* divisors[] = {
      "999999999999999999",
      "1000000000000000001",
      "500000000500000000",
      "999999999000000000999999999",
  };
  for (const char* ud : dividends) {
    for (const char* vd : divisors) {
      BigInt u = BigInt::from_decimal(ud);
      BigInt v = BigInt::from_decimal(vd);
      auto [q, r] = BigInt::div_mod(u, v);
      CHECK(q * v + r == u);
      CHECK(r.abs() < v.abs());
    }
  }
}

TEST_CASE("division pairs that force the quotient-digit add-back") {
  // found by randomized search with the add-back branch instrumented; each
  // pair overestimates qhat even after the two-limb correction test
  const char* pairs[][2] = {
      {"3000000000999999999000000001", "6000000001999999999"},
      {"6000000001000000000000000000000000001", "6000000001000000000000000001"},
      {"6999999999999999999000000001999999999000000000", "7999999999999999999"},
      {"8000000000000000000510330047000000000", "2000000000000000001"},
  };
  for (const auto& p : pairs) {
    BigInt u = BigInt::from_decimal(p[0]);
    BigInt v = BigInt::from_decimal(p[1]);
    auto [q, r] = BigInt::div_mod(u, v);
    CHECK(q * v + r == u);
    CHECK(r.abs() < v.abs());
    CHECK(r.sign() >= 0);
  }
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(BigInt::div_mod(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("comparisons order correctly") {
  CHECK(BigInt(-5) < BigInt(3));
  CHECK(BigInt(3) < BigInt(5));
  CHECK(BigInt(-5) < BigInt(-3));
  CHECK(BigInt::from_decimal("999999999") < BigInt::from_decimal("1000000000"));
  CHECK(BigInt(7) == BigInt::from_decimal("7"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    BigInt a = random_bigint(rng, 30);
    BigInt b = random_bigint(rng, 30);
    CHECK(((a < b) || (a == b) || (a > b)));
    CHECK((a <=> b) == 0 ? a == b : a != b);
    CHECK(((a - b).sign() < 0) == (a < b));
  }
}

TEST_CASE("pow10 and digit_count") {
  CHECK(BigInt::pow10(0) == BigInt(1));
  CHECK(BigInt::pow10(1) == BigInt(10));
  CHECK(BigInt::pow10(9) == BigInt(1000000000));
  CHECK(BigInt::pow10(10).to_decimal() == "10000000000");
  CHECK(BigInt(0).digit_count() == 1);
  CHECK(BigInt(9).digit_count() == 1);
  CHECK(BigInt(10).digit_count() == 2);
  CHECK(BigInt::pow10(25).digit_count() == 26);
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    BigInt a = random_bigint(rng, 25);
    BigInt b = random_bigint(rng, 25);
    BigInt g = BigInt::gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(BigInt::gcd(a / g, b / g) == BigInt(1));
  }
}

TEST_CASE("isqrt") {
  CHECK(BigInt::isqrt(BigInt(0)) == BigInt(0));
  CHECK(BigInt::isqrt(BigInt(1)) == BigInt(1));
  CHECK(BigInt::isqrt(BigInt(2)) == BigInt(1));
  CHECK(BigInt::isqrt(BigInt(3)) == BigInt(1));
  CHECK(BigInt::isqrt(BigInt(4)) == BigInt(2));
  CHECK(BigInt::isqrt(BigInt(99)) == BigInt(9));
  CHECK(BigInt::isqrt(BigInt(100)) == BigInt(10));
  CHECK_THROWS_AS(BigInt::isqrt(BigInt(-1)), std::invalid_argument);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    BigInt a = random_bigint(rng, 40, false);
    BigInt s = BigInt::isqrt(a);
    CHECK(s * s <= a);
    CHECK((s + BigInt(1)) * (s + BigInt(1)) > a);
  }
}

TEST_CASE("string round trip on random values") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    BigInt a = random_bigint(rng, 60);
    CHECK(BigInt::from_decimal(a.to_decimal()) == a);
  }
}

TEST_CASE("to_double approximates") {
  CHECK(BigInt(12345).to_double() == doctest::Approx(12345.0));
  CHECK(BigInt(-7).to_double() == doctest::Approx(-7.0));
  CHECK(BigInt::from_decimal("1000000000000000000000").to_double() ==
        doctest::Approx(1e21).epsilon(1e-12));
}
