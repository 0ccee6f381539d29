#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqconv/convolution.hpp"

#include <random>

using namespace seqconv;

namespace {

std::vector<BigInt> ints(std::initializer_list<std::int64_t> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

Seq make_seq(std::initializer_list<std::int64_t> values) {
  return Seq(ints(values), Provenance{});
}

Seq random_seq(std::mt19937_64& rng, std::size_t max_len, int max_digits) {
  std::size_t len = 1 + rng() % max_len;
  std::vector<BigInt> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    int digits = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_digits));
    std::string s;
    for (int d = 0; d < digits; ++d) s += static_cast<char>('0' + rng() % 10);
    BigInt x = BigInt::from_decimal(s);
    v.push_back((rng() & 1) ? -x : x);
  }
  return Seq(std::move(v), Provenance{});
}

BigInt seq_sum(const Seq& s) {
  BigInt sum;
  for (const BigInt& v : s.values()) sum += v;
  return sum;
}

}  // namespace

TEST_CASE("identity element") {
  Seq one = make_seq({1});
  Seq abc = make_seq({2, 3, 4});
  CHECK(conv(one, abc).seq.values() == abc.values());
  CHECK(conv(abc, one).seq.values() == abc.values());
}

TEST_CASE("hand-computed products") {
  CHECK(conv(make_seq({1, 1, 2}), make_seq({1, 1, 2})).seq.values() ==
        ints({1, 2, 5, 4, 4}));
  CHECK(self_conv(fib_seq(3)).seq.values() == ints({1, 2, 5, 4, 4}));
  CHECK(self_conv(make_seq({1, 1})).seq.values() == ints({1, 2, 1}));
  CHECK(self_conv(make_seq({7})).seq.values() == ints({49}));
  CHECK(self_conv(fib_seq(4)).seq.values() == ints({1, 2, 5, 10, 10, 12, 9}));
}

TEST_CASE("sum of a Fibonacci self-convolution is the squared sum") {
  CHECK(seq_sum(self_conv(fib_seq(5)).seq) == BigInt(144));  // (1+1+2+3+5)^2
}

TEST_CASE("result provenance") {
  ConvResult r = conv(fib_seq(4), reverse(fib_seq(4)));
  CHECK(r.seq.provenance().family == SeqFamily::convolved);
  CHECK(r.seq.size() == 7);
  CHECK(r.operand_a.family == SeqFamily::standard);
  CHECK(r.operand_b.family == SeqFamily::reversed);
}

TEST_CASE("length, sum, commutativity, and reversal laws") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    Seq a = random_seq(rng, 32, 6);
    Seq b = random_seq(rng, 32, 6);
    ConvResult ab = conv(a, b);
    CHECK(ab.seq.size() == a.size() + b.size() - 1);
    CHECK(conv(b, a).seq.values() == ab.seq.values());
    CHECK(seq_sum(ab.seq) == seq_sum(a) * seq_sum(b));
    CHECK(conv(reverse(a), reverse(b)).seq.values() ==
          reverse(ab.seq).values());
  }
}

TEST_CASE("conv_fast base cases") {
  CHECK(conv_fast(make_seq({1}), make_seq({1})).seq.values() == ints({1}));
  CHECK(conv_fast(make_seq({0}), make_seq({0, 0})).seq.values() == ints({0, 0}));
}

TEST_CASE("conv_fast is coefficient-identical to conv") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 250; ++i) {
    Seq a = random_seq(rng, 64, 21);  // entries up to ~10^20, both signs
    Seq b = random_seq(rng, 64, 21);
    CHECK(conv_fast(a, b).seq.values() == conv(a, b).seq.values());
  }
  // above the recursion threshold with strongly imbalanced lengths
  Seq wide = random_seq(rng, 1, 3);
  Seq long_a = fib_seq(150);
  CHECK(conv_fast(long_a, wide).seq.values() == conv(long_a, wide).seq.values());
  CHECK(conv_fast(wide, long_a).seq.values() == conv(wide, long_a).seq.values());
}

TEST_CASE("conv_fast matches on the headline pipeline") {
  Seq f = fib_seq(100);
  CHECK(conv_fast(f, f).seq.values() == conv(f, f).seq.values());
}
