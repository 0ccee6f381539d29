#pragma once
// sequence.hpp - Fibonacci-family sequence generation and transforms.
//
// Sequences are 1-based: at(1)..at(size()). A "length-L Fibonacci sequence"
// is f[1..L]; the leading f[0] = 0 is excluded (it contributes nothing to a
// convolution and the maximum-location law below is stated for this
// indexing).

#include "seqconv/bigint.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace seqconv {

enum class SeqFamily { standard, reversed, symmetrized, random, convolved };

std::string_view family_name(SeqFamily family);

struct Provenance {
  SeqFamily family = SeqFamily::standard;
  std::size_t length = 0;
  std::vector<std::string> transform_chain;
  std::optional<std::uint64_t> seed;
};

class Seq {
 public:
  // length >= 1 enforced.
  Seq(std::vector<BigInt> values, Provenance prov);

  std::size_t size() const { return values_.size(); }
  // 1-based, bounds-checked.
  const BigInt& at(std::size_t index) const;
  const std::vector<BigInt>& values() const { return values_; }
  const Provenance& provenance() const { return prov_; }

 private:
  std::vector<BigInt> values_;
  Provenance prov_;
};

// f[n] with f[0] = 0, f[1] = 1.
BigInt fib_term(std::size_t n);

// (phi^n - (1-phi)^n) / sqrt 5 evaluated in scaled decimal fixed point with
// working precision >= n*log10(phi) + 10 digits, rounded to the nearest
// integer. Equals fib_term(n) exactly.
BigInt binet_term(std::size_t n);

// [f1 .. fL], L >= 1.
Seq fib_seq(std::size_t length);

Seq reverse(const Seq& s);

// [s1..sL, sL..s1]: centre duplicated, length exactly 2L.
Seq symmetrize(const Seq& s);

// [s1..sL, s(L-1)..s1]: shared centre, length 2L-1. Odd-length counterpart
// of symmetrize, used when a palindrome of odd total length is needed.
Seq symmetrize_shared(const Seq& s);

// splitmix64: the state advances by 0x9E3779B97F4A7C15 per draw and the
// output is the mixed state:
//   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31.
// First five outputs for seed 0:
//   0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F,
//   0xF88BB8A8724C81EC, 0x1B39896A51A8749B.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Random Fibonacci path: terms[1] = terms[2] = 1 and
// terms[k] = terms[k-1] + signs[k-3]*terms[k-2] for k = 3..n.
// One PRNG draw per sign; '+' when the top output bit is clear.
struct RandomFibPath {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::int8_t> signs;            // +1 / -1, length n - 2
  std::optional<std::vector<BigInt>> terms;  // materialized when n <= limit
};

inline constexpr std::size_t kRandomFibMaterializeLimit = 10000;

// n >= 2. Deterministic per (n, seed); terms are materialized exactly when
// n <= kRandomFibMaterializeLimit, otherwise only the signs are returned.
RandomFibPath random_fib(std::size_t n, std::uint64_t seed);

// The materialized path as a family=random sequence (provenance carries the
// seed). Requires terms to be present.
Seq to_seq(const RandomFibPath& path);

// Materialize the recurrence for a given sign pattern (n = signs.size() + 2).
std::vector<BigInt> random_fib_terms(std::span<const std::int8_t> signs);

}  // namespace seqconv
