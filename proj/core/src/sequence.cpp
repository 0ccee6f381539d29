#include "seqconv/sequence.hpp"

#include "seqconv/decimal.hpp"

#include <stdexcept>
#include <utility>

namespace seqconv {

std::string_view family_name(SeqFamily family) {
  switch (family) {
    case SeqFamily::standard: return "standard";
    case SeqFamily::reversed: return "reversed";
    case SeqFamily::symmetrized: return "symmetrized";
    case SeqFamily::random: return "random";
    case SeqFamily::convolved: return "convolved";
  }
  return "unknown";
}

Seq::Seq(std::vector<BigInt> values, Provenance prov)
    : values_(std::move(values)), prov_(std::move(prov)) {
  if (values_.empty()) throw std::invalid_argument("Seq: length must be >= 1");
  prov_.length = values_.size();
}

const BigInt& Seq::at(std::size_t index) const {
  if (index < 1 || index > values_.size()) throw std::out_of_range("Seq: index out of range");
  return values_[index - 1];
}

BigInt fib_term(std::size_t n) {
  if (n == 0) return BigInt(0);
  BigInt prev(0), cur(1);
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt binet_term(std::size_t n) {
  if (n == 0) return BigInt(0);
  // log10(phi) = 0.2089876...; 21n/100 + 12 comfortably exceeds n*log10(phi) + 10
  const int work = static_cast<int>(n * 21 / 100) + 12;
  const BigInt one = BigInt::pow10(static_cast<std::size_t>(work));
  const BigInt root5 = sqrt5_scaled(work);
  const BigInt phi = (one + root5) / BigInt(2);
  const BigInt psi_mag = (root5 - one) / BigInt(2);  // |1 - phi|

  BigInt phi_n = fixed::pow(phi, n, one);
  BigInt psi_n = fixed::pow(psi_mag, n, one);
  if (n % 2 != 0) psi_n = -psi_n;  // (1-phi)^n = (-1)^n |1-phi|^n
  return fixed::round_div(phi_n - psi_n, root5);
}

Seq fib_seq(std::size_t length) {
  if (length < 1) throw std::invalid_argument("fib_seq: length must be >= 1");
  std::vector<BigInt> values;
  values.reserve(length);
  BigInt prev(0), cur(1);
  for (std::size_t i = 0; i < length; ++i) {
    values.push_back(cur);
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Seq(std::move(values), Provenance{});
}

namespace {
Provenance chained(const Provenance& base, SeqFamily family, std::string transform) {
  Provenance out = base;
  out.family = family;
  out.transform_chain.push_back(std::move(transform));
  return out;
}
}  // namespace

Seq reverse(const Seq& s) {
  std::vector<BigInt> values(s.values().rbegin(), s.values().rend());
  return Seq(std::move(values), chained(s.provenance(), SeqFamily::reversed, "reversed"));
}

Seq symmetrize(const Seq& s) {
  std::vector<BigInt> values = s.values();
  values.insert(values.end(), s.values().rbegin(), s.values().rend());
  return Seq(std::move(values), chained(s.provenance(), SeqFamily::symmetrized, "symmetrized"));
}

Seq symmetrize_shared(const Seq& s) {
  std::vector<BigInt> values = s.values();
  values.insert(values.end(), s.values().rbegin() + 1, s.values().rend());
  return Seq(std::move(values),
             chained(s.provenance(), SeqFamily::symmetrized, "symmetrized-shared"));
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<BigInt> random_fib_terms(std::span<const std::int8_t> signs) {
  std::vector<BigInt> terms;
  terms.reserve(signs.size() + 2);
  terms.emplace_back(1);
  terms.emplace_back(1);
  for (std::int8_t s : signs) {
    const BigInt& a = terms[terms.size() - 2];
    const BigInt& b = terms[terms.size() - 1];
    terms.push_back(s > 0 ? b + a : b - a);
  }
  return terms;
}

Seq to_seq(const RandomFibPath& path) {
  if (!path.terms)
    throw std::invalid_argument("to_seq: path terms were not materialized");
  Provenance prov;
  prov.family = SeqFamily::random;
  prov.seed = path.seed;
  return Seq(*path.terms, std::move(prov));
}

RandomFibPath random_fib(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_fib: n must be >= 2");
  RandomFibPath path;
  path.n = n;
  path.seed = seed;
  path.signs.reserve(n - 2);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    path.signs.push_back((rng.next() >> 63) ? std::int8_t{-1} : std::int8_t{1});
  }
  if (n <= kRandomFibMaterializeLimit) path.terms = random_fib_terms(path.signs);
  return path;
}

}  // namespace seqconv
