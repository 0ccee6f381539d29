#pragma once
// distribution.hpp - Exact pmfs over contiguous 1-based index support,
// their moments, the maximum-location theorem check, and the Gaussian
// comparison error.

#include "seqconv/convolution.hpp"
#include "seqconv/decimal.hpp"
#include "seqconv/rational.hpp"

#include <vector>

namespace seqconv {

// P(X = n) = w[n] / sum(w), X supported on {1..N}. Probabilities are exact
// reduced rationals and sum to exactly 1.
class Pmf {
 public:
  // Rejects negative entries and all-zero sequences.
  static Pmf from_seq(const Seq& s);

  std::size_t size() const { return probs_.size(); }
  // 1-based.
  const Rational& prob(std::size_t n) const;
  const std::vector<Rational>& probs() const { return probs_; }

  // original nonnegative weights and their sum (exact moment accumulation)
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& total() const { return total_; }

 private:
  Pmf() = default;
  std::vector<Rational> probs_;
  std::vector<BigInt> weights_;
  BigInt total_;
};

// E[X] = sum n*p[n], exact.
Rational mean(const Pmf& p);

// E[X^2] - E[X]^2, exact reduced rational.
Rational variance(const Pmf& p);

struct MomentReport {
  Rational mean;
  Rational variance;
  Decimal mean_decimal;
  Decimal variance_decimal;
  Decimal std_dev;
  int precision = 0;
};

MomentReport moment_report(const Pmf& p, int digits);

// 1-based index of the maximum value; ties break to the smallest index.
std::size_t argmax(const Seq& s);

struct TheoremCheck {
  bool ok_prev = false;  // y[2L-3] < y[2L-2]
  bool ok_last = false;  // y[2L-1] < y[2L-2]
};

// Evaluates both strict inequalities on self_conv(fib_seq(L)) with exact
// integers. Rejects L < 4: at L = 3 the convolution [1,2,5,4,4] peaks at
// index 3, not 2L-2, so the theorem's range starts at 4.
TheoremCheck theorem_check(std::size_t L);

// Normal density with the pmf's own mean and variance, sampled at each
// support point, samples renormalized to sum to 1, then (1/N)*sum (p-g)^2.
// The density samples are evaluated in scaled fixed point at
// `working_digits`; everything else is exact. Rejects zero variance.
Rational gaussian_mse_rational(const Pmf& p, int working_digits = 30);
Decimal gaussian_mse(const Pmf& p, int working_digits = 30);

}  // namespace seqconv
