#include "seqconv/distribution.hpp"

#include <stdexcept>

namespace seqconv {

Pmf Pmf::from_seq(const Seq& s) {
  Pmf out;
  out.weights_ = s.values();
  for (const BigInt& w : out.weights_) {
    if (w.is_negative())
      throw std::invalid_argument("Pmf: negative entry is not a valid weight");
    out.total_ += w;
  }
  if (out.total_.is_zero())
    throw std::invalid_argument("Pmf: all-zero sequence has no distribution");
  out.probs_.reserve(out.weights_.size());
  for (const BigInt& w : out.weights_) out.probs_.emplace_back(w, out.total_);
  return out;
}

const Rational& Pmf::prob(std::size_t n) const {
  if (n < 1 || n > probs_.size()) throw std::out_of_range("Pmf: index out of range");
  return probs_[n - 1];
}

namespace {

// first and second index moments as integer accumulators over the weights
struct RawMoments {
  BigInt sum;     // sum w[n]
  BigInt first;   // sum n*w[n]
  BigInt second;  // sum n^2*w[n]
};

RawMoments raw_moments(const Pmf& p) {
  RawMoments m;
  m.sum = p.total();
  for (std::size_t i = 0; i < p.weights().size(); ++i) {
    BigInt n(static_cast<std::int64_t>(i + 1));
    BigInt nw = n * p.weights()[i];
    m.first += nw;
    m.second += n * nw;
  }
  return m;
}

}  // namespace

Rational mean(const Pmf& p) {
  RawMoments m = raw_moments(p);
  return Rational(std::move(m.first), std::move(m.sum));
}

Rational variance(const Pmf& p) {
  RawMoments m = raw_moments(p);
  // (second*sum - first^2) / sum^2
  return Rational(m.second * m.sum - m.first * m.first, m.sum * m.sum);
}

MomentReport moment_report(const Pmf& p, int digits) {
  MomentReport report;
  report.mean = mean(p);
  report.variance = variance(p);
  report.mean_decimal = to_decimal(report.mean, digits);
  report.variance_decimal = to_decimal(report.variance, digits);
  report.std_dev = sqrt_decimal(report.variance, digits);
  report.precision = digits;
  return report;
}

std::size_t argmax(const Seq& s) {
  std::size_t best = 1;
  for (std::size_t i = 2; i <= s.size(); ++i) {
    if (s.at(i) > s.at(best)) best = i;
  }
  return best;
}

TheoremCheck theorem_check(std::size_t L) {
  if (L < 4)
    throw std::invalid_argument(
        "theorem_check: requires L >= 4 (the maximum of self_conv(fib_seq(3)) "
        "sits at index 3, not 2L-2)");
  // tail coefficients of y = fib_seq(L) * fib_seq(L), summed directly
  Seq f = fib_seq(L);
  auto coeff = [&](std::size_t n) {  // y[n] = sum f[k] f[n+1-k]
    BigInt sum;
    std::size_t k_lo = n + 1 > L ? n + 1 - L : 1;
    for (std::size_t k = k_lo; k <= L && k <= n; ++k) sum += f.at(k) * f.at(n + 1 - k);
    return sum;
  };
  BigInt prev = coeff(2 * L - 3);
  BigInt peak = coeff(2 * L - 2);
  BigInt last = coeff(2 * L - 1);
  return TheoremCheck{.ok_prev = prev < peak, .ok_last = last < peak};
}

Rational gaussian_mse_rational(const Pmf& p, int working_digits) {
  if (working_digits < 1) throw std::invalid_argument("gaussian_mse: digits must be >= 1");
  Rational mu = mean(p);
  Rational var = variance(p);
  if (var.is_zero()) throw std::invalid_argument("gaussian_mse: zero variance");

  // w[n] = exp(-(n - mu)^2 / (2 var)) in fixed point, then exact renormalize
  std::vector<BigInt> samples;
  samples.reserve(p.size());
  BigInt total;
  for (std::size_t n = 1; n <= p.size(); ++n) {
    Rational d = Rational(static_cast<std::int64_t>(n)) - mu;
    Rational u = (d * d) / (Rational(2) * var);
    samples.push_back(fixed::exp_neg(u, working_digits));
    total += samples.back();
  }
  if (total.is_zero())
    throw std::invalid_argument("gaussian_mse: density underflows at working precision");

  Rational acc;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rational diff = p.probs()[i] - Rational(samples[i], total);
    acc += diff * diff;
  }
  return acc / Rational(static_cast<std::int64_t>(p.size()));
}

Decimal gaussian_mse(const Pmf& p, int working_digits) {
  return to_decimal(gaussian_mse_rational(p, working_digits), working_digits);
}

}  // namespace seqconv
