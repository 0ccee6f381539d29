#include "seqconv/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace seqconv {

std::string_view family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::single: return "single";
    case FamilyKind::self: return "self";
    case FamilyKind::rev: return "rev";
    case FamilyKind::triple: return "triple";
    case FamilyKind::sym: return "sym";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "single") return FamilyKind::single;
  if (name == "self") return FamilyKind::self;
  if (name == "rev") return FamilyKind::rev;
  if (name == "triple") return FamilyKind::triple;
  if (name == "sym") return FamilyKind::sym;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

Seq family_sequence(FamilyKind kind, std::size_t L) {
  switch (kind) {
    case FamilyKind::single:
      return fib_seq(L);
    case FamilyKind::self:
      return self_conv(fib_seq(L)).seq;
    case FamilyKind::rev: {
      Seq s1 = fib_seq(L);
      return conv(s1, reverse(s1)).seq;
    }
    case FamilyKind::triple:
      return triple_variant_sequence(L, false);
    case FamilyKind::sym: {
      if (L < 2) throw std::invalid_argument("sym family: L must be >= 2");
      Seq palindrome = L % 2 == 0 ? symmetrize(fib_seq(L / 2))
                                  : symmetrize_shared(fib_seq((L + 1) / 2));
      return self_conv(palindrome).seq;
    }
  }
  throw std::invalid_argument("family_sequence: unknown family");
}

Seq triple_variant_sequence(std::size_t L, bool convolve_with_reversed) {
  Seq s1 = fib_seq(L);
  Seq s2 = reverse(s1);
  ConvResult s3 = conv(s1, s2);
  return conv(s3.seq, convolve_with_reversed ? s2 : s1).seq;
}

SweepSeries variance_sweep(FamilyKind kind, std::size_t from, std::size_t to,
                           std::size_t step, int digits) {
  if (from < 4 || from > to) throw std::invalid_argument("variance_sweep: need 4 <= from <= to");
  if (step < 1) throw std::invalid_argument("variance_sweep: step must be >= 1");
  SweepSeries series;
  series.family = kind;
  series.digits = digits;
  for (std::size_t L = from; L <= to; L += step) {
    Rational v = variance(Pmf::from_seq(family_sequence(kind, L)));
    Decimal rendered = to_decimal(v, digits);
    series.points.push_back(SweepPoint{L, std::move(v), std::move(rendered)});
  }
  return series;
}

ConvergenceReport detect_convergence(const SweepSeries& series, const Rational& epsilon,
                                     std::size_t window, std::size_t stats_window) {
  const auto& pts = series.points;
  if (window < 1) throw std::invalid_argument("detect_convergence: window must be >= 1");
  if (pts.size() < window + 1)
    throw std::invalid_argument("detect_convergence: series needs at least window+1 points");

  auto window_smooth_at = [&](std::size_t end) {  // deltas over (end-window, end]
    for (std::size_t i = end + 1 - window; i <= end; ++i) {
      if ((pts[i].variance - pts[i - 1].variance).abs() >= epsilon) return false;
    }
    return true;
  };

  ConvergenceReport report;
  const std::size_t last = pts.size() - 1;

  if (stats_window < 1) stats_window = 1;
  std::size_t stats_begin = pts.size() > stats_window ? pts.size() - stats_window : 0;
  Rational sum;
  Rational lo = pts[stats_begin].variance;
  Rational hi = lo;
  for (std::size_t i = stats_begin; i < pts.size(); ++i) {
    const Rational& v = pts[i].variance;
    sum += v;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  Rational mean = sum / Rational(static_cast<std::int64_t>(pts.size() - stats_begin));
  report.window_mean = to_decimal(mean, series.digits);
  report.window_min = to_decimal(lo, series.digits);
  report.window_max = to_decimal(hi, series.digits);

  if (window_smooth_at(last)) {
    report.converged = true;
    report.mode = ConvergenceMode::smooth;
    report.limit_estimate = pts[last].rendered;
    for (std::size_t end = window; end <= last; ++end) {
      if (window_smooth_at(end)) {
        report.first_converged_L = pts[end].L;
        break;
      }
    }
  } else {
    report.converged = false;
    report.mode = ConvergenceMode::oscillating;
    report.limit_estimate = report.window_mean;
  }
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> argmax_scan(std::size_t from, std::size_t to) {
  if (from < 4 || from > to) throw std::invalid_argument("argmax_scan: need 4 <= from <= to");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(to - from + 1);
  for (std::size_t L = from; L <= to; ++L) {
    out.emplace_back(L, argmax(self_conv(fib_seq(L)).seq));
  }
  return out;
}

namespace {

ObservationResult make_entry(std::string id, Rational computed, std::string_view paper_target,
                             Rational closed_form, int digits) {
  ObservationResult entry;
  entry.id = std::move(id);
  entry.computed_decimal = to_decimal(computed, digits);
  entry.abs_error = to_decimal((computed - rational_from_decimal_text(paper_target)).abs(), digits);
  entry.closed_form_error = to_decimal((computed - closed_form).abs(), digits);
  entry.computed = std::move(computed);
  entry.paper_target = std::string(paper_target);
  entry.closed_form = std::move(closed_form);
  return entry;
}

}  // namespace

ConstantsReport constants_suite(std::size_t L, int digits) {
  if (L < 50) throw std::invalid_argument("constants_suite: L must be >= 50");
  if (digits < 1) throw std::invalid_argument("constants_suite: digits must be >= 1");

  auto family_variance = [&](FamilyKind kind, std::size_t length) {
    return variance(Pmf::from_seq(family_sequence(kind, length)));
  };

  // closed-form cross-targets from the geometric-tail limits
  Rational phi = golden_ratio(digits + 10).to_rational();
  Rational phi3 = phi * phi * phi;
  Rational obs7_closed = Rational(8) * phi + Rational(BigInt(17), BigInt(4));

  Rational v_single = family_variance(FamilyKind::single, L);
  Rational v_self = family_variance(FamilyKind::self, L);
  Rational v_rev = family_variance(FamilyKind::rev, L);
  Rational v_triple = family_variance(FamilyKind::triple, L);
  std::size_t even_total = L - (L % 2);
  Rational v_sym_pair = (family_variance(FamilyKind::sym, even_total) +
                         family_variance(FamilyKind::sym, even_total + 1)) /
                        Rational(2);

  ConstantsReport report;
  report.L = L;
  report.digits = digits;
  report.entries.push_back(make_entry("obs1", std::move(v_single), kObs1Target, phi3, digits));
  report.entries.push_back(
      make_entry("obs2", std::move(v_self), kObs2Target, Rational(2) * phi3, digits));
  report.entries.push_back(
      make_entry("obs4", std::move(v_rev), kObs2Target, Rational(2) * phi3, digits));
  report.entries.push_back(
      make_entry("obs5", std::move(v_triple), kObs5Target, Rational(3) * phi3, digits));
  report.entries.push_back(
      make_entry("obs7", std::move(v_sym_pair), kObs7Target, obs7_closed, digits));
  return report;
}

namespace {

LyapunovEstimate run_lyapunov(std::size_t n, std::uint64_t seed, bool forced_plus) {
  if (n < 1000) throw std::invalid_argument("viswanath_estimate: n must be >= 1000");
  constexpr double kLimit = 0x1p512;
  constexpr double kRescale = 0x1p-512;
  const double kLogLimit = 512.0 * std::log(2.0);

  LyapunovEstimate est;
  est.n = n;
  est.seed = seed;
  SplitMix64 rng(seed);
  double prev = 1.0, cur = 1.0;  // f[1], f[2]
  double acc = 0.0;
  for (std::size_t k = 3; k <= n; ++k) {
    const bool minus = !forced_plus && (rng.next() >> 63);
    const double next = minus ? cur - prev : cur + prev;
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kLimit || std::fabs(prev) > kLimit) {
      cur *= kRescale;
      prev *= kRescale;
      acc += kLogLimit;
      ++est.renormalizations;
    }
  }
  est.log_accumulator = acc + std::log(std::fabs(cur));
  est.estimate = std::exp(est.log_accumulator / static_cast<double>(n));
  return est;
}

}  // namespace

LyapunovEstimate viswanath_estimate(std::size_t n, std::uint64_t seed) {
  return run_lyapunov(n, seed, false);
}

LyapunovEstimate viswanath_forced_plus(std::size_t n) { return run_lyapunov(n, 0, true); }

Decimal ratio_convergence(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ratio_convergence: n must be >= 2");
  return to_decimal(Rational(fib_term(n), fib_term(n - 1)), 15);
}

}  // namespace seqconv
