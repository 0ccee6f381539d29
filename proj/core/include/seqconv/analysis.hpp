#pragma once
// analysis.hpp - Variance-vs-length sweeps, convergence detection, the
// constants suite, and the random-recurrence growth-rate estimator.

#include "seqconv/distribution.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqconv {

// Construction pipelines whose pmf variance is swept against length L:
//   single: pmf(fib_seq(L))
//   self:   pmf(self_conv(fib_seq(L)))
//   rev:    pmf(conv(fib_seq(L), reverse(fib_seq(L))))
//   triple: pmf(conv(conv(S1, reverse(S1)), S1))
//   sym:    pmf(self_conv(P_L)) where P_L is the Fibonacci palindrome of
//           total length L - centre duplicated for even L, shared for odd L.
//           Sweeping both parities is what produces the oscillation between
//           the two palindrome limits; either parity alone converges
//           smoothly to its own constant.
enum class FamilyKind { single, self, rev, triple, sym };

std::string_view family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);  // throws on unknown name

// The sequence whose pmf the family takes at length parameter L.
Seq family_sequence(FamilyKind kind, std::size_t L);

// Triple pipeline variant: S4 = conv(S3, S2) instead of conv(S3, S1).
// Both variants have exactly equal variance at every L.
Seq triple_variant_sequence(std::size_t L, bool convolve_with_reversed);

struct SweepPoint {
  std::size_t L = 0;
  Rational variance;
  Decimal rendered;

  bool operator==(const SweepPoint& rhs) const = default;
};

struct SweepSeries {
  FamilyKind family = FamilyKind::single;
  int digits = 15;
  std::vector<SweepPoint> points;  // L strictly increasing

  bool operator==(const SweepSeries& rhs) const = default;
};

// Exact variance at each L in {from, from+step, ...} ∩ [from, to]; 4 <= from <= to.
SweepSeries variance_sweep(FamilyKind kind, std::size_t from, std::size_t to,
                           std::size_t step = 1, int digits = 15);

enum class ConvergenceMode { smooth, oscillating };

struct ConvergenceReport {
  bool converged = false;
  ConvergenceMode mode = ConvergenceMode::oscillating;
  Decimal limit_estimate;          // last value (smooth) or window mean
  std::size_t first_converged_L = 0;  // 0 when never smooth
  Decimal window_mean;
  Decimal window_min;
  Decimal window_max;
};

// Smooth when every one of the trailing `window` consecutive deltas is
// < epsilon (needs window+1 points). Otherwise oscillating, with statistics
// over the trailing `stats_window` points (clamped to the series length).
ConvergenceReport detect_convergence(const SweepSeries& series, const Rational& epsilon,
                                     std::size_t window, std::size_t stats_window = 16);

// argmax of self_conv(fib_seq(L)) for each L in [from, to]; from >= 4.
// Every returned index equals 2L-2 (callers treat a mismatch as a broken
// kernel).
std::vector<std::pair<std::size_t, std::size_t>> argmax_scan(std::size_t from, std::size_t to);

// Published reference decimals the constants suite reproduces, plus the
// oscillation swing bounds of the sym family and the random-recurrence
// growth constant.
inline constexpr std::string_view kObs1Target = "4.23606797750108";
inline constexpr std::string_view kObs2Target = "8.47213595500216";
inline constexpr std::string_view kObs5Target = "12.7081989582623";
inline constexpr std::string_view kObs7Target = "17.19423665579735";
inline constexpr std::string_view kObs7SwingHigh = "17.4442399455347";
inline constexpr std::string_view kObs7SwingLow = "16.9442333660600";
inline constexpr std::string_view kViswanathTarget = "1.13198824";

struct ObservationResult {
  std::string id;            // "obs1", "obs2", "obs4", "obs5", "obs7"
  Rational computed;
  Decimal computed_decimal;
  std::string paper_target;  // published decimal being reproduced
  Decimal abs_error;         // |computed - paper_target|
  Rational closed_form;      // derived limit: phi^3, 2phi^3, 3phi^3, 8phi+17/4
  Decimal closed_form_error;
};

struct ConstantsReport {
  std::size_t L = 0;
  int digits = 15;
  std::vector<ObservationResult> entries;
};

// All five targets at length L (>= 50), rendered at `digits`. obs7 averages
// the adjacent parity pair (even total E = L rounded down, E and E+1).
ConstantsReport constants_suite(std::size_t L, int digits);

struct LyapunovEstimate {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;          // exp(log_accumulator / n)
  double log_accumulator = 0.0;   // accumulated rescale logs + ln|f_n|
  std::size_t renormalizations = 0;
};

// Runs the random +/- recurrence on doubles, rescaling the working pair by
// 2^-512 (and logging 512*ln 2) whenever it exceeds 2^512; n >= 1000.
LyapunovEstimate viswanath_estimate(std::size_t n, std::uint64_t seed);

// Same recurrence with every sign forced to '+' (deterministic Fibonacci
// growth; reference path for testing the estimator).
LyapunovEstimate viswanath_forced_plus(std::size_t n);

// fib(n)/fib(n-1) rendered at 15 fractional digits; n >= 2.
Decimal ratio_convergence(std::size_t n);

}  // namespace seqconv
