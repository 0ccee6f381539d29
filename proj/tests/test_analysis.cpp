#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqconv/analysis.hpp"

#include <cmath>
#include <stdexcept>

using namespace seqconv;

namespace {

Rational family_variance(FamilyKind kind, std::size_t L) {
  return variance(Pmf::from_seq(family_sequence(kind, L)));
}

std::vector<BigInt> ints(std::initializer_list<std::int64_t> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (FamilyKind kind : {FamilyKind::single, FamilyKind::self, FamilyKind::rev,
                          FamilyKind::triple, FamilyKind::sym}) {
    CHECK(parse_family_kind(family_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_family_kind("nope"), std::invalid_argument);
}

TEST_CASE("family pipelines build the documented sequences") {
  CHECK(family_sequence(FamilyKind::single, 5).values() == fib_seq(5).values());
  CHECK(family_sequence(FamilyKind::self, 3).values() == ints({1, 2, 5, 4, 4}));
  CHECK(family_sequence(FamilyKind::sym, 4).values() == ints({1, 2, 3, 4, 3, 2, 1}));
  CHECK(family_sequence(FamilyKind::sym, 5).values() ==
        ints({1, 2, 5, 6, 8, 6, 5, 2, 1}));  // self conv of [1,1,2,1,1]
  CHECK(family_sequence(FamilyKind::rev, 4).size() == 7);
  CHECK(family_sequence(FamilyKind::triple, 4).size() == 10);  // (2*4-1)+4-1
}

TEST_CASE("variance sweep hits the reference values") {
  SweepSeries single = variance_sweep(FamilyKind::single, 100, 100, 1, 9);
  REQUIRE(single.points.size() == 1);
  CHECK(single.points[0].rendered.text == "4.236067977");

  SweepSeries self100 = variance_sweep(FamilyKind::self, 100, 100, 1, 9);
  CHECK(self100.points[0].rendered.text == "8.472135955");
}

TEST_CASE("variance sweep honors the range and step") {
  SweepSeries s = variance_sweep(FamilyKind::self, 20, 40, 5, 12);
  REQUIRE(s.points.size() == 5);
  CHECK(s.points[0].L == 20);
  CHECK(s.points[4].L == 40);
  for (std::size_t i = 1; i < s.points.size(); ++i)
    CHECK(s.points[i].L > s.points[i - 1].L);

  CHECK_THROWS_AS(variance_sweep(FamilyKind::self, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(variance_sweep(FamilyKind::self, 10, 4), std::invalid_argument);
  CHECK_THROWS_AS(variance_sweep(FamilyKind::self, 4, 10, 0), std::invalid_argument);
}

TEST_CASE("self variance doubles the single variance at every length") {
  for (std::size_t L : {4, 10, 25, 60}) {
    CHECK(family_variance(FamilyKind::self, L) ==
          Rational(2) * family_variance(FamilyKind::single, L));
  }
}

TEST_CASE("triple pipeline variance is exactly three times the single one") {
  Rational v1 = family_variance(FamilyKind::single, 100);
  Rational v3 = family_variance(FamilyKind::triple, 100);
  CHECK(v3 == Rational(3) * v1);
  CHECK(to_decimal(v3, 15).text == "12.708203932499369");
}

TEST_CASE("limit ratios hold at L = 300") {
  Rational v1 = family_variance(FamilyKind::single, 300);
  CHECK(family_variance(FamilyKind::self, 300) == Rational(2) * v1);
  CHECK(family_variance(FamilyKind::triple, 300) == Rational(3) * v1);
}

TEST_CASE("both triple variants agree exactly") {
  for (std::size_t L : {4, 10, 25, 50}) {
    Rational a = variance(Pmf::from_seq(triple_variant_sequence(L, false)));
    Rational b = variance(Pmf::from_seq(triple_variant_sequence(L, true)));
    CHECK(a == b);
  }
}

TEST_CASE("sym family alternates with the parity of the total length") {
  CHECK(to_decimal(family_variance(FamilyKind::sym, 20), 15).text == "15.325174825174825");
  CHECK(to_decimal(family_variance(FamilyKind::sym, 21), 15).text == "15.189333333333333");
  CHECK(to_decimal(family_variance(FamilyKind::sym, 100), 15).text == "17.444271742993333");
  CHECK(to_decimal(family_variance(FamilyKind::sym, 101), 15).text == "16.944271779960591");

  // even lengths sit above the average, odd lengths below
  Rational avg = rational_from_decimal_text(kObs7Target);
  for (std::size_t L = 80; L <= 90; ++L) {
    Rational v = family_variance(FamilyKind::sym, L);
    if (L % 2 == 0) {
      CHECK(v > avg);
    } else {
      CHECK(v < avg);
    }
  }
}

TEST_CASE("detect_convergence on a constant series") {
  SweepSeries series;
  series.family = FamilyKind::single;
  series.digits = 9;
  for (std::size_t L = 4; L <= 20; ++L) {
    series.points.push_back({L, Rational(7), to_decimal(Rational(7), 9)});
  }
  ConvergenceReport report = detect_convergence(series, Rational(BigInt(1), BigInt(100)), 4);
  CHECK(report.converged);
  CHECK(report.mode == ConvergenceMode::smooth);
  CHECK(report.limit_estimate.text == "7.000000000");
  CHECK(report.first_converged_L == 8);  // first index with a full delta window
  CHECK(report.window_min.text == report.window_max.text);
}

TEST_CASE("detect_convergence sees the self family as smooth") {
  SweepSeries series = variance_sweep(FamilyKind::self, 20, 120, 1, 12);
  ConvergenceReport report =
      detect_convergence(series, Rational(BigInt(1), BigInt::pow10(9)), 8);
  CHECK(report.converged);
  CHECK(report.mode == ConvergenceMode::smooth);
  CHECK(report.limit_estimate.text == to_decimal(series.points.back().variance, 12).text);
  CHECK(report.first_converged_L == 68);  // trailing-8 deltas first drop below 1e-9 here
}

TEST_CASE("detect_convergence sees the sym family as oscillating") {
  SweepSeries series = variance_sweep(FamilyKind::sym, 20, 120, 1, 15);
  ConvergenceReport report =
      detect_convergence(series, Rational(BigInt(1), BigInt::pow10(9)), 8);
  CHECK_FALSE(report.converged);
  CHECK(report.mode == ConvergenceMode::oscillating);
  CHECK(report.window_mean.text == "17.194271893531569");
  CHECK(report.window_max.text == "17.444271908073781");
  CHECK(report.window_min.text == "16.944271856503322");
  CHECK(report.limit_estimate.text == report.window_mean.text);
}

TEST_CASE("detect_convergence rejects short series") {
  SweepSeries series = variance_sweep(FamilyKind::self, 4, 8, 1, 9);
  CHECK_THROWS_AS(detect_convergence(series, Rational(1), 8), std::invalid_argument);
}

TEST_CASE("self-family deltas shrink monotonically") {
  SweepSeries series = variance_sweep(FamilyKind::self, 19, 60, 1, 15);
  Rational prev_delta(-1);
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    Rational delta = (series.points[i].variance - series.points[i - 1].variance).abs();
    if (i > 1) CHECK(delta < prev_delta);
    prev_delta = delta;
  }
}

TEST_CASE("argmax scan follows the 2L-2 law") {
  auto rows = argmax_scan(4, 10);
  REQUIRE(rows.size() == 7);
  std::size_t expected[] = {6, 8, 10, 12, 14, 16, 18};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].first == 4 + i);
    CHECK(rows[i].second == expected[i]);
  }
  auto l100 = argmax_scan(100, 100);
  CHECK(l100[0].second == 198);
  CHECK_THROWS_AS(argmax_scan(3, 10), std::invalid_argument);
}

TEST_CASE("constants suite") {
  ConstantsReport report = constants_suite(100, 12);
  REQUIRE(report.entries.size() == 5);
  CHECK(report.entries[0].id == "obs1");
  CHECK(report.entries[0].computed_decimal.text == "4.236067977500");
  CHECK(report.entries[0].paper_target == kObs1Target);
  CHECK(report.entries[0].closed_form_error.to_rational() <
        Rational(BigInt(1), BigInt::pow10(12)));

  // the reversal family matches the self family as exact rationals
  CHECK(report.entries[1].id == "obs2");
  CHECK(report.entries[2].id == "obs4");
  CHECK(report.entries[1].computed == report.entries[2].computed);

  // obs5: the computed value is exactly 3x obs1 (closed form), and its
  // distance to the published decimal shows that value saturates ~5e-6 away
  CHECK(report.entries[3].id == "obs5");
  CHECK(report.entries[3].computed == Rational(3) * report.entries[0].computed);
  CHECK(report.entries[3].closed_form_error.to_rational() <
        Rational(BigInt(1), BigInt::pow10(10)));
  Rational obs5_gap = report.entries[3].abs_error.to_rational();
  CHECK(obs5_gap > Rational(BigInt(4), BigInt::pow10(6)));
  CHECK(obs5_gap < Rational(BigInt(6), BigInt::pow10(6)));

  CHECK(report.entries[4].id == "obs7");
  CHECK(report.entries[4].abs_error.to_rational() < Rational(BigInt(1), BigInt::pow10(3)));

  CHECK_THROWS_AS(constants_suite(49, 12), std::invalid_argument);
  CHECK_THROWS_AS(constants_suite(100, 0), std::invalid_argument);
}

TEST_CASE("random-recurrence growth estimate") {
  LyapunovEstimate a = viswanath_estimate(20000, 12345);
  LyapunovEstimate b = viswanath_estimate(20000, 12345);
  CHECK(a.estimate == b.estimate);  // bit-identical under a fixed seed
  CHECK(a.log_accumulator == b.log_accumulator);
  CHECK(a.renormalizations == b.renormalizations);
  CHECK(a.renormalizations > 0);
  CHECK(std::isfinite(a.estimate));
  CHECK(a.estimate == doctest::Approx(std::exp(a.log_accumulator / 20000.0)));
  CHECK(a.estimate > 1.05);
  CHECK(a.estimate < 1.25);

  LyapunovEstimate c = viswanath_estimate(20000, 54321);
  CHECK(c.estimate != a.estimate);

  CHECK_THROWS_AS(viswanath_estimate(999, 1), std::invalid_argument);
}

TEST_CASE("forced-plus recurrence grows at the golden mean rate") {
  LyapunovEstimate est = viswanath_forced_plus(2000);
  double phi = 1.6180339887498949;
  CHECK(std::fabs(est.estimate - phi) < 1e-3);
  CHECK(est.renormalizations > 0);
}

TEST_CASE("ratio convergence") {
  CHECK(ratio_convergence(2).text == "1.000000000000000");
  CHECK(ratio_convergence(10).text == "1.617647058823529");  // 55/34
  CHECK(to_decimal(ratio_convergence(64).to_rational(), 12).text == golden_ratio(12).text);
  CHECK_THROWS_AS(ratio_convergence(1), std::invalid_argument);
}
