#pragma once
// io.hpp - CSV and JSON serialization for sequences, pmfs, reports, and
// sweep series. CSV uses a header row, comma separators, LF line endings;
// JSON carries exact values as decimal strings.

#include "seqconv/analysis.hpp"
#include "seqconv/distribution.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqconv::io {

std::string seq_to_csv(const Seq& s);
std::string seq_to_json(const Seq& s);

// Parses seq_to_csv output: "index,value" header, indices running 1..N.
Seq seq_from_csv(std::string_view csv);

std::string conv_to_csv(const ConvResult& r);
std::string conv_to_json(const ConvResult& r);

std::string pmf_to_csv(const Pmf& p, int digits, bool include_exact);
std::string pmf_to_json(const Pmf& p, int digits);

// {mean_decimal, variance_decimal, variance_num, variance_den,
//  std_dev_decimal, precision}
std::string moment_report_to_json(const MomentReport& report);

// header: family,L,variance_decimal[,variance_num,variance_den]
std::string sweep_to_csv(const SweepSeries& series, bool include_exact);

// Parses sweep_to_csv output. Exact rational columns are required to
// reconstruct an equal series; a 3-column file throws.
SweepSeries sweep_from_csv(std::string_view csv);

std::string sweep_to_json(const SweepSeries& series, const ConvergenceReport* convergence);

std::string argmax_scan_to_csv(const std::vector<std::pair<std::size_t, std::size_t>>& rows);

// keyed by observation id; each entry holds {computed, paper_target,
// abs_error, closed_form_target, closed_form_error}
std::string constants_to_json(const ConstantsReport& report);

std::string lyapunov_to_json(const LyapunovEstimate& estimate);

std::string theorem_to_json(std::size_t L, const TheoremCheck& check);

std::string gauss_mse_to_json(const Decimal& mse, int working_digits);

std::string ratio_to_json(std::size_t n, const Decimal& ratio);

}  // namespace seqconv::io
