#include "seqconv/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace seqconv::io {

namespace {

using ojson = nlohmann::ordered_json;

ojson provenance_json(const Provenance& prov) {
  ojson j;
  j["family"] = family_name(prov.family);
  j["length"] = prov.length;
  j["transform_chain"] = prov.transform_chain;
  if (prov.seed) j["seed"] = *prov.seed;
  return j;
}

ojson values_json(const Seq& s) {
  ojson arr = ojson::array();
  for (const BigInt& v : s.values()) arr.push_back(v.to_decimal());
  return arr;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::string seq_to_csv(const Seq& s) {
  std::string out = "index,value\n";
  for (std::size_t i = 1; i <= s.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += s.at(i).to_decimal();
    out += '\n';
  }
  return out;
}

std::string seq_to_json(const Seq& s) {
  ojson j;
  j["provenance"] = provenance_json(s.provenance());
  j["values"] = values_json(s);
  return dump(j);
}

Seq seq_from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "index,value")
    throw std::invalid_argument("sequence csv: expected 'index,value' header");
  std::vector<BigInt> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) throw std::invalid_argument("sequence csv: malformed row");
    if (std::stoull(fields[0]) != values.size() + 1)
      throw std::invalid_argument("sequence csv: indices must run 1..N");
    values.push_back(BigInt::from_decimal(fields[1]));
  }
  if (values.empty()) throw std::invalid_argument("sequence csv: no data rows");
  Provenance prov;
  prov.transform_chain.push_back("parsed");
  return Seq(std::move(values), std::move(prov));
}

std::string conv_to_csv(const ConvResult& r) { return seq_to_csv(r.seq); }

std::string conv_to_json(const ConvResult& r) {
  ojson j;
  j["provenance"] = provenance_json(r.seq.provenance());
  j["operands"] = ojson::array({provenance_json(r.operand_a), provenance_json(r.operand_b)});
  j["values"] = values_json(r.seq);
  return dump(j);
}

std::string pmf_to_csv(const Pmf& p, int digits, bool include_exact) {
  std::string out =
      include_exact ? "index,prob_decimal,prob_num,prob_den\n" : "index,prob_decimal\n";
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const Rational& prob = p.prob(i);
    out += std::to_string(i);
    out += ',';
    out += to_decimal(prob, digits).text;
    if (include_exact) {
      out += ',';
      out += prob.num().to_decimal();
      out += ',';
      out += prob.den().to_decimal();
    }
    out += '\n';
  }
  return out;
}

std::string pmf_to_json(const Pmf& p, int digits) {
  ojson probs = ojson::array();
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const Rational& prob = p.prob(i);
    ojson entry;
    entry["index"] = i;
    entry["decimal"] = to_decimal(prob, digits).text;
    entry["num"] = prob.num().to_decimal();
    entry["den"] = prob.den().to_decimal();
    probs.push_back(std::move(entry));
  }
  ojson j;
  j["size"] = p.size();
  j["digits"] = digits;
  j["probs"] = std::move(probs);
  return dump(j);
}

std::string moment_report_to_json(const MomentReport& report) {
  ojson j;
  j["mean_decimal"] = report.mean_decimal.text;
  j["variance_decimal"] = report.variance_decimal.text;
  j["variance_num"] = report.variance.num().to_decimal();
  j["variance_den"] = report.variance.den().to_decimal();
  j["std_dev_decimal"] = report.std_dev.text;
  j["precision"] = report.precision;
  return dump(j);
}

std::string sweep_to_csv(const SweepSeries& series, bool include_exact) {
  std::string out = include_exact ? "family,L,variance_decimal,variance_num,variance_den\n"
                                  : "family,L,variance_decimal\n";
  for (const SweepPoint& point : series.points) {
    out += family_kind_name(series.family);
    out += ',';
    out += std::to_string(point.L);
    out += ',';
    out += point.rendered.text;
    if (include_exact) {
      out += ',';
      out += point.variance.num().to_decimal();
      out += ',';
      out += point.variance.den().to_decimal();
    }
    out += '\n';
  }
  return out;
}

SweepSeries sweep_from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("sweep csv: empty input");
  if (line != "family,L,variance_decimal,variance_num,variance_den")
    throw std::invalid_argument("sweep csv: exact rational columns required");

  SweepSeries series;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 5) throw std::invalid_argument("sweep csv: malformed row");
    FamilyKind kind = parse_family_kind(fields[0]);
    if (first) {
      series.family = kind;
      auto dot = fields[2].find('.');
      series.digits =
          dot == std::string::npos ? 1 : static_cast<int>(fields[2].size() - dot - 1);
      first = false;
    } else if (kind != series.family) {
      throw std::invalid_argument("sweep csv: mixed families");
    }
    SweepPoint point;
    point.L = std::stoull(fields[1]);
    point.variance = Rational(BigInt::from_decimal(fields[3]), BigInt::from_decimal(fields[4]));
    point.rendered = Decimal{fields[2], series.digits};
    series.points.push_back(std::move(point));
  }
  if (first) throw std::invalid_argument("sweep csv: no data rows");
  return series;
}

std::string sweep_to_json(const SweepSeries& series, const ConvergenceReport* convergence) {
  ojson points = ojson::array();
  for (const SweepPoint& point : series.points) {
    ojson entry;
    entry["L"] = point.L;
    entry["variance_decimal"] = point.rendered.text;
    entry["variance_num"] = point.variance.num().to_decimal();
    entry["variance_den"] = point.variance.den().to_decimal();
    points.push_back(std::move(entry));
  }
  ojson j;
  j["family"] = family_kind_name(series.family);
  j["digits"] = series.digits;
  j["points"] = std::move(points);
  if (convergence) {
    ojson c;
    c["converged"] = convergence->converged;
    c["mode"] = convergence->mode == ConvergenceMode::smooth ? "smooth" : "oscillating";
    c["limit_estimate"] = convergence->limit_estimate.text;
    c["first_converged_L"] = convergence->first_converged_L;
    c["window_mean"] = convergence->window_mean.text;
    c["window_min"] = convergence->window_min.text;
    c["window_max"] = convergence->window_max.text;
    j["convergence"] = std::move(c);
  }
  return dump(j);
}

std::string argmax_scan_to_csv(const std::vector<std::pair<std::size_t, std::size_t>>& rows) {
  std::string out = "L,argmax_index\n";
  for (const auto& [L, index] : rows) {
    out += std::to_string(L);
    out += ',';
    out += std::to_string(index);
    out += '\n';
  }
  return out;
}

std::string constants_to_json(const ConstantsReport& report) {
  ojson j;
  for (const ObservationResult& entry : report.entries) {
    ojson e;
    e["computed"] = entry.computed_decimal.text;
    e["paper_target"] = entry.paper_target;
    e["abs_error"] = entry.abs_error.text;
    e["closed_form_target"] = to_decimal(entry.closed_form, report.digits).text;
    e["closed_form_error"] = entry.closed_form_error.text;
    j[entry.id] = std::move(e);
  }
  return dump(j);
}

std::string lyapunov_to_json(const LyapunovEstimate& estimate) {
  ojson j;
  j["n"] = estimate.n;
  j["seed"] = estimate.seed;
  j["estimate"] = estimate.estimate;
  j["log_accumulator"] = estimate.log_accumulator;
  j["renormalizations"] = estimate.renormalizations;
  return dump(j);
}

std::string theorem_to_json(std::size_t L, const TheoremCheck& check) {
  ojson j;
  j["L"] = L;
  j["ok_prev"] = check.ok_prev;
  j["ok_last"] = check.ok_last;
  return dump(j);
}

std::string gauss_mse_to_json(const Decimal& mse, int working_digits) {
  ojson j;
  j["mse"] = mse.text;
  j["working_digits"] = working_digits;
  return dump(j);
}

std::string ratio_to_json(std::size_t n, const Decimal& ratio) {
  ojson j;
  j["n"] = n;
  j["ratio"] = ratio.text;
  return dump(j);
}

}  // namespace seqconv::io
