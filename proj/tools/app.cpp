#include "app.hpp"

#include "seqconv/analysis.hpp"
#include "seqconv/io.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace seqconv::cli {

namespace {

// One invocation's flag values (one command per run).
struct RunConfig {
  std::string family = "self";
  std::size_t L = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t step = 1;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  int digits = 0;  // resolved per command after parsing
  std::string epsilon = "0.000000001";
  std::size_t window = 8;
  std::string format;
  std::string out;
  std::string a_path;
  std::string b_path;
  bool exact = false;
};

struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int env_default_digits() {
  const char* env = std::getenv("SEQCONV_DIGITS");
  if (env == nullptr || *env == '\0') return 15;
  std::string text(env);
  if (text.size() > 3 || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return c >= '0' && c <= '9';
      }))
    throw std::invalid_argument("SEQCONV_DIGITS must be a number in [1, 200]");
  int value = std::stoi(text);
  if (value < 1 || value > 200)
    throw std::invalid_argument("SEQCONV_DIGITS must be a number in [1, 200]");
  return value;
}

// Accepts plain decimals and exponent notation ("1e-9").
Rational parse_epsilon(const std::string& text) {
  auto e = text.find_first_of("eE");
  if (e == std::string::npos) return rational_from_decimal_text(text);
  Rational mantissa = rational_from_decimal_text(text.substr(0, e));
  long exponent = std::stol(text.substr(e + 1));
  BigInt scale = BigInt::pow10(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? mantissa / Rational(scale) : mantissa * Rational(scale);
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out);
  file << payload;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw std::invalid_argument("format '" + cfg.format + "' is not valid for this command");
}

int resolve_digits(const RunConfig& cfg, int fallback) {
  if (cfg.digits > 0) return cfg.digits;
  return fallback;
}

svg::Series sweep_series(const SweepSeries& series) {
  svg::Series s;
  s.label = std::string(family_kind_name(series.family));
  for (const SweepPoint& p : series.points) {
    s.points.emplace_back(static_cast<double>(p.L), p.variance.to_double());
  }
  return s;
}

int cmd_fib(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  Seq s = fib_seq(cfg.L);
  write_output(cfg, cfg.format == "csv" ? io::seq_to_csv(s) : io::seq_to_json(s));
  return 0;
}

int cmd_conv(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  ConvResult result = [&] {
    if (!cfg.a_path.empty()) {
      Seq a = io::seq_from_csv(read_file(cfg.a_path));
      if (!cfg.b_path.empty()) return conv(a, io::seq_from_csv(read_file(cfg.b_path)));
      return self_conv(a);
    }
    if (cfg.L == 0) throw std::invalid_argument("conv: provide --L or --a");
    return self_conv(fib_seq(cfg.L));
  }();
  write_output(cfg, cfg.format == "csv" ? io::conv_to_csv(result) : io::conv_to_json(result));
  return 0;
}

int cmd_pmf(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  int digits = resolve_digits(cfg, env_default_digits());
  Pmf p = Pmf::from_seq(family_sequence(parse_family_kind(cfg.family), cfg.L));
  write_output(cfg, cfg.format == "csv" ? io::pmf_to_csv(p, digits, cfg.exact)
                                        : io::pmf_to_json(p, digits));
  return 0;
}

int cmd_variance(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  int digits = resolve_digits(cfg, env_default_digits());
  Pmf p = Pmf::from_seq(family_sequence(parse_family_kind(cfg.family), cfg.L));
  write_output(cfg, io::moment_report_to_json(moment_report(p, digits)));
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json", "svg"});
  int digits = resolve_digits(cfg, env_default_digits());
  SweepSeries series =
      variance_sweep(parse_family_kind(cfg.family), cfg.from, cfg.to, cfg.step, digits);
  if (cfg.format == "csv") {
    write_output(cfg, io::sweep_to_csv(series, cfg.exact));
  } else if (cfg.format == "json") {
    if (series.points.size() >= cfg.window + 1) {
      ConvergenceReport report =
          detect_convergence(series, parse_epsilon(cfg.epsilon), cfg.window);
      write_output(cfg, io::sweep_to_json(series, &report));
    } else {
      write_output(cfg, io::sweep_to_json(series, nullptr));
    }
  } else {
    write_output(cfg, svg::render_line_chart("Variance vs sequence length", "L", "variance",
                                             {sweep_series(series)}));
  }
  return 0;
}

int cmd_argmax_scan(const RunConfig& cfg) {
  require_format(cfg, {"csv", "svg"});
  auto rows = argmax_scan(cfg.from, cfg.to);
  if (cfg.format == "csv") {
    write_output(cfg, io::argmax_scan_to_csv(rows));
  } else {
    svg::Series s;
    s.label = "argmax(self conv)";
    for (const auto& [L, index] : rows) {
      s.points.emplace_back(static_cast<double>(L), static_cast<double>(index));
    }
    write_output(cfg, svg::render_line_chart("Index of the convolution maximum", "L",
                                             "argmax index", {s}));
  }
  for (const auto& [L, index] : rows) {
    if (index != 2 * L - 2) {
      throw ContractViolation("argmax law violated at L=" + std::to_string(L) +
                              ": index " + std::to_string(index));
    }
  }
  return 0;
}

int cmd_theorem_check(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  TheoremCheck check = theorem_check(cfg.L);
  write_output(cfg, io::theorem_to_json(cfg.L, check));
  if (!check.ok_prev || !check.ok_last) {
    throw ContractViolation("theorem-check failed at L=" + std::to_string(cfg.L));
  }
  return 0;
}

int cmd_constants(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  int digits = resolve_digits(cfg, env_default_digits());
  write_output(cfg, io::constants_to_json(constants_suite(cfg.L, digits)));
  return 0;
}

int cmd_viswanath(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  write_output(cfg, io::lyapunov_to_json(viswanath_estimate(cfg.n, cfg.seed)));
  return 0;
}

int cmd_gauss_mse(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  int digits = resolve_digits(cfg, 30);  // working precision, not display precision
  Pmf p = Pmf::from_seq(family_sequence(parse_family_kind(cfg.family), cfg.L));
  write_output(cfg, io::gauss_mse_to_json(gaussian_mse(p, digits), digits));
  return 0;
}

int cmd_ratio(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  write_output(cfg, io::ratio_to_json(cfg.n, ratio_convergence(cfg.n)));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Exact Fibonacci convolution distributions, their limit "
               "constants, and the random-recurrence growth rate"};
  app.name("seqconv");
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_format = [&](CLI::App* cmd, const char* preset) {
    cmd->add_option("--format", cfg.format, std::string("output format (default ") + preset + ")")
        ->capture_default_str();
    cmd->parse_complete_callback([&cfg, cmd, preset] {
      if (cmd->count("--format") == 0) cfg.format = preset;
    });
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "write output to this file instead of stdout");
  };
  auto add_digits = [&](CLI::App* cmd) {
    cmd->add_option("--digits", cfg.digits, "fractional digits to render")
        ->check(CLI::Range(1, 200));
  };
  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", cfg.family, "pipeline: single|self|rev|triple|sym")->required();
  };

  CLI::App* fib = app.add_subcommand("fib", "emit the Fibonacci sequence f[1..L]");
  fib->add_option("--L", cfg.L, "sequence length")->required()->check(CLI::PositiveNumber);
  add_format(fib, "csv");
  add_out(fib);

  CLI::App* conv_cmd = app.add_subcommand(
      "conv", "linear convolution: self-convolve fib_seq(L), or convolve CSV sequences");
  CLI::Option* conv_L =
      conv_cmd->add_option("--L", cfg.L, "self-convolve fib_seq(L)")->check(CLI::PositiveNumber);
  CLI::Option* conv_a = conv_cmd->add_option("--a", cfg.a_path, "first operand (sequence csv)");
  conv_cmd->add_option("--b", cfg.b_path, "second operand (sequence csv; defaults to --a)")
      ->needs(conv_a);
  conv_L->excludes(conv_a);
  add_format(conv_cmd, "csv");
  add_out(conv_cmd);

  CLI::App* pmf = app.add_subcommand("pmf", "exact pmf of a family pipeline at length L");
  add_family(pmf);
  pmf->add_option("--L", cfg.L, "length parameter")->required()->check(CLI::PositiveNumber);
  pmf->add_flag("--exact", cfg.exact, "include exact num/den columns in csv");
  add_digits(pmf);
  add_format(pmf, "csv");
  add_out(pmf);

  CLI::App* var = app.add_subcommand("variance", "exact mean/variance report for a family at L");
  add_family(var);
  var->add_option("--L", cfg.L, "length parameter")->required()->check(CLI::PositiveNumber);
  add_digits(var);
  add_format(var, "json");
  add_out(var);

  CLI::App* sweep = app.add_subcommand("sweep", "variance of a family across a range of lengths");
  add_family(sweep);
  sweep->add_option("--from", cfg.from, "first length")->required();
  sweep->add_option("--to", cfg.to, "last length")->required();
  sweep->add_option("--step", cfg.step, "length increment");
  sweep->add_option("--epsilon", cfg.epsilon, "smoothness threshold for convergence detection");
  sweep->add_option("--window", cfg.window, "trailing delta window for convergence detection");
  sweep->add_flag("--exact", cfg.exact, "include exact num/den columns in csv");
  add_digits(sweep);
  add_format(sweep, "csv");
  add_out(sweep);

  CLI::App* scan = app.add_subcommand("argmax-scan", "argmax of self_conv(fib_seq(L)) per L");
  scan->add_option("--from", cfg.from, "first length")->required();
  scan->add_option("--to", cfg.to, "last length")->required();
  add_format(scan, "csv");
  add_out(scan);

  CLI::App* theorem = app.add_subcommand(
      "theorem-check", "verify y[2L-3] < y[2L-2] and y[2L-1] < y[2L-2] exactly");
  theorem->add_option("--L", cfg.L, "length, L >= 4")->required();
  add_format(theorem, "json");
  add_out(theorem);

  CLI::App* constants = app.add_subcommand("constants", "all limit-constant targets at length L");
  constants->add_option("--L", cfg.L, "length, L >= 50")->required();
  add_digits(constants);
  add_format(constants, "json");
  add_out(constants);

  CLI::App* vis = app.add_subcommand("viswanath", "random-recurrence growth-rate estimate");
  vis->add_option("--n", cfg.n, "number of terms, n >= 1000")->required();
  vis->add_option("--seed", cfg.seed, "prng seed");
  add_format(vis, "json");
  add_out(vis);

  CLI::App* mse = app.add_subcommand("gauss-mse", "mean squared error against a sampled Gaussian");
  add_family(mse);
  mse->add_option("--L", cfg.L, "length parameter")->required()->check(CLI::PositiveNumber);
  add_digits(mse);
  add_format(mse, "json");
  add_out(mse);

  CLI::App* ratio = app.add_subcommand("ratio", "fib(n)/fib(n-1) at 15 digits");
  ratio->add_option("--n", cfg.n, "term index, n >= 2")->required();
  add_format(ratio, "json");
  add_out(ratio);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help goes to stdout, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run 'seqconv --help' for usage\n";
    return 1;
  }

  try {
    if (app.got_subcommand(fib)) return cmd_fib(cfg);
    if (app.got_subcommand(conv_cmd)) return cmd_conv(cfg);
    if (app.got_subcommand(pmf)) return cmd_pmf(cfg);
    if (app.got_subcommand(var)) return cmd_variance(cfg);
    if (app.got_subcommand(sweep)) return cmd_sweep(cfg);
    if (app.got_subcommand(scan)) return cmd_argmax_scan(cfg);
    if (app.got_subcommand(theorem)) return cmd_theorem_check(cfg);
    if (app.got_subcommand(constants)) return cmd_constants(cfg);
    if (app.got_subcommand(vis)) return cmd_viswanath(cfg);
    if (app.got_subcommand(mse)) return cmd_gauss_mse(cfg);
    if (app.got_subcommand(ratio)) return cmd_ratio(cfg);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no command\n";
  return 1;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace seqconv::cli
