// Copyright 2026 The pairbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface: build and inspect the paired-partition Bell
// expressions, certify the classical bound by exact enumeration, evaluate
// quantum values on GHZ-family states, calibrate the sign convention,
// optimize measurement settings, and emit scan data as CSV.
//
// Exit codes: 0 success, 1 contract error (bad input), 2 assertion failure
// (calibration ambiguity, non-convergence, proportionality failure).

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pairbell/bell_expression.hpp"
#include "pairbell/entanglement.hpp"
#include "pairbell/io.hpp"
#include "pairbell/lhv.hpp"
#include "pairbell/optimize.hpp"
#include "pairbell/quantum.hpp"
#include "pairbell/settings.hpp"
#include "pairbell/state_vector.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pairbell;

int resolve_sign(const std::string& text, int site_count) {
  if (text == "auto") {
    return canonical_sign(site_count);
  }
  if (text == "+1" || text == "1") {
    return 1;
  }
  if (text == "-1") {
    return -1;
  }
  throw std::invalid_argument("--sign must be auto, +1 or -1, got \"" + text + "\"");
}

std::vector<double> parse_angles(const std::string& text, std::size_t count,
                                 const std::string& what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(piece, &used));
      if (used != piece.size()) {
        throw std::invalid_argument(piece);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": bad angle \"" + piece + "\"");
    }
  }
  if (values.size() != count) {
    throw std::invalid_argument(what + ": expected " + std::to_string(count) +
                                " comma-separated angles");
  }
  return values;
}

// ghz | gghz:alpha | slice:a,b,c,d -> state plus a printable description.
std::pair<StateVector, std::string> parse_state(const std::string& spec, int site_count) {
  if (spec == "ghz") {
    if (site_count < 2) {
      throw std::invalid_argument("--state ghz requires --n");
    }
    return {make_ghz(site_count), "ghz"};
  }
  if (spec.rfind("gghz:", 0) == 0) {
    if (site_count < 2) {
      throw std::invalid_argument("--state gghz:<alpha> requires --n");
    }
    const double alpha = parse_angles(spec.substr(5), 1, "--state gghz")[0];
    return {make_gghz(site_count, alpha), spec};
  }
  if (spec.rfind("slice:", 0) == 0) {
    if (site_count >= 2 && site_count != 4) {
      throw std::invalid_argument("--state slice implies --n 4");
    }
    const std::vector<double> a = parse_angles(spec.substr(6), 4, "--state slice");
    return {make_slice(a[0], a[1], a[2], a[3]), spec};
  }
  throw std::invalid_argument("--state must be ghz, gghz:<alpha> or slice:<a,b,c,d>, got \"" +
                              spec + "\"");
}

MeasurementSettings load_settings(const std::string& spec, int site_count) {
  if (spec == "canonical") {
    return canonical_settings(site_count);
  }
  std::ifstream in(spec);
  if (!in) {
    throw std::invalid_argument("cannot open settings file \"" + spec + "\"");
  }
  nlohmann::json j;
  in >> j;
  MeasurementSettings settings = settings_from_json(j);
  if (settings.site_count != site_count) {
    throw std::invalid_argument("settings file has " + std::to_string(settings.site_count) +
                                " sites, expected " + std::to_string(site_count));
  }
  return settings;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot open output file \"" + path + "\"");
  }
  out << text;
}

struct BuildArgs {
  int n = 0;
  std::string sign = "auto";
  int leader = 1;
  bool json = false;
  std::string out;
};

int run_build(const BuildArgs& args) {
  const int sign = resolve_sign(args.sign, args.n);
  const BellExpression expr = BellExpression::build(args.n, sign, args.leader);
  if (args.json || !args.out.empty()) {
    write_or_print(expression_to_json(expr).dump(2) + "\n", args.out);
    return 0;
  }
  std::cout << "n             " << expr.site_count() << "\n"
            << "sign          " << (expr.sign() > 0 ? "+1" : "-1") << "\n";
  if (expr.site_count() % 2 != 0) {
    std::cout << "leader        " << expr.leader() << "\n";
  }
  std::cout << "normalization 2^" << expr.normalization_log2() << "\n"
            << "terms         " << expr.terms().size() << "\n";
  for (const CorrelationTerm& term : expr.terms()) {
    std::cout << (term.coeff_sign > 0 ? " +" : " -");
    for (std::uint8_t c : term.choice) {
      std::cout << ' ' << static_cast<int>(c);
    }
    std::cout << '\n';
  }
  return 0;
}

struct LhvArgs {
  int n = 0;
  std::string sign = "auto";
  int cap = 12;
  unsigned threads = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_lhv_bound(const LhvArgs& args) {
  const int sign = resolve_sign(args.sign, args.n);
  const BellExpression expr = BellExpression::build(args.n, sign);
  const LhvBoundResult result =
      args.samples > 0
          ? lhv_max_sampled(expr, args.samples, args.seed)
          : lhv_max(expr, {.enumeration_cap = args.cap, .threads = args.threads});
  if (args.json) {
    ordered_json j;
    j["n"] = args.n;
    j["sign"] = sign;
    j["max"] = result.max_value;
    j["witness_index"] = result.witness_index;
    j["exhaustive"] = result.exhaustive;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "max = " << format_value(result.max_value) << " ("
            << (result.exhaustive ? "exhaustive, " : "sampled, ")
            << result.strategies_evaluated << " strategies)\n"
            << "witness index = " << result.witness_index << "\n";
  return 0;
}

struct ExpectArgs {
  int n = 0;
  std::string sign = "auto";
  int leader = 1;
  std::string state;
  std::string settings = "canonical";
  std::string expr_path;
  bool json = false;
};

int run_expect(const ExpectArgs& args) {
  std::optional<BellExpression> expr;
  if (!args.expr_path.empty()) {
    std::ifstream in(args.expr_path);
    if (!in) {
      throw std::invalid_argument("cannot open expression file \"" + args.expr_path + "\"");
    }
    nlohmann::json j;
    in >> j;
    expr = expression_from_json(j);
    if (args.n >= 2 && args.n != expr->site_count()) {
      throw std::invalid_argument("--n disagrees with the expression file");
    }
  } else {
    if (args.n < 2) {
      throw std::invalid_argument("expect: need --n (or --expr)");
    }
    expr = BellExpression::build(args.n, resolve_sign(args.sign, args.n), args.leader);
  }
  const int n = expr->site_count();
  const auto [state, state_name] = parse_state(args.state, n);
  const MeasurementSettings settings = load_settings(args.settings, n);
  const double value = expectation(*expr, settings, state);
  if (args.json) {
    ordered_json j;
    j["n"] = n;
    j["sign"] = expr->sign();
    j["state"] = state_name;
    j["value"] = value;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << format_value(value) << "\n";
  return 0;
}

struct EigenArgs {
  int n = 0;
  std::string sign = "auto";
  std::string settings = "canonical";
  bool json = false;
};

int run_eigen(const EigenArgs& args) {
  const int sign = resolve_sign(args.sign, args.n);
  const BellExpression expr = BellExpression::build(args.n, sign);
  const PauliSum op = bell_pauli_expansion(expr, load_settings(args.settings, args.n));
  const double value = max_abs_eigenvalue(op);
  if (args.json) {
    ordered_json j;
    j["n"] = args.n;
    j["sign"] = sign;
    j["pauli_strings"] = op.terms().size();
    j["max_abs_eigenvalue"] = value;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "pauli strings      = " << op.terms().size() << "\n"
            << "max |eigenvalue|   = " << format_value(value) << "\n";
  return 0;
}

struct OptimizeArgs {
  int n = 0;
  std::string sign = "auto";
  std::string state;
  std::string mode = "planar";
  int restarts = 8;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool json = false;
};

int run_optimize(const OptimizeArgs& args) {
  const int sign = resolve_sign(args.sign, args.n);
  const BellExpression expr = BellExpression::build(args.n, sign);
  const auto [state, state_name] = parse_state(args.state, args.n);
  OptimizeOptions options;
  if (args.mode == "planar") {
    options.mode = SettingsMode::planar;
  } else if (args.mode == "bloch") {
    options.mode = SettingsMode::bloch;
  } else {
    throw std::invalid_argument("--mode must be planar or bloch, got \"" + args.mode + "\"");
  }
  options.restarts = args.restarts;
  options.seed = args.seed;
  options.threads = args.threads;
  const OptimizeResult result = optimize_settings(expr, state, options);
  if (args.json) {
    ordered_json j;
    j["n"] = args.n;
    j["sign"] = sign;
    j["state"] = state_name;
    j["mode"] = args.mode;
    j["restarts"] = args.restarts;
    j["seed"] = args.seed;
    j["value"] = result.value;
    j["best_restart"] = result.best_restart;
    j["evaluations"] = result.evaluations;
    j["settings"] = settings_to_json(result.settings);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "value = " << format_value(result.value) << " (restart " << result.best_restart
            << ", " << result.evaluations << " evaluations)\n";
  for (int site = 0; site < result.settings.site_count; ++site) {
    for (int k = 0; k < 2; ++k) {
      const Vec3& v = result.settings.vectors[static_cast<std::size_t>(site)]
                                             [static_cast<std::size_t>(k)];
      std::cout << "a_" << site + 1 << "_" << k + 1 << " = (" << format_value(v[0]) << ", "
                << format_value(v[1]) << ", " << format_value(v[2]) << ")\n";
    }
  }
  return 0;
}

struct CalibrateArgs {
  int n = 0;
  bool json = false;
};

int run_calibrate(const CalibrateArgs& args) {
  const int sign = calibrate_sign(args.n);
  if (args.json) {
    ordered_json j;
    j["n"] = args.n;
    j["sign"] = sign;
    j["matches_closed_form"] = sign == canonical_sign(args.n);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "calibrated sign = " << (sign > 0 ? "+1" : "-1") << "\n";
  return 0;
}

struct ScanArgs {
  int n = 0;
  int points = 181;
  double alpha_max = std::numbers::pi / 2;
  std::string csv;
};

int run_scan(const ScanArgs& args) {
  if (args.points < 2) {
    throw std::invalid_argument("scan: need at least 2 points");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(args.points));
  for (int k = 0; k < args.points; ++k) {
    grid.push_back(args.alpha_max * k / (args.points - 1));
  }
  const std::vector<ScanRecord> records = scan_alpha(args.n, grid);
  write_or_print(scan_csv(args.n, records), args.csv);
  return 0;
}

struct TangleArgs {
  int n = 0;
  std::string state;
  bool json = false;
};

int run_tangle(const TangleArgs& args) {
  const auto [state, state_name] = parse_state(args.state, args.n);
  const double tau = n_tangle(state);
  std::optional<TangleRelation> relation;
  if (state.qubit_count() == 4) {
    relation = nonlocality_tangle_relation(state);
  }
  if (args.json) {
    ordered_json j;
    j["n"] = state.qubit_count();
    j["state"] = state_name;
    j["tau"] = tau;
    if (relation) {
      j["bell_value"] = relation->bell_value;
      j["two_sqrt_tau"] = relation->two_sqrt_tau;
      j["residual"] = relation->residual;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "tau = " << format_value(tau) << "\n";
  if (relation) {
    std::cout << "bell_value   = " << format_value(relation->bell_value) << "\n"
              << "two_sqrt_tau = " << format_value(relation->two_sqrt_tau) << "\n"
              << "residual     = " << format_value(relation->residual) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scalable multiqubit Bell inequalities from paired CHSH partitions"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "Expand a Bell expression into terms");
  build->add_option("--n", build_args.n, "Number of sites (>= 2)")->required();
  build->add_option("--sign", build_args.sign, "auto, +1 or -1 (default auto)");
  build->add_option("--leader", build_args.leader, "Unpaired site for odd n (default 1)");
  build->add_flag("--json", build_args.json, "Emit the JSON schema");
  build->add_option("--out", build_args.out, "Write JSON to a file instead of stdout");

  LhvArgs lhv_args;
  CLI::App* lhv = app.add_subcommand("lhv-bound",
                                     "Certify the classical bound by exact enumeration");
  lhv->add_option("--n", lhv_args.n, "Number of sites (>= 2)")->required();
  lhv->add_option("--sign", lhv_args.sign, "auto, +1 or -1 (default auto)");
  lhv->add_option("--cap", lhv_args.cap, "Enumeration cap on n (default 12)");
  lhv->add_option("--threads", lhv_args.threads, "Worker threads (default: all cores)");
  lhv->add_option("--samples", lhv_args.samples,
                  "Sample this many strategies instead of enumerating (lower bound)");
  lhv->add_option("--seed", lhv_args.seed, "Sampling seed (default 0)");
  lhv->add_flag("--json", lhv_args.json, "Emit JSON");

  ExpectArgs expect_args;
  CLI::App* expect = app.add_subcommand("expect", "Quantum value on a GHZ-family state");
  expect->add_option("--n", expect_args.n, "Number of sites (>= 2)");
  CLI::Option* expect_sign =
      expect->add_option("--sign", expect_args.sign, "auto, +1 or -1 (default auto)");
  CLI::Option* expect_leader =
      expect->add_option("--leader", expect_args.leader, "Unpaired site for odd n (default 1)");
  expect->add_option("--state", expect_args.state, "ghz | gghz:<alpha> | slice:<a,b,c,d>")
      ->required();
  expect->add_option("--settings", expect_args.settings,
                     "canonical or a JSON settings file (default canonical)");
  expect->add_option("--expr", expect_args.expr_path,
                     "Load the expression from a JSON file (instead of --n/--sign)")
      ->excludes(expect_sign)
      ->excludes(expect_leader);
  expect->add_flag("--json", expect_args.json, "Emit JSON");

  EigenArgs eigen_args;
  CLI::App* eigen = app.add_subcommand("eigen",
                                       "Extremal eigenvalue of the Bell operator");
  eigen->add_option("--n", eigen_args.n, "Number of sites (>= 2)")->required();
  eigen->add_option("--sign", eigen_args.sign, "auto, +1 or -1 (default auto)");
  eigen->add_option("--settings", eigen_args.settings,
                    "canonical or a JSON settings file (default canonical)");
  eigen->add_flag("--json", eigen_args.json, "Emit JSON");

  OptimizeArgs optimize_args;
  CLI::App* optimize = app.add_subcommand("optimize",
                                          "Search measurement settings for the best value");
  optimize->add_option("--n", optimize_args.n, "Number of sites (>= 2)")->required();
  optimize->add_option("--sign", optimize_args.sign, "auto, +1 or -1 (default auto)");
  optimize->add_option("--state", optimize_args.state, "ghz | gghz:<alpha> | slice:<a,b,c,d>")
      ->required();
  optimize->add_option("--mode", optimize_args.mode, "planar or bloch (default planar)");
  optimize->add_option("--restarts", optimize_args.restarts, "Restart count (default 8)");
  optimize->add_option("--seed", optimize_args.seed, "Seed for restart draws (default 0)");
  optimize->add_option("--threads", optimize_args.threads,
                       "Worker threads (default: all cores)");
  optimize->add_flag("--json", optimize_args.json, "Emit JSON");

  CalibrateArgs calibrate_args;
  CLI::App* calibrate = app.add_subcommand("calibrate",
                                           "Pick the sign that attains the GHZ value");
  calibrate->add_option("--n", calibrate_args.n, "Number of sites (>= 2)")->required();
  calibrate->add_flag("--json", calibrate_args.json, "Emit JSON");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "Sweep GGHZ(alpha) and emit CSV");
  scan->add_option("--n", scan_args.n, "Number of sites (>= 2)")->required();
  scan->add_option("--points", scan_args.points, "Grid size (default 181)");
  scan->add_option("--alpha-max", scan_args.alpha_max, "Grid end (default pi/2)");
  scan->add_option("--csv", scan_args.csv, "Write CSV here (default stdout)");

  TangleArgs tangle_args;
  CLI::App* tangle = app.add_subcommand("tangle", "n-tangle of a GHZ-family state");
  tangle->add_option("--n", tangle_args.n, "Number of sites (even)");
  tangle->add_option("--state", tangle_args.state, "ghz | gghz:<alpha> | slice:<a,b,c,d>")
      ->required();
  tangle->add_flag("--json", tangle_args.json, "Emit JSON");

  try {
    app.parse(argc, argv);
    if (*build) return run_build(build_args);
    if (*lhv) return run_lhv_bound(lhv_args);
    if (*expect) return run_expect(expect_args);
    if (*eigen) return run_eigen(eigen_args);
    if (*optimize) return run_optimize(optimize_args);
    if (*calibrate) return run_calibrate(calibrate_args);
    if (*scan) return run_scan(scan_args);
    if (*tangle) return run_tangle(tangle_args);
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
