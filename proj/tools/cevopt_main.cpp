// Command-line front end: every computation in the core library behind one
// binary with text, JSON, and CSV output. JSON is the stable machine
// interface; all floating-point output uses shortest round-trip formatting so
// repeated runs are byte-identical.

#include "cevopt/cevopt.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using cevopt::BarycentricPoint;
using cevopt::CevianConfig;
using cevopt::Rational;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double value) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

// Coefficients that fit a JSON integer stay numeric; anything larger is
// rendered as a decimal string to avoid silent precision loss.
ordered_json json_int(const cevopt::Int& value) {
  static const cevopt::Int lo = cevopt::Int(std::numeric_limits<long long>::min());
  static const cevopt::Int hi = cevopt::Int(std::numeric_limits<long long>::max());
  if (value >= lo && value <= hi) return static_cast<long long>(value);
  return value.str();
}

struct LambdaInput {
  bool exact = false;
  std::vector<Rational> rationals;  // filled in exact mode
  std::vector<double> values;       // always filled
  std::vector<std::string> echo;    // canonical rendering for the envelope
};

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

// Rational tokens keep the whole vector on the exact path; any decimal token
// switches everything to binary64.
LambdaInput parse_lambda(const std::string& text) {
  LambdaInput out;
  std::vector<std::string> tokens = split(text, ',');
  for (auto& token : tokens) token = trim(token);

  out.exact = true;
  for (const auto& token : tokens) {
    try {
      out.rationals.push_back(cevopt::parse_fraction(token));
    } catch (const std::invalid_argument&) {
      out.exact = false;
      out.rationals.clear();
      break;
    }
  }

  if (out.exact) {
    for (const auto& r : out.rationals) {
      out.values.push_back(static_cast<double>(r));
      out.echo.push_back(cevopt::to_fraction_string(r));
    }
    return out;
  }

  for (const auto& token : tokens) {
    double value = 0.0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec == std::errc{} && result.ptr == token.data() + token.size() &&
        std::isfinite(value)) {
      out.values.push_back(value);
      continue;
    }
    try {
      out.values.push_back(static_cast<double>(cevopt::parse_fraction(token)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse coordinate '" + token + "'");
    }
  }
  for (const double v : out.values) out.echo.push_back(fmt(v));
  return out;
}

ordered_json make_envelope(const std::string& command, ordered_json inputs, ordered_json results,
                           ordered_json diagnostics = ordered_json::object()) {
  ordered_json envelope;
  envelope["command"] = command;
  envelope["version"] = cevopt::kVersion;
  envelope["inputs"] = std::move(inputs);
  envelope["results"] = std::move(results);
  envelope["diagnostics"] = std::move(diagnostics);
  return envelope;
}

void emit_json(const ordered_json& envelope) { std::cout << envelope.dump(2) << "\n"; }

// ---------------------------------------------------------------- ratio ----

int run_ratio(const std::string& lambda_text, int index, bool all, const std::string& format) {
  const LambdaInput lambda = parse_lambda(lambda_text);

  std::vector<std::size_t> indices;
  if (all) {
    for (std::size_t i = 0; i < lambda.values.size(); ++i) indices.push_back(i);
  } else {
    if (index < 1 || static_cast<std::size_t>(index) > lambda.values.size()) {
      throw std::invalid_argument("--index is 1-based and must be at most the coordinate count");
    }
    indices.push_back(static_cast<std::size_t>(index - 1));
  }

  ordered_json entries = ordered_json::array();
  std::vector<std::string> lines;
  if (lambda.exact) {
    BarycentricPoint<Rational> point(lambda.rationals);
    for (const std::size_t i : indices) {
      const Rational product = cevopt::volume_ratio_product(point, i);
      const Rational det = cevopt::volume_ratio_determinant(point, i);
      const Rational discrepancy = cevopt::scalar_traits<Rational>::abs(det - product);
      entries.push_back({{"index", i + 1},
                         {"product", cevopt::to_fraction_string(product)},
                         {"determinant", cevopt::to_fraction_string(det)},
                         {"discrepancy", cevopt::to_fraction_string(discrepancy)}});
      lines.push_back("index " + std::to_string(i + 1) + ": product " +
                      cevopt::to_fraction_string(product) + ", determinant " +
                      cevopt::to_fraction_string(det) + ", discrepancy " +
                      cevopt::to_fraction_string(discrepancy));
    }
  } else {
    BarycentricPoint<double> point(lambda.values);
    for (const std::size_t i : indices) {
      const double product = cevopt::volume_ratio_product(point, i);
      const double det = cevopt::volume_ratio_determinant(point, i);
      const double discrepancy = std::fabs(det - product);
      entries.push_back({{"index", i + 1},
                         {"product", product},
                         {"determinant", det},
                         {"discrepancy", discrepancy}});
      lines.push_back("index " + std::to_string(i + 1) + ": product " + fmt(product) +
                      ", determinant " + fmt(det) + ", discrepancy " + fmt(discrepancy));
    }
  }

  if (format == "json") {
    ordered_json inputs;
    inputs["lambda"] = lambda.echo;
    inputs["mode"] = lambda.exact ? "exact" : "float";
    if (all) {
      inputs["index"] = nullptr;
    } else {
      inputs["index"] = index;
    }
    emit_json(make_envelope("ratio", std::move(inputs), {{"entries", std::move(entries)}}));
  } else {
    std::cout << "mode " << (lambda.exact ? "exact" : "float") << "\n";
    for (const auto& line : lines) std::cout << line << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- optimum ----

int run_optimum(int n, int k, double tol, const std::string& format) {
  const CevianConfig config(n, k);
  const cevopt::OptimumResult result = cevopt::solve_optimum(config, tol);
  const cevopt::CubicPoly poly = cevopt::critical_cubic(config);

  if (format == "json") {
    ordered_json results;
    results["theta"] = result.theta;
    results["theta_trig"] = result.theta_trig;
    results["max_ratio"] = result.max_ratio;
    results["equality_point"] = result.equality_point.coords();
    results["q"] = ordered_json::array(
        {json_int(poly.a3), json_int(poly.a2), json_int(poly.a1), json_int(poly.a0)});
    results["residual"] = result.residual;
    results["bracket"] = ordered_json::array({result.bracket_lo, result.bracket_hi});
    results["method"] = "newton-bisection";
    emit_json(make_envelope(
        "optimum", {{"n", n}, {"k", k}, {"m", config.m()}, {"tol", tol}}, std::move(results)));
  } else if (format == "csv") {
    std::cout << "n,k,m,theta,theta_trig,max_ratio,residual\n";
    std::cout << n << ',' << k << ',' << config.m() << ',' << fmt(result.theta) << ','
              << fmt(result.theta_trig) << ',' << fmt(result.max_ratio) << ','
              << fmt(result.residual) << "\n";
  } else {
    std::cout << "n " << n << "\nk " << k << "\nm " << config.m() << "\n";
    std::cout << "theta " << fmt(result.theta) << "\n";
    std::cout << "theta_trig " << fmt(result.theta_trig) << "\n";
    std::cout << "max_ratio " << fmt(result.max_ratio) << "\n";
    std::cout << "equality_point";
    for (const double c : result.equality_point.coords()) std::cout << ' ' << fmt(c);
    std::cout << "\n";
    std::cout << "q " << poly.a3 << ' ' << poly.a2 << ' ' << poly.a1 << ' ' << poly.a0 << "\n";
    std::cout << "residual " << fmt(result.residual) << "\n";
    std::cout << "bracket " << fmt(result.bracket_lo) << ' ' << fmt(result.bracket_hi) << "\n";
    std::cout << "method newton-bisection\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

struct Check {
  std::string name;
  double value;
  double threshold;
  bool pass;
};

int run_verify(int n, int k, int restarts, int trials, std::uint64_t seed,
               const std::string& format) {
  const CevianConfig config(n, k);
  if (restarts < 1) throw std::invalid_argument("--restarts must be positive");
  if (trials < 1) throw std::invalid_argument("--trials must be positive");

  const cevopt::OracleReport oracle = cevopt::maximize_direct(config, restarts, seed);

  // Geometric trials draw from a distinct stream index range so they never
  // overlap the oracle's per-restart streams.
  const double floor = std::min(0.05, 0.5 / static_cast<double>(n + 1));
  double max_rel_measure = 0.0;
  double max_rel_determinant = 0.0;
  for (int t = 0; t < trials; ++t) {
    cevopt::Rng rng = cevopt::Rng::stream(seed, (1ULL << 32) + static_cast<std::uint64_t>(t));
    const cevopt::CartesianSimplex simplex = cevopt::CartesianSimplex::random(n, rng);
    const BarycentricPoint<double> point(
        cevopt::uniform_interior_point(rng, static_cast<std::size_t>(n) + 1, floor));
    for (std::size_t i = 0; i < point.size(); ++i) {
      const double product = cevopt::volume_ratio_product(point, i);
      const double det = cevopt::volume_ratio_determinant(point, i);
      const double measured = cevopt::measure_geometric(simplex, point, i);
      max_rel_measure = std::max(max_rel_measure, std::fabs(measured - product) / product);
      max_rel_determinant = std::max(max_rel_determinant, std::fabs(det - product) / product);
    }
  }

  const std::vector<Check> checks = {
      {"oracle_agreement", oracle.agreement_abs, 1e-6, oracle.agreement_abs <= 1e-6},
      {"argmax_distance", oracle.argmax_distance, 1e-4, oracle.argmax_distance <= 1e-4},
      {"geometry_measure", max_rel_measure, 1e-9, max_rel_measure <= 1e-9},
      {"formula_agreement", max_rel_determinant, 1e-12, max_rel_determinant <= 1e-12},
  };
  bool pass = true;
  for (const Check& c : checks) pass = pass && c.pass;

  if (format == "json") {
    ordered_json results;
    results["oracle"] = {{"best_value", oracle.best_value},
                         {"best_point", oracle.best_point.coords()},
                         {"restarts", oracle.restarts},
                         {"agreement_abs", oracle.agreement_abs},
                         {"argmax_distance", oracle.argmax_distance},
                         {"seed", oracle.seed}};
    results["geometry"] = {{"trials", trials},
                           {"interior_floor", floor},
                           {"max_rel_measure", max_rel_measure},
                           {"max_rel_determinant", max_rel_determinant}};
    ordered_json check_list = ordered_json::array();
    for (const Check& c : checks) {
      check_list.push_back(
          {{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
    }
    results["checks"] = std::move(check_list);
    results["pass"] = pass;
    emit_json(make_envelope(
        "verify",
        {{"n", n}, {"k", k}, {"restarts", restarts}, {"trials", trials}, {"seed", seed}},
        std::move(results)));
  } else {
    std::cout << "oracle best_value " << fmt(oracle.best_value) << "\n";
    std::cout << "oracle agreement_abs " << fmt(oracle.agreement_abs) << "\n";
    std::cout << "oracle argmax_distance " << fmt(oracle.argmax_distance) << "\n";
    std::cout << "oracle restarts " << oracle.restarts << "\n";
    std::cout << "geometry trials " << trials << "\n";
    std::cout << "geometry max_rel_measure " << fmt(max_rel_measure) << "\n";
    std::cout << "geometry max_rel_determinant " << fmt(max_rel_determinant) << "\n";
    for (const Check& c : checks) {
      std::cout << "check " << c.name << ' ' << (c.pass ? "pass" : "FAIL") << " (" << fmt(c.value)
                << " vs " << fmt(c.threshold) << ")\n";
    }
    std::cout << "result " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- curve ----

int run_curve(int n, int k, int samples, const std::string& format) {
  const CevianConfig config(n, k);
  if (samples < 1) throw std::invalid_argument("--samples must be positive");
  const cevopt::CubicPoly poly = cevopt::critical_cubic(config);

  // Midpoint sampling keeps every x strictly inside (0, 1/k) while staying
  // uniform, so the boundary rows carry near-zero f without touching the
  // domain endpoints.
  const auto sample_x = [&](int i) {
    return (2.0 * i + 1.0) / (2.0 * samples) / static_cast<double>(k);
  };

  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < samples; ++i) {
      const double x = sample_x(i);
      rows.push_back(ordered_json::array({x, cevopt::reduced_objective(x, config),
                                          cevopt::reduced_derivative(x, config),
                                          cevopt::eval(poly, x)}));
    }
    ordered_json results;
    results["header"] = ordered_json::array({"x", "f", "fprime", "q"});
    results["rows"] = std::move(rows);
    emit_json(make_envelope("curve", {{"n", n}, {"k", k}, {"samples", samples}},
                            std::move(results)));
  } else {
    std::cout << "x,f,fprime,q\n";
    for (int i = 0; i < samples; ++i) {
      const double x = sample_x(i);
      std::cout << fmt(x) << ',' << fmt(cevopt::reduced_objective(x, config)) << ','
                << fmt(cevopt::reduced_derivative(x, config)) << ',' << fmt(cevopt::eval(poly, x))
                << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- search ----

int run_search(long long k_max, long long m_max, const std::string& checkpoint,
               const std::string& format) {
  const cevopt::SearchReport report = cevopt::search_grid(k_max, m_max, checkpoint);

  const auto hit_json = [](const cevopt::SearchHit& hit) {
    return ordered_json{{"k", hit.k},
                        {"m", hit.m},
                        {"zero", cevopt::to_fraction_string(hit.zero)},
                        {"in_interval", hit.in_interval}};
  };

  if (format == "json") {
    ordered_json cells = ordered_json::array();
    for (const cevopt::CellResult& cell : report.cells) {
      ordered_json zeros = ordered_json::array();
      for (const Rational& zero : cell.zeros) zeros.push_back(cevopt::to_fraction_string(zero));
      cells.push_back({{"k", cell.k},
                       {"m", cell.m},
                       {"status", std::string(cevopt::to_string(cell.status))},
                       {"zeros", std::move(zeros)},
                       {"candidates_tested", cell.candidates_tested},
                       {"diagnostic", cell.diagnostic}});
    }
    ordered_json hits = ordered_json::array();
    for (const cevopt::SearchHit& hit : report.hits) hits.push_back(hit_json(hit));
    ordered_json open_hits = ordered_json::array();
    for (const cevopt::SearchHit& hit : report.open_question_hits) {
      open_hits.push_back(hit_json(hit));
    }
    ordered_json results;
    results["k_max"] = report.k_max;
    results["m_max"] = report.m_max;
    results["candidates_tested"] = report.candidates_tested;
    results["cells"] = std::move(cells);
    results["hits"] = std::move(hits);
    results["open_question_hits"] = std::move(open_hits);
    ordered_json inputs;
    inputs["k_max"] = k_max;
    inputs["m_max"] = m_max;
    if (checkpoint.empty()) {
      inputs["checkpoint"] = nullptr;
    } else {
      inputs["checkpoint"] = checkpoint;
    }
    emit_json(make_envelope("search", std::move(inputs), std::move(results)));
  } else {
    std::cout << "k_max " << report.k_max << "\n";
    std::cout << "m_max " << report.m_max << "\n";
    std::cout << "cells " << report.cells.size() << "\n";
    std::cout << "candidates_tested " << report.candidates_tested << "\n";
    std::cout << "hits " << report.hits.size() << "\n";
    for (const cevopt::SearchHit& hit : report.hits) {
      std::cout << "hit k=" << hit.k << " m=" << hit.m
                << " zero=" << cevopt::to_fraction_string(hit.zero)
                << (hit.in_interval ? " inside" : " outside") << "\n";
    }
    std::cout << "open_question_hits " << report.open_question_hits.size() << "\n";
    for (const cevopt::SearchHit& hit : report.open_question_hits) {
      std::cout << "open_question_hit k=" << hit.k << " m=" << hit.m
                << " zero=" << cevopt::to_fraction_string(hit.zero)
                << (hit.in_interval ? " inside" : " outside") << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- table ----

int run_table(int n_max, const std::string& format) {
  if (n_max < 3) throw std::invalid_argument("--n-max must be at least 3");

  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = 3; n <= n_max; ++n) {
      for (int k = 2; k < n; ++k) {
        const CevianConfig config(n, k);
        const cevopt::OptimumResult result = cevopt::solve_optimum(config);
        rows.push_back({{"n", n},
                        {"k", k},
                        {"m", config.m()},
                        {"theta", result.theta},
                        {"max_ratio", result.max_ratio},
                        {"residual", result.residual}});
      }
    }
    emit_json(make_envelope("table", {{"n_max", n_max}}, {{"rows", std::move(rows)}}));
  } else {
    std::cout << "n,k,m,theta,max_ratio,residual\n";
    for (int n = 3; n <= n_max; ++n) {
      for (int k = 2; k < n; ++k) {
        const CevianConfig config(n, k);
        const cevopt::OptimumResult result = cevopt::solve_optimum(config);
        std::cout << n << ',' << k << ',' << config.m() << ',' << fmt(result.theta) << ','
                  << fmt(result.max_ratio) << ',' << fmt(result.residual) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cevian sub-simplex volume ratios: evaluation, optimization, exact search"};
  app.require_subcommand(1);

  std::string lambda_text;
  int ratio_index = 0;
  bool ratio_all = false;
  std::string ratio_format = "text";
  auto* ratio = app.add_subcommand("ratio", "volume ratios of an interior point by both formulas");
  ratio->add_option("--lambda", lambda_text, "comma-separated barycentric coordinates")
      ->required();
  auto* index_opt = ratio->add_option("--index", ratio_index, "1-based vertex index");
  auto* all_opt = ratio->add_flag("--all", ratio_all, "emit every vertex");
  index_opt->excludes(all_opt);
  ratio->add_option("--format", ratio_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int opt_n = 0;
  int opt_k = 0;
  double opt_tol = 1e-14;
  std::string opt_format = "text";
  auto* optimum = app.add_subcommand("optimum", "maximize the k-block ratio sum in closed form");
  optimum->add_option("--n", opt_n, "simplex dimension")->required();
  optimum->add_option("--k", opt_k, "front block size, 1 < k < n")->required();
  optimum->add_option("--tol", opt_tol, "root isolation tolerance");
  optimum->add_option("--format", opt_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int verify_n = 0;
  int verify_k = 0;
  int verify_restarts = 64;
  int verify_trials = 1000;
  std::uint64_t verify_seed = 42;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "check the optimum against independent oracles");
  verify->add_option("--n", verify_n, "simplex dimension")->required();
  verify->add_option("--k", verify_k, "front block size, 1 < k < n")->required();
  verify->add_option("--restarts", verify_restarts, "direct maximizer restarts");
  verify->add_option("--trials", verify_trials, "geometric trial count");
  verify->add_option("--seed", verify_seed, "master seed");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int curve_n = 0;
  int curve_k = 0;
  int curve_samples = 512;
  std::string curve_format = "csv";
  auto* curve = app.add_subcommand("curve", "sample the reduced objective for plotting");
  curve->add_option("--n", curve_n, "simplex dimension")->required();
  curve->add_option("--k", curve_k, "front block size, 1 < k < n")->required();
  curve->add_option("--samples", curve_samples, "row count");
  curve->add_option("--format", curve_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  long long search_k_max = 0;
  long long search_m_max = 0;
  std::string search_checkpoint;
  std::string search_format = "text";
  auto* search = app.add_subcommand("search", "exhaustive rational-zero scan of the cubic grid");
  search->add_option("--k-max", search_k_max, "largest front block size")->required();
  search->add_option("--m-max", search_m_max, "largest tail block size")->required();
  search->add_option("--checkpoint", search_checkpoint, "resume file path");
  search->add_option("--format", search_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int table_n_max = 0;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "optimum sweep over all admissible (n, k)");
  table->add_option("--n-max", table_n_max, "largest simplex dimension")->required();
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ratio->parsed()) {
      if (!ratio_all && index_opt->count() == 0) {
        std::cerr << "error: ratio needs either --index or --all\n";
        return 2;
      }
      return run_ratio(lambda_text, ratio_index, ratio_all, ratio_format);
    }
    if (optimum->parsed()) return run_optimum(opt_n, opt_k, opt_tol, opt_format);
    if (verify->parsed()) {
      return run_verify(verify_n, verify_k, verify_restarts, verify_trials, verify_seed,
                        verify_format);
    }
    if (curve->parsed()) return run_curve(curve_n, curve_k, curve_samples, curve_format);
    if (search->parsed()) return run_search(search_k_max, search_m_max, search_checkpoint,
                                            search_format);
    if (table->parsed()) return run_table(table_n_max, table_format);
    std::cerr << "error: no command\n";
    return 2;
  } catch (const cevopt::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
