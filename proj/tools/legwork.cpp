// Command-line front end: parameter sweeps over the drive angle, violation-
// domain extension summaries, detector-inefficiency scans, and classical
// hidden-variable fuzzing.  Outputs are CSV or JSON payloads (plus optional
// SVG charts) that are byte-deterministic functions of the configuration.

#include <algorithm>
#include <array>
#include <cinttypes>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svg_chart.hpp"

#include "legwork/hidden_variable.hpp"
#include "legwork/inefficiency.hpp"
#include "legwork/lg.hpp"
#include "legwork/parallel.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace legwork;

constexpr double kPi = std::numbers::pi;

/// Failures writing or reading payload files; mapped to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::string system = "qubit";
  double beta = 1.0;
  std::vector<double> alpha_list;  // empty: per-command default
  std::string alpha_range;         // "lo:hi:step"; empty: per-command default
  long long theta_points = 2001;
  std::vector<double> eta_list = {0.95, 0.96, 0.97, 0.98, 0.99};
  double theta_over_pi = 0.15;
  double epsilon = 1e-12;
  std::uint64_t seed = 1;
  std::uint64_t models = 10000;
  long long threads = 0;  // 0: machine parallelism
  std::string out;        // empty: stdout
  std::string svg;        // empty: no chart
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return std::string(buf);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt("%s: '%s' is not a number", what,
                                      item.c_str()));
    }
    if (used != item.size()) {
      throw std::invalid_argument(fmt("%s: '%s' is not a number", what,
                                      item.c_str()));
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::invalid_argument(fmt("%s: empty list", what));
  }
  return values;
}

std::vector<double> parse_range(const std::string& text) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char tail = '\0';
  const int got =
      std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &tail);
  if (got != 3) {
    throw std::invalid_argument("alpha range must look like lo:hi:step, got '" +
                                text + "'");
  }
  if (!(step > 0.0) || hi < lo) {
    throw std::invalid_argument("alpha range needs step > 0 and hi >= lo");
  }
  std::vector<double> values;
  for (int i = 0;; ++i) {
    const double a = lo + step * static_cast<double>(i);
    if (a > hi + 1e-9) break;
    values.push_back(a);
  }
  return values;
}

std::string join_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += fmt("%g", values[i]);
  }
  return out;
}

SystemKind parse_system(const std::string& name) {
  const auto kind = system_from_string(name);
  if (!kind) {
    throw std::invalid_argument("unknown system '" + name +
                                "' (expected qubit or qutrit)");
  }
  return *kind;
}

void require_orders_at_least_one(const std::vector<double>& alphas) {
  for (const double a : alphas) {
    if (a < 1.0 && std::abs(a - 1.0) > 1e-9) {
      throw std::invalid_argument(
          fmt("entropic order %g is below 1; this command needs alpha >= 1",
              a));
    }
  }
}

unsigned resolve_threads(long long requested) {
  if (requested < 0) {
    throw std::invalid_argument("--threads must be >= 0");
  }
  return requested == 0 ? hardware_threads()
                        : static_cast<unsigned>(requested);
}

ThetaGrid make_grid(long long points) {
  if (points < 2) {
    throw std::invalid_argument("--theta-points must be >= 2");
  }
  return ThetaGrid{static_cast<std::size_t>(points)};
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open output file: " + path);
  }
  file << payload;
  file.flush();
  if (!file.good()) {
    throw IoError("failed writing output file: " + path);
  }
}

void apply_config(const std::string& path, SweepConfig& cfg,
                  const std::map<std::string, CLI::Option*>& flags) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot open config file: " + path);
  }
  json doc;
  try {
    file >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument(fmt("config %s: %s", path.c_str(), e.what()));
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("config must be a JSON object");
  }
  static const std::set<std::string> kKnown = {
      "system",     "beta",   "alpha_list",    "alpha_range", "theta_points",
      "eta_list",   "epsilon", "theta_over_pi", "seed",        "models",
      "threads",    "out",    "svg"};
  for (const auto& item : doc.items()) {
    if (kKnown.find(item.key()) == kKnown.end()) {
      throw std::invalid_argument("unknown config key: " + item.key());
    }
  }
  // Explicit command-line flags win over file values.
  const auto fresh = [&](const char* name) {
    return flags.at(name)->count() == 0;
  };
  try {
    if (doc.contains("system") && fresh("--system"))
      cfg.system = doc["system"].get<std::string>();
    if (doc.contains("beta") && fresh("--beta"))
      cfg.beta = doc["beta"].get<double>();
    if (doc.contains("alpha_list") && fresh("--alpha"))
      cfg.alpha_list = doc["alpha_list"].get<std::vector<double>>();
    if (doc.contains("alpha_range") && fresh("--alpha-range"))
      cfg.alpha_range = doc["alpha_range"].get<std::string>();
    if (doc.contains("theta_points") && fresh("--theta-points"))
      cfg.theta_points = doc["theta_points"].get<long long>();
    if (doc.contains("eta_list") && fresh("--eta"))
      cfg.eta_list = doc["eta_list"].get<std::vector<double>>();
    if (doc.contains("theta_over_pi") && fresh("--theta-over-pi"))
      cfg.theta_over_pi = doc["theta_over_pi"].get<double>();
    if (doc.contains("epsilon") && fresh("--epsilon"))
      cfg.epsilon = doc["epsilon"].get<double>();
    if (doc.contains("seed") && fresh("--seed"))
      cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("models") && fresh("--models"))
      cfg.models = doc["models"].get<std::uint64_t>();
    if (doc.contains("threads") && fresh("--threads"))
      cfg.threads = doc["threads"].get<long long>();
    if (doc.contains("out") && fresh("--out"))
      cfg.out = doc["out"].get<std::string>();
    if (doc.contains("svg") && fresh("--svg"))
      cfg.svg = doc["svg"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(fmt("config %s: %s", path.c_str(), e.what()));
  }
}

// ---------------------------------------------------------------------------

int cmd_sweep(const SweepConfig& cfg) {
  const SystemKind kind = parse_system(cfg.system);
  std::vector<double> alphas = cfg.alpha_list;
  if (alphas.empty()) {
    alphas = cfg.alpha_range.empty()
                 ? std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}
                 : parse_range(cfg.alpha_range);
  }
  require_orders_at_least_one(alphas);
  const ThetaGrid grid = make_grid(cfg.theta_points);
  const unsigned threads = resolve_threads(cfg.threads);

  std::vector<std::string> blocks(grid.points);
  std::vector<std::vector<double>> c_tilde(
      alphas.size(), std::vector<double>(grid.points, 0.0));
  parallel_for(grid.points, threads, [&](std::size_t i) {
    const double theta = grid.theta(i);
    std::string rows;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const LGReport r = lg_report(make_protocol({kind, theta, cfg.beta}),
                                   EntropicOrder(alphas[a]));
      c_tilde[a][i] = r.c_tilde;
      rows += fmt("%.17g,%.17g,%.17g,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  theta / kPi, alphas[a], cfg.beta,
                  std::string(to_string(kind)).c_str(), r.c_alpha, r.c_tilde,
                  r.h_w10, r.h_w21, r.h_w20, r.h_e1);
    }
    blocks[i] = std::move(rows);
  });

  std::string csv =
      "theta_over_pi,alpha,beta,system,C_alpha,C_tilde,H_W10,H_W21,H_W20,"
      "H_E1\n";
  for (const std::string& block : blocks) csv += block;
  write_output(cfg.out, csv);

  if (!cfg.svg.empty()) {
    std::vector<svg_chart::Series> series(alphas.size());
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      series[a].label = fmt("alpha=%g", alphas[a]);
      series[a].x.reserve(grid.points);
      for (std::size_t i = 0; i < grid.points; ++i) {
        series[a].x.push_back(grid.theta(i) / kPi);
      }
      series[a].y = c_tilde[a];
    }
    svg_chart::ChartSpec chart;
    chart.title = fmt("%s, beta=%g: rescaled LG quantity", cfg.system.c_str(),
                      cfg.beta);
    chart.x_label = "theta / pi";
    chart.y_label = "C_tilde";
    write_output(cfg.svg, svg_chart::render(chart, series));
  }
  return 0;
}

int cmd_extension(const SweepConfig& cfg) {
  const SystemKind kind = parse_system(cfg.system);
  std::vector<double> alphas = cfg.alpha_list;
  std::string range_text = cfg.alpha_range;
  if (alphas.empty()) {
    if (range_text.empty()) range_text = "1.00:4.00:0.01";
    alphas = parse_range(range_text);
  } else {
    range_text = join_list(alphas);
  }
  require_orders_at_least_one(alphas);
  const ThetaGrid grid = make_grid(cfg.theta_points);
  const unsigned threads = resolve_threads(cfg.threads);
  if (cfg.epsilon < 0.0) {
    throw std::invalid_argument("--epsilon must be >= 0");
  }

  json doc;
  try {
    const ExtensionSummary summary = extension_summary(
        kind, cfg.beta, alphas, grid, cfg.epsilon, threads);
    doc["system"] = cfg.system;
    doc["beta"] = cfg.beta;
    doc["alpha_range"] = range_text;
    doc["epsilon"] = cfg.epsilon;
    doc["domain_alpha1_measure"] = summary.alpha1_measure;
    doc["domain_union_measure"] = summary.union_measure;
    doc["extension_percent"] = summary.extension_percent;
  } catch (const std::domain_error& e) {
    json err;
    err["error"] = e.what();
    write_output(cfg.out, err.dump(2) + "\n");
    return 1;
  }
  write_output(cfg.out, doc.dump(2) + "\n");
  return 0;
}

int cmd_ratio(const SweepConfig& cfg) {
  const SystemKind kind = parse_system(cfg.system);
  std::vector<double> alphas = cfg.alpha_list;
  if (alphas.empty()) {
    alphas = parse_range(cfg.alpha_range.empty() ? "1.05:3.00:0.05"
                                                 : cfg.alpha_range);
  }
  require_orders_at_least_one(alphas);
  const ProtocolSpec spec =
      make_protocol({kind, cfg.theta_over_pi * kPi, cfg.beta});

  // The ratio is only defined where the ideal quantity genuinely violates.
  std::vector<double> c_tilde(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const LGReport r = lg_report(spec, EntropicOrder(alphas[a]));
    if (r.c_alpha <= std::max(cfg.epsilon, 1e-12)) {
      json err;
      err["error"] = fmt(
          "C_alpha = %.3e at alpha=%g, theta/pi=%g: no violation to scale "
          "against",
          r.c_alpha, alphas[a], cfg.theta_over_pi);
      write_output(cfg.out, err.dump(2) + "\n");
      return 1;
    }
    c_tilde[a] = r.c_tilde;
  }

  std::string csv = "alpha,eta,ratio,C_tilde_times_ten\n";
  std::vector<svg_chart::Series> series(cfg.eta_list.size() + 1);
  for (std::size_t e = 0; e < cfg.eta_list.size(); ++e) {
    series[e].label = fmt("eta=%g", cfg.eta_list[e]);
  }
  series.back().label = "10 x C_tilde";
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const EntropicOrder order(alphas[a]);
    for (std::size_t e = 0; e < cfg.eta_list.size(); ++e) {
      const double r = detection_ratio(spec, order, Efficiency(cfg.eta_list[e]));
      csv += fmt("%.17g,%.17g,%.17g,%.17g\n", alphas[a], cfg.eta_list[e], r,
                 10.0 * c_tilde[a]);
      series[e].x.push_back(alphas[a]);
      series[e].y.push_back(r);
    }
    series.back().x.push_back(alphas[a]);
    series.back().y.push_back(10.0 * c_tilde[a]);
  }
  write_output(cfg.out, csv);

  if (!cfg.svg.empty()) {
    svg_chart::ChartSpec chart;
    chart.title = fmt("%s, beta=%g, theta/pi=%g: inefficiency penalty ratio",
                      cfg.system.c_str(), cfg.beta, cfg.theta_over_pi);
    chart.x_label = "alpha";
    chart.y_label = "r_alpha(eta)";
    write_output(cfg.svg, svg_chart::render(chart, series));
  }
  return 0;
}

int cmd_oracle(const SweepConfig& cfg) {
  std::vector<double> alphas = cfg.alpha_list;
  if (alphas.empty()) alphas = {1.0, 1.5, 2.0, 3.0, 5.0};
  require_orders_at_least_one(alphas);
  const unsigned threads = resolve_threads(cfg.threads);
  const double floor = std::max(cfg.epsilon, 1e-12);

  static constexpr std::array<Eigen::Index, 2> kDims = {2, 3};
  static constexpr std::array<Eigen::Index, 4> kStates = {1, 2, 4, 8};
  const std::size_t n = static_cast<std::size_t>(cfg.models);
  std::vector<double> max_c(n, -std::numeric_limits<double>::infinity());
  parallel_for(n, threads, [&](std::size_t i) {
    const HiddenVariableModel model =
        random_model(derive_seed(cfg.seed, i), kDims[i % 2],
                     kStates[(i / 2) % 4]);
    double worst = -std::numeric_limits<double>::infinity();
    for (const double a : alphas) {
      worst = std::max(worst, lg_check(model, EntropicOrder(a)));
    }
    max_c[i] = worst;
  });

  std::uint64_t violations = 0;
  double overall = -std::numeric_limits<double>::infinity();
  for (const double c : max_c) {
    overall = std::max(overall, c);
    if (c > floor) ++violations;
  }

  json doc;
  doc["models"] = cfg.models;
  doc["dims"] = std::vector<int>{2, 3};
  doc["alpha_grid"] = alphas;
  if (n == 0) {
    doc["max_C_alpha"] = nullptr;
  } else {
    doc["max_C_alpha"] = overall;
  }
  doc["violations"] = violations;
  doc["seed"] = cfg.seed;
  write_output(cfg.out, doc.dump(2) + "\n");
  return violations > 0 ? 3 : 0;
}

int cmd_inefficiency(const SweepConfig& cfg) {
  const SystemKind kind = parse_system(cfg.system);
  std::vector<double> alphas = cfg.alpha_list;
  if (alphas.empty()) {
    alphas = cfg.alpha_range.empty()
                 ? std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}
                 : parse_range(cfg.alpha_range);
  }
  require_orders_at_least_one(alphas);
  const ProtocolSpec spec =
      make_protocol({kind, cfg.theta_over_pi * kPi, cfg.beta});

  std::string csv = "alpha,eta,c_eta_closed,c_eta_direct,abs_diff,delta,ratio\n";
  for (const double alpha : alphas) {
    const EntropicOrder order(alpha);
    for (const double eta : cfg.eta_list) {
      const InefficiencyReport rep =
          lg_inefficient(spec, order, Efficiency(eta));
      csv += fmt("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", alpha, eta, rep.c_eta,
                 rep.c_eta_direct, std::abs(rep.c_eta_direct - rep.c_eta),
                 rep.delta);
      if (rep.ratio.has_value()) {
        csv += fmt(",%.17g\n", *rep.ratio);
      } else {
        csv += ",\n";
      }
    }
  }
  write_output(cfg.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tsallis-entropic Leggett-Garg analysis of two-point-measurement work "
      "statistics"};
  app.require_subcommand(1);

  SweepConfig cfg;
  std::string alpha_csv, eta_csv, config_path;

  std::map<std::string, CLI::Option*> flags;
  flags["--system"] =
      app.add_option("--system", cfg.system, "System family: qubit or qutrit");
  flags["--beta"] = app.add_option(
      "--beta", cfg.beta, "Inverse temperature in units of 1/dE (default 1)");
  flags["--alpha"] = app.add_option(
      "--alpha", alpha_csv, "Comma-separated list of entropic orders");
  flags["--alpha-range"] = app.add_option(
      "--alpha-range", cfg.alpha_range, "Entropic-order grid as lo:hi:step");
  flags["--theta-points"] = app.add_option(
      "--theta-points", cfg.theta_points,
      "Number of drive-angle grid points on [0, pi) (default 2001)");
  flags["--eta"] = app.add_option(
      "--eta", eta_csv, "Comma-separated detection efficiencies in [0, 1]");
  flags["--theta-over-pi"] = app.add_option(
      "--theta-over-pi", cfg.theta_over_pi,
      "Fixed drive angle as a fraction of pi (default 0.15)");
  flags["--epsilon"] = app.add_option(
      "--epsilon", cfg.epsilon, "Violation threshold (default 1e-12)");
  flags["--seed"] = app.add_option(
      "--seed", cfg.seed, "Master seed for the random-model stream");
  flags["--models"] = app.add_option(
      "--models", cfg.models,
      "Number of random hidden-variable models (default 10000)");
  flags["--threads"] = app.add_option(
      "--threads", cfg.threads,
      "Worker threads; 0 means machine parallelism (default 0)");
  flags["--out"] = app.add_option(
      "--out", cfg.out, "Output file path (default: stdout)");
  flags["--svg"] = app.add_option(
      "--svg", cfg.svg, "Also write an SVG chart to this path");
  app.add_option("--config", config_path,
                 "JSON config file; explicit flags override its values");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Angle sweep of the LG quantities, CSV (optionally SVG)");
  CLI::App* extension = app.add_subcommand(
      "extension", "Violation-domain extension over an order grid, JSON");
  CLI::App* ratio = app.add_subcommand(
      "ratio", "Penalty ratio r_alpha(eta) versus order, CSV (optionally SVG)");
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Fuzz random hidden-variable models against the bound, JSON");
  CLI::App* inefficiency = app.add_subcommand(
      "inefficiency", "Closed-form versus direct lossy-detector audit, CSV");
  for (CLI::App* sub : {sweep, extension, ratio, oracle, inefficiency}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (!config_path.empty()) apply_config(config_path, cfg, flags);
    if (flags["--alpha"]->count() > 0) {
      cfg.alpha_list = parse_list(alpha_csv, "--alpha");
    }
    if (flags["--eta"]->count() > 0) {
      cfg.eta_list = parse_list(eta_csv, "--eta");
    }

    if (sweep->parsed()) return cmd_sweep(cfg);
    if (extension->parsed()) return cmd_extension(cfg);
    if (ratio->parsed()) return cmd_ratio(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (inefficiency->parsed()) return cmd_inefficiency(cfg);
    std::fprintf(stderr, "error: no command selected\n");
    return 1;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
