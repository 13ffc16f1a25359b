// Command-line front end: single-point evaluations, sweeps, thresholds,
// figure datasets and the self-verification suite, as JSON or CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qetlab/analysis.hpp"
#include "qetlab/correlations.hpp"
#include "qetlab/errors.hpp"
#include "qetlab/local_extraction.hpp"
#include "qetlab/qet_protocol.hpp"
#include "qetlab/spin_model.hpp"
#include "qetlab/table.hpp"
#include "qetlab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct OutputOptions {
  std::string format;  // resolved per command when left empty
  std::string out_path;
};

void write_output(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    throw qet::domain_error("cannot open output path: " + opts.out_path);
  }
  file << text;
}

// Grid spec "lo:hi:n[:log]".
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4) {
    throw qet::domain_error("grid spec must be lo:hi:n or lo:hi:n:log, got '" +
                            spec + "'");
  }
  double lo, hi;
  int n;
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    n = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw qet::domain_error("unparsable grid spec '" + spec + "'");
  }
  if (n < 1) throw qet::domain_error("grid spec needs n >= 1");
  if (parts.size() == 4) {
    if (parts[3] != "log") {
      throw qet::domain_error("grid spec suffix must be 'log'");
    }
    return qet::SweepSpec::logspace(lo, hi, n);
  }
  return qet::SweepSpec::linspace(lo, hi, n);
}

std::vector<double> parse_c_targets(const std::string& spec) {
  std::vector<double> targets;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      targets.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw qet::domain_error("unparsable C target '" + item + "'");
    }
  }
  if (targets.empty()) throw qet::domain_error("empty C target list");
  return targets;
}

void apply_tolerance_overrides(qet::Tolerances& tolerances,
                               const std::vector<std::string>& overrides) {
  for (const std::string& entry : overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw qet::domain_error("tolerance override must be NAME=VALUE, got '" +
                              entry + "'");
    }
    const std::string name = entry.substr(0, eq);
    double value;
    try {
      value = std::stod(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw qet::domain_error("unparsable tolerance value in '" + entry + "'");
    }
    tolerances.set(name, value);
  }
}

json matrix_to_json(const qet::CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

json cell_to_json(const qet::Cell& cell) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(double d) const { return d; }
    json operator()(long long i) const { return i; }
    json operator()(bool b) const { return b; }
    json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

json optional_to_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string table_to_text(const qet::Table& table, const OutputOptions& opts,
                          const std::string& command, const json& extra) {
  if (opts.format == "csv") {
    std::ostringstream out;
    table.write_csv(out);
    return out.str();
  }
  json doc;
  doc["command"] = command;
  for (const auto& [key, value] : extra.items()) doc[key] = value;
  doc["columns"] = table.columns;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell_to_json(cell));
    rows.push_back(r);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

// Flat single-row CSV rendering of a JSON object; nested arrays are
// expanded with _<index> suffixes.
void flatten_for_csv(const std::string& prefix, const json& value,
                     std::vector<std::string>& columns,
                     std::vector<qet::Cell>& cells) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items()) {
      flatten_for_csv(prefix.empty() ? key : prefix + "_" + key, sub, columns,
                      cells);
    }
  } else if (value.is_array()) {
    int i = 0;
    for (const auto& sub : value) {
      flatten_for_csv(prefix + "_" + std::to_string(i++), sub, columns, cells);
    }
  } else {
    columns.push_back(prefix);
    if (value.is_null()) {
      cells.emplace_back();
    } else if (value.is_boolean()) {
      cells.emplace_back(value.get<bool>());
    } else if (value.is_number_integer()) {
      cells.emplace_back(value.get<long long>());
    } else if (value.is_number()) {
      cells.emplace_back(value.get<double>());
    } else {
      cells.emplace_back(value.get<std::string>());
    }
  }
}

std::string doc_to_text(const json& doc, const OutputOptions& opts) {
  if (opts.format == "json") return doc.dump(2) + "\n";
  qet::Table table;
  std::vector<qet::Cell> cells;
  flatten_for_csv("", doc, table.columns, cells);
  table.add_row(std::move(cells));
  std::ostringstream out;
  table.write_csv(out);
  return out.str();
}

json state_doc(double kappa, double kT, bool naive_coeffs) {
  const qet::SystemParams params = qet::SystemParams::make(kappa, kT);
  qet::GibbsState state = qet::gibbs_state(params);
  if (naive_coeffs) {
    // Debug route: rebuild the coefficients without overflow factoring.
    const qet::GibbsRatios g = qet::naive_gibbs_ratios(kappa, kT);
    state.Z = g.Z;
    state.c1 = g.c1;
    state.c2 = g.c2;
    state.c3 = g.c3;
    state.r = g.r;
  }
  json doc;
  doc["command"] = "state";
  doc["kappa"] = kappa;
  doc["kT"] = kT;
  doc["m"] = params.m;
  doc["Z"] = state.Z;
  doc["p"] = state.p;
  doc["c1"] = state.c1;
  doc["c2"] = state.c2;
  doc["c3"] = state.c3;
  doc["r"] = state.r;
  doc["mean_energy"] = qet::mean_energy(state);
  doc["trace"] = state.rho.trace().real();
  doc["rho"] = matrix_to_json(state.rho);
  return doc;
}

json report_doc(double kappa, double kT) {
  const qet::GibbsState state =
      qet::gibbs_state(qet::SystemParams::make(kappa, kT));
  const qet::CorrelationReport corr = qet::correlation_report(state);
  const qet::QetResult protocol = qet::optimal_qet(state);
  const qet::ExtractionResult extraction = qet::solve_max_omega(state);
  const qet::ThresholdSet thresholds = qet::thresholds_for(kappa);

  json doc;
  doc["command"] = "report";
  doc["kappa"] = kappa;
  doc["kT"] = kT;
  doc["mutual_info"] = corr.mutual_info;
  doc["classical"] = corr.classical;
  doc["discord"] = corr.discord;
  doc["marginal_entropy"] = corr.marginal_entropy;
  doc["ppt_eigenvalues"] = corr.ppt_eigs;
  doc["separable"] = corr.separable;
  doc["Te"] = optional_to_json(thresholds.Te);
  doc["T1"] = optional_to_json(thresholds.T1);
  doc["T2"] = optional_to_json(thresholds.T2);
  doc["regime"] = qet::regime_name(qet::regime_for(kT, thresholds));
  doc["E_A"] = protocol.E_A;
  doc["theta_o"] = protocol.theta_o;
  doc["E_B_max"] = protocol.E_B_max;
  doc["omega_max"] = extraction.omega_max;
  doc["branch"] =
      extraction.branch == qet::Branch::positive ? "positive" : "zero";
  return doc;
}

json qet_doc(double kappa, double kT, std::optional<double> theta) {
  const qet::GibbsState state =
      qet::gibbs_state(qet::SystemParams::make(kappa, kT));
  const qet::QetResult res = qet::optimal_qet(state);
  const double run_theta = theta.value_or(res.theta_o);
  const qet::ProtocolTrace trace = qet::run_protocol(state, run_theta);

  json doc;
  doc["command"] = "qet";
  doc["kappa"] = kappa;
  doc["kT"] = kT;
  doc["E_A"] = res.E_A;
  doc["a"] = res.a;
  doc["b"] = res.b;
  doc["theta_o"] = res.theta_o;
  doc["E_B_max"] = res.E_B_max;
  doc["outcome_probs"] = res.outcome_probs;
  doc["theta"] = run_theta;
  doc["extracted_at_theta"] = qet::extractable_energy(state, run_theta);
  json outcomes = json::array();
  for (const qet::ProtocolOutcome& out : trace.outcomes) {
    json o;
    o["alpha"] = out.alpha;
    o["prob"] = out.prob;
    o["energy_mid"] = out.energy_mid;
    o["energy_final"] = out.energy_final;
    outcomes.push_back(o);
  }
  doc["outcomes"] = outcomes;
  return doc;
}

json extract_doc(double kappa, double kT) {
  const qet::GibbsState state =
      qet::gibbs_state(qet::SystemParams::make(kappa, kT));
  const qet::ExtractionResult res = qet::solve_max_omega(state);
  json doc;
  doc["command"] = "extract";
  doc["kappa"] = kappa;
  doc["kT"] = kT;
  doc["omega_max"] = res.omega_max;
  doc["branch"] = res.branch == qet::Branch::positive ? "positive" : "zero";
  doc["sigma"] = res.sigma;
  doc["delta"] = res.delta;
  json kraus = json::array();
  for (const qet::CMatrix& k : res.kraus) kraus.push_back(matrix_to_json(k));
  doc["kraus"] = kraus;
  return doc;
}

qet::Table thresholds_table(const std::vector<double>& kappas) {
  qet::Table table;
  table.columns = {"kappa", "Te", "T1", "T2"};
  for (double kappa : kappas) {
    const qet::ThresholdSet t = qet::thresholds_for(kappa);
    table.add_row({kappa,
                   t.Te ? qet::Cell{*t.Te} : qet::Cell{},
                   t.T1 ? qet::Cell{*t.T1} : qet::Cell{},
                   t.T2 ? qet::Cell{*t.T2} : qet::Cell{}});
  }
  return table;
}

json verify_doc(const qet::VerifyReport& report,
                const qet::Tolerances& tolerances) {
  json doc;
  doc["command"] = "verify";
  doc["seed"] = report.seed;
  json tols;
  for (const auto& [name, value] : tolerances.all()) tols[name] = value;
  doc["tolerances"] = tols;
  json checks = json::array();
  for (const qet::CheckResult& check : report.checks) {
    json c;
    c["name"] = check.name;
    c["residual"] = check.residual;
    c["tolerance"] = check.tolerance;
    c["pass"] = check.pass;
    checks.push_back(c);
  }
  doc["checks"] = checks;
  doc["all_pass"] = report.all_pass;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qetlab: thermal two-spin model, its correlation measures, the "
      "three-step energy teleportation protocol and optimal local "
      "extraction"};
  app.require_subcommand(1);

  double kappa = 1.0;
  double kT = 1.0;
  std::string kappa_grid_spec;
  std::string kT_grid_spec;
  std::string c_targets_spec;
  std::optional<double> theta;
  bool naive_coeffs = false;
  int figure_number = 1;
  std::uint64_t seed = 12345;  // default Monte-Carlo seed
  std::vector<std::string> tol_overrides;
  OutputOptions out;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out.out_path, "Write output to PATH");
  };
  const auto add_point = [&](CLI::App* cmd) {
    cmd->add_option("--kappa", kappa, "Coupling kappa >= 0")->required();
    cmd->add_option("--kT", kT, "Temperature kT in [1e-6, 1e12]")->required();
  };

  CLI::App* cmd_state = app.add_subcommand("state", "Gibbs state at one point");
  add_point(cmd_state);
  add_common(cmd_state);
  cmd_state->add_flag("--naive-coeffs", naive_coeffs,
                      "Evaluate the coefficients without overflow factoring "
                      "(moderate kT only)");

  CLI::App* cmd_report = app.add_subcommand(
      "report", "Correlations, teleportation and extraction at one point");
  add_point(cmd_report);
  add_common(cmd_report);

  CLI::App* cmd_qet =
      app.add_subcommand("qet", "Teleportation protocol at one point");
  add_point(cmd_qet);
  add_common(cmd_qet);
  double theta_value = 0.0;
  CLI::Option* theta_opt = cmd_qet->add_option(
      "--theta", theta_value, "Run the protocol at this angle instead of theta_o");

  CLI::App* cmd_extract =
      app.add_subcommand("extract", "Optimal local channel at one point");
  add_point(cmd_extract);
  add_common(cmd_extract);

  CLI::App* cmd_thresholds =
      app.add_subcommand("thresholds", "Te, T1, T2 per coupling");
  cmd_thresholds->add_option("--kappa", kappa, "Single coupling");
  cmd_thresholds->add_option("--kappa-grid", kappa_grid_spec,
                             "Grid spec lo:hi:n[:log]");
  add_common(cmd_thresholds);

  CLI::App* cmd_figure =
      app.add_subcommand("figure", "Plot-ready dataset for figures 1..6");
  cmd_figure->add_option("n", figure_number, "Figure number")
      ->required()
      ->check(CLI::Range(1, 6));
  cmd_figure->add_option("--kappa-grid", kappa_grid_spec,
                         "Override the kappa values, lo:hi:n[:log]");
  cmd_figure->add_option("--kT-grid", kT_grid_spec,
                         "Override the kT values, lo:hi:n[:log]");
  cmd_figure->add_option("--c-targets", c_targets_spec,
                         "Override the C targets, comma-separated");
  add_common(cmd_figure);

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "Grid sweep of all quantities");
  cmd_sweep->add_option("--kappa-grid", kappa_grid_spec, "Grid spec lo:hi:n[:log]")
      ->required();
  cmd_sweep->add_option("--kT-grid", kT_grid_spec, "Grid spec lo:hi:n[:log]")
      ->required();
  add_common(cmd_sweep);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run the full self-verification suite");
  cmd_verify->add_option("--seed", seed, "Monte-Carlo seed (default 12345)");
  cmd_verify->add_option("--tol", tol_overrides,
                         "Tolerance override NAME=VALUE (repeatable)");
  add_common(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto resolve_format = [&](const std::string& fallback) {
    if (out.format.empty()) out.format = fallback;
  };

  try {
    if (cmd_state->parsed()) {
      resolve_format("json");
      // CSV keeps the scalar fields; the matrix flattens to rho_i_j_{0,1}.
      write_output(out, doc_to_text(state_doc(kappa, kT, naive_coeffs), out));
    } else if (cmd_report->parsed()) {
      resolve_format("json");
      write_output(out, doc_to_text(report_doc(kappa, kT), out));
    } else if (cmd_qet->parsed()) {
      resolve_format("json");
      if (*theta_opt) theta = theta_value;
      write_output(out, doc_to_text(qet_doc(kappa, kT, theta), out));
    } else if (cmd_extract->parsed()) {
      resolve_format("json");
      write_output(out, doc_to_text(extract_doc(kappa, kT), out));
    } else if (cmd_thresholds->parsed()) {
      resolve_format("csv");
      std::vector<double> kappas;
      if (!kappa_grid_spec.empty()) {
        kappas = parse_grid(kappa_grid_spec);
      } else {
        kappas = {kappa};
      }
      write_output(out, table_to_text(thresholds_table(kappas), out,
                                      "thresholds", json::object()));
    } else if (cmd_figure->parsed()) {
      resolve_format("csv");
      qet::FigureConfig config = qet::FigureConfig::defaults(figure_number);
      if (!kappa_grid_spec.empty()) config.kappa_values = parse_grid(kappa_grid_spec);
      if (!kT_grid_spec.empty()) config.kT_values = parse_grid(kT_grid_spec);
      if (!c_targets_spec.empty()) config.c_targets = parse_c_targets(c_targets_spec);
      const qet::Table table = qet::figure_dataset(figure_number, config);
      write_output(out, table_to_text(table, out, "figure",
                                      json{{"figure", figure_number}}));
    } else if (cmd_sweep->parsed()) {
      resolve_format("csv");
      qet::SweepSpec spec;
      spec.kappa_values = parse_grid(kappa_grid_spec);
      spec.kT_values = parse_grid(kT_grid_spec);
      write_output(out, table_to_text(qet::sweep(spec), out, "sweep",
                                      json::object()));
    } else if (cmd_verify->parsed()) {
      qet::VerifyOptions options;
      options.seed = seed;
      apply_tolerance_overrides(options.tolerances, tol_overrides);
      const qet::VerifyReport report = qet::run_verification(options);
      OutputOptions verify_out = out;
      verify_out.format = "json";  // machine-readable summary only
      write_output(verify_out, verify_doc(report, options.tolerances).dump(2) + "\n");
      // Timing stays out of the summary so repeated seeded runs are
      // byte-identical.
      std::cerr << "verify: " << report.checks.size() << " checks in "
                << report.elapsed_seconds << " s\n";
      if (!report.all_pass) {
        for (const qet::CheckResult& check : report.checks) {
          if (!check.pass) {
            std::cerr << "FAILED " << check.name << ": residual "
                      << check.residual << " > tolerance " << check.tolerance
                      << "\n";
          }
        }
        return 1;
      }
      return 0;
    }
  } catch (const qet::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
