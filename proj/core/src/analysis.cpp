#include "qetlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <string>

#include "qetlab/correlations.hpp"
#include "qetlab/errors.hpp"
#include "qetlab/parallel.hpp"
#include "qetlab/qet_protocol.hpp"
#include "qetlab/rootfind.hpp"

namespace qet {

namespace {

constexpr double kContourKappaLo = 1e-6;
constexpr double kContourKappaHi = 50.0;

double classical_at(double kappa, double kT) {
  return classical_correlation(gibbs_state(SystemParams::make(kappa, kT)));
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{};
}

}  // namespace

std::vector<double> SweepSpec::linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return v;
}

std::vector<double> SweepSpec::logspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) {
    throw domain_error("logspace endpoints must be positive");
  }
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo : lo * std::pow(hi / lo, double(i) / (n - 1));
  }
  return v;
}

Table sweep(const SweepSpec& spec) {
  if (spec.kappa_values.empty() || spec.kT_values.empty()) {
    throw domain_error("sweep requires non-empty kappa and kT grids");
  }
  for (double kT : spec.kT_values) {
    if (kT < kMinTemperature || kT > kMaxTemperature) {
      throw domain_error("sweep kT values must lie within [1e-6, 1e12]");
    }
  }

  std::set<Quantity> wanted = spec.quantities;
  if (wanted.empty()) {
    wanted = {Quantity::mutual_info, Quantity::classical, Quantity::discord,
              Quantity::separable,   Quantity::E_A,       Quantity::E_B,
              Quantity::omega_max};
  }
  auto want = [&](Quantity q) { return wanted.count(q) > 0; };

  Table table;
  table.columns = {"kappa", "kT"};
  if (want(Quantity::mutual_info)) table.columns.push_back("mutual_info");
  if (want(Quantity::classical)) table.columns.push_back("classical");
  if (want(Quantity::discord)) table.columns.push_back("discord");
  if (want(Quantity::separable)) table.columns.push_back("separable");
  if (want(Quantity::E_A)) table.columns.push_back("E_A");
  if (want(Quantity::E_B)) table.columns.push_back("E_B_max");
  if (want(Quantity::omega_max)) table.columns.push_back("omega_max");
  if (want(Quantity::thresholds)) {
    table.columns.insert(table.columns.end(), {"Te", "T1", "T2"});
  }
  table.columns.push_back("error");

  // Thresholds depend on kappa only; solve once per kappa up front.
  std::map<double, ThresholdSet> threshold_cache;
  if (want(Quantity::thresholds)) {
    for (double kappa : spec.kappa_values) {
      if (!threshold_cache.count(kappa)) {
        threshold_cache[kappa] = thresholds_for(kappa);
      }
    }
  }

  const std::size_t width = table.columns.size();
  const std::size_t n_rows = spec.kappa_values.size() * spec.kT_values.size();
  std::vector<std::vector<Cell>> rows(n_rows);
  parallel_for(n_rows, [&](std::size_t idx) {
    const double kappa = spec.kappa_values[idx / spec.kT_values.size()];
    const double kT = spec.kT_values[idx % spec.kT_values.size()];
    std::vector<Cell> row;
    row.reserve(width);
    row.emplace_back(kappa);
    row.emplace_back(kT);
    try {
      const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
      if (want(Quantity::mutual_info)) row.emplace_back(mutual_information(state));
      if (want(Quantity::classical)) row.emplace_back(classical_correlation(state));
      if (want(Quantity::discord)) row.emplace_back(discord(state));
      if (want(Quantity::separable)) row.emplace_back(is_separable(state.params));
      if (want(Quantity::E_A)) row.emplace_back(energy_injected_ea(state));
      if (want(Quantity::E_B)) row.emplace_back(optimal_qet(state).E_B_max);
      if (want(Quantity::omega_max)) {
        row.emplace_back(solve_max_omega(state).omega_max);
      }
      if (want(Quantity::thresholds)) {
        const ThresholdSet& t = threshold_cache.at(kappa);
        row.push_back(optional_cell(t.Te));
        row.push_back(optional_cell(t.T1));
        row.push_back(optional_cell(t.T2));
      }
      row.emplace_back(std::string{});
    } catch (const std::exception& e) {
      // Invalid row: keep the coordinates, blank the quantities, record
      // the failure instead of aborting the sweep.
      row.resize(width - 1);
      row.emplace_back(std::string{e.what()});
    }
    rows[idx] = std::move(row);
  });

  for (auto& row : rows) table.add_row(std::move(row));
  return table;
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::teleportation: return "teleportation";
    case Regime::window: return "window";
    case Regime::local_extraction: return "local_extraction";
  }
  return "unknown";
}

Regime regime_for(double kT, const ThresholdSet& thresholds) {
  if (!thresholds.T1) return Regime::local_extraction;  // kappa = 0
  if (kT < *thresholds.T1) return Regime::teleportation;
  if (thresholds.T2 && kT >= *thresholds.T2) return Regime::local_extraction;
  return Regime::window;
}

std::vector<RegimePoint> classify_regimes(const std::vector<double>& kappas,
                                          const std::vector<double>& kTs) {
  for (double kappa : kappas) {
    if (!(kappa > 0.0)) {
      throw domain_error("classify_regimes requires kappa > 0");
    }
  }
  std::vector<RegimePoint> points;
  points.reserve(kappas.size() * kTs.size());
  for (double kappa : kappas) {
    const ThresholdSet thresholds = thresholds_for(kappa);
    for (double kT : kTs) {
      RegimePoint p{};
      p.kappa = kappa;
      p.kT = kT;
      p.regime = regime_for(kT, thresholds);
      p.entangled = !is_separable(SystemParams::make(kappa, kT));
      points.push_back(p);
    }
  }
  return points;
}

namespace {

// Solves C(kappa, kT) = target in kappa at fixed kT. Scans the full
// window, keeps the sign-change cell nearest hint (the previous contour
// point) since monotonicity of C in kappa is not assumed, then bisects.
struct KappaSolve {
  std::optional<double> kappa;
  std::string note;
};

KappaSolve solve_kappa_for_c(double target, double kT, double hint) {
  const auto f = [&](double kappa) { return classical_at(kappa, kT) - target; };
  constexpr int kScanPoints = 400;
  std::vector<Bracket> cells;
  double prev_x = kContourKappaLo;
  double prev_f = f(prev_x);
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = kContourKappaLo *
                     std::pow(kContourKappaHi / kContourKappaLo,
                              double(i) / kScanPoints);
    const double fx = f(x);
    if (prev_f * fx <= 0.0) cells.push_back(Bracket{prev_x, x, prev_f, fx});
    prev_x = x;
    prev_f = fx;
  }
  KappaSolve out;
  if (cells.empty()) {
    out.note = "no kappa solves C=" + format_double(target) +
               " at kT=" + format_double(kT);
    return out;
  }
  std::size_t pick = 0;
  if (cells.size() > 1) {
    double best = 1e300;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const double mid = 0.5 * (cells[i].lo + cells[i].hi);
      const double d = std::abs(mid - hint);
      if (d < best) {
        best = d;
        pick = i;
      }
    }
    out.note = "C(kappa) not monotone at kT=" + format_double(kT) + ": " +
               std::to_string(cells.size()) +
               " candidate brackets, using the one nearest the previous point";
  }
  out.kappa = bisect(f, cells[pick], 1e-12);
  return out;
}

// Classical correlation along the separability boundary, as a function
// of kappa.
double boundary_classical(double kappa) {
  const std::optional<double> te = entanglement_threshold_te(kappa);
  return classical_at(kappa, *te);
}

}  // namespace

ContourTrace trace_constant_c_contour(double C_target,
                                      const std::vector<double>& kT_grid) {
  if (!(C_target > 0.0 && C_target < 1.0)) {
    throw domain_error("C_target must lie in (0, 1)");
  }

  ContourTrace trace;

  // Anchor: the kappa where the boundary curve carries exactly C_target.
  const auto g = [&](double kappa) {
    return boundary_classical(kappa) - C_target;
  };
  std::optional<Bracket> anchor_bracket =
      scan_for_bracket(g, 0.05, kContourKappaHi, 250, true);
  if (!anchor_bracket) {
    throw numerical_error("no separability anchor found for C_target=" +
                          format_double(C_target));
  }
  const double kappa_anchor = bisect(g, *anchor_bracket, 1e-10);
  double kT_anchor = *entanglement_threshold_te(kappa_anchor);

  // Nudge just above the boundary so the anchor point is separable under
  // the PPT slack, re-solving kappa to keep the residual tight.
  double hint = kappa_anchor;
  std::optional<double> kappa_at_anchor;
  for (double nudge = 1e-9; nudge <= 1e-6 + 1e-18; nudge *= 10.0) {
    const double kT_try = kT_anchor * (1.0 + nudge);
    const KappaSolve solved = solve_kappa_for_c(C_target, kT_try, hint);
    if (!solved.kappa) continue;
    if (is_separable(SystemParams::make(*solved.kappa, kT_try))) {
      kT_anchor = kT_try;
      kappa_at_anchor = *solved.kappa;
      if (nudge > 1e-9) {
        trace.log.push_back("anchor nudged by " + format_double(nudge));
      }
      break;
    }
  }
  if (!kappa_at_anchor) {
    throw numerical_error("anchor point could not be placed on the separable side");
  }

  std::vector<double> kTs = kT_grid;
  if (kTs.empty()) {
    kTs = SweepSpec::logspace(kT_anchor, 6.0 * kT_anchor, 41);
    kTs.erase(kTs.begin());  // the anchor itself is emitted first
  }
  std::sort(kTs.begin(), kTs.end());

  auto emit = [&](double kappa, double kT) {
    const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
    ContourPoint p{};
    p.C_target = C_target;
    p.kT = kT;
    p.kappa = kappa;
    p.D = discord(state);
    p.E_B = optimal_qet(state).E_B_max;
    p.separable = is_separable(state.params);
    const double residual = std::abs(classical_correlation(state) - C_target);
    if (residual >= 1e-8) {
      trace.log.push_back("point at kT=" + format_double(kT) +
                          " dropped: residual " + format_double(residual));
      return;
    }
    if (!p.separable) {
      trace.log.push_back("point at kT=" + format_double(kT) +
                          " dropped: not separable");
      return;
    }
    trace.points.push_back(p);
  };

  emit(*kappa_at_anchor, kT_anchor);
  hint = *kappa_at_anchor;
  for (double kT : kTs) {
    if (kT <= kT_anchor) {
      trace.log.push_back("kT=" + format_double(kT) +
                          " below the separability anchor; omitted");
      continue;
    }
    const KappaSolve solved = solve_kappa_for_c(C_target, kT, hint);
    if (!solved.note.empty()) trace.log.push_back(solved.note);
    if (!solved.kappa) continue;
    emit(*solved.kappa, kT);
    hint = *solved.kappa;
  }
  return trace;
}

ContourTrace dissonance_energy_curve(double C_target,
                                     const std::vector<double>& kT_grid) {
  ContourTrace trace = trace_constant_c_contour(C_target, kT_grid);
  std::reverse(trace.points.begin(), trace.points.end());
  return trace;
}

FigureConfig FigureConfig::defaults(int figure) {
  FigureConfig config;
  switch (figure) {
    case 1:
    case 2:
    case 3:
      config.kappa_values = {0.25, 0.5, 1.0, 2.0, 4.0};
      config.kT_values = SweepSpec::logspace(0.01, 100.0, 81);
      break;
    case 4:
      config.kappa_values = SweepSpec::logspace(0.05, 8.0, 61);
      break;
    case 5:
    case 6:
      config.c_targets = {0.1, 0.3, 0.5, 0.7, 0.9};
      break;
    default:
      throw domain_error("figure number must be 1..6");
  }
  return config;
}

Table figure_dataset(int figure, const FigureConfig& config) {
  Table table;
  switch (figure) {
    case 1: {
      table.columns = {"kappa", "kT", "discord", "Te_flag"};
      for (double kappa : config.kappa_values) {
        const std::optional<double> te = entanglement_threshold_te(kappa);
        std::vector<std::pair<double, bool>> kTs;
        for (double kT : config.kT_values) kTs.emplace_back(kT, false);
        if (te && *te >= kMinTemperature && *te <= kMaxTemperature) {
          kTs.emplace_back(*te, true);
        }
        std::sort(kTs.begin(), kTs.end());
        for (const auto& [kT, is_te] : kTs) {
          const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
          table.add_row({kappa, kT, discord(state), is_te});
        }
      }
      break;
    }
    case 2: {
      table.columns = {"kappa", "kT", "E_B"};
      for (double kappa : config.kappa_values) {
        for (double kT : config.kT_values) {
          const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
          table.add_row({kappa, kT, optimal_qet(state).E_B_max});
        }
      }
      break;
    }
    case 3: {
      table.columns = {"kappa", "kT", "omega_max", "T1_flag"};
      for (double kappa : config.kappa_values) {
        const std::optional<double> t1 = threshold_t1(kappa);
        std::vector<std::pair<double, bool>> kTs;
        for (double kT : config.kT_values) kTs.emplace_back(kT, false);
        if (t1 && *t1 >= kMinTemperature && *t1 <= kMaxTemperature) {
          kTs.emplace_back(*t1, true);
        }
        std::sort(kTs.begin(), kTs.end());
        for (const auto& [kT, is_t1] : kTs) {
          const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
          table.add_row({kappa, kT, solve_max_omega(state).omega_max, is_t1});
        }
      }
      break;
    }
    case 4: {
      table.columns = {"kappa", "T1", "T2"};
      std::vector<std::vector<Cell>> rows(config.kappa_values.size());
      parallel_for(rows.size(), [&](std::size_t i) {
        const double kappa = config.kappa_values[i];
        rows[i] = {kappa, optional_cell(threshold_t1(kappa)),
                   optional_cell(threshold_t2(kappa))};
      });
      for (auto& row : rows) table.add_row(std::move(row));
      break;
    }
    case 5: {
      table.columns = {"C_target", "kT", "kappa", "discord", "E_B", "separable"};
      for (double target : config.c_targets) {
        const ContourTrace trace =
            trace_constant_c_contour(target, config.kT_values);
        for (const std::string& line : trace.log) {
          std::cerr << "contour C=" << format_double(target) << ": " << line
                    << "\n";
        }
        for (const ContourPoint& p : trace.points) {
          table.add_row({p.C_target, p.kT, p.kappa, p.D, p.E_B, p.separable});
        }
      }
      break;
    }
    case 6: {
      table.columns = {"C_target", "kT", "kappa", "discord", "E_B"};
      for (double target : config.c_targets) {
        const ContourTrace trace =
            dissonance_energy_curve(target, config.kT_values);
        for (const std::string& line : trace.log) {
          std::cerr << "contour C=" << format_double(target) << ": " << line
                    << "\n";
        }
        for (const ContourPoint& p : trace.points) {
          table.add_row({p.C_target, p.kT, p.kappa, p.D, p.E_B});
        }
      }
      break;
    }
    default:
      throw domain_error("figure number must be 1..6");
  }
  return table;
}

}  // namespace qet
