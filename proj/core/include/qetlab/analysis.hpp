#pragma once

#include <set>
#include <string>
#include <vector>

#include "qetlab/local_extraction.hpp"
#include "qetlab/table.hpp"

// Parameter sweeps, regime classification, constant-classical-
// correlation contours and the datasets behind the six figures. Rows
// are computed independently (parallel map, deterministic order) and
// failures are recorded per row instead of aborting a sweep.
namespace qet {

enum class Quantity {
  discord,
  classical,
  mutual_info,
  E_A,
  E_B,
  omega_max,
  separable,
  thresholds,
};

struct SweepSpec {
  std::vector<double> kappa_values;
  std::vector<double> kT_values;
  std::set<Quantity> quantities;  // empty selects every pointwise quantity

  static std::vector<double> linspace(double lo, double hi, int n);
  static std::vector<double> logspace(double lo, double hi, int n);
};

// One row per (kappa, kT), kappa-major then kT-minor. A trailing
// "error" column carries per-row failure messages.
Table sweep(const SweepSpec& spec);

enum class Regime { teleportation, window, local_extraction };

std::string regime_name(Regime regime);

// Regime of one temperature against a kappa's thresholds.
Regime regime_for(double kT, const ThresholdSet& thresholds);

struct RegimePoint {
  double kappa;
  double kT;
  Regime regime;
  bool entangled;
};

// Labels every grid point; thresholds are solved once per kappa.
// Requires kappa > 0 throughout the grid.
std::vector<RegimePoint> classify_regimes(const std::vector<double>& kappas,
                                          const std::vector<double>& kTs);

struct ContourPoint {
  double C_target;
  double kT;
  double kappa;
  double D;
  double E_B;
  bool separable;
};

struct ContourTrace {
  std::vector<ContourPoint> points;  // ascending kT, anchor first
  std::vector<std::string> log;      // omitted points, bracket fallbacks
};

// Solves C(kappa, kT) = C_target for kappa at each kT at and above the
// anchor where the contour meets the separability boundary. kappa is
// bracketed by scanning [1e-6, 50] (nearest the previous point when the
// window is not monotone) and bisected; only separable points with
// residual below 1e-8 are emitted.
ContourTrace trace_constant_c_contour(double C_target,
                                      const std::vector<double>& kT_grid = {});

// The contour projected to (D, E_B), ordered by kT descending so the
// separability anchor is the final point and D increases along the
// curve.
ContourTrace dissonance_energy_curve(double C_target,
                                     const std::vector<double>& kT_grid = {});

struct FigureConfig {
  std::vector<double> kappa_values;  // curves of figures 1-3, grid of 4
  std::vector<double> kT_values;     // sample temperatures
  std::vector<double> c_targets;     // figures 5 and 6

  static FigureConfig defaults(int figure);
};

// Plot-ready dataset for figures 1..6; the header row documents the
// columns. Threshold markers are included where the figure shows them
// (Te rows in figure 1, T1 rows in figure 3).
Table figure_dataset(int figure, const FigureConfig& config);

}  // namespace qet
