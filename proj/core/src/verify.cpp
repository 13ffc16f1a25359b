#include "qetlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "qetlab/analysis.hpp"
#include "qetlab/correlations.hpp"
#include "qetlab/eig.hpp"
#include "qetlab/errors.hpp"
#include "qetlab/local_extraction.hpp"
#include "qetlab/optimize.hpp"
#include "qetlab/parallel.hpp"
#include "qetlab/qet_protocol.hpp"
#include "qetlab/rng.hpp"
#include "qetlab/rootfind.hpp"

namespace qet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2E = 1.4426950408889634074;

const std::vector<double> kKappasWithZero = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
const std::vector<double> kKappasPositive = {0.25, 0.5, 1.0, 2.0, 4.0};

struct Point {
  double kappa;
  double kT;
};
const std::vector<Point> kMcPoints = {{1.0, 2.0}, {0.25, 10.0}, {2.0, 0.5}};

std::vector<double> grid_kT_25() { return SweepSpec::logspace(1e-3, 1e3, 25); }

double rel_residual(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Monotone non-increase with a roundoff slack; double precision
// plateaus at the low-kT end make literal strictness ill-posed.
double non_increasing_residual(const std::vector<double>& values) {
  double worst = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    worst = std::max(worst, values[i] - values[i - 1]);
  }
  if (!values.empty() && !(values.back() < values.front())) {
    worst = std::max(worst, 1.0);  // no overall decrease at all
  }
  return worst;
}

double psd_violation(const CMatrix& rho) {
  const EigenDecomposition dec = hermitian_eig(rho);
  return std::max(0.0, -dec.eigenvalues.front());
}

}  // namespace

Tolerances::Tolerances() {
  values_ = {
      {"gibbs_oracle", 1e-10},
      {"limit_states", 1e-8},
      {"state_invariants", 1e-10},
      {"state_psd", 1e-12},
      {"spectral_assembly", 1e-12},
      {"naive_coeffs", 1e-12},
      {"eigensystem_oracle", 1e-10},
      {"nondemolition", 1e-14},
      {"energy_bookkeeping", 1e-11},
      {"monotonic", 1e-12},
      {"protocol_trace", 1e-11},
      {"protocol_states", 1e-12},
      {"eb_dual_form", 1e-12},
      {"qet_positivity", 0.0},
      {"qet_1d_oracle", 1e-9},
      {"qet_ground", 1e-6},
      {"passivity", 1e-12},
      {"unitary_oracle", 1e-11},
      {"omega_identity", 1e-14},
      {"omega_oracle", 1e-11},
      {"kraus_dominance", 1e-9},
      {"kraus_reduction", 1e-12},
      {"varpi_grid", 1e-7},
      {"kraus_kappa0", 1e-12},
      {"kraus_hot", 1e-6},
      {"kraus_feasibility", 1e-12},
      {"threshold_flip", 0.0},
      {"t1_equivalence", 0.0},
      {"t2_order", 0.0},
      {"ratio_2t2", 0.05},
      {"info_consistency", 1e-10},
      {"mi_entropy_oracle", 1e-10},
      {"classical_vs_measurement_min", 1e-8},
      {"measurement_argmin", 1e-4},
      {"post_measurement_oracle", 1e-10},
      {"discord_ground", 1e-6},
      {"discord_positive", 0.0},
      {"ppt_oracle", 1e-10},
      {"ppt_positive", 0.0},
      {"separability_agreement", 0.0},
      {"te_increasing", 0.0},
      {"te_flip", 0.0},
      {"te_scan", 1e-8},
      {"contour_residual", 1e-8},
      {"contour_separable", 0.0},
      {"contour_monotone", 1e-12},
  };
}

double Tolerances::get(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw domain_error("unknown tolerance: " + name);
  return it->second;
}

void Tolerances::set(const std::string& name, double value) {
  const auto it = values_.find(name);
  if (it == values_.end()) throw domain_error("unknown tolerance: " + name);
  it->second = value;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const auto t_start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.seed = options.seed;

  const auto add = [&](const std::string& name, double residual) {
    const double tol = options.tolerances.get(name);
    report.checks.push_back(CheckResult{name, residual, tol, residual <= tol});
  };

  const std::vector<double> kTs = grid_kT_25();

  // --- Gibbs state: closed form vs spectral oracle, limits, invariants.
  {
    double worst_oracle = 0.0;
    double worst_inv = 0.0;
    double worst_psd = 0.0;
    double worst_assembly = 0.0;
    for (double kappa : kKappasWithZero) {
      for (double kT : kTs) {
        const SystemParams params = SystemParams::make(kappa, kT);
        const GibbsState state = gibbs_state(params);
        worst_oracle = std::max(
            worst_oracle,
            (state.rho - gibbs_state_oracle(params)).frobenius_norm());

        worst_inv = std::max(worst_inv,
                             std::abs(state.rho.trace().real() - 1.0));
        double p_sum = 0.0;
        for (double p : state.p) p_sum += p;
        worst_inv = std::max(worst_inv, std::abs(p_sum - 1.0));
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) {
            const bool x_shaped = (i == j) || (i + j == 3);
            if (!x_shaped) {
              worst_inv = std::max(worst_inv, std::abs(state.rho(i, j)));
            }
            worst_inv = std::max(worst_inv,
                                 std::abs((state.rho(i, j) -
                                           std::conj(state.rho(j, i)))));
          }
        }
        worst_psd = std::max(worst_psd, psd_violation(state.rho));

        const EigenSystem sys = eigensystem(params);
        CMatrix assembled(4, 4);
        for (int i = 0; i < 4; ++i) {
          assembled = assembled + CMatrix::outer(sys.states.column(i)) * state.p[i];
        }
        worst_assembly =
            std::max(worst_assembly, max_abs_diff(state.rho, assembled));
      }
    }
    add("gibbs_oracle", worst_oracle);
    add("state_invariants", worst_inv);
    add("state_psd", worst_psd);
    add("spectral_assembly", worst_assembly);
  }
  {
    const GibbsState cold = gibbs_state(SystemParams::make(1.0, 1e-6));
    const EigenSystem sys = eigensystem(cold.params);
    const CMatrix ground = CMatrix::outer(sys.states.column(0));
    const GibbsState hot = gibbs_state(SystemParams::make(1.0, 1e9));
    const CMatrix mixed = CMatrix::identity(4) * 0.25;
    add("limit_states", std::max(max_abs_diff(cold.rho, ground),
                                 max_abs_diff(hot.rho, mixed)));
  }
  {
    double worst = 0.0;
    for (double kappa : kKappasWithZero) {
      for (double kT : {0.5, 2.0, 10.0, 100.0}) {
        const GibbsRatios a = stable_gibbs_ratios(kappa, kT);
        const GibbsRatios b = naive_gibbs_ratios(kappa, kT);
        worst = std::max({worst, rel_residual(a.Z, b.Z), rel_residual(a.c1, b.c1),
                          rel_residual(a.c2, b.c2), rel_residual(a.c3, b.c3),
                          rel_residual(a.r, b.r)});
      }
    }
    add("naive_coeffs", worst);
  }
  {
    double worst = 0.0;
    for (double kappa : {1.0, 3.0}) {
      const SystemParams params = SystemParams::make(kappa, 1.0);
      const CMatrix h = build_hamiltonian(params);
      const EigenSystem sys = eigensystem(params);
      const EigenDecomposition dec = hermitian_eig(h);
      for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(dec.eigenvalues[i] - sys.energies[i]));
        const CMatrix v = sys.states.column(i);
        worst = std::max(worst, (h * v - v * sys.energies[i]).max_abs());
      }
    }
    add("eigensystem_oracle", worst);

    double comm = 0.0;
    for (double kappa : {0.5, 1.0, 4.0}) {
      const SystemParams params = SystemParams::make(kappa, 1.0);
      const CMatrix v = kron(pauli_x(), pauli_x()) * (2.0 * kappa) +
                        CMatrix::identity(4) * (2.0 * kappa * kappa / params.m);
      const CMatrix sx = kron(pauli_x(), CMatrix::identity(2));
      comm = std::max(comm, (sx * v - v * sx).max_abs());
    }
    add("nondemolition", comm);
  }

  // --- Energy bookkeeping through steps I and III.
  {
    double worst = 0.0;
    for (double kappa : kKappasWithZero) {
      for (double kT : kTs) {
        const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
        const CMatrix h = build_hamiltonian(state.params);
        const double e_closed = mean_energy(state);
        const double e_trace = (h * state.rho).trace().real();
        const EigenSystem sys = eigensystem(state.params);
        double e_spectral = 0.0;
        for (int i = 0; i < 4; ++i) e_spectral += state.p[i] * sys.energies[i];
        worst = std::max({worst, std::abs(e_closed - e_trace),
                          std::abs(e_closed - e_spectral)});

        double e_mid = 0.0;
        for (int alpha : {1, -1}) {
          const MeasurementOutcome out = measure_a(state, alpha);
          e_mid += out.prob * (h * out.post_state).trace().real();
        }
        const double e_mid_closed =
            2.0 * state.params.m - 2.0 * state.params.kappa * state.c1 - state.r;
        worst = std::max(worst, std::abs(e_mid - e_mid_closed));
        worst = std::max(worst, std::abs((e_mid - e_trace) - state.r));
      }
    }
    add("energy_bookkeeping", worst);
  }
  {
    double worst = 0.0;
    for (double kappa : kKappasPositive) {
      std::vector<double> r_values, eb_values, d_values, e_values;
      for (double kT : kTs) {
        const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
        r_values.push_back(state.r);
        eb_values.push_back(optimal_qet(state).E_B_max);
        d_values.push_back(discord(state));
        e_values.push_back(-mean_energy(state));  // nondecreasing energy
      }
      worst = std::max({worst, non_increasing_residual(r_values),
                        non_increasing_residual(eb_values),
                        non_increasing_residual(d_values),
                        non_increasing_residual(e_values)});
    }
    add("monotonic", worst);
  }

  // --- Protocol traces vs closed forms; state validity on the grid.
  {
    double worst = 0.0;
    double worst_state = 0.0;
    std::vector<Point> points = kMcPoints;
    for (double kappa : kKappasWithZero) {
      for (std::size_t i = 0; i < kTs.size(); i += 4) {
        points.push_back(Point{kappa, kTs[i]});
      }
    }
    for (const Point& pt : points) {
      const GibbsState state = gibbs_state(SystemParams::make(pt.kappa, pt.kT));
      for (double theta : {0.0, 0.3, 1.1, 2.5}) {
        const ProtocolTrace trace = run_protocol(state, theta);
        worst = std::max(worst, std::abs(trace.avg_energy_final -
                                         mean_energy_after_protocol(state, theta)));
        worst = std::max(worst, std::abs(trace.extracted -
                                         extractable_energy(state, theta)));
        for (const ProtocolOutcome& out : trace.outcomes) {
          worst_state = std::max(worst_state,
                                 std::abs(out.rho_mid.trace().real() - 1.0));
          worst_state = std::max(worst_state,
                                 std::abs(out.rho_final.trace().real() - 1.0));
          worst_state = std::max(worst_state, psd_violation(out.rho_mid));
          worst_state = std::max(worst_state, psd_violation(out.rho_final));
        }
      }
    }
    add("protocol_trace", worst);
    add("protocol_states", worst_state);
  }
  {
    double worst = 0.0;
    for (double kappa : kKappasWithZero) {
      for (double kT : kTs) {
        const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
        const QetCoefficients ab = qet_coefficients(state);
        const QetCoefficients ab_s = qet_coefficients_s_form(state);
        worst = std::max({worst, std::abs(ab.a - ab_s.a), std::abs(ab.b - ab_s.b)});
      }
    }
    add("eb_dual_form", worst);
  }
  {
    double min_eb = 1e300;
    for (double kappa : kKappasPositive) {
      for (double kT : SweepSpec::logspace(1e-3, 1e6, 40)) {
        if (kT > 1e6) continue;
        const GibbsState state =
            gibbs_state(SystemParams::make(kappa, std::min(kT, 1e6)));
        min_eb = std::min(min_eb, optimal_qet(state).E_B_max);
      }
    }
    add("qet_positivity", std::max(0.0, -min_eb) + (min_eb > 0.0 ? 0.0 : 1.0));
  }
  {
    double worst = 0.0;
    for (const Point& pt : kMcPoints) {
      const GibbsState state = gibbs_state(SystemParams::make(pt.kappa, pt.kT));
      const QetResult res = optimal_qet(state);
      const Min1D numeric = refine_min_1d(
          [&](double theta) { return -extractable_energy(state, theta); }, 0.0,
          kPi, 2000);
      worst = std::max(worst, std::abs(res.E_B_max + numeric.value));
    }
    add("qet_1d_oracle", worst);
  }
  {
    const GibbsState state = gibbs_state(SystemParams::make(1.0, 1e-6));
    const double expected = (std::sqrt(10.0) - 3.0) / std::sqrt(2.0);
    add("qet_ground", std::abs(optimal_qet(state).E_B_max - expected));
  }

  // --- Passivity of single unitaries on B (Monte-Carlo, seeded).
  {
    const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
    const double base = mean_energy(state);
    const std::size_t n = 10000;
    std::vector<double> extracted(n);
    std::vector<double> w_values(n);
    parallel_for(n, [&](std::size_t i) {
      Rng rng(splitmix64(options.seed ^ (0x9e3779b97f4a7c15ULL + i)));
      const double u = rng.uniform(0.0, 2.0 * kPi);
      const double v = rng.uniform(0.0, 2.0 * kPi);
      const double w = rng.uniform(0.0, 2.0 * kPi);
      extracted[i] = base - energy_after_unitary_on_b(state, u, v, w);
      w_values[i] = w;
    });
    double residual = std::max(0.0, base - energy_after_unitary_on_b(state, 0.0, 0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      residual = std::max(residual, extracted[i]);
      if (extracted[i] > -1e-15) {
        const double w_mod = std::fmod(std::abs(w_values[i]), 2.0 * kPi);
        if (std::min(w_mod, 2.0 * kPi - w_mod) >= 1e-9) residual += 1.0;
      }
    }
    add("passivity", residual);
  }
  {
    double worst = 0.0;
    Rng rng(splitmix64(options.seed ^ 0x51ed270b4c9fULL));
    for (const Point& pt : kMcPoints) {
      const GibbsState state = gibbs_state(SystemParams::make(pt.kappa, pt.kT));
      const CMatrix h = build_hamiltonian(state.params);
      for (int trial = 0; trial < 8; ++trial) {
        const double u = trial == 0 ? 1.0 : rng.uniform(0.0, 2.0 * kPi);
        const double v = trial == 0 ? 2.0 : rng.uniform(0.0, 2.0 * kPi);
        const double w = trial == 0 ? 3.0 : rng.uniform(0.0, 2.0 * kPi);
        const CMatrix op = kron(CMatrix::identity(2), unitary_w(u, v, w));
        const double traced = (h * op * state.rho * op.adjoint()).trace().real();
        worst = std::max(worst, std::abs(traced -
                                         energy_after_unitary_on_b(state, u, v, w)));
      }
    }
    add("unitary_oracle", worst);
  }

  // --- Kraus channel functional and its analytic maximum.
  {
    const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
    std::array<CMatrix, 4> id{CMatrix::identity(2), CMatrix(2, 2), CMatrix(2, 2),
                              CMatrix(2, 2)};
    add("omega_identity", std::abs(omega(state, KrausVectorZ::from_kraus(id))));
  }
  {
    double worst = 0.0;
    Rng rng(splitmix64(options.seed ^ 0x7af3cc9d11ULL));
    for (const Point& pt : kMcPoints) {
      const GibbsState state = gibbs_state(SystemParams::make(pt.kappa, pt.kT));
      const CMatrix h = build_hamiltonian(state.params);
      const double base = mean_energy(state);
      for (int trial = 0; trial < 20; ++trial) {
        const KrausVectorZ z = random_feasible_z(rng);
        const auto kraus = z.to_kraus();
        CMatrix after(4, 4);
        for (const CMatrix& k : kraus) {
          const CMatrix op = kron(CMatrix::identity(2), k);
          after = after + op * state.rho * op.adjoint();
        }
        const double traced = base - (h * after).trace().real();
        worst = std::max(worst, std::abs(traced - omega(state, z)));
      }
    }
    add("omega_oracle", worst);
  }
  {
    double dominance = 0.0;
    double reduction = 0.0;
    double feasibility = 0.0;
    for (std::size_t p = 0; p < kMcPoints.size(); ++p) {
      const GibbsState state =
          gibbs_state(SystemParams::make(kMcPoints[p].kappa, kMcPoints[p].kT));
      const ExtractionResult best = solve_max_omega(state);
      feasibility = std::max(
          feasibility, returned_kraus_is_feasible(best) ? 0.0 : 1.0);
      // The optimal channel itself must attain the analytic maximum.
      dominance = std::max(dominance,
                           std::abs(omega(state, KrausVectorZ::from_kraus(best.kraus)) -
                                    best.omega_max));
      const std::size_t n = 10000;
      std::vector<double> excess(n);
      std::vector<double> red(n);
      parallel_for(n, [&](std::size_t i) {
        Rng rng(splitmix64(options.seed ^ (p * 0xd1342543de82ef95ULL + i + 17)));
        const KrausVectorZ z = random_feasible_z(rng);
        const double om = omega(state, z);
        excess[i] = om - best.omega_max;
        red[i] = om - omega(state, reduce_to_canonical(z));
      });
      for (std::size_t i = 0; i < n; ++i) {
        dominance = std::max(dominance, excess[i]);
        reduction = std::max(reduction, red[i]);
      }
    }
    add("kraus_dominance", dominance);
    add("kraus_reduction", reduction);
    add("kraus_feasibility", feasibility);
  }
  {
    double worst = 0.0;
    std::vector<Point> points = kMcPoints;
    points.push_back({1.0, 0.5});  // zero branch
    for (const Point& pt : points) {
      const GibbsState state = gibbs_state(SystemParams::make(pt.kappa, pt.kT));
      const ExtractionResult best = solve_max_omega(state);
      const Min2D grid = refine_min_2d(
          [&](double sigma, double delta) { return -varpi(state, sigma, delta); },
          -kPi, kPi, -kPi, kPi);
      worst = std::max(worst, std::abs(-grid.value - best.omega_max));
    }
    add("varpi_grid", worst);
  }
  {
    double worst = 0.0;
    for (double kT : {0.5, 1.0, 3.0}) {
      const GibbsState state = gibbs_state(SystemParams::make(0.0, kT));
      worst = std::max(worst, std::abs(solve_max_omega(state).omega_max -
                                       (1.0 - state.r)));
    }
    add("kraus_kappa0", worst);
    const GibbsState hot = gibbs_state(SystemParams::make(1.0, 1e9));
    add("kraus_hot", std::abs(solve_max_omega(hot).omega_max - 1.0));
  }

  // --- Temperature thresholds and regimes.
  {
    double flip = 0.0;
    double order = 0.0;
    double ratio = 0.0;
    double equivalence = 0.0;
    for (double kappa : {0.25, 1.0, 4.0}) {
      const std::optional<double> t1 = threshold_t1(kappa);
      if (!t1 || !(*t1 > 0.0)) {
        flip += 1.0;
        continue;
      }
      const double eps = 1e-8 * std::max(1.0, *t1);
      const auto branch_at = [&](double kT) {
        return solve_max_omega(gibbs_state(SystemParams::make(kappa, kT))).branch;
      };
      if (branch_at(*t1 - eps) != Branch::zero) flip += 1.0;
      if (branch_at(*t1 + eps) != Branch::positive) flip += 1.0;

      const std::optional<double> t2 = threshold_t2(kappa);
      if (!t2 || !(*t2 > *t1)) {
        order += 1.0;
        continue;
      }
      const double mid = std::sqrt(*t1 * *t2);
      const GibbsState in_window = gibbs_state(SystemParams::make(kappa, mid));
      const double eb_mid = optimal_qet(in_window).E_B_max;
      const double om_mid = solve_max_omega(in_window).omega_max;
      if (!(eb_mid > om_mid) || !(om_mid > 0.0)) order += 1.0;

      const GibbsState beyond = gibbs_state(SystemParams::make(kappa, 2.0 * *t2));
      const double eb = optimal_qet(beyond).E_B_max;
      const double om = solve_max_omega(beyond).omega_max;
      if (!(om > eb)) order += 1.0;
      ratio = std::max(ratio, eb / om);

      // Regime bands must be contiguous in kT.
      const std::vector<RegimePoint> labels = classify_regimes(
          {kappa}, SweepSpec::logspace(std::max(1e-3, *t1 / 10.0), *t2 * 10.0, 60));
      int transitions = 0;
      for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i].regime != labels[i - 1].regime) ++transitions;
        if (static_cast<int>(labels[i].regime) <
            static_cast<int>(labels[i - 1].regime)) {
          order += 1.0;  // regressed to an earlier regime
        }
      }
      if (transitions > 2) order += 1.0;
    }
    add("threshold_flip", flip);
    add("t2_order", order);
    add("ratio_2t2", ratio);

    Rng rng(splitmix64(options.seed ^ 0xabcdef1234ULL));
    for (int i = 0; i < 20; ++i) {
      const double kappa = rng.uniform(0.05, 5.0);
      const double kT = std::pow(10.0, rng.uniform(-2.0, 2.0));
      const GibbsRatios g = stable_gibbs_ratios(kappa, kT);
      const bool product_form = 2.0 * kappa * g.c1 * g.r < 1.0 - g.r * g.r;
      const ScaledHyperbolics h = scaled_hyperbolics(kappa, kT);
      const double lhs = kappa * h.sh_x + h.m * h.sh_y;
      const bool hyperbolic_form = lhs * lhs < 2.0 * h.m * h.m * h.ch_y * h.zs;
      if (product_form != hyperbolic_form) equivalence += 1.0;
    }
    add("t1_equivalence", equivalence);
  }

  // --- Correlation measures.
  {
    double info = 0.0;
    double oracle = 0.0;
    double ppt = 0.0;
    double ppt_pos = 0.0;
    double min_discord = 1e300;
    for (double kappa : kKappasWithZero) {
      for (double kT : kTs) {
        const SystemParams params = SystemParams::make(kappa, kT);
        const GibbsState state = gibbs_state(params);
        const double i_closed = mutual_information(state);
        const double c_closed = classical_correlation(state);
        const double d = discord(state);

        // Corrected-sign display identity for the discord.
        const double display = binary_h(state.r) +
                               binary_h(std::min(1.0, std::hypot(state.r, state.c1))) -
                               std::log2(state.Z) -
                               (mean_energy(state) / kT) * kLog2E;
        info = std::max(info, std::abs(d - display));
        info = std::max(info, std::abs(i_closed - (c_closed + d)));

        const EigenDecomposition full = hermitian_eig(state.rho);
        const EigenDecomposition part_a =
            hermitian_eig(partial_trace(state.rho, Subsystem::A));
        const EigenDecomposition part_b =
            hermitian_eig(partial_trace(state.rho, Subsystem::B));
        const double i_oracle = entropy_bits(part_a.eigenvalues) +
                                entropy_bits(part_b.eigenvalues) -
                                entropy_bits(full.eigenvalues);
        oracle = std::max(oracle, std::abs(i_closed - i_oracle));

        const std::array<double, 4> analytic = ppt_eigenvalues(params);
        std::array<double, 4> sorted = analytic;
        std::sort(sorted.begin(), sorted.end());
        const EigenDecomposition pt = hermitian_eig(partial_transpose_b(state.rho));
        for (int i = 0; i < 4; ++i) {
          ppt = std::max(ppt, std::abs(sorted[i] - pt.eigenvalues[i]));
        }
        ppt_pos = std::max({ppt_pos, -analytic[1], -analytic[2], -analytic[3]});

        if (kappa > 0.0) min_discord = std::min(min_discord, d);
      }
    }
    add("info_consistency", info);
    add("mi_entropy_oracle", oracle);
    add("ppt_oracle", ppt);
    add("ppt_positive", std::max(0.0, ppt_pos));
    add("discord_positive", std::max(0.0, -min_discord) +
                                (min_discord > 0.0 ? 0.0 : 1.0));
  }
  {
    double value = 0.0;
    double argmin = 0.0;
    double eigs = 0.0;
    const std::vector<Point> points = {{1.0, 2.0}, {0.25, 10.0}, {2.0, 1.0},
                                       {0.5, 5.0},  {4.0, 0.3},  {0.5, 0.2}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      const GibbsState state =
          gibbs_state(SystemParams::make(points[i].kappa, points[i].kT));
      const bool full_domain = i == 0;  // one full-domain spot check
      const MeasurementMin num = min_conditional_entropy(state, full_domain);
      value = std::max(value, std::abs(classical_correlation(state) -
                                       (binary_h(state.r) - num.min_value)));
      argmin = std::max(argmin, std::abs(num.argmin.theta - 0.5 * kPi));
      const double phi_mod = std::fmod(num.argmin.phi, kPi);
      argmin = std::max(argmin, std::min(phi_mod, kPi - phi_mod));

      for (const MeasurementAngles& angles :
           {MeasurementAngles{0.7, 0.3}, MeasurementAngles{1.2, 2.0},
            MeasurementAngles{2.2, 4.5}}) {
        for (int k = 0; k < 2; ++k) {
          const PostMeasurementEigs closed = post_measurement_eigs(state, angles, k);
          const CMatrix proj =
              kron(CMatrix::identity(2), measurement_projector(angles, k));
          const CMatrix raw = proj * state.rho * proj;
          const double q = raw.trace().real();
          const EigenDecomposition dec = hermitian_eig(raw * (1.0 / q));
          eigs = std::max(eigs, std::abs(q - closed.q));
          eigs = std::max(eigs, std::abs(dec.eigenvalues[3] - closed.lambda_hi));
          eigs = std::max(eigs, std::abs(dec.eigenvalues[2] - closed.lambda_lo));
        }
      }
    }
    add("classical_vs_measurement_min", value);
    add("measurement_argmin", argmin);
    add("post_measurement_oracle", eigs);

    const GibbsState cold = gibbs_state(SystemParams::make(1.0, 1e-6));
    add("discord_ground",
        std::abs(discord(cold) - binary_h(1.0 / cold.params.m)));
  }

  // --- Entanglement thresholds.
  {
    double increasing = 0.0;
    double flip = 0.0;
    double scan = 0.0;
    double prev = 0.0;
    for (double kappa : {0.5, 1.0, 2.0, 4.0}) {
      const double te = *entanglement_threshold_te(kappa);
      if (te <= prev) increasing += 1.0;
      prev = te;
      const double eps = 1e-8 * std::max(1.0, te);
      if (is_separable(SystemParams::make(kappa, te - eps))) flip += 1.0;
      if (!is_separable(SystemParams::make(kappa, te + eps))) flip += 1.0;
    }
    add("te_increasing", increasing);
    add("te_flip", flip);

    // Independent scan oracle on the boolean verdict only.
    const double te1 = *entanglement_threshold_te(1.0);
    double lo = std::max(kMinTemperature, te1 - 0.05);
    double hi = te1 + 0.05;
    for (double kT = lo; kT < hi; kT += 1e-4) {
      if (!is_separable(SystemParams::make(1.0, kT)) &&
          is_separable(SystemParams::make(1.0, kT + 1e-4))) {
        lo = kT;
        hi = kT + 1e-4;
        break;
      }
    }
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (is_separable(SystemParams::make(1.0, mid))) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    scan = std::abs(0.5 * (lo + hi) - te1);
    add("te_scan", scan);

    double agreement = 0.0;
    for (double kappa : SweepSpec::logspace(0.05, 8.0, 40)) {
      for (double kT : SweepSpec::logspace(1e-2, 1e2, 40)) {
        const SystemParams params = SystemParams::make(kappa, kT);
        const EigenDecomposition pt = hermitian_eig(
            partial_transpose_b(gibbs_state(params).rho));
        const bool numeric = pt.eigenvalues.front() >= -1e-12;
        if (numeric != is_separable(params)) agreement += 1.0;
      }
    }
    add("separability_agreement", agreement);
  }

  // --- Constant-C contours and the dissonance-energy relationship.
  {
    double residual = 0.0;
    double separable = 0.0;
    double monotone = 0.0;
    for (double target : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const ContourTrace curve = dissonance_energy_curve(target);
      if (curve.points.empty()) {
        separable += 1.0;
        continue;
      }
      for (const ContourPoint& p : curve.points) {
        const GibbsState state =
            gibbs_state(SystemParams::make(p.kappa, p.kT));
        residual = std::max(residual,
                            std::abs(classical_correlation(state) - target));
        if (!p.separable) separable += 1.0;
      }
      // kT descends along the curve, so D and E_B must both ascend.
      for (std::size_t i = 1; i < curve.points.size(); ++i) {
        monotone = std::max(monotone,
                            curve.points[i - 1].D - curve.points[i].D);
        monotone = std::max(monotone,
                            curve.points[i - 1].E_B - curve.points[i].E_B);
      }
    }
    add("contour_residual", residual);
    add("contour_separable", separable);
    add("contour_monotone", monotone);
  }

  report.all_pass = true;
  for (const CheckResult& check : report.checks) {
    if (!check.pass) report.all_pass = false;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return report;
}

}  // namespace qet
