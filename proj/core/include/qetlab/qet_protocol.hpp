#pragma once

#include <array>

#include "qetlab/cmatrix.hpp"
#include "qetlab/spin_model.hpp"

// Three-step energy teleportation protocol: sigma_x measurement on A,
// classical communication of the outcome alpha, conditioned local
// unitary U(alpha) on B.
namespace qet {

struct MeasurementOutcome {
  CMatrix post_state;  // rho_I(T, alpha)
  double prob;         // q(alpha)
};

// Projective sigma_x measurement of particle A, outcome alpha = +-1.
MeasurementOutcome measure_a(const GibbsState& state, int alpha);

// E_A = <H_I> - <H> = r, the average energy deposited by the
// measurement device.
double energy_injected_ea(const GibbsState& state);

// U(alpha) = I cos(theta) - i alpha sigma_y sin(theta); real rotation.
CMatrix conditional_unitary(int alpha, double theta);

struct ProtocolOutcome {
  int alpha;
  double prob;
  CMatrix rho_mid;    // after step I
  CMatrix rho_final;  // after step III
  double energy_mid;
  double energy_final;
};

struct ProtocolTrace {
  std::array<ProtocolOutcome, 2> outcomes;  // alpha = +1 then -1
  double avg_energy_mid;                    // <H_I>
  double avg_energy_final;                  // <H_III>
  double extracted;                         // E_B(theta)
};

// Explicit density-matrix run of all three steps at angle theta.
ProtocolTrace run_protocol(const GibbsState& state, double theta);

struct QetCoefficients {
  double a;  // kappa r + (c2 - c1)/2
  double b;  // (kappa^2 + m^2) r - kappa (c2 - c1)
};

QetCoefficients qet_coefficients(const GibbsState& state);

// Same coefficients through the sinh(x)/x route; agrees with
// qet_coefficients to roundoff and cross-checks both derivations.
QetCoefficients qet_coefficients_s_form(const GibbsState& state);

// Outcome-averaged closed form <H_III>(theta).
double mean_energy_after_protocol(const GibbsState& state, double theta);

// E_B(theta) = a sin(2 theta) - b (1 - cos(2 theta)).
double extractable_energy(const GibbsState& state, double theta);

struct QetResult {
  double E_A;
  double a;
  double b;
  double theta_o;
  double E_B_max;
  std::array<double, 2> outcome_probs;  // q(+1), q(-1)
};

// Maximizing branch of tan(2 theta_o) = a/b: a >= 0 and b > 0 put
// 2 theta_o = atan2(a, b) in [0, pi/2]. The maximum is evaluated as
// a^2 / (hypot(a, b) + b), algebraically sqrt(a^2+b^2) - b but exact
// near zero, so positivity survives to very high temperature.
QetResult optimal_qet(const GibbsState& state);

}  // namespace qet
