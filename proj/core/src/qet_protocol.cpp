#include "qetlab/qet_protocol.hpp"

#include <cmath>

#include "qetlab/errors.hpp"

namespace qet {

namespace {

CMatrix projector_pi(int alpha) {
  if (alpha != 1 && alpha != -1) {
    throw domain_error("measurement outcome alpha must be +1 or -1");
  }
  return (CMatrix::identity(2) + pauli_x() * static_cast<double>(alpha)) * 0.5;
}

// e^{-x} sinh(t)/t for t in {x, y}, sharing the scaling of
// ScaledHyperbolics; series fallback keeps t -> 0 finite.
double scaled_s(double sh_t, double t, double e_mx) {
  if (t < 1e-4) return e_mx * (1.0 + t * t / 6.0);
  return sh_t / t;
}

}  // namespace

MeasurementOutcome measure_a(const GibbsState& state, int alpha) {
  const CMatrix p4 = kron(projector_pi(alpha), CMatrix::identity(2));
  const CMatrix num = p4 * state.rho * p4;
  const double q = num.trace().real();
  return MeasurementOutcome{num * (1.0 / q), q};
}

double energy_injected_ea(const GibbsState& state) { return state.r; }

CMatrix conditional_unitary(int alpha, double theta) {
  if (alpha != 1 && alpha != -1) {
    throw domain_error("measurement outcome alpha must be +1 or -1");
  }
  const Complex minus_i{0.0, -1.0};
  return CMatrix::identity(2) * std::cos(theta) +
         pauli_y() * (minus_i * static_cast<double>(alpha) * std::sin(theta));
}

ProtocolTrace run_protocol(const GibbsState& state, double theta) {
  const CMatrix h = build_hamiltonian(state.params);
  ProtocolTrace trace{};
  int slot = 0;
  double avg_mid = 0.0;
  double avg_final = 0.0;
  for (int alpha : {1, -1}) {
    const MeasurementOutcome mid = measure_a(state, alpha);
    const CMatrix op = kron(projector_pi(alpha), conditional_unitary(alpha, theta));
    const CMatrix raw = op * state.rho * op.adjoint();
    const double q = raw.trace().real();
    const CMatrix rho_final = raw * (1.0 / q);

    ProtocolOutcome out{};
    out.alpha = alpha;
    out.prob = mid.prob;
    out.rho_mid = mid.post_state;
    out.rho_final = rho_final;
    out.energy_mid = (h * mid.post_state).trace().real();
    out.energy_final = (h * rho_final).trace().real();
    avg_mid += out.prob * out.energy_mid;
    avg_final += out.prob * out.energy_final;
    trace.outcomes[slot++] = out;
  }
  trace.avg_energy_mid = avg_mid;
  trace.avg_energy_final = avg_final;
  trace.extracted = avg_mid - avg_final;
  return trace;
}

QetCoefficients qet_coefficients(const GibbsState& state) {
  const double k = state.params.kappa;
  const double m = state.params.m;
  const double diff = state.c2 - state.c1;
  return QetCoefficients{
      k * state.r + 0.5 * diff,
      (k * k + m * m) * state.r - k * diff,
  };
}

QetCoefficients qet_coefficients_s_form(const GibbsState& state) {
  const ScaledHyperbolics h =
      scaled_hyperbolics(state.params.kappa, state.params.kT);
  const double k = state.params.kappa;
  const double kT = state.params.kT;
  const double ssx = scaled_s(h.sh_x, h.x, h.e_mx);
  const double ssy = scaled_s(h.sh_y, h.y, h.e_mx);
  const double pref = 4.0 / (state.Z * kT);
  return QetCoefficients{
      pref * k * (ssx - ssy),
      pref * (2.0 * k * k * ssy + (k * k + h.m * h.m) * ssx),
  };
}

double mean_energy_after_protocol(const GibbsState& state, double theta) {
  const double k = state.params.kappa;
  const double m = state.params.m;
  const double c2t = std::cos(2.0 * theta);
  const double s2t = std::sin(2.0 * theta);
  return 2.0 * m +
         0.5 * (state.c2 - state.c1) * (2.0 * k * c2t - s2t) -
         state.r * (k * s2t + (m * m + k * k) * c2t);
}

double extractable_energy(const GibbsState& state, double theta) {
  const QetCoefficients ab = qet_coefficients(state);
  const double st = std::sin(theta);
  // 1 - cos(2 theta) = 2 sin^2(theta), exact near theta = 0.
  return ab.a * std::sin(2.0 * theta) - ab.b * 2.0 * st * st;
}

QetResult optimal_qet(const GibbsState& state) {
  const QetCoefficients ab = qet_coefficients(state);
  QetResult res{};
  res.E_A = state.r;
  res.a = ab.a;
  res.b = ab.b;
  if (ab.a == 0.0 && ab.b == 0.0) {
    res.theta_o = 0.0;
    res.E_B_max = 0.0;
  } else {
    res.theta_o = 0.5 * std::atan2(ab.a, ab.b);
    // sqrt(a^2 + b^2) - b without cancellation; keeps E_B positive down
    // to the underflow of a^2.
    res.E_B_max = ab.a * ab.a / (std::hypot(ab.a, ab.b) + ab.b);
  }
  res.outcome_probs = {measure_a(state, 1).prob, measure_a(state, -1).prob};
  return res;
}

}  // namespace qet
