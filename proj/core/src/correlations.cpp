#include "qetlab/correlations.hpp"

#include <cmath>

#include "qetlab/errors.hpp"
#include "qetlab/optimize.hpp"
#include "qetlab/rootfind.hpp"

namespace qet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2E = 1.4426950408889634074;  // log2(e)

// Separability margin, proportional to lambda_1-: positive means
// separable. Scaled by e^{-x} so it is evaluable at any kT > 0.
double separability_margin(double kappa, double kT) {
  const ScaledHyperbolics h = scaled_hyperbolics(kappa, kT);
  return h.m * h.ch_y - kappa * h.sh_x;
}

// The correlation measures are differences of entropy-scale terms and can
// land a few ulps below zero when the true value is under double
// resolution (very high kT). Snap those to zero; anything below -1e-12
// would be a real formula error and passes through to fail the checks.
double clamp_entropy_noise(double v) {
  return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

}  // namespace

double binary_h(double x) {
  double ax = std::abs(x);
  if (ax > 1.0 + 1e-12) {
    throw domain_error("binary_h requires |x| <= 1");
  }
  ax = std::min(ax, 1.0);
  const double p = 0.5 * (1.0 + ax);
  const double q = 0.5 * (1.0 - ax);
  double s = 0.0;
  if (p > 0.0) s -= p * std::log2(p);
  if (q > 0.0) s -= q * std::log2(q);
  return s;
}

CMatrix measurement_projector(const MeasurementAngles& angles, int k) {
  if (k != 0 && k != 1) throw domain_error("measurement outcome must be 0 or 1");
  const double c = std::cos(0.5 * angles.theta);
  const double s = std::sin(0.5 * angles.theta);
  const Complex phase{std::cos(angles.phi), std::sin(angles.phi)};
  CMatrix ket(2, 1);
  if (k == 0) {
    ket(0, 0) = c;
    ket(1, 0) = phase * s;
  } else {
    ket(0, 0) = s;
    ket(1, 0) = -phase * c;
  }
  return CMatrix::outer(ket);
}

PostMeasurementEigs post_measurement_eigs(const GibbsState& state,
                                          const MeasurementAngles& angles,
                                          int k) {
  if (k != 0 && k != 1) throw domain_error("measurement outcome must be 0 or 1");
  const double ct = std::cos(angles.theta);
  const double st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi);
  const double sp = std::sin(angles.phi);
  const double sign = (k == 0) ? -1.0 : 1.0;

  const double big_a = (state.c1 * state.c1 * cp * cp +
                        state.c2 * state.c2 * sp * sp) * st * st +
                       state.c3 * state.c3 * ct * ct + state.r * state.r;
  // A -+ 2 r c3 cos(theta) = (c1^2 cos^2 phi + c2^2 sin^2 phi) sin^2 theta
  // + (c3 cos theta -+ r)^2 >= 0; the max(0, .) guards roundoff only.
  const double radicand =
      std::max(0.0, big_a + sign * 2.0 * state.r * state.c3 * ct);
  const double q = 0.5 * (1.0 + sign * state.r * ct);
  const double root = std::sqrt(radicand);

  PostMeasurementEigs out{};
  out.q = q;
  out.lambda_lo = 0.5 - root / (4.0 * q);
  out.lambda_hi = 0.5 + root / (4.0 * q);
  return out;
}

double avg_conditional_entropy(const GibbsState& state,
                                  const MeasurementAngles& angles) {
  double total = 0.0;
  for (int k = 0; k < 2; ++k) {
    const PostMeasurementEigs e = post_measurement_eigs(state, angles, k);
    if (e.q <= 0.0) continue;  // outcome of probability zero
    const double arg = std::min(1.0, (e.lambda_hi - e.lambda_lo));
    total += e.q * binary_h(arg);
  }
  return total;
}

MeasurementMin min_conditional_entropy(const GibbsState& state, bool full_domain) {
  const double phi_hi = full_domain ? 2.0 * kPi : 0.5 * kPi;
  const Min2D m = refine_min_2d(
      [&](double theta, double phi) {
        return avg_conditional_entropy(state, MeasurementAngles{theta, phi});
      },
      0.0, kPi, 0.0, phi_hi);
  return MeasurementMin{m.value, MeasurementAngles{m.x, m.y}};
}

double mutual_information(const GibbsState& state) {
  const double avg_h = mean_energy(state);
  return clamp_entropy_noise(2.0 * binary_h(state.r) - std::log2(state.Z) -
                             (avg_h / state.params.kT) * kLog2E);
}

double classical_correlation(const GibbsState& state) {
  const double arg =
      std::min(1.0, std::hypot(state.r, state.c1));
  return clamp_entropy_noise(binary_h(state.r) - binary_h(arg));
}

double discord(const GibbsState& state) {
  return clamp_entropy_noise(mutual_information(state) -
                             classical_correlation(state));
}

std::array<double, 4> ppt_eigenvalues(const SystemParams& params) {
  const ScaledHyperbolics h = scaled_hyperbolics(params.kappa, params.kT);
  const double denom = 2.0 * h.m * h.zs;
  const double root =
      std::sqrt(h.m * h.m * h.sh_y * h.sh_y + h.sh_x * h.sh_x);
  return {
      (h.m * h.ch_y - params.kappa * h.sh_x) / denom,  // lambda_1-
      (h.m * h.ch_y + params.kappa * h.sh_x) / denom,  // lambda_1+
      (h.m * h.ch_x - root) / denom,                   // lambda_2-
      (h.m * h.ch_x + root) / denom,                   // lambda_2+
  };
}

bool is_separable(const SystemParams& params) {
  return ppt_eigenvalues(params)[0] >= -1e-12;
}

std::optional<double> entanglement_threshold_te(double kappa) {
  if (!(kappa >= 0.0)) throw domain_error("kappa must be >= 0");
  if (kappa == 0.0) return std::nullopt;  // separable at every kT

  const auto margin = [kappa](double kT) {
    return separability_margin(kappa, kT);
  };
  double lo = 1e-4, hi = 1e4;
  std::optional<Bracket> bracket = scan_for_bracket(margin, lo, hi, 200, true);
  while (!bracket && (lo > kMinTemperature || hi < kMaxTemperature)) {
    lo = std::max(kMinTemperature, lo / 100.0);
    hi = std::min(kMaxTemperature, hi * 100.0);
    bracket = scan_for_bracket(margin, lo, hi, 400, true);
  }
  if (!bracket) {
    throw numerical_error("no separability transition found for kappa=" +
                          std::to_string(kappa));
  }
  return bisect(margin, *bracket, 1e-12);
}

CorrelationReport correlation_report(const GibbsState& state) {
  CorrelationReport rep{};
  rep.mutual_info = mutual_information(state);
  rep.classical = classical_correlation(state);
  rep.discord = clamp_entropy_noise(rep.mutual_info - rep.classical);
  rep.ppt_eigs = ppt_eigenvalues(state.params);
  rep.separable = rep.ppt_eigs[0] >= -1e-12;
  rep.marginal_entropy = binary_h(state.r);
  return rep;
}

}  // namespace qet
