#include "qetlab/local_extraction.hpp"

#include <cmath>
#include <string>

#include "qetlab/correlations.hpp"
#include "qetlab/errors.hpp"
#include "qetlab/qet_protocol.hpp"
#include "qetlab/rootfind.hpp"

namespace qet {

namespace {

Complex dot(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(const std::array<Complex, 4>& a) { return dot(a, a).real(); }

// Sign of the branch condition 2 kappa c1 r - (1 - r^2) in scaled
// hyperbolics; positive means the zero branch. Identical, up to the
// positive factor m^2 zs^2, to the saturation condition
// (kappa sinh x + m sinh y)^2 - 2 m^2 cosh y (cosh x + cosh y).
double branch_margin(double kappa, double kT) {
  const ScaledHyperbolics h = scaled_hyperbolics(kappa, kT);
  const double lhs = kappa * h.sh_x + h.m * h.sh_y;
  return lhs * lhs - 2.0 * h.m * h.m * h.ch_y * h.zs;
}

}  // namespace

KrausVectorZ KrausVectorZ::from_kraus(const std::array<CMatrix, 4>& kraus) {
  KrausVectorZ z{};
  for (int k = 0; k < 4; ++k) {
    if (kraus[k].rows() != 2 || kraus[k].cols() != 2) {
      throw dimension_error("Kraus operators must be 2x2");
    }
    z.s[k] = kraus[k](0, 0);
    z.t[k] = kraus[k](0, 1);
    z.u[k] = kraus[k](1, 0);
    z.v[k] = kraus[k](1, 1);
  }
  return z;
}

std::array<CMatrix, 4> KrausVectorZ::to_kraus() const {
  std::array<CMatrix, 4> kraus{CMatrix(2, 2), CMatrix(2, 2), CMatrix(2, 2),
                               CMatrix(2, 2)};
  for (int k = 0; k < 4; ++k) {
    kraus[k](0, 0) = s[k];
    kraus[k](0, 1) = t[k];
    kraus[k](1, 0) = u[k];
    kraus[k](1, 1) = v[k];
  }
  return kraus;
}

void check_feasible(const KrausVectorZ& z, double tol) {
  const double c1 = std::abs(norm2(z.s) + norm2(z.u) - 1.0);
  if (c1 > tol) {
    throw contract_violation("infeasible channel: |s.s + u.u - 1| = " +
                             std::to_string(c1));
  }
  const double c2 = std::abs(norm2(z.t) + norm2(z.v) - 1.0);
  if (c2 > tol) {
    throw contract_violation("infeasible channel: |t.t + v.v - 1| = " +
                             std::to_string(c2));
  }
  const double c3 = std::abs(dot(z.s, z.t) + dot(z.u, z.v));
  if (c3 > tol) {
    throw contract_violation("infeasible channel: |s.t + u.v| = " +
                             std::to_string(c3));
  }
}

double energy_after_unitary_on_b(const GibbsState& state, double u, double v,
                                 double w) {
  const double k = state.params.kappa;
  const double m = state.params.m;
  const double cw = std::cos(w);
  return 2.0 * m - state.r * (1.0 + cw) +
         k * state.c1 * std::cos(v) * (1.0 - cw) -
         k * state.c1 * std::cos(u) * (1.0 + cw);
}

CMatrix unitary_w(double u, double v, double w) {
  const double ch = std::cos(0.5 * w);
  const double sh = std::sin(0.5 * w);
  const Complex eu{std::cos(0.5 * u), std::sin(0.5 * u)};
  const Complex ev{std::cos(0.5 * v), std::sin(0.5 * v)};
  CMatrix m(2, 2);
  m(0, 0) = eu * ch;
  m(0, 1) = -std::conj(ev) * sh;
  m(1, 0) = ev * sh;
  m(1, 1) = std::conj(eu) * ch;
  return m;
}

double omega(const GibbsState& state, const KrausVectorZ& z) {
  check_feasible(z);
  const double kc1 = state.params.kappa * state.c1;
  const double cross = 2.0 * dot(z.s, z.v).real() + 2.0 * dot(z.u, z.t).real();
  return (1.0 - state.r) * norm2(z.u) - (1.0 + state.r) * norm2(z.t) +
         kc1 * (cross - 2.0);
}

double varpi(const GibbsState& state, double sigma, double delta) {
  const double kc1 = state.params.kappa * state.c1;
  return std::sin(sigma) * std::sin(delta) +
         state.r * std::cos(sigma) * std::cos(delta) +
         2.0 * kc1 * (std::cos(delta) - 1.0) - state.r;
}

ExtractionResult solve_max_omega(const GibbsState& state) {
  const double r = state.r;
  const double kc1 = state.params.kappa * state.c1;
  const double q = 1.0 - r * r;

  ExtractionResult res{};
  if (!(2.0 * kc1 * r < q)) {
    // Zero branch: the identity channel is optimal.
    res.omega_max = 0.0;
    res.branch = Branch::zero;
    res.sigma = 0.0;
    res.delta = 0.0;
    res.kraus = {CMatrix::identity(2), CMatrix(2, 2), CMatrix(2, 2),
                 CMatrix(2, 2)};
    return res;
  }

  const double p = 4.0 * kc1 * kc1;
  res.branch = Branch::positive;
  res.omega_max = std::sqrt((q + p) / q) - 2.0 * kc1 - r;

  const double cos_sigma = 2.0 * kc1 * r / q;
  const double cos_delta = 2.0 * kc1 / std::sqrt(q * (q + p));
  const double sin_sigma_mag = std::sqrt(std::max(0.0, 1.0 - cos_sigma * cos_sigma));
  const double sin_delta_mag = std::sqrt(std::max(0.0, 1.0 - cos_delta * cos_delta));

  // The closed forms pin cos(sigma) and cos(delta) only; pick the sine
  // signs by direct evaluation of the objective.
  double best = -1e300;
  double sigma = 0.0, delta = 0.0;
  for (double ssig : {sin_sigma_mag, -sin_sigma_mag}) {
    for (double sdel : {sin_delta_mag, -sin_delta_mag}) {
      const double sig = std::atan2(ssig, cos_sigma);
      const double del = std::atan2(sdel, cos_delta);
      const double value = varpi(state, sig, del);
      if (value > best) {
        best = value;
        sigma = sig;
        delta = del;
      }
    }
  }
  res.sigma = sigma;
  res.delta = delta;

  const double alpha = 0.5 * (sigma + delta);
  const double beta = 0.5 * (sigma - delta);
  CMatrix k1(2, 2), k2(2, 2);
  k1(0, 0) = std::cos(alpha);
  k1(1, 1) = std::cos(beta);
  k2(0, 1) = std::sin(beta);
  k2(1, 0) = std::sin(alpha);
  res.kraus = {k1, k2, CMatrix(2, 2), CMatrix(2, 2)};
  return res;
}

bool returned_kraus_is_feasible(const ExtractionResult& result, double tol) {
  CMatrix sum(2, 2);
  for (const CMatrix& k : result.kraus) sum = sum + k.adjoint() * k;
  return max_abs_diff(sum, CMatrix::identity(2)) <= tol;
}

KrausVectorZ random_feasible_z(Rng& rng) {
  // Two random complex 8-vectors (s;u) and (t;v), orthonormalized, give
  // the completeness conditions exactly.
  std::array<Complex, 8> col1{}, col2{};
  for (auto& e : col1) e = rng.normal_complex();
  for (auto& e : col2) e = rng.normal_complex();

  double n1 = 0.0;
  for (const auto& e : col1) n1 += std::norm(e);
  n1 = std::sqrt(n1);
  for (auto& e : col1) e /= n1;

  Complex overlap{0.0, 0.0};
  for (int i = 0; i < 8; ++i) overlap += std::conj(col1[i]) * col2[i];
  for (int i = 0; i < 8; ++i) col2[i] -= overlap * col1[i];
  double n2 = 0.0;
  for (const auto& e : col2) n2 += std::norm(e);
  n2 = std::sqrt(n2);
  for (auto& e : col2) e /= n2;

  KrausVectorZ z{};
  for (int i = 0; i < 4; ++i) {
    z.s[i] = col1[i];
    z.u[i] = col1[i + 4];
    z.t[i] = col2[i];
    z.v[i] = col2[i + 4];
  }
  return z;
}

KrausVectorZ reduce_to_canonical(const KrausVectorZ& z) {
  KrausVectorZ zo{};
  zo.s = {Complex{std::sqrt(norm2(z.s)), 0.0}, 0.0, 0.0, 0.0};
  zo.t = {0.0, Complex{std::sqrt(norm2(z.t)), 0.0}, 0.0, 0.0};
  zo.u = {0.0, Complex{std::sqrt(norm2(z.u)), 0.0}, 0.0, 0.0};
  zo.v = {Complex{std::sqrt(norm2(z.v)), 0.0}, 0.0, 0.0, 0.0};
  return zo;
}

std::optional<double> threshold_t1(double kappa) {
  if (!(kappa >= 0.0)) throw domain_error("kappa must be >= 0");
  if (kappa == 0.0) return std::nullopt;  // positive branch everywhere

  const auto margin = [kappa](double kT) { return branch_margin(kappa, kT); };
  double lo = 1e-4, hi = 1e4;
  std::optional<Bracket> bracket = scan_for_bracket(margin, lo, hi, 200, true);
  while (!bracket && (lo > kMinTemperature || hi < kMaxTemperature)) {
    lo = std::max(kMinTemperature, lo / 100.0);
    hi = std::min(kMaxTemperature, hi * 100.0);
    bracket = scan_for_bracket(margin, lo, hi, 400, true);
  }
  if (!bracket) {
    throw numerical_error("no extraction threshold found for kappa=" +
                          std::to_string(kappa));
  }
  return bisect(margin, *bracket, 1e-12);
}

std::optional<double> threshold_t2(double kappa) {
  const std::optional<double> t1 = threshold_t1(kappa);
  if (!t1) return std::nullopt;

  const auto gap = [kappa](double kT) {
    const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
    return solve_max_omega(state).omega_max - optimal_qet(state).E_B_max;
  };

  // Just above T1 the channel maximum is barely positive and loses to
  // teleportation; scan upward for the crossover.
  double lo = *t1 * (1.0 + 1e-6);
  double f_lo = gap(lo);
  double hi = lo;
  constexpr double kCeiling = 1e6;
  while (hi < kCeiling) {
    hi = std::min(hi * 1.05, kCeiling);
    const double f_hi = gap(hi);
    if (f_lo * f_hi <= 0.0) {
      return bisect(gap, Bracket{lo, hi, f_lo, f_hi}, 1e-12);
    }
    lo = hi;
    f_lo = f_hi;
  }
  return std::nullopt;  // no crossing up to kT = 1e6
}

ThresholdSet thresholds_for(double kappa) {
  ThresholdSet set{};
  if (kappa == 0.0) return set;
  set.Te = entanglement_threshold_te(kappa);
  set.T1 = threshold_t1(kappa);
  set.T2 = threshold_t2(kappa);
  return set;
}

}  // namespace qet
