#pragma once

#include <array>
#include <optional>

#include "qetlab/cmatrix.hpp"
#include "qetlab/rng.hpp"
#include "qetlab/spin_model.hpp"

// Energy extraction at B without measurement or communication: the
// passivity bound for unitaries, the Kraus-channel functional Omega and
// its analytic two-branch maximum, and the temperature thresholds that
// separate the teleportation and local-extraction regimes.
namespace qet {

// Stacked elements of four 2x2 Kraus operators K_k = [[s_k, t_k],
// [u_k, v_k]]. Feasibility is the completeness condition expressed on
// the stacked vectors: |s|^2+|u|^2 = 1, |t|^2+|v|^2 = 1, s.t + u.v = 0.
struct KrausVectorZ {
  std::array<Complex, 4> s;
  std::array<Complex, 4> t;
  std::array<Complex, 4> u;
  std::array<Complex, 4> v;

  static KrausVectorZ from_kraus(const std::array<CMatrix, 4>& kraus);
  std::array<CMatrix, 4> to_kraus() const;
};

// Throws contract_violation naming the violated completeness condition.
void check_feasible(const KrausVectorZ& z, double tol = 1e-12);

// Average pair energy after the single unitary W(u, v, w) acts on B:
// 2m - r(1+cos w) + kappa c1 cos v (1-cos w) - kappa c1 cos u (1+cos w).
double energy_after_unitary_on_b(const GibbsState& state, double u, double v,
                                 double w);

// General one-qubit unitary with angles (u, v, w); the operator whose
// energy the closed form above reproduces.
CMatrix unitary_w(double u, double v, double w);

// Energy extracted by the channel with stacked vector z:
// Omega = (1-r) u.u - (1+r) t.t + kappa c1 (s.v + v.s + u.t + t.u - 2).
double omega(const GibbsState& state, const KrausVectorZ& z);

// The channel objective reduced to the two angles sigma = alpha + beta,
// delta = alpha - beta:
//
//   varpi(sigma, delta) = sin(sigma) sin(delta) + r cos(sigma) cos(delta)
//                         + 2 kappa c1 (cos(delta) - 1) - r.
//
// Its unconstrained maximum equals the channel maximum in both
// branches, its stationary point reproduces the optimal angles, and
// varpi(0, 0) = 0 is the identity channel.
double varpi(const GibbsState& state, double sigma, double delta);

enum class Branch { positive, zero };

struct ExtractionResult {
  double omega_max;
  Branch branch;
  double sigma;  // positive branch only; 0 on the zero branch
  double delta;
  std::array<CMatrix, 4> kraus;
};

// Analytic maximum of Omega over feasible channels. Positive branch if
// 2 kappa c1 r < 1 - r^2 (the r-safe product form of the condition),
// with value sqrt((1-r^2+4 kappa^2 c1^2)/(1-r^2)) - 2 kappa c1 - r and
// the diagonal/anti-diagonal Kraus pair; otherwise zero with the
// identity channel.
ExtractionResult solve_max_omega(const GibbsState& state);

// Completeness of the returned channel: sum K^dagger K = I within tol.
bool returned_kraus_is_feasible(const ExtractionResult& result,
                                double tol = 1e-12);

// Random feasible channel: two 8-vectors (s;u), (t;v) of complex
// normals, orthonormalized, which satisfies feasibility exactly.
KrausVectorZ random_feasible_z(Rng& rng);

// The proof's reduction z -> z_o: replace each block by its magnitude
// placed so that blocks overlap maximally. Omega never decreases.
KrausVectorZ reduce_to_canonical(const KrausVectorZ& z);

// kT saturating
// (kappa sinh(2m/kT) + m sinh(2kappa/kT))^2
//   = 2 m^2 cosh(2kappa/kT) (cosh(2m/kT) + cosh(2kappa/kT)),
// evaluated with e^{-x}-scaled hyperbolics. Zero branch below, positive
// above. No threshold for kappa = 0 (positive branch everywhere).
std::optional<double> threshold_t1(double kappa);

// kT above threshold_t1 where the channel maximum overtakes the
// teleported energy E_B; scanned upward from T1 and bisected; absent if
// no crossing is found up to kT = 1e6.
std::optional<double> threshold_t2(double kappa);

struct ThresholdSet {
  std::optional<double> Te;
  std::optional<double> T1;
  std::optional<double> T2;
};

ThresholdSet thresholds_for(double kappa);

}  // namespace qet
