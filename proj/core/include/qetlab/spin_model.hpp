#pragma once

#include <array>

#include "qetlab/cmatrix.hpp"
#include "qetlab/stable_ratios.hpp"

// Two coupled spin-1/2 particles:
//
//   H = H_A x I + I x H_B + V,   H_A = H_B = (1/m) I + sigma_z,
//   V = 2 kappa sigma_x x sigma_x + (2 kappa^2 / m) I x I,
//
// with m = sqrt(1 + kappa^2). Basis order is fixed throughout to
// {|00>, |01>, |10>, |11>}, qubit A first. Energies are dimensionless
// with the ground level at zero; Boltzmann's constant is 1 and the
// single temperature input is kT in the same energy units.
namespace qet {

inline constexpr double kMinTemperature = 1e-6;
inline constexpr double kMaxTemperature = 1e12;

struct SystemParams {
  double kappa;
  double kT;
  double m;  // sqrt(1 + kappa^2)

  // Validates kappa >= 0 and kT within [1e-6, 1e12]; exact T = 0 and
  // T = infinity are handled as limits in the callers, not here.
  static SystemParams make(double kappa, double kT);
};

struct EigenSystem {
  std::array<double, 4> energies;  // 0, 2m-2kappa, 2m+2kappa, 4m
  CMatrix states;                  // columns |E_0>..|E_3>
};

struct GibbsState {
  SystemParams params;
  double Z;                 // partition function
  std::array<double, 4> p;  // Gibbs probabilities, sum to 1
  double c1;
  double c2;
  double c3;
  double r;
  CMatrix rho;  // 4x4, X-shaped
};

CMatrix build_hamiltonian(const SystemParams& params);

// Closed-form eigenenergies and eigenstates. The kappa = 0 degeneracy
// E_1 = E_2 keeps the singlet/triplet choice of basis.
EigenSystem eigensystem(const SystemParams& params);

// rho(T) assembled from the closed-form coefficients.
GibbsState gibbs_state(const SystemParams& params);

// Independent route: numerically diagonalize H, exponentiate the
// spectrum and renormalize. No closed-form coefficient is used.
CMatrix gibbs_state_oracle(const SystemParams& params);

// <H> = 2m - 2 kappa c1 - 2r.
double mean_energy(const GibbsState& state);

}  // namespace qet
