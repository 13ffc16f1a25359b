#include "qetlab/spin_model.hpp"

#include <cmath>
#include <string>

#include "qetlab/eig.hpp"
#include "qetlab/errors.hpp"

namespace qet {

SystemParams SystemParams::make(double kappa, double kT) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw domain_error("kappa must be finite and >= 0");
  }
  if (!std::isfinite(kT) || kT < kMinTemperature || kT > kMaxTemperature) {
    throw domain_error("kT must lie within [1e-6, 1e12]");
  }
  return SystemParams{kappa, kT, std::hypot(1.0, kappa)};
}

CMatrix build_hamiltonian(const SystemParams& params) {
  const double k = params.kappa;
  const double m = params.m;
  const CMatrix i2 = CMatrix::identity(2);
  const CMatrix h_local = i2 * (1.0 / m) + pauli_z();
  CMatrix h = kron(h_local, i2) + kron(i2, h_local);
  h = h + kron(pauli_x(), pauli_x()) * (2.0 * k);
  h = h + CMatrix::identity(4) * (2.0 * k * k / m);
  return h;
}

EigenSystem eigensystem(const SystemParams& params) {
  const double k = params.kappa;
  const double m = params.m;
  EigenSystem sys;
  sys.energies = {0.0, 2.0 * m - 2.0 * k, 2.0 * m + 2.0 * k, 4.0 * m};

  const double lo = std::sqrt((m - 1.0) / (2.0 * m));
  const double hi = std::sqrt((m + 1.0) / (2.0 * m));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMatrix states(4, 4);
  // |E0> = lo|00> - hi|11>, |E1> = (|01>-|10>)/sqrt2,
  // |E2> = (|01>+|10>)/sqrt2, |E3> = hi|00> + lo|11>.
  states(0, 0) = lo;
  states(3, 0) = -hi;
  states(1, 1) = inv_sqrt2;
  states(2, 1) = -inv_sqrt2;
  states(1, 2) = inv_sqrt2;
  states(2, 2) = inv_sqrt2;
  states(0, 3) = hi;
  states(3, 3) = lo;
  sys.states = states;
  return sys;
}

GibbsState gibbs_state(const SystemParams& params) {
  const GibbsRatios g = stable_gibbs_ratios(params.kappa, params.kT);
  GibbsState state;
  state.params = params;
  state.Z = g.Z;
  state.c1 = g.c1;
  state.c2 = g.c2;
  state.c3 = g.c3;
  state.r = g.r;

  const EigenSystem sys = eigensystem(params);
  for (int i = 0; i < 4; ++i) {
    state.p[i] = std::exp(-sys.energies[i] / params.kT) / g.Z;
  }

  CMatrix rho(4, 4);
  rho(0, 0) = 0.25 * (1.0 + g.c3 - 2.0 * g.r);
  rho(1, 1) = 0.25 * (1.0 - g.c3);
  rho(2, 2) = 0.25 * (1.0 - g.c3);
  rho(3, 3) = 0.25 * (1.0 + g.c3 + 2.0 * g.r);
  rho(0, 3) = rho(3, 0) = 0.25 * (-g.c1 - g.c2);
  rho(1, 2) = rho(2, 1) = 0.25 * (-g.c1 + g.c2);
  state.rho = rho;
  return state;
}

CMatrix gibbs_state_oracle(const SystemParams& params) {
  const EigenDecomposition dec = hermitian_eig(build_hamiltonian(params));
  // Shift by the numerical ground level before exponentiating; keeps
  // every weight representable at the lowest admissible kT.
  const double ground = dec.eigenvalues.front();
  double total = 0.0;
  std::array<double, 4> w{};
  for (int i = 0; i < 4; ++i) {
    w[i] = std::exp(-(dec.eigenvalues[i] - ground) / params.kT);
    total += w[i];
  }
  CMatrix rho(4, 4);
  for (int i = 0; i < 4; ++i) {
    rho = rho + CMatrix::outer(dec.eigenvectors.column(i)) * (w[i] / total);
  }
  return rho;
}

double mean_energy(const GibbsState& state) {
  return 2.0 * state.params.m - 2.0 * state.params.kappa * state.c1 -
         2.0 * state.r;
}

}  // namespace qet
