#include <doctest.h>

#include <cmath>

#include "qetlab/cmatrix.hpp"
#include "qetlab/eig.hpp"
#include "qetlab/errors.hpp"
#include "qetlab/spin_model.hpp"

using namespace qet;

TEST_CASE("hamiltonian at kappa = 0 is diagonal") {
  const CMatrix h = build_hamiltonian(SystemParams::make(0.0, 1.0));
  const CMatrix expected(4, 4, {4, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0});
  CHECK(max_abs_diff(h, expected) < 1e-14);
}

TEST_CASE("measurement observable commutes with the interaction") {
  for (double kappa : {0.25, 1.0, 3.0}) {
    const double m = std::hypot(1.0, kappa);
    const CMatrix v = kron(pauli_x(), pauli_x()) * (2.0 * kappa) +
                      CMatrix::identity(4) * (2.0 * kappa * kappa / m);
    const CMatrix sx = kron(pauli_x(), CMatrix::identity(2));
    CHECK((sx * v - v * sx).max_abs() == 0.0);
  }
}

TEST_CASE("closed-form eigensystem") {
  const SystemParams params = SystemParams::make(1.0, 1.0);
  const EigenSystem sys = eigensystem(params);
  const double s2 = std::sqrt(2.0);
  CHECK(sys.energies[0] == 0.0);
  CHECK(sys.energies[1] == doctest::Approx(2 * s2 - 2).epsilon(1e-14));
  CHECK(sys.energies[2] == doctest::Approx(2 * s2 + 2).epsilon(1e-14));
  CHECK(sys.energies[3] == doctest::Approx(4 * s2).epsilon(1e-14));

  // |E1> is the singlet for every coupling.
  for (double kappa : {0.3, 1.0, 2.0}) {
    const EigenSystem s = eigensystem(SystemParams::make(kappa, 1.0));
    const CMatrix e1 = s.states.column(1);
    CHECK(std::abs(e1(1, 0) - 1.0 / s2) < 1e-14);
    CHECK(std::abs(e1(2, 0) + 1.0 / s2) < 1e-14);
    CHECK(std::abs(e1(0, 0)) == 0.0);
    CHECK(std::abs(e1(3, 0)) == 0.0);
  }
}

TEST_CASE("eigensystem ordering and eigenpair residuals") {
  for (double kappa : {0.0, 0.5, 1.0, 3.0, 8.0}) {
    const SystemParams params = SystemParams::make(kappa, 1.0);
    const EigenSystem sys = eigensystem(params);
    CHECK(sys.energies[0] == 0.0);
    CHECK(sys.energies[0] < sys.energies[1]);
    CHECK(sys.energies[1] <= sys.energies[2]);
    CHECK(sys.energies[2] < sys.energies[3]);

    const CMatrix h = build_hamiltonian(params);
    for (int i = 0; i < 4; ++i) {
      const CMatrix v = sys.states.column(i);
      CHECK((h * v - v * sys.energies[i]).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("closed-form eigensystem matches the Jacobi spectrum at kappa = 3") {
  const SystemParams params = SystemParams::make(3.0, 1.0);
  const EigenSystem sys = eigensystem(params);
  const EigenDecomposition dec = hermitian_eig(build_hamiltonian(params));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(dec.eigenvalues[i] - sys.energies[i]) < 1e-10);
    // Non-degenerate spectrum: columns agree up to a phase.
    Complex overlap{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
      overlap += std::conj(dec.eigenvectors(k, i)) * sys.states(k, i);
    }
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-10);
  }
}

TEST_CASE("gibbs state reaches the ground state at low temperature") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 1e-6));
  const EigenSystem sys = eigensystem(state.params);
  CHECK(max_abs_diff(state.rho, CMatrix::outer(sys.states.column(0))) < 1e-8);
  CHECK(state.p[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gibbs state reaches the maximally mixed state at high temperature") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 1e9));
  CHECK(max_abs_diff(state.rho, CMatrix::identity(4) * 0.25) < 1e-8);
}

TEST_CASE("matrix form equals the spectral assembly") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  const EigenSystem sys = eigensystem(state.params);
  CMatrix assembled(4, 4);
  for (int i = 0; i < 4; ++i) {
    assembled = assembled + CMatrix::outer(sys.states.column(i)) * state.p[i];
  }
  CHECK(max_abs_diff(state.rho, assembled) < 1e-12);
}

TEST_CASE("gibbs state invariants and oracle agreement on a grid") {
  for (double kappa : {0.0, 0.5, 2.0}) {
    for (int i = 0; i < 20; ++i) {
      const double kT = 1e-3 * std::pow(1e6, i / 19.0);
      const SystemParams params = SystemParams::make(kappa, kT);
      const GibbsState state = gibbs_state(params);

      CHECK(std::abs(state.rho.trace().real() - 1.0) < 1e-12);
      CHECK(state.rho.is_hermitian(1e-14));
      double p_sum = 0.0;
      for (double p : state.p) p_sum += p;
      CHECK(std::abs(p_sum - 1.0) < 1e-12);
      CHECK(state.r >= 0.0);
      CHECK(state.r <= 1.0);
      CHECK(state.c1 >= state.c2);

      // X shape: off-diagonal entries outside the anti-diagonal vanish.
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (a != b && a + b != 3) CHECK(std::abs(state.rho(a, b)) == 0.0);
        }
      }

      const EigenDecomposition dec = hermitian_eig(state.rho);
      CHECK(dec.eigenvalues.front() > -1e-12);

      CHECK((state.rho - gibbs_state_oracle(params)).frobenius_norm() < 1e-10);
    }
  }
}

TEST_CASE("oracle factorizes at kappa = 0") {
  for (double kT : {0.5, 2.0}) {
    const CMatrix rho = gibbs_state_oracle(SystemParams::make(0.0, kT));
    const double r = std::tanh(1.0 / kT);
    const CMatrix single = (CMatrix::identity(2) - pauli_z() * r) * 0.5;
    CHECK(max_abs_diff(rho, kron(single, single)) < 1e-12);
  }
}

TEST_CASE("mean energy limits and trace oracle") {
  const GibbsState hot = gibbs_state(SystemParams::make(1.0, 1e9));
  CHECK(std::abs(mean_energy(hot) - 2.0 * hot.params.m) < 1e-8);

  const GibbsState cold = gibbs_state(SystemParams::make(1.0, 1e-6));
  CHECK(std::abs(mean_energy(cold)) < 1e-8);

  const SystemParams params = SystemParams::make(1.0, 2.0);
  const GibbsState state = gibbs_state(params);
  const CMatrix h = build_hamiltonian(params);
  const double traced = (h * gibbs_state_oracle(params)).trace().real();
  CHECK(std::abs(mean_energy(state) - traced) < 1e-11);

  const EigenSystem sys = eigensystem(params);
  double spectral = 0.0;
  for (int i = 0; i < 4; ++i) spectral += state.p[i] * sys.energies[i];
  CHECK(std::abs(mean_energy(state) - spectral) < 1e-12);
}

TEST_CASE("r decreases and mean energy grows with temperature") {
  for (double kappa : {0.25, 1.0, 4.0}) {
    double prev_r = 2.0;
    double prev_e = -1.0;
    for (int i = 0; i < 25; ++i) {
      const double kT = 1e-3 * std::pow(1e6, i / 24.0);
      const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
      CHECK(state.r <= prev_r + 1e-12);
      CHECK(mean_energy(state) >= prev_e - 1e-12);
      if (kappa > 0.0 && kT < 1e6) {
        CHECK(state.r > 0.0);
        CHECK(state.c1 > 0.0);
        CHECK(state.c3 > 0.0);
      }
      prev_r = state.r;
      prev_e = mean_energy(state);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SystemParams::make(-0.5, 1.0), domain_error);
  CHECK_THROWS_AS(SystemParams::make(1.0, 0.0), domain_error);
  CHECK_THROWS_AS(SystemParams::make(1.0, 1e-7), domain_error);
  CHECK_THROWS_AS(SystemParams::make(1.0, 1e13), domain_error);
  const SystemParams p = SystemParams::make(2.0, 1.0);
  CHECK(std::abs(p.m * p.m - p.kappa * p.kappa - 1.0) < 1e-12);
}
