#include <doctest.h>

#include <cmath>
#include <string>

#include "qetlab/errors.hpp"
#include "qetlab/local_extraction.hpp"
#include "qetlab/optimize.hpp"
#include "qetlab/qet_protocol.hpp"
#include "qetlab/rng.hpp"
#include "qetlab/spin_model.hpp"
#include "qetlab/stable_ratios.hpp"

using namespace qet;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("identity leaves the thermal energy untouched") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  CHECK(std::abs(energy_after_unitary_on_b(state, 0.0, 0.0, 0.0) -
                 mean_energy(state)) < 1e-12);
}

TEST_CASE("no unitary on B lowers the energy") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  const double base = mean_energy(state);
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const double u = rng.uniform(0.0, 2.0 * kPi);
    const double v = rng.uniform(0.0, 2.0 * kPi);
    const double w = rng.uniform(0.0, 2.0 * kPi);
    const double after = energy_after_unitary_on_b(state, u, v, w);
    CHECK(after >= base - 1e-12);
    // Strictly above the thermal energy away from the identity.
    const double w_mod = std::fmod(w, 2.0 * kPi);
    if (std::min(w_mod, 2.0 * kPi - w_mod) > 1e-6) {
      CHECK(after > base);
    }
  }
}

TEST_CASE("closed-form unitary energy equals the trace route") {
  for (const auto& [kappa, kT] : {std::pair{1.0, 2.0}, {0.25, 10.0}}) {
    const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
    const CMatrix h = build_hamiltonian(state.params);
    Rng rng(55);
    for (int i = 0; i < 10; ++i) {
      const double u = i == 0 ? 1.0 : rng.uniform(0.0, 2.0 * kPi);
      const double v = i == 0 ? 2.0 : rng.uniform(0.0, 2.0 * kPi);
      const double w = i == 0 ? 3.0 : rng.uniform(0.0, 2.0 * kPi);
      const CMatrix lifted = kron(CMatrix::identity(2), unitary_w(u, v, w));
      const double traced =
          (h * lifted * state.rho * lifted.adjoint()).trace().real();
      CHECK(std::abs(traced - energy_after_unitary_on_b(state, u, v, w)) <
            1e-11);
    }
  }
}

TEST_CASE("identity channel extracts nothing") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  const std::array<CMatrix, 4> id{CMatrix::identity(2), CMatrix(2, 2),
                                  CMatrix(2, 2), CMatrix(2, 2)};
  CHECK(std::abs(omega(state, KrausVectorZ::from_kraus(id))) < 1e-14);
}

TEST_CASE("infeasible channels are rejected with the violated condition named") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  KrausVectorZ z{};
  z.s = {2.0, 0.0, 0.0, 0.0};  // |s|^2 + |u|^2 = 4
  z.v = {1.0, 0.0, 0.0, 0.0};
  try {
    omega(state, z);
    FAIL("expected contract_violation");
  } catch (const contract_violation& e) {
    CHECK(std::string(e.what()).find("s.s + u.u") != std::string::npos);
  }
}

TEST_CASE("channel energy matches the explicit operator-sum evolution") {
  Rng rng(77);
  for (const auto& [kappa, kT] : {std::pair{1.0, 2.0}, {2.0, 0.5}}) {
    const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
    const CMatrix h = build_hamiltonian(state.params);
    const double base = mean_energy(state);
    for (int i = 0; i < 10; ++i) {
      const KrausVectorZ z = random_feasible_z(rng);
      CMatrix after(4, 4);
      for (const CMatrix& k : z.to_kraus()) {
        const CMatrix op = kron(CMatrix::identity(2), k);
        after = after + op * state.rho * op.adjoint();
      }
      CHECK(std::abs(after.trace().real() - 1.0) < 1e-12);
      CHECK(std::abs((base - (h * after).trace().real()) - omega(state, z)) <
            1e-11);
    }
  }
}

TEST_CASE("varpi vanishes at the origin and peaks at the closed-form maximum") {
  for (const auto& [kappa, kT] :
       {std::pair{1.0, 2.0}, {0.25, 10.0}, {1.0, 0.5}}) {
    const GibbsState state = gibbs_state(SystemParams::make(kappa, kT));
    CHECK(varpi(state, 0.0, 0.0) == 0.0);
    const ExtractionResult best = solve_max_omega(state);
    if (best.branch == Branch::positive) {
      CHECK(std::abs(varpi(state, best.sigma, best.delta) - best.omega_max) <
            1e-12);
    }
    const Min2D grid = refine_min_2d(
        [&](double s, double d) { return -varpi(state, s, d); }, -kPi, kPi,
        -kPi, kPi);
    CHECK(std::abs(-grid.value - best.omega_max) < 1e-7);
  }
}

TEST_CASE("optimal channel dominates random feasible channels") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  const ExtractionResult best = solve_max_omega(state);
  CHECK(std::abs(omega(state, KrausVectorZ::from_kraus(best.kraus)) -
                 best.omega_max) < 1e-10);
  Rng rng(31337);
  for (int i = 0; i < 1000; ++i) {
    const KrausVectorZ z = random_feasible_z(rng);
    CHECK(omega(state, z) <= best.omega_max + 1e-9);
  }
}

TEST_CASE("magnitude reduction never lowers the extracted energy") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 2.0));
  Rng rng(999);
  for (int i = 0; i < 200; ++i) {
    const KrausVectorZ z = random_feasible_z(rng);
    const KrausVectorZ zo = reduce_to_canonical(z);
    check_feasible(zo);
    CHECK(omega(state, z) <= omega(state, zo) + 1e-12);
  }
}

TEST_CASE("no coupling: the optimal channel drains the local energy") {
  for (double kT : {0.5, 1.0, 3.0}) {
    const GibbsState state = gibbs_state(SystemParams::make(0.0, kT));
    const ExtractionResult res = solve_max_omega(state);
    CHECK(res.branch == Branch::positive);
    CHECK(std::abs(res.omega_max - (1.0 - state.r)) < 1e-12);
  }
}

TEST_CASE("infinite-temperature extraction approaches one") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 1e9));
  CHECK(std::abs(solve_max_omega(state).omega_max - 1.0) < 1e-6);
}

TEST_CASE("cold strongly-coupled states sit on the zero branch") {
  // T -> 0: 2 kappa c1 r -> 2 kappa^2/m^2 > kappa^2/m^2 = 1 - r^2.
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 1e-6));
  const ExtractionResult res = solve_max_omega(state);
  CHECK(res.branch == Branch::zero);
  CHECK(res.omega_max == 0.0);
  CHECK(returned_kraus_is_feasible(res));
}

TEST_CASE("returned channels satisfy completeness; detuned angles lose energy") {
  const GibbsState state = gibbs_state(SystemParams::make(1.0, 20.0));
  const ExtractionResult res = solve_max_omega(state);
  CHECK(res.branch == Branch::positive);
  CHECK(returned_kraus_is_feasible(res));

  // Perturbing alpha keeps the diagonal/anti-diagonal structure complete
  // but strictly suboptimal.
  const double alpha = 0.5 * (res.sigma + res.delta) + 0.1;
  const double beta = 0.5 * (res.sigma - res.delta);
  CMatrix k1(2, 2), k2(2, 2);
  k1(0, 0) = std::cos(alpha);
  k1(1, 1) = std::cos(beta);
  k2(0, 1) = std::sin(beta);
  k2(1, 0) = std::sin(alpha);
  const std::array<CMatrix, 4> detuned{k1, k2, CMatrix(2, 2), CMatrix(2, 2)};
  const KrausVectorZ z = KrausVectorZ::from_kraus(detuned);
  check_feasible(z);
  CHECK(omega(state, z) < res.omega_max);
}

TEST_CASE("extraction threshold T1: existence, flip, and condition equivalence") {
  CHECK_FALSE(threshold_t1(0.0).has_value());
  for (double kappa : {0.25, 1.0, 4.0}) {
    const double t1 = *threshold_t1(kappa);
    CHECK(t1 > 0.0);
    const double eps = 1e-8 * std::max(1.0, t1);
    const auto branch_at = [&](double kT) {
      return solve_max_omega(gibbs_state(SystemParams::make(kappa, kT))).branch;
    };
    CHECK(branch_at(t1 - eps) == Branch::zero);
    CHECK(branch_at(t1 + eps) == Branch::positive);
  }

  // The product form and the hyperbolic saturation condition agree.
  Rng rng(2024);
  for (int i = 0; i < 20; ++i) {
    const double kappa = rng.uniform(0.05, 5.0);
    const double kT = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const GibbsRatios g = stable_gibbs_ratios(kappa, kT);
    const bool product_form = 2.0 * kappa * g.c1 * g.r < 1.0 - g.r * g.r;
    const ScaledHyperbolics h = scaled_hyperbolics(kappa, kT);
    const double lhs = kappa * h.sh_x + h.m * h.sh_y;
    const bool hyperbolic_form =
        lhs * lhs < 2.0 * h.m * h.m * h.ch_y * h.zs;
    CHECK(product_form == hyperbolic_form);
  }
}

TEST_CASE("crossover threshold T2 orders the two extraction routes") {
  for (double kappa : {0.25, 1.0, 4.0}) {
    const ThresholdSet t = thresholds_for(kappa);
    REQUIRE(t.T1.has_value());
    REQUIRE(t.T2.has_value());
    CHECK(*t.T2 > *t.T1);

    const double mid = std::sqrt(*t.T1 * *t.T2);
    const GibbsState in_window = gibbs_state(SystemParams::make(kappa, mid));
    const double eb_mid = optimal_qet(in_window).E_B_max;
    const double om_mid = solve_max_omega(in_window).omega_max;
    CHECK(eb_mid > om_mid);
    CHECK(om_mid > 0.0);

    const GibbsState beyond =
        gibbs_state(SystemParams::make(kappa, 2.0 * *t.T2));
    const double eb = optimal_qet(beyond).E_B_max;
    const double om = solve_max_omega(beyond).omega_max;
    CHECK(om > eb);
    CHECK(eb / om < 0.05);
  }
}

TEST_CASE("thresholds are absent without coupling") {
  const ThresholdSet t = thresholds_for(0.0);
  CHECK_FALSE(t.Te.has_value());
  CHECK_FALSE(t.T1.has_value());
  CHECK_FALSE(t.T2.has_value());
}
