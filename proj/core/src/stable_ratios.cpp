#include "qetlab/stable_ratios.hpp"

#include <cmath>

#include "qetlab/errors.hpp"

namespace qet {

ScaledHyperbolics scaled_hyperbolics(double kappa, double kT) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw domain_error("kappa must be finite and >= 0");
  }
  if (!(kT > 0.0) || !std::isfinite(kT)) {
    throw domain_error("kT must be finite and > 0");
  }
  ScaledHyperbolics h{};
  h.m = std::hypot(1.0, kappa);
  h.x = 2.0 * h.m / kT;
  h.y = 2.0 * kappa / kT;
  h.e_mx = std::exp(-h.x);

  if (h.x < 700.0) {
    // Direct products are exact here; sinh(700) is still representable.
    h.sh_x = std::sinh(h.x) * h.e_mx;
    h.ch_x = std::cosh(h.x) * h.e_mx;
    h.sh_y = std::sinh(h.y) * h.e_mx;
    h.ch_y = std::cosh(h.y) * h.e_mx;
  } else {
    // x - y = 2(m - kappa)/kT = 2/((m + kappa) kT), exact at large kappa.
    const double gap = 2.0 / ((h.m + kappa) * kT);
    const double e_gap = std::exp(-gap);
    const double e_xy = std::exp(-(h.x + h.y));
    const double e_2x = std::exp(-2.0 * h.x);
    h.sh_x = 0.5 * (1.0 - e_2x);
    h.ch_x = 0.5 * (1.0 + e_2x);
    h.sh_y = 0.5 * (e_gap - e_xy);
    h.ch_y = 0.5 * (e_gap + e_xy);
  }
  h.zs = h.ch_x + h.ch_y;
  return h;
}

GibbsRatios stable_gibbs_ratios(double kappa, double kT) {
  const ScaledHyperbolics h = scaled_hyperbolics(kappa, kT);
  GibbsRatios g{};
  g.Z = 2.0 * h.zs;
  g.r = h.sh_x / (h.m * h.zs);
  g.c1 = (h.m * h.sh_y + kappa * h.sh_x) / (h.m * h.zs);
  g.c2 = (kappa * h.sh_x - h.m * h.sh_y) / (h.m * h.zs);
  g.c3 = (h.ch_x - h.ch_y) / h.zs;
  return g;
}

GibbsRatios naive_gibbs_ratios(double kappa, double kT) {
  if (!(kappa >= 0.0)) throw domain_error("kappa must be >= 0");
  if (!(kT > 0.0)) throw domain_error("kT must be > 0");
  const double m = std::hypot(1.0, kappa);
  const double e = std::exp(-2.0 * m / kT);
  const double Z =
      2.0 * e * (std::cosh(2.0 * m / kT) + std::cosh(2.0 * kappa / kT));
  GibbsRatios g{};
  g.Z = Z;
  g.c1 = (2.0 / (m * Z)) * e *
         (m * std::sinh(2.0 * kappa / kT) + kappa * std::sinh(2.0 * m / kT));
  g.c2 = (2.0 / (m * Z)) * e *
         (-m * std::sinh(2.0 * kappa / kT) + kappa * std::sinh(2.0 * m / kT));
  g.c3 = (4.0 / Z) * e * std::sinh((m + kappa) / kT) * std::sinh((m - kappa) / kT);
  g.r = (2.0 / (m * Z)) * e * std::sinh(2.0 * m / kT);
  return g;
}

}  // namespace qet
