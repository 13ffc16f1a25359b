#pragma once

namespace qet {

// Hyperbolic functions of x = 2m/kT and y = 2kappa/kT, each scaled by
// e^{-x} so that nothing overflows at low temperature:
//
//   sh_x = sinh(x) e^{-x} = (1 - e^{-2x}) / 2
//   ch_x = cosh(x) e^{-x} = (1 + e^{-2x}) / 2
//   sh_y = sinh(y) e^{-x} = (e^{y-x} - e^{-x-y}) / 2
//   ch_y = cosh(y) e^{-x} = (e^{y-x} + e^{-x-y}) / 2
//   zs   = ch_x + ch_y    = (cosh x + cosh y) e^{-x} = Z / 2
//
// Every exponent is <= 0 (m > kappa so y < x), and the gap
// x - y = 2(m - kappa)/kT is computed as 2/((m + kappa) kT) to avoid
// cancellation at large kappa.
struct ScaledHyperbolics {
  double m;
  double x;
  double y;
  double e_mx;  // e^{-x}, may underflow to 0 at very low kT
  double sh_x;
  double ch_x;
  double sh_y;
  double ch_y;
  double zs;
};

// Requires kappa >= 0 and kT > 0.
ScaledHyperbolics scaled_hyperbolics(double kappa, double kT);

// Thermal-state coefficients of the two-spin model. Z is the plain
// partition function, which stays in (1, 4] because the ground energy
// is normalized to zero.
struct GibbsRatios {
  double Z;
  double c1;
  double c2;
  double c3;
  double r;
};

// Overflow-safe evaluation via the scaled hyperbolics above:
//
//   Z  = 2 (ch_x + ch_y)
//   c1 = (m sh_y + kappa sh_x) / (m zs)
//   c2 = (kappa sh_x - m sh_y) / (m zs)
//   c3 = (ch_x - ch_y) / zs
//   r  = sh_x / (m zs)
//
// c3 uses the product-to-difference identity
// 2 sinh((m+k)/kT) sinh((m-k)/kT) = cosh(2m/kT) - cosh(2k/kT).
GibbsRatios stable_gibbs_ratios(double kappa, double kT);

// Literal textbook evaluation with unscaled exp/sinh/cosh. Overflows
// below roughly kT ~ 2m/700; kept as a debug cross-check at moderate
// temperatures.
GibbsRatios naive_gibbs_ratios(double kappa, double kT);

}  // namespace qet
