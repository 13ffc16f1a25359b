#pragma once

#include <array>
#include <optional>

#include "qetlab/cmatrix.hpp"
#include "qetlab/spin_model.hpp"

namespace qet {

// h(x) = ((1+x)/2) log2(2/(1+x)) + ((1-x)/2) log2(2/(1-x)), the binary
// entropy of the pair (1 +- x)/2, with 0 log 0 := 0. Domain |x| <= 1
// (a 1e-12 slack absorbs roundoff; beyond that raises domain_error).
double binary_h(double x);

struct MeasurementAngles {
  double theta;  // [0, pi]
  double phi;    // [0, 2 pi)
};

// Projector |k'><k'| on qubit B for the measurement basis
//   |0'> = cos(t/2)|0> + e^{i phi} sin(t/2)|1>
//   |1'> = sin(t/2)|0> - e^{i phi} cos(t/2)|1>
CMatrix measurement_projector(const MeasurementAngles& angles, int k);

// Outcome probability and the two nonzero post-measurement eigenvalues
// in closed form, for outcome k in {0, 1}.
struct PostMeasurementEigs {
  double q;          // outcome probability (1 -+ r cos theta)/2
  double lambda_lo;  // 1/2 - root/(4q)
  double lambda_hi;  // 1/2 + root/(4q)
};
PostMeasurementEigs post_measurement_eigs(const GibbsState& state,
                                          const MeasurementAngles& angles,
                                          int k);

// q0 S(rho_0) + q1 S(rho_1) for the measurement direction (theta, phi);
// the quantity minimized over measurements in the classical-correlation
// definition.
double avg_conditional_entropy(const GibbsState& state,
                               const MeasurementAngles& angles);

struct MeasurementMin {
  double min_value;
  MeasurementAngles argmin;
};

// Numeric minimization of the average conditional entropy over
// measurement directions. The default domain exploits the cos^2/sin^2
// dependence on phi (theta in [0, pi], phi in [0, pi/2]); full_domain
// widens phi to [0, 2 pi) for spot checks.
MeasurementMin min_conditional_entropy(const GibbsState& state,
                                       bool full_domain = false);

// I = 2 h(r) - log2 Z - (<H>/kT) log2 e.
double mutual_information(const GibbsState& state);

// C = h(r) - h(sqrt(r^2 + c1^2)).
double classical_correlation(const GibbsState& state);

// D = I - C.
double discord(const GibbsState& state);

// Partial-transpose eigenvalues in closed form, ordered
// (lambda_1-, lambda_1+, lambda_2-, lambda_2+). Only lambda_1- can be
// negative.
std::array<double, 4> ppt_eigenvalues(const SystemParams& params);

// PPT criterion: m cosh(2kappa/kT) >= kappa sinh(2m/kT), evaluated as
// lambda_1- >= -1e-12 so the boundary itself counts as separable.
bool is_separable(const SystemParams& params);

// Temperature at which lambda_1- changes sign; entangled below,
// separable at and above. No threshold exists for kappa = 0.
std::optional<double> entanglement_threshold_te(double kappa);

struct CorrelationReport {
  double mutual_info;
  double classical;
  double discord;
  std::array<double, 4> ppt_eigs;
  bool separable;
  double marginal_entropy;  // h(r)
};

CorrelationReport correlation_report(const GibbsState& state);

}  // namespace qet
