#pragma once

#include <functional>

namespace qet {

struct Min1D {
  double x;
  double value;
};

struct Min2D {
  double x;
  double y;
  double value;
};

// Golden-section minimization on [a, b]; no unimodality check, callers
// bracket coarsely first.
Min1D golden_min(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// Coarse grid_n x grid_n scan followed by alternating per-axis
// golden-section refinement in shrinking windows until both windows are
// below 1e-9. Total function: every finite f is acceptable.
Min2D refine_min_2d(const std::function<double(double, double)>& f,
                    double x_lo, double x_hi, double y_lo, double y_hi,
                    int grid_n = 181);

// Same scheme in one dimension (grid then golden), used as an
// independent check against closed-form extrema.
Min1D refine_min_1d(const std::function<double(double)>& f, double lo,
                    double hi, int grid_n = 721);

}  // namespace qet
