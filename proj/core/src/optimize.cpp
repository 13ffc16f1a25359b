#include "qetlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qet {

Min1D golden_min(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  constexpr double inv_phi = 0.6180339887498948482;
  if (b < a) std::swap(a, b);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol * (1.0 + std::abs(x1) + std::abs(x2))) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? Min1D{x1, f1} : Min1D{x2, f2};
}

Min1D refine_min_1d(const std::function<double(double)>& f, double lo,
                    double hi, int grid_n) {
  double best_x = lo;
  double best_f = f(lo);
  for (int i = 1; i <= grid_n; ++i) {
    const double x = lo + (hi - lo) * i / grid_n;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  const double h = (hi - lo) / grid_n;
  const Min1D refined =
      golden_min(f, std::max(lo, best_x - h), std::min(hi, best_x + h));
  return refined.value < best_f ? refined : Min1D{best_x, best_f};
}

Min2D refine_min_2d(const std::function<double(double, double)>& f,
                    double x_lo, double x_hi, double y_lo, double y_hi,
                    int grid_n) {
  const int n = std::max(grid_n, 2);
  double best_x = x_lo, best_y = y_lo;
  double best_f = f(x_lo, y_lo);
  for (int i = 0; i < n; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = y_lo + (y_hi - y_lo) * j / (n - 1);
      const double fxy = f(x, y);
      if (fxy < best_f) {
        best_f = fxy;
        best_x = x;
        best_y = y;
      }
    }
  }

  // Alternating golden sections in windows that shrink geometrically
  // around the running argmin; stops once both windows are below 1e-9.
  double wx = (x_hi - x_lo) / (n - 1);
  double wy = (y_hi - y_lo) / (n - 1);
  double x = best_x, y = best_y;
  for (int iter = 0; iter < 200; ++iter) {
    const Min1D mx = golden_min(
        [&](double xx) { return f(xx, y); },
        std::max(x_lo, x - wx), std::min(x_hi, x + wx));
    x = mx.x;
    const Min1D my = golden_min(
        [&](double yy) { return f(x, yy); },
        std::max(y_lo, y - wy), std::min(y_hi, y + wy));
    y = my.x;
    best_f = my.value;
    wx *= 0.7;
    wy *= 0.7;
    if (wx < 1e-9 && wy < 1e-9) break;
  }
  const double fxy = f(x, y);
  return Min2D{x, y, std::min(fxy, best_f)};
}

}  // namespace qet
