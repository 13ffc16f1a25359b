#pragma once

#include <functional>
#include <optional>

namespace qet {

// Sign-changing interval: lo < hi and f_lo * f_hi <= 0.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  // Evaluates f at both ends; throws bracket_error on no sign change.
  static Bracket make(const std::function<double(double)>& f, double lo,
                      double hi);
};

// Bisection to |hi - lo| < tol * max(1, |mid|). Returns the midpoint.
double bisect(const std::function<double(double)>& f, Bracket bracket,
              double tol = 1e-10);

// Scans n+1 points over [lo, hi] (log-spaced when log_spaced, requires
// lo > 0) and returns the first sign-changing cell, if any.
std::optional<Bracket> scan_for_bracket(const std::function<double(double)>& f,
                                        double lo, double hi, int n,
                                        bool log_spaced);

}  // namespace qet
