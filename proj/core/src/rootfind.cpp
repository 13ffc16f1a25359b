#include "qetlab/rootfind.hpp"

#include <cmath>
#include <string>

#include "qetlab/errors.hpp"

namespace qet {

Bracket Bracket::make(const std::function<double(double)>& f, double lo,
                      double hi) {
  if (!(lo < hi)) throw bracket_error("bracket requires lo < hi");
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo * f_hi <= 0.0)) {
    throw bracket_error("no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  return Bracket{lo, hi, f_lo, f_hi};
}

double bisect(const std::function<double(double)>& f, Bracket b, double tol) {
  if (b.f_lo == 0.0) return b.lo;
  if (b.f_hi == 0.0) return b.hi;
  double mid = 0.5 * (b.lo + b.hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (b.lo + b.hi);
    if (b.hi - b.lo < tol * std::max(1.0, std::abs(mid))) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (b.f_lo < 0.0)) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  return mid;
}

std::optional<Bracket> scan_for_bracket(const std::function<double(double)>& f,
                                        double lo, double hi, int n,
                                        bool log_spaced) {
  if (n < 1 || !(lo < hi)) return std::nullopt;
  if (log_spaced && !(lo > 0.0)) return std::nullopt;
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double x = log_spaced ? lo * std::pow(hi / lo, t)
                                : lo + (hi - lo) * t;
    const double fx = f(x);
    if (prev_f * fx <= 0.0) return Bracket{prev_x, x, prev_f, fx};
    prev_x = x;
    prev_f = fx;
  }
  return std::nullopt;
}

}  // namespace qet
