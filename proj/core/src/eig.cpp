#include "qetlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qetlab/errors.hpp"

namespace qet {

namespace {

double max_off_diagonal(const CMatrix& a) {
  double m = 0.0;
  for (int p = 0; p < a.rows(); ++p) {
    for (int q = p + 1; q < a.cols(); ++q) m = std::max(m, std::abs(a(p, q)));
  }
  return m;
}

}  // namespace

EigenDecomposition hermitian_eig(const CMatrix& input, double off_tol,
                                 int max_sweeps) {
  if (input.rows() != input.cols()) {
    throw contract_violation("hermitian_eig expects a square matrix");
  }
  if (!input.is_finite()) {
    throw contract_violation("hermitian_eig expects finite entries");
  }
  if (!input.is_hermitian(1e-12)) {
    throw contract_violation("hermitian_eig input is not Hermitian within 1e-12");
  }

  const int n = input.rows();
  // Symmetrize exactly so the iteration sees a true Hermitian matrix.
  CMatrix a = (input + input.adjoint()) * 0.5;
  CMatrix v = CMatrix::identity(n);

  bool converged = max_off_diagonal(a) < off_tol;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq == 0.0) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Unitary 2x2 rotation zeroing a_pq: phase from arg(a_pq), angle
        // from tan(2 theta) = 2 |a_pq| / (a_pp - a_qq), |theta| <= pi/4.
        const Complex phase = apq / abs_apq;
        double t;
        if (app == aqq) {
          t = 1.0;
        } else {
          const double tau = (app - aqq) / (2.0 * abs_apq);
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^dagger A J with J_pp = c, J_pq = -s e^{i phi},
        // J_qp = s e^{-i phi}, J_qq = c; only rows/cols p and q move.
        for (int i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip + s * std::conj(phase) * aiq;
          a(i, q) = -s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj + s * phase * aqj;
          a(q, j) = -s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};

        for (int i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip + s * std::conj(phase) * viq;
          v(i, q) = -s * phase * vip + c * viq;
        }
      }
    }
    converged = max_off_diagonal(a) < off_tol;
  }

  if (!converged) {
    throw numerical_error("Jacobi failed to converge in " +
                          std::to_string(max_sweeps) + " sweeps; residual " +
                          std::to_string(max_off_diagonal(a)));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.eigenvectors = CMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    dec.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) dec.eigenvectors(i, k) = v(i, order[k]);
  }
  return dec;
}

double entropy_bits(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace qet
