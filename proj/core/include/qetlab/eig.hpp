#pragma once

#include <vector>

#include "qetlab/cmatrix.hpp"

namespace qet {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // orthonormal columns, same order
};

// Cyclic complex Jacobi eigensolver for Hermitian matrices up to 8x8.
// Sweeps until every off-diagonal magnitude is below off_tol (default
// 1e-13) or max_sweeps is exhausted, which raises numerical_error with
// the remaining residual. Non-Hermitian input (beyond 1e-12) raises
// contract_violation.
EigenDecomposition hermitian_eig(const CMatrix& a, double off_tol = 1e-13,
                                 int max_sweeps = 100);

// Von Neumann entropy in bits of a spectrum; 0 log 0 := 0 and slightly
// negative eigenvalues from finite precision are treated as zero.
double entropy_bits(const std::vector<double>& eigenvalues);

}  // namespace qet
