#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qet {

using Complex = std::complex<double>;

inline constexpr int kMaxDim = 8;

// Dense complex matrix, at most 8x8, row-major. Dimensions are fixed at
// construction. Big enough for every operator in the two-qubit model
// (H, rho, projectors, Kraus operators) and nothing more.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);
  CMatrix(int rows, int cols, std::initializer_list<Complex> entries);

  static CMatrix identity(int n);
  // Outer product v v^dagger of a column vector.
  static CMatrix outer(const CMatrix& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return data_[idx(r, c)]; }
  const Complex& operator()(int r, int c) const { return data_[idx(r, c)]; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(Complex s) const;
  CMatrix operator*(double s) const;

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;
  bool is_finite() const;
  // j-th column as an n x 1 matrix.
  CMatrix column(int j) const;

 private:
  int idx(int r, int c) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

inline CMatrix operator*(Complex s, const CMatrix& m) { return m * s; }
inline CMatrix operator*(double s, const CMatrix& m) { return m * s; }

// Largest entrywise |a - b|; matrices must have equal shape.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

// Kronecker product; the result dimension is capped at 8.
CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class Subsystem { A, B };

// Partial trace of a 4x4 two-qubit operator down to the kept 2x2 marginal.
// Qubit ordering matches the basis {|00>, |01>, |10>, |11>} with A first.
CMatrix partial_trace(const CMatrix& rho, Subsystem keep);

// Transpose on the second tensor factor of a 4x4 two-qubit operator.
CMatrix partial_transpose_b(const CMatrix& rho);

}  // namespace qet
