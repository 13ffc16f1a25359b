#include "qetlab/cmatrix.hpp"

#include <cmath>
#include <string>

#include "qetlab/errors.hpp"

namespace qet {

namespace {

void require_dims(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim) {
    throw dimension_error("matrix dimensions must be within 1.." +
                          std::to_string(kMaxDim) + ", got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require_dims(rows, cols);
  data_.assign(static_cast<std::size_t>(rows) * cols, Complex{0.0, 0.0});
}

CMatrix::CMatrix(int rows, int cols, std::initializer_list<Complex> entries)
    : CMatrix(rows, cols) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw dimension_error("initializer size does not match dimensions");
  }
  int i = 0;
  for (const Complex& e : entries) data_[i++] = e;
}

int CMatrix::idx(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw dimension_error("index (" + std::to_string(r) + ", " +
                          std::to_string(c) + ") out of range");
  }
  return r * cols_ + c;
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::outer(const CMatrix& v) {
  if (v.cols() != 1) throw dimension_error("outer expects a column vector");
  CMatrix m(v.rows(), v.rows());
  for (int i = 0; i < v.rows(); ++i) {
    for (int j = 0; j < v.rows(); ++j) {
      m(i, j) = v(i, 0) * std::conj(v(j, 0));
    }
  }
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  require_same_shape(*this, o);
  CMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  require_same_shape(*this, o);
  CMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw dimension_error("matmul shape mismatch");
  CMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < o.cols_; ++j) {
        m(i, j) += aik * o(k, j);
      }
    }
  }
  return m;
}

CMatrix CMatrix::operator*(Complex s) const {
  CMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

CMatrix CMatrix::operator*(double s) const { return (*this) * Complex{s, 0.0}; }

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

Complex CMatrix::trace() const {
  if (rows_ != cols_) throw dimension_error("trace of a non-square matrix");
  Complex t{0.0, 0.0};
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& e : data_) s += std::norm(e);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : data_) m = std::max(m, std::abs(e));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

bool CMatrix::is_finite() const {
  for (const Complex& e : data_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

CMatrix CMatrix::column(int j) const {
  CMatrix v(rows_, 1);
  for (int i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
  return v;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

CMatrix pauli_x() { return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }

CMatrix pauli_y() {
  return CMatrix(2, 2, {Complex{0.0, 0.0}, Complex{0.0, -1.0},
                        Complex{0.0, 1.0}, Complex{0.0, 0.0}});
}

CMatrix pauli_z() { return CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const int rows = a.rows() * b.rows();
  const int cols = a.cols() * b.cols();
  if (rows > kMaxDim || cols > kMaxDim) {
    throw dimension_error("kron result exceeds the supported 8x8");
  }
  CMatrix m(rows, cols);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return m;
}

CMatrix partial_trace(const CMatrix& rho, Subsystem keep) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw dimension_error("partial_trace expects a 4x4 operator");
  }
  CMatrix m(2, 2);
  if (keep == Subsystem::A) {
    for (int a = 0; a < 2; ++a) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int b = 0; b < 2; ++b) m(a, a2) += rho(2 * a + b, 2 * a2 + b);
      }
    }
  } else {
    for (int b = 0; b < 2; ++b) {
      for (int b2 = 0; b2 < 2; ++b2) {
        for (int a = 0; a < 2; ++a) m(b, b2) += rho(2 * a + b, 2 * a + b2);
      }
    }
  }
  return m;
}

CMatrix partial_transpose_b(const CMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw dimension_error("partial_transpose_b expects a 4x4 operator");
  }
  CMatrix m(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          m(2 * a + b, 2 * a2 + b2) = rho(2 * a + b2, 2 * a2 + b);
        }
      }
    }
  }
  return m;
}

}  // namespace qet
