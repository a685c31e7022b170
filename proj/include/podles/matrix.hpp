#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace podles::la {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Parallel kernels. Each output element is accumulated in a fixed serial
// order, so results do not depend on the number of threads.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(Complex s, const Matrix& a);
Matrix adjoint(const Matrix& a);
Matrix conjugate(const Matrix& a);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);

/// Zero every column j with keep[j] == 0 (right multiplication by the
/// corresponding 0/1 diagonal projector).
void zero_columns(Matrix& a, const std::vector<unsigned char>& keep);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }
inline Matrix operator*(Complex s, const Matrix& a) { return scale(s, a); }
inline Matrix operator*(double s, const Matrix& a) { return scale(Complex{s, 0.0}, a); }

/// Largest singular value, computed densely from the spectrum of a'a.
/// Exact-zero sparsity is exploited by splitting a'a into the connected
/// components of its pattern before diagonalizing.
double op_norm(const Matrix& a);

/// Full real spectrum of a selfadjoint matrix, ascending with multiplicity.
/// Throws std::invalid_argument when the input fails the selfadjointness
/// test max|a - a'| <= 1e-10 * max(1, max|a|).
std::vector<double> eigenvalues_hermitian(const Matrix& a);

/// Serial reference implementations, kept for kernel tests and benchmarks.
namespace ref {
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(Complex s, const Matrix& a);
Matrix adjoint(const Matrix& a);
Matrix conjugate(const Matrix& a);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);
}  // namespace ref

}  // namespace podles::la
