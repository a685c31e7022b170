#include <cmath>
#include <stdexcept>

#include "podles/matrix.hpp"

// Plain serial versions of the kernels. These are the ground truth the
// parallel kernels are tested against.

namespace podles::la::ref {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

Matrix scale(Complex s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = s * a.data()[i];
  return c;
}

Matrix adjoint(const Matrix& a) {
  Matrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  }
  return c;
}

Matrix conjugate(const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = std::conj(a.data()[i]);
  return c;
}

double max_abs(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) best = std::max(best, std::abs(a.data()[i]));
  return best;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) s += std::norm(a.data()[i]);
  return std::sqrt(s);
}

}  // namespace podles::la::ref
