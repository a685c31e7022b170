#include "podles/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace podles::la {

namespace {

using Index = std::ptrdiff_t;

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const std::size_t n = a.rows(), kk = a.cols(), m = b.cols();
  Matrix c(n, m);
#pragma omp parallel for schedule(static) if (n * m > 4096)
  for (Index i = 0; i < static_cast<Index>(n); ++i) {
    Complex* crow = c.data() + static_cast<std::size_t>(i) * m;
    const Complex* arow = a.data() + static_cast<std::size_t>(i) * kk;
    for (std::size_t k = 0; k < kk; ++k) {
      const Complex aik = arow[k];
      // The operators handled here are band sparse; skipping exact zeros
      // leaves every accumulated sum unchanged.
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      const double ar = aik.real(), ai = aik.imag();
      const Complex* brow = b.data() + k * m;
      for (std::size_t j = 0; j < m; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += Complex{ar * br - ai * bi, ar * bi + ai * br};
      }
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  const Index total = static_cast<Index>(a.rows() * a.cols());
#pragma omp parallel for schedule(static) if (total > 16384)
  for (Index i = 0; i < total; ++i) c.data()[i] = a.data()[i] + b.data()[i];
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  const Index total = static_cast<Index>(a.rows() * a.cols());
#pragma omp parallel for schedule(static) if (total > 16384)
  for (Index i = 0; i < total; ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

Matrix scale(Complex s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  const Index total = static_cast<Index>(a.rows() * a.cols());
#pragma omp parallel for schedule(static) if (total > 16384)
  for (Index i = 0; i < total; ++i) c.data()[i] = s * a.data()[i];
  return c;
}

Matrix adjoint(const Matrix& a) {
  Matrix c(a.cols(), a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * a.cols() > 16384)
  for (Index j = 0; j < static_cast<Index>(a.cols()); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      c(static_cast<std::size_t>(j), i) = std::conj(a(i, static_cast<std::size_t>(j)));
    }
  }
  return c;
}

Matrix conjugate(const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  const Index total = static_cast<Index>(a.rows() * a.cols());
#pragma omp parallel for schedule(static) if (total > 16384)
  for (Index i = 0; i < total; ++i) c.data()[i] = std::conj(a.data()[i]);
  return c;
}

double max_abs(const Matrix& a) {
  const Index total = static_cast<Index>(a.rows() * a.cols());
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best) if (total > 16384)
  for (Index i = 0; i < total; ++i) {
    const double v = std::abs(a.data()[i]);
    if (v > best) best = v;
  }
  return best;
}

double frobenius_norm(const Matrix& a) {
  // Row sums are accumulated serially and combined in index order, so the
  // result is independent of the thread count.
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<double> row_sums(n, 0.0);
#pragma omp parallel for schedule(static) if (n * m > 16384)
  for (Index i = 0; i < static_cast<Index>(n); ++i) {
    const Complex* row = a.data() + static_cast<std::size_t>(i) * m;
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += std::norm(row[j]);
    row_sums[static_cast<std::size_t>(i)] = s;
  }
  double total = 0.0;
  for (double s : row_sums) total += s;
  return std::sqrt(total);
}

void zero_columns(Matrix& a, const std::vector<unsigned char>& keep) {
  if (keep.size() != a.cols()) throw std::invalid_argument("column mask size mismatch");
#pragma omp parallel for schedule(static) if (a.rows() * a.cols() > 16384)
  for (Index i = 0; i < static_cast<Index>(a.rows()); ++i) {
    Complex* row = a.data() + static_cast<std::size_t>(i) * a.cols();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!keep[j]) row[j] = Complex{};
    }
  }
}

}  // namespace podles::la
