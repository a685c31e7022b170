#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "podles/matrix.hpp"

// Spectral kernels. A selfadjoint matrix is split along the connected
// components of its exact-zero pattern before diagonalizing; the operators
// built in this project conserve a handful of quantum numbers, so their
// Gram matrices fall apart into many small blocks and the dense solver
// only ever sees those.

namespace podles::la {

namespace {

std::vector<std::vector<std::size_t>> pattern_components(const Matrix& g) {
  const std::size_t n = g.rows();
  std::vector<unsigned char> seen(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    stack.assign(1, start);
    std::vector<std::size_t> comp;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      const Complex* row = g.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && (row[j].real() != 0.0 || row[j].imag() != 0.0)) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Eigenvalues of a selfadjoint matrix, appended to out.
void hermitian_eigs(const Matrix& g, std::vector<double>& out) {
  for (const auto& comp : pattern_components(g)) {
    if (comp.size() == 1) {
      out.push_back(g(comp[0], comp[0]).real());
      continue;
    }
    Eigen::MatrixXcd block(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) block(i, j) = g(comp[i], comp[j]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
    solver.compute(block, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
    const auto& vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) out.push_back(vals[i]);
  }
}

}  // namespace

double op_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const Matrix gram = multiply(adjoint(a), a);
  std::vector<double> eigs;
  hermitian_eigs(gram, eigs);
  double top = 0.0;
  for (double v : eigs) top = std::max(top, v);
  return std::sqrt(top);
}

std::vector<double> eigenvalues_hermitian(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("eigenvalues need a square matrix");
  const double scale = std::max(1.0, max_abs(a));
  if (max_abs(subtract(a, adjoint(a))) > 1e-10 * scale) {
    throw std::invalid_argument("matrix is not selfadjoint to tolerance 1e-10");
  }
  std::vector<double> eigs;
  eigs.reserve(a.rows());
  hermitian_eigs(a, eigs);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace podles::la
