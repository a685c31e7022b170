#pragma once

#include "podles/matrix.hpp"

namespace podles::la {

/// Antilinear operator psi -> M conj(psi), kept as the matrix part M plus
/// an implicit componentwise conjugation.
class AntilinearOp {
 public:
  AntilinearOp() = default;
  explicit AntilinearOp(Matrix m) : mat_(std::move(m)) {}

  const Matrix& matrix() const { return mat_; }

 private:
  Matrix mat_;
};

// Composition algebra. Conjugation hops over the matrix to its right and
// conjugates it; two conjugations cancel:
//   (A1 K)(A2 K) = A1 conj(A2),   L (A K) = (L A) K,   (A K) L = (A conj(L)) K
// with K componentwise conjugation.
Matrix compose(const AntilinearOp& a, const AntilinearOp& b);
AntilinearOp compose(const Matrix& linear, const AntilinearOp& b);
AntilinearOp compose(const AntilinearOp& a, const Matrix& linear);

/// j o p o j for antilinear j and linear p: the linear map with matrix
/// M_j conj(p) conj(M_j).
Matrix sandwich(const AntilinearOp& j, const Matrix& p);

}  // namespace podles::la
