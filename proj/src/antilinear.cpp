#include "podles/antilinear.hpp"

namespace podles::la {

Matrix compose(const AntilinearOp& a, const AntilinearOp& b) {
  return multiply(a.matrix(), conjugate(b.matrix()));
}

AntilinearOp compose(const Matrix& linear, const AntilinearOp& b) {
  return AntilinearOp(multiply(linear, b.matrix()));
}

AntilinearOp compose(const AntilinearOp& a, const Matrix& linear) {
  return AntilinearOp(multiply(a.matrix(), conjugate(linear)));
}

Matrix sandwich(const AntilinearOp& j, const Matrix& p) {
  return multiply(j.matrix(), multiply(conjugate(p), conjugate(j.matrix())));
}

}  // namespace podles::la
