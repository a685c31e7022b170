#pragma once

#include "podles/halfint.hpp"

namespace podles {

/// Deformation parameter q in (0,1] with stable evaluators for q-numbers
/// [x] = (q^x - q^-x)/(q - q^-1) and half-integer powers q^x.
///
/// q = 1 is an exact special case: [x] = x and q^x = 1, no limits taken.
class QContext {
 public:
  explicit QContext(double q);

  double q() const { return q_; }
  double log_q() const { return log_q_; }
  bool classical() const { return log_q_ == 0.0; }

  /// [x]. Evaluated as sinh(x ln q)/sinh(ln q) for q < 1, which stays
  /// cancellation-free arbitrarily close to q = 1.
  double q_number(double x) const;
  double q_number(HalfInt x) const { return q_number(x.value()); }

  /// q^x with the positive real root for half-integer x.
  double q_power(double x) const;
  double q_power(HalfInt x) const { return q_power(x.value()); }

 private:
  double q_;
  double log_q_;
};

}  // namespace podles
