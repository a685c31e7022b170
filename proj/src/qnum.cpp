#include "podles/qnum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace podles {

namespace {
// sinh/exp overflow just above this; reject earlier with a clear error.
constexpr double kMaxExpArg = 709.0;

void check_exponent(double x, double log_q) {
  if (std::abs(x * log_q) > kMaxExpArg) {
    throw std::overflow_error("q-power exponent out of double range: x = " + std::to_string(x) +
                              ", ln q = " + std::to_string(log_q));
  }
}
}  // namespace

QContext::QContext(double q) : q_(q) {
  if (!(q > 0.0) || q > 1.0) {
    throw std::invalid_argument("deformation parameter must satisfy 0 < q <= 1, got " + std::to_string(q));
  }
  log_q_ = (q == 1.0) ? 0.0 : std::log(q);
}

double QContext::q_number(double x) const {
  if (classical()) return x;
  check_exponent(x, log_q_);
  return std::sinh(x * log_q_) / std::sinh(log_q_);
}

double QContext::q_power(double x) const {
  if (classical()) return 1.0;
  check_exponent(x, log_q_);
  return std::pow(q_, x);
}

}  // namespace podles
