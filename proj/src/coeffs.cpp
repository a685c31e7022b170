#include "podles/coeffs.hpp"

#include <cmath>

namespace podles {

namespace {

/// sqrt([a][b]), or 0 when the product is not positive. A non-positive
/// product only occurs at boundary m where one factor vanishes or the
/// target state does not exist.
double root_factor(const QContext& ctx, HalfInt a, HalfInt b) {
  const double prod = ctx.q_number(a) * ctx.q_number(b);
  return prod > 0.0 ? std::sqrt(prod) : 0.0;
}

}  // namespace

double alpha0(const QContext& ctx, Variant v, HalfInt l, const Mutation& mut) {
  const double q = ctx.q();
  const double tail = v == Variant::pi_plus ? q : -1.0 / q;
  const double numer = (q - 1.0 / q) * ctx.q_number(l - halves(1)) * ctx.q_number(l + halves(3)) + tail;
  const double denom = std::sqrt(q) * ctx.q_number(2 * l) * ctx.q_number(2 * l + 2);
  return mut.factor(Mutation::Family::alpha0, l) * numer / denom;
}

double alpha_plus(const QContext& ctx, Variant v, HalfInt l, const Mutation& mut) {
  const double radicand =
      ctx.q_number(2 * l + 2) * (ctx.q_number(4 * l + 4) + ctx.q_number(2) * ctx.q_number(2 * l + 2));
  const HalfInt exponent = v == Variant::pi_plus ? -(l + 2) : -(l + 1);
  return mut.factor(Mutation::Family::alpha_plus, l) * ctx.q_power(exponent) / std::sqrt(radicand);
}

double alpha_minus(const QContext& ctx, Variant v, HalfInt l, const Mutation& mut) {
  if (l < halves(3)) return 0.0;
  return -ctx.q_power(2 * l) * alpha_plus(ctx, v, l - 1, mut);
}

double coeff_B(const QContext& ctx, Variant v, Shift j, HalfInt l, HalfInt m, const Mutation& mut) {
  const double qm = ctx.q_power(m);
  switch (j) {
    case Shift::up:
      return qm * root_factor(ctx, l + m + 1, l + m + 2) * alpha_plus(ctx, v, l, mut);
    case Shift::keep:
      return qm * root_factor(ctx, l + m + 1, l - m) * alpha0(ctx, v, l, mut);
    case Shift::down:
      return qm * root_factor(ctx, l - m, l - m - 1) * alpha_minus(ctx, v, l, mut);
  }
  return 0.0;
}

double coeff_Bstar(const QContext& ctx, Variant v, Shift j, HalfInt l, HalfInt m, const Mutation& mut) {
  const double qm = ctx.q_power(m - 1);
  switch (j) {
    case Shift::up:
      return qm * root_factor(ctx, l - m + 2, l - m + 1) * alpha_minus(ctx, v, l + 1, mut);
    case Shift::keep:
      return qm * root_factor(ctx, l + m, l - m + 1) * alpha0(ctx, v, l, mut);
    case Shift::down: {
      const double root = root_factor(ctx, l + m, l + m - 1);
      if (root == 0.0) return 0.0;  // lowest shell: no l - 1 target
      return qm * root * alpha_plus(ctx, v, l - 1, mut);
    }
  }
  return 0.0;
}

double coeff_A(const QContext& ctx, Variant v, Shift j, HalfInt l, HalfInt m, const Mutation& mut) {
  const double q = ctx.q();
  switch (j) {
    case Shift::up:
      return -ctx.q_power(m + l + halves(1)) * root_factor(ctx, l - m + 1, l + m + 1) *
             alpha_plus(ctx, v, l, mut);
    case Shift::keep: {
      const double bracket = ctx.q_number(l - m + 1) * ctx.q_number(l + m) -
                             q * q * ctx.q_number(l - m) * ctx.q_number(l + m + 1);
      const double homogeneous = bracket * alpha0(ctx, v, l, mut) / (std::sqrt(q) * (1.0 + q * q));
      const double constant = mut.factor(Mutation::Family::a_const, l) / (1.0 + q * q);
      return homogeneous + constant;
    }
    case Shift::down:
      return ctx.q_power(m - l - halves(1)) * root_factor(ctx, l - m, l + m) * alpha_minus(ctx, v, l, mut);
  }
  return 0.0;
}

}  // namespace podles
