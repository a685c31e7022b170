#include "podles/operators.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace podles {

namespace {

Variant variant_of(Chirality c) { return c == Chirality::plus ? Variant::pi_plus : Variant::pi_minus; }

/// i^(2m) for half-odd m: +i when 2m = 1 mod 4, -i when 2m = 3 mod 4.
la::Complex half_odd_phase(HalfInt m) {
  const int r = ((m.twice() % 4) + 4) % 4;
  return r == 1 ? la::Complex{0.0, 1.0} : la::Complex{0.0, -1.0};
}

}  // namespace

la::Matrix build_sphere_gen(const QContext& ctx, const Truncation& trunc, SphereGen gen,
                            const Mutation& mut) {
  const auto basis = trunc.enumerate();
  la::Matrix op(trunc.dim(), trunc.dim());
  const int dm = gen == SphereGen::A ? 0 : (gen == SphereGen::B ? 1 : -1);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& [l, m, chir] = basis[col];
    const Variant v = variant_of(chir);
    const HalfInt mp = m + HalfInt::from_twice(2 * dm);
    for (Shift j : {Shift::up, Shift::keep, Shift::down}) {
      const HalfInt lp = l + HalfInt(static_cast<int>(j));
      if (!trunc.contains(lp, mp)) continue;
      double val = 0.0;
      switch (gen) {
        case SphereGen::A: val = coeff_A(ctx, v, j, l, m, mut); break;
        case SphereGen::B: val = coeff_B(ctx, v, j, l, m, mut); break;
        case SphereGen::Bstar: val = coeff_Bstar(ctx, v, j, l, m, mut); break;
      }
      if (val != 0.0) op(trunc.position({lp, mp, chir}), col) = la::Complex{val, 0.0};
    }
  }
  return op;
}

la::Matrix build_uq_gen(const QContext& ctx, const Truncation& trunc, UqGen gen) {
  const auto basis = trunc.enumerate();
  la::Matrix op(trunc.dim(), trunc.dim());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& [l, m, chir] = basis[col];
    switch (gen) {
      case UqGen::k:
        op(col, col) = la::Complex{ctx.q_power(m), 0.0};
        break;
      case UqGen::k_inv:
        op(col, col) = la::Complex{ctx.q_power(-m), 0.0};
        break;
      case UqGen::f:
        if (m + 1 <= l) {
          const double val = std::sqrt(ctx.q_number(l - m) * ctx.q_number(l + m + 1));
          op(trunc.position({l, m + 1, chir}), col) = la::Complex{val, 0.0};
        }
        break;
      case UqGen::e:
        if (m - 1 >= -l) {
          const double val = std::sqrt(ctx.q_number(l - m + 1) * ctx.q_number(l + m));
          op(trunc.position({l, m - 1, chir}), col) = la::Complex{val, 0.0};
        }
        break;
    }
  }
  return op;
}

la::Matrix build_gamma(const Truncation& trunc) {
  const auto basis = trunc.enumerate();
  la::Matrix op(trunc.dim(), trunc.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    op(i, i) = la::Complex{basis[i].chirality == Chirality::plus ? 1.0 : -1.0, 0.0};
  }
  return op;
}

la::AntilinearOp build_reality(const Truncation& trunc, double p, const Mutation& mut) {
  if (!(p > 0.0)) throw std::invalid_argument("reality parameter p must be positive");
  const auto basis = trunc.enumerate();
  la::Matrix mat(trunc.dim(), trunc.dim());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& [l, m, chir] = basis[col];
    const Chirality flipped = chir == Chirality::plus ? Chirality::minus : Chirality::plus;
    const la::Complex phase = half_odd_phase(m) * mut.factor(Mutation::Family::j_phase, l);
    mat(trunc.position({l, -m, flipped}), col) = phase * std::pow(p, m.value());
  }
  return la::AntilinearOp(std::move(mat));
}

la::Matrix build_dirac_custom(const Truncation& trunc, la::Complex z,
                              const std::function<double(HalfInt)>& shell_profile) {
  if (z == la::Complex{}) throw std::invalid_argument("Dirac parameter z must be nonzero");
  const auto basis = trunc.enumerate();
  la::Matrix op(trunc.dim(), trunc.dim());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& [l, m, chir] = basis[col];
    const double d = shell_profile(l);
    if (chir == Chirality::plus) {
      op(trunc.position({l, m, Chirality::minus}), col) = z * d;
    } else {
      op(trunc.position({l, m, Chirality::plus}), col) = std::conj(z) * d;
    }
  }
  return op;
}

la::Matrix build_dirac(const QContext& ctx, const Truncation& trunc, const DiracParams& params,
                       const Mutation& mut) {
  return build_dirac_custom(trunc, params.z, [&](HalfInt l) {
    return ctx.q_number(l + halves(1)) * mut.factor(Mutation::Family::dirac_eig, l);
  });
}

la::Matrix commutator(const la::Matrix& a, const la::Matrix& b) {
  return la::subtract(la::multiply(a, b), la::multiply(b, a));
}

la::Matrix anticommutator(const la::Matrix& a, const la::Matrix& b) {
  return la::add(la::multiply(a, b), la::multiply(b, a));
}

double dirac_shell_value(const QContext& ctx, la::Complex z, HalfInt l) {
  return std::abs(z) * ctx.q_number(l + halves(1));
}

void write_triplets(const la::Matrix& m, std::ostream& os) {
  char line[96];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const la::Complex v = m(r, c);
      if (v.real() == 0.0 && v.imag() == 0.0) continue;
      std::snprintf(line, sizeof line, "%zu %zu %.17g %.17g\n", r, c, v.real() + 0.0, v.imag() + 0.0);
      os << line;
    }
  }
}

}  // namespace podles
