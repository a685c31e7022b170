#pragma once

#include <optional>

#include "podles/halfint.hpp"
#include "podles/qnum.hpp"

namespace podles {

/// The two inequivalent equivariant representations of the sphere algebra
/// on the half-integer tower.
enum class Variant : unsigned char { pi_plus, pi_minus };

/// Shell shift of a generator matrix element: l + 1, l, or l - 1.
enum class Shift : int { up = +1, keep = 0, down = -1 };

/// Deliberate single-family perturbation of the operator data, used by the
/// sensitivity checks to demonstrate that each coefficient family is load
/// bearing. Default is the identity (no perturbation).
struct Mutation {
  enum class Family : unsigned char { none, alpha0, alpha_plus, a_const, j_phase, dirac_eig };

  Family family = Family::none;
  double rel = 0.0;                // relative size, e.g. 1e-3
  std::optional<HalfInt> only_l;   // restrict to one shell; empty = every shell

  bool applies(Family f, HalfInt l) const {
    return family == f && (!only_l || *only_l == l);
  }
  double factor(Family f, HalfInt l) const { return applies(f, l) ? 1.0 + rel : 1.0; }
};

// Shell profiles of the generator coefficients. alpha_minus is fixed by
// alpha_plus through the *-representation constraint
//   alpha_minus(l + 1) = -q^(2l+2) alpha_plus(l)
// and vanishes on the lowest shell, where its ladder factor is zero anyway.
double alpha0(const QContext& ctx, Variant v, HalfInt l, const Mutation& mut = {});
double alpha_plus(const QContext& ctx, Variant v, HalfInt l, const Mutation& mut = {});
double alpha_minus(const QContext& ctx, Variant v, HalfInt l, const Mutation& mut = {});

// Matrix elements of the generators on |l, m>. Out-of-range targets give 0;
// all selection logic lives in the vanishing q-factorials under the roots.
double coeff_B(const QContext& ctx, Variant v, Shift j, HalfInt l, HalfInt m, const Mutation& mut = {});
double coeff_Bstar(const QContext& ctx, Variant v, Shift j, HalfInt l, HalfInt m, const Mutation& mut = {});
double coeff_A(const QContext& ctx, Variant v, Shift j, HalfInt l, HalfInt m, const Mutation& mut = {});

}  // namespace podles
