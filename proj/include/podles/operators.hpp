#pragma once

#include <functional>
#include <iosfwd>

#include "podles/antilinear.hpp"
#include "podles/basis.hpp"
#include "podles/coeffs.hpp"
#include "podles/matrix.hpp"

namespace podles {

enum class SphereGen : unsigned char { A, B, Bstar };
enum class UqGen : unsigned char { e, f, k, k_inv };

struct DiracParams {
  la::Complex z{1.0, 0.0};
};

/// Sphere generator on the truncated spinor space: block diagonal in
/// chirality, pi_plus coefficients on the plus tower and pi_minus on the
/// minus tower. Shifts past the top shell are compressed away; identities
/// are only ever evaluated on interior vectors where that is invisible.
la::Matrix build_sphere_gen(const QContext& ctx, const Truncation& trunc, SphereGen gen,
                            const Mutation& mut = {});

/// Symmetry generator acting shell by shell, identically on both towers.
la::Matrix build_uq_gen(const QContext& ctx, const Truncation& trunc, UqGen gen);

/// Chirality grading: +1 on the plus tower, -1 on the minus tower.
la::Matrix build_gamma(const Truncation& trunc);

/// Reality operator J |l,m,±> = i^(2m) p^m |l,-m,∓> composed with
/// conjugation. 2m is odd on the half-integer towers, so the phase is ±i
/// and J squares to -1. Any p > 0 is accepted; p = q is the equivariant
/// choice.
la::AntilinearOp build_reality(const Truncation& trunc, double p, const Mutation& mut = {});

/// Dirac operator: off diagonal in chirality, scalar z [l + 1/2] per shell
/// from plus to minus and conj(z) [l + 1/2] back, selfadjoint by
/// construction.
la::Matrix build_dirac(const QContext& ctx, const Truncation& trunc, const DiracParams& params,
                       const Mutation& mut = {});

/// Dirac-shaped operator with an arbitrary shell profile in place of
/// [l + 1/2]; used to demonstrate that other profiles break the first
/// order condition.
la::Matrix build_dirac_custom(const Truncation& trunc, la::Complex z,
                              const std::function<double(HalfInt)>& shell_profile);

la::Matrix commutator(const la::Matrix& a, const la::Matrix& b);
la::Matrix anticommutator(const la::Matrix& a, const la::Matrix& b);

/// Analytic Dirac shell value |z| [l + 1/2] without building a matrix.
double dirac_shell_value(const QContext& ctx, la::Complex z, HalfInt l);

/// Sparse triplet export, one "row col re im" line per nonzero entry,
/// rows ascending then columns ascending, 0-based.
void write_triplets(const la::Matrix& m, std::ostream& os);

}  // namespace podles
