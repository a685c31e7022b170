#pragma once

#include <span>
#include <string>
#include <vector>

#include "podles/basis.hpp"
#include "podles/coeffs.hpp"
#include "podles/matrix.hpp"
#include "podles/operators.hpp"
#include "podles/qnum.hpp"

namespace podles::checks {

/// One named identity evaluated as a residual.
///
/// The residual metric is |(LHS - RHS) P| / max(1, |LHS P|) in operator
/// norm, with P the projector onto the truncation interior (dropped for
/// identities that do not involve the sphere generators, which hold on the
/// whole truncated space). The normalization matters: q-numbers grow like
/// q^-l, so absolute residuals are not comparable across shells.
struct CheckReport {
  std::string check;
  std::string anchor;  // the identity in plain text
  double q = 1.0;
  int shells = 0;
  double p = 1.0;
  la::Complex z{1.0, 0.0};
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteParams {
  QContext ctx;
  Truncation trunc;
  double p;                    // reality parameter; equivariant choice is p = q
  la::Complex z{1.0, 0.0};
  double tolerance = 1e-9;     // for identity checks; structural checks pin their own
  Mutation mutation{};
};

SuiteParams make_params(double q, int shells, int margin = 2);

// Named residual checks, grouped as in the verification suite.
std::vector<CheckReport> check_sphere_relations(const SuiteParams& sp);
std::vector<CheckReport> check_equivariance(const SuiteParams& sp);
std::vector<CheckReport> check_star_structure(const SuiteParams& sp);
std::vector<CheckReport> check_reality(const SuiteParams& sp);
std::vector<CheckReport> check_dirac(const SuiteParams& sp);

/// The full suite in fixed order.
std::vector<CheckReport> run_verify_suite(const SuiteParams& sp);

bool all_passed(std::span<const CheckReport> reports);

/// Scan table row; key is the shells count or the deformation parameter.
struct ScanRow {
  double key = 0.0;
  std::string label;
  double value = 0.0;
};

/// Interior operator norms of [D, pi(a)] for a in {A, B, Bstar} over a list
/// of truncation sizes, the norm of D itself as the unbounded contrast, and
/// the per-shift matrix element maxima of [D, pi(B)].
std::vector<ScanRow> bound_scan(const QContext& ctx, const DiracParams& params,
                                std::span<const int> shells_list, int margin = 2);

/// Per q: largest deviation of the Dirac spectrum from the classical values
/// ±|z|(l + 1/2), and the largest residual of the verification suite at
/// p = q.
std::vector<ScanRow> classical_limit_scan(std::span<const double> q_values, int shells,
                                          const DiracParams& params, int margin = 2);

struct SpectrumRow {
  HalfInt l;
  double analytic = 0.0;  // signed value ±|z| [l + 1/2]
  int multiplicity = 0;
  double computed = 0.0;
  double deviation = 0.0;  // largest |computed - analytic| in the multiplet
};

std::vector<SpectrumRow> spectrum_table(const QContext& ctx, const Truncation& trunc,
                                        const DiracParams& params);

}  // namespace podles::checks
