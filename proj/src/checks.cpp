#include "podles/checks.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "podles/antilinear.hpp"

namespace podles::checks {

namespace {

using la::AntilinearOp;
using la::Complex;
using la::Matrix;

constexpr double kStructuralTol = 1e-12;  // fp-exact identities
constexpr double kSpectrumTol = 1e-12;
constexpr double kStarTol = 1e-12;

/// Everything the suite needs, built once per parameter set.
struct Operators {
  Matrix A, B, Bs;
  Matrix e, f, k, kinv;
  Matrix gamma, D, I;
  AntilinearOp J;
  std::vector<unsigned char> interior;
  std::vector<unsigned char> full;
};

Operators build_operators(const SuiteParams& sp) {
  Operators ops;
  ops.A = build_sphere_gen(sp.ctx, sp.trunc, SphereGen::A, sp.mutation);
  ops.B = build_sphere_gen(sp.ctx, sp.trunc, SphereGen::B, sp.mutation);
  ops.Bs = build_sphere_gen(sp.ctx, sp.trunc, SphereGen::Bstar, sp.mutation);
  ops.e = build_uq_gen(sp.ctx, sp.trunc, UqGen::e);
  ops.f = build_uq_gen(sp.ctx, sp.trunc, UqGen::f);
  ops.k = build_uq_gen(sp.ctx, sp.trunc, UqGen::k);
  ops.kinv = build_uq_gen(sp.ctx, sp.trunc, UqGen::k_inv);
  ops.gamma = build_gamma(sp.trunc);
  ops.D = build_dirac(sp.ctx, sp.trunc, DiracParams{sp.z}, sp.mutation);
  ops.I = Matrix::identity(sp.trunc.dim());
  ops.J = build_reality(sp.trunc, sp.p, sp.mutation);
  ops.interior = sp.trunc.interior_mask();
  ops.full.assign(sp.trunc.dim(), 1);
  return ops;
}

double relative_residual(const Matrix& lhs, const Matrix& rhs, const std::vector<unsigned char>& keep) {
  Matrix diff = la::subtract(lhs, rhs);
  la::zero_columns(diff, keep);
  Matrix lhs_masked = lhs;
  la::zero_columns(lhs_masked, keep);
  return la::op_norm(diff) / std::max(1.0, la::op_norm(lhs_masked));
}

CheckReport make_report(const SuiteParams& sp, std::string name, std::string anchor, double residual,
                        double tolerance) {
  CheckReport r;
  r.check = std::move(name);
  r.anchor = std::move(anchor);
  r.q = sp.ctx.q();
  r.shells = sp.trunc.shells();
  r.p = sp.p;
  r.z = sp.z;
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  return r;
}

}  // namespace

SuiteParams make_params(double q, int shells, int margin) {
  return SuiteParams{QContext(q), Truncation(shells, margin), q};
}

std::vector<CheckReport> check_sphere_relations(const SuiteParams& sp) {
  const auto ops = build_operators(sp);
  const double q = sp.ctx.q();
  const double q2 = q * q;
  const Matrix AA = la::multiply(ops.A, ops.A);
  const Matrix AB = la::multiply(ops.A, ops.B);
  const Matrix BA = la::multiply(ops.B, ops.A);
  const Matrix ABs = la::multiply(ops.A, ops.Bs);
  const Matrix BsA = la::multiply(ops.Bs, ops.A);
  const Matrix BBs = la::multiply(ops.B, ops.Bs);
  const Matrix BsB = la::multiply(ops.Bs, ops.B);

  std::vector<CheckReport> out;
  out.push_back(make_report(sp, "sphere_AB", "A B = q^2 B A",
                            relative_residual(AB, la::scale(q2, BA), ops.interior), sp.tolerance));
  out.push_back(make_report(sp, "sphere_ABstar", "A B* = q^-2 B* A",
                            relative_residual(ABs, la::scale(1.0 / q2, BsA), ops.interior), sp.tolerance));
  out.push_back(make_report(sp, "sphere_BBstar", "B B* = q^-2 A (1 - A)",
                            relative_residual(BBs, la::scale(1.0 / q2, la::subtract(ops.A, AA)), ops.interior),
                            sp.tolerance));
  out.push_back(make_report(sp, "sphere_BstarB", "B* B = A (1 - q^2 A)",
                            relative_residual(BsB, la::subtract(ops.A, la::scale(q2, AA)), ops.interior),
                            sp.tolerance));
  out.push_back(make_report(sp, "sphere_combination", "B* B - q^4 B B* = (1 - q^2) A",
                            relative_residual(la::subtract(BsB, la::scale(q2 * q2, BBs)),
                                              la::scale(1.0 - q2, ops.A), ops.interior),
                            sp.tolerance));
  return out;
}

std::vector<CheckReport> check_equivariance(const SuiteParams& sp) {
  const auto ops = build_operators(sp);
  const QContext& ctx = sp.ctx;
  const double q = ctx.q();

  // Action of the symmetry generators on the sphere generators; constants
  // act through the identity operator.
  const Matrix act_e_B =
      la::add(la::scale(-(ctx.q_power(halves(1)) + ctx.q_power(halves(-3))), ops.A),
              la::scale(ctx.q_power(halves(-3)), ops.I));
  const Matrix act_e_Bs = Matrix(sp.trunc.dim(), sp.trunc.dim());
  const Matrix act_e_A = la::scale(ctx.q_power(halves(-1)), ops.Bs);
  const Matrix act_f_B = Matrix(sp.trunc.dim(), sp.trunc.dim());
  const Matrix act_f_Bs =
      la::add(la::scale(ctx.q_power(halves(3)) + ctx.q_power(halves(-1)), ops.A),
              la::scale(-ctx.q_power(halves(-1)), ops.I));
  const Matrix act_f_A = la::scale(-ctx.q_power(halves(1)), ops.B);
  // k acts diagonally; k^-1 with the inverse weights.
  const Matrix act_k_B = la::scale(q, ops.B);
  const Matrix act_k_Bs = la::scale(1.0 / q, ops.Bs);
  const Matrix act_kinv_B = la::scale(1.0 / q, ops.B);
  const Matrix act_kinv_Bs = la::scale(q, ops.Bs);

  struct Item {
    const char* h;
    const char* a;
    const Matrix* gen;
    const Matrix* h_act;     // pi(h |> a)
    const Matrix* kinv_act;  // pi(k^-1 |> a), unused for h = k
  };
  const Item items[] = {
      {"k", "A", &ops.A, &ops.A, nullptr},
      {"k", "B", &ops.B, &act_k_B, nullptr},
      {"k", "Bstar", &ops.Bs, &act_k_Bs, nullptr},
      {"e", "A", &ops.A, &act_e_A, &ops.A},
      {"e", "B", &ops.B, &act_e_B, &act_kinv_B},
      {"e", "Bstar", &ops.Bs, &act_e_Bs, &act_kinv_Bs},
      {"f", "A", &ops.A, &act_f_A, &ops.A},
      {"f", "B", &ops.B, &act_f_B, &act_kinv_B},
      {"f", "Bstar", &ops.Bs, &act_f_Bs, &act_kinv_Bs},
  };

  std::vector<CheckReport> out;
  for (const auto& it : items) {
    Matrix lhs, rhs;
    std::string anchor;
    if (it.h[0] == 'k') {
      lhs = la::multiply(ops.k, *it.gen);
      rhs = la::multiply(*it.h_act, ops.k);
      anchor = "k pi(a) = pi(k |> a) k";
    } else {
      const Matrix& h = it.h[0] == 'e' ? ops.e : ops.f;
      lhs = la::multiply(h, *it.gen);
      rhs = la::add(la::multiply(*it.h_act, ops.k), la::multiply(*it.kinv_act, h));
      anchor = "h pi(a) = pi(h |> a) k + pi(k^-1 |> a) h";
    }
    out.push_back(make_report(sp, std::string("covariance_") + it.h + "_" + it.a, anchor,
                              relative_residual(lhs, rhs, ops.interior), sp.tolerance));
  }
  return out;
}

std::vector<CheckReport> check_star_structure(const SuiteParams& sp) {
  const auto ops = build_operators(sp);
  std::vector<CheckReport> out;
  out.push_back(make_report(sp, "star_B", "pi(B)' = pi(B*)",
                            la::max_abs(la::subtract(la::adjoint(ops.B), ops.Bs)), kStarTol));
  out.push_back(make_report(sp, "star_A", "pi(A)' = pi(A)",
                            la::max_abs(la::subtract(la::adjoint(ops.A), ops.A)), kStarTol));
  return out;
}

std::vector<CheckReport> check_reality(const SuiteParams& sp) {
  const auto ops = build_operators(sp);
  std::vector<CheckReport> out;

  out.push_back(make_report(sp, "reality_J_squared", "J^2 = -1",
                            relative_residual(la::compose(ops.J, ops.J), la::scale(-1.0, ops.I), ops.full),
                            kStructuralTol));
  out.push_back(make_report(
      sp, "reality_gamma_J", "gamma J = -J gamma",
      relative_residual(la::compose(ops.gamma, ops.J).matrix(),
                        la::compose(la::AntilinearOp(la::scale(-1.0, ops.J.matrix())), ops.gamma).matrix(),
                        ops.full),
      kStructuralTol));

  // Commutant property: J pi(a) J commutes with pi(b) for every ordered
  // pair of generators, for any p > 0.
  const std::pair<const char*, const Matrix*> gens[] = {{"A", &ops.A}, {"B", &ops.B}, {"Bstar", &ops.Bs}};
  for (const auto& [na, ma] : gens) {
    const Matrix sandwiched = la::sandwich(ops.J, *ma);
    for (const auto& [nb, mb] : gens) {
      out.push_back(make_report(sp, std::string("commutant_") + na + "_" + nb,
                                "J pi(a) J pi(b) = pi(b) J pi(a) J",
                                relative_residual(la::multiply(sandwiched, *mb),
                                                  la::multiply(*mb, sandwiched), ops.interior),
                                sp.tolerance));
    }
  }

  // Equivariance of J holds only at p = q: h J = J (S h)* with
  // (S k)* = k^-1, (S e)* = -q^-1 f, (S f)* = -q e.
  const double q = sp.ctx.q();
  const std::tuple<const char*, const Matrix*, Matrix> pairs[] = {
      {"k", &ops.k, ops.kinv},
      {"e", &ops.e, la::scale(-1.0 / q, ops.f)},
      {"f", &ops.f, la::scale(-q, ops.e)},
  };
  for (const auto& [name, h, sh_star] : pairs) {
    out.push_back(make_report(sp, std::string("reality_equivariance_") + name, "h J = J (S h)*",
                              relative_residual(la::compose(*h, ops.J).matrix(),
                                                la::compose(ops.J, sh_star).matrix(), ops.full),
                              sp.tolerance));
  }
  return out;
}

std::vector<CheckReport> check_dirac(const SuiteParams& sp) {
  const auto ops = build_operators(sp);
  std::vector<CheckReport> out;

  out.push_back(make_report(sp, "dirac_gamma", "D gamma = -gamma D",
                            relative_residual(la::multiply(ops.D, ops.gamma),
                                              la::scale(-1.0, la::multiply(ops.gamma, ops.D)), ops.full),
                            kStructuralTol));
  out.push_back(make_report(sp, "dirac_J", "D J = J D",
                            relative_residual(la::compose(ops.D, ops.J).matrix(),
                                              la::compose(ops.J, ops.D).matrix(), ops.full),
                            kStructuralTol));

  const std::pair<const char*, const Matrix*> symgens[] = {{"e", &ops.e}, {"f", &ops.f}, {"k", &ops.k}};
  for (const auto& [name, h] : symgens) {
    out.push_back(make_report(sp, std::string("dirac_equivariance_") + name, "D h = h D",
                              relative_residual(la::multiply(ops.D, *h), la::multiply(*h, ops.D), ops.full),
                              kStructuralTol));
  }

  // First order condition for all ordered generator pairs.
  const std::pair<const char*, const Matrix*> gens[] = {{"A", &ops.A}, {"B", &ops.B}, {"Bstar", &ops.Bs}};
  for (const auto& [na, ma] : gens) {
    const Matrix da = commutator(ops.D, *ma);
    for (const auto& [nb, mb] : gens) {
      const Matrix sb = la::sandwich(ops.J, *mb);
      out.push_back(make_report(sp, std::string("first_order_") + na + "_" + nb,
                                "[[D, pi(a)], J pi(b) J] = 0",
                                relative_residual(la::multiply(da, sb), la::multiply(sb, da), ops.interior),
                                sp.tolerance));
    }
  }

  // Shell value recurrence d_l + d_{l+2} = [2] d_{l+1} on d_l = z [l+1/2].
  {
    const double two = sp.ctx.q_number(2);
    const double zabs = std::abs(sp.z);
    double worst = 0.0;
    for (HalfInt l = halves(1); l <= HalfInt(40); l += 1) {
      const double d0 = zabs * sp.ctx.q_number(l + halves(1));
      const double d1 = zabs * sp.ctx.q_number(l + halves(3));
      const double d2 = zabs * sp.ctx.q_number(l + halves(5));
      const double scale = std::max({1.0, std::abs(d0), std::abs(d2), std::abs(two * d1)});
      worst = std::max(worst, std::abs(d0 + d2 - two * d1) / scale);
    }
    out.push_back(
        make_report(sp, "dirac_recurrence", "d_l + d_{l+2} = [2] d_{l+1}", worst, kSpectrumTol));
  }

  // Spectrum against the analytic list, ±|z|[l+1/2] with multiplicity 2l+1.
  {
    const std::vector<double> computed = la::eigenvalues_hermitian(ops.D);
    std::vector<double> analytic;
    analytic.reserve(computed.size());
    for (int s = 0; s < sp.trunc.shells(); ++s) {
      const HalfInt l = halves(2 * s + 1);
      const double value = dirac_shell_value(sp.ctx, sp.z, l);
      for (int i = 0; i < l.twice() + 1; ++i) {
        analytic.push_back(-value);
        analytic.push_back(value);
      }
    }
    std::sort(analytic.begin(), analytic.end());
    double dev = 0.0, top = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
      dev = std::max(dev, std::abs(computed[i] - analytic[i]));
      top = std::max(top, std::abs(analytic[i]));
    }
    out.push_back(make_report(sp, "dirac_spectrum", "spec(D) = { ±|z| [l+1/2] }",
                              dev / std::max(1.0, top), kSpectrumTol));
  }
  return out;
}

std::vector<CheckReport> run_verify_suite(const SuiteParams& sp) {
  std::vector<CheckReport> out;
  for (auto group : {check_sphere_relations, check_equivariance, check_star_structure, check_reality,
                     check_dirac}) {
    auto reports = group(sp);
    out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
  }
  return out;
}

bool all_passed(std::span<const CheckReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace podles::checks
