// Acceptance suite: every gate the library has to clear, one line each.
// Exits nonzero when any gate fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "oracle_sweeps.hpp"
#include "podles/checks.hpp"

using namespace podles;
namespace checks = podles::checks;
namespace la = podles::la;

namespace {

const double kQGrid[] = {0.3, 0.5, 0.9, 1.0};
const int kShellsGrid[] = {6, 12};

int g_failures = 0;

void gate(int id, const std::string& title, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double worst_residual(const std::vector<checks::CheckReport>& reports, const std::string& prefix) {
  double worst = 0.0;
  for (const auto& r : reports) {
    if (r.check.rfind(prefix, 0) == 0) worst = std::max(worst, r.residual);
  }
  return worst;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void criterion_1_and_2() {
  const auto start = std::chrono::steady_clock::now();
  double worst_sphere = 0.0, worst_cov = 0.0;
  for (double q : kQGrid) {
    for (int shells : kShellsGrid) {
      const auto sp = checks::make_params(q, shells);
      worst_sphere = std::max(worst_sphere, worst_residual(checks::check_sphere_relations(sp), "sphere_"));
      worst_cov = std::max(worst_cov, worst_residual(checks::check_equivariance(sp), "covariance_"));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  gate(1, "sphere relations < 1e-9 on the q/shells grid, < 10 s",
       worst_sphere < 1e-9 && seconds < 10.0,
       "worst " + fmt(worst_sphere) + ", " + fmt(seconds) + " s");
  gate(2, "all nine covariance identities < 1e-9 on the grid", worst_cov < 1e-9,
       "worst " + fmt(worst_cov));
}

void criterion_3() {
  double worst = 0.0;
  for (double q : kQGrid) {
    for (int shells : kShellsGrid) {
      worst = std::max(worst, worst_residual(checks::check_star_structure(checks::make_params(q, shells)),
                                             "star_"));
    }
  }
  gate(3, "pi(B)' = pi(B*) and pi(A)' = pi(A) entrywise to 1e-12", worst <= 1e-12, "worst " + fmt(worst));
}

void criterion_4() {
  double worst_structural = 0.0, worst_commutant = 0.0, worst_equivariance = 0.0;
  for (double q : kQGrid) {
    for (int shells : kShellsGrid) {
      for (double p : {0.5, q, 1.0}) {
        auto sp = checks::make_params(q, shells);
        sp.p = p;
        const auto reports = checks::check_reality(sp);
        worst_structural = std::max(worst_structural, worst_residual(reports, "reality_J_squared"));
        worst_structural = std::max(worst_structural, worst_residual(reports, "reality_gamma_J"));
        worst_commutant = std::max(worst_commutant, worst_residual(reports, "commutant_"));
        if (p == q) {
          worst_equivariance = std::max(worst_equivariance, worst_residual(reports, "reality_equivariance_"));
        }
      }
    }
  }
  auto control = checks::make_params(0.5, 8);
  control.p = 1.0;
  double control_residual = 0.0;
  for (const auto& r : checks::check_reality(control)) {
    if (r.check == "reality_equivariance_e") control_residual = r.residual;
  }
  const bool ok = worst_structural <= 1e-12 && worst_commutant < 1e-9 && worst_equivariance < 1e-9 &&
                  control_residual > 1e-2;
  gate(4, "reality: J^2, gamma J, commutant, equivariance at p = q; p != q control fails", ok,
       "J2/gJ " + fmt(worst_structural) + ", commutant " + fmt(worst_commutant) + ", equiv " +
           fmt(worst_equivariance) + ", control " + fmt(control_residual));
}

void criterion_5() {
  double worst = 0.0, worst_spectrum = 0.0, worst_recurrence = 0.0;
  for (double q : kQGrid) {
    for (int shells : kShellsGrid) {
      for (la::Complex z : {la::Complex{1.0, 0.0}, la::Complex{0.0, 2.0}}) {
        auto sp = checks::make_params(q, shells);
        sp.z = z;
        const auto reports = checks::check_dirac(sp);
        worst = std::max(worst, worst_residual(reports, "dirac_gamma"));
        worst = std::max(worst, worst_residual(reports, "dirac_J"));
        worst = std::max(worst, worst_residual(reports, "dirac_equivariance_"));
        worst = std::max(worst, worst_residual(reports, "first_order_"));
        worst_spectrum = std::max(worst_spectrum, worst_residual(reports, "dirac_spectrum"));
        worst_recurrence = std::max(worst_recurrence, worst_residual(reports, "dirac_recurrence"));
      }
    }
  }
  const bool ok = worst < 1e-9 && worst_spectrum <= 1e-12 && worst_recurrence <= 1e-12;
  gate(5, "Dirac: gamma/J/equivariance/first order < 1e-9, spectrum and recurrence to 1e-12", ok,
       "identities " + fmt(worst) + ", spectrum " + fmt(worst_spectrum) + ", recurrence " +
           fmt(worst_recurrence));
}

void criterion_6() {
  const int shells_list[] = {8, 12, 16, 20, 24};
  const auto rows = checks::bound_scan(QContext(0.5), DiracParams{}, shells_list);
  std::map<std::string, std::vector<double>> series;
  for (const auto& r : rows) series[r.label].push_back(r.value);

  bool ok = true;
  std::string detail;
  for (const char* alpha : {"A", "B", "Bstar"}) {
    const auto& v = series[alpha];
    const double rel_increase = (v[4] - v[3]) / v[4];
    ok = ok && rel_increase < 1e-6 && rel_increase >= 0.0;
    detail += std::string(alpha) + " " + fmt(rel_increase) + " ";
  }
  const auto& d = series["D"];
  const double d_growth = (d[4] - d[3]) / d[4];
  ok = ok && d_growth > 0.5;
  gate(6, "commutator norms saturate over shells 8..24 at q = 0.5 while |D| grows", ok,
       detail + "D growth " + fmt(d_growth));
}

void criterion_7() {
  const double qs[] = {0.9, 0.99, 0.999, 1.0};
  const auto rows = checks::classical_limit_scan(qs, 10, DiracParams{});
  std::vector<double> deviation;
  for (const auto& r : rows) {
    if (r.label == "spectrum") deviation.push_back(r.value);
  }
  const bool ok = deviation.size() == 4 && deviation[3] <= 1e-12 && deviation[0] > deviation[1] &&
                  deviation[1] > deviation[2];
  gate(7, "classical limit: exact spectrum at q = 1, monotone approach over 0.9/0.99/0.999", ok,
       "dev " + fmt(deviation[0]) + " > " + fmt(deviation[1]) + " > " + fmt(deviation[2]) +
           ", q=1 " + fmt(deviation[3]));
}

void criterion_8() {
  double worst = 0.0;
  for (double q : kQGrid) {
    const QContext ctx(q);
    for (Variant v : {Variant::pi_plus, Variant::pi_minus}) {
      worst = std::max(worst, oracle::worst_alpha0_recurrence(ctx, v, HalfInt(40)));
      worst = std::max(worst, oracle::worst_ladder_recursion(ctx, v, halves(17)));
      worst = std::max(worst, oracle::worst_initial_value(ctx, v));
      worst = std::max(worst, oracle::worst_quadratic_relations(ctx, v, halves(25)));
    }
  }
  gate(8, "coefficient cross-checks (recurrences, lowest shell, quadratic relations) to 1e-11",
       worst <= 1e-11, "worst " + fmt(worst));
}

void criterion_9() {
  const Mutation::Family families[] = {Mutation::Family::alpha0, Mutation::Family::alpha_plus,
                                       Mutation::Family::a_const, Mutation::Family::j_phase,
                                       Mutation::Family::dirac_eig};
  const char* names[] = {"alpha0", "alpha_plus", "a_const", "j_phase", "dirac_eig"};
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < std::size(families); ++i) {
    auto sp = checks::make_params(0.5, 8);
    sp.mutation.family = families[i];
    sp.mutation.rel = 1e-3;
    int tripped = 0;
    for (const auto& r : checks::run_verify_suite(sp)) tripped += r.residual > 1e-6 ? 1 : 0;
    ok = ok && tripped >= 1;
    detail += std::string(names[i]) + ":" + std::to_string(tripped) + " ";
  }
  gate(9, "each single-family 1e-3 perturbation trips at least one check at 1e-6", ok, detail);
}

void criterion_10() {
  const auto narrow = checks::run_verify_suite(checks::make_params(0.5, 12, 2));
  const auto wide = checks::run_verify_suite(checks::make_params(0.5, 12, 4));
  bool ok = narrow.size() == wide.size();
  double worst = 0.0;
  for (std::size_t i = 0; ok && i < narrow.size(); ++i) {
    ok = narrow[i].check == wide[i].check;
    worst = std::max(worst, std::abs(narrow[i].residual - wide[i].residual));
  }
  ok = ok && worst <= 1e-12;
  gate(10, "doubling the interior margin moves no residual by more than 1e-12", ok,
       "max shift " + fmt(worst));
}

}  // namespace

int main() {
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
