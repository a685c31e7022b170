#include <algorithm>
#include <cmath>
#include <string>

#include "podles/checks.hpp"

namespace podles::checks {

namespace {

using la::Matrix;

const char* shift_label(int twice_dl) {
  if (twice_dl > 0) return "B_elem_up";
  if (twice_dl < 0) return "B_elem_down";
  return "B_elem_keep";
}

}  // namespace

std::vector<ScanRow> bound_scan(const QContext& ctx, const DiracParams& params,
                                std::span<const int> shells_list, int margin) {
  std::vector<ScanRow> rows;
  for (int shells : shells_list) {
    const Truncation trunc(shells, margin);
    const auto mask = trunc.interior_mask();
    const auto basis = trunc.enumerate();
    const Matrix d = build_dirac(ctx, trunc, params);

    const std::pair<const char*, SphereGen> gens[] = {
        {"A", SphereGen::A}, {"B", SphereGen::B}, {"Bstar", SphereGen::Bstar}};
    Matrix comm_b;  // kept for the element table below
    for (const auto& [name, gen] : gens) {
      Matrix comm = commutator(d, build_sphere_gen(ctx, trunc, gen));
      la::zero_columns(comm, mask);
      rows.push_back({static_cast<double>(shells), name, la::op_norm(comm)});
      if (gen == SphereGen::B) comm_b = std::move(comm);
    }
    rows.push_back({static_cast<double>(shells), "D", la::op_norm(d)});

    // Largest |matrix element| of [D, pi(B)] per shell shift, the three
    // quantities whose uniform boundedness carries the estimate.
    double by_shift[3] = {0.0, 0.0, 0.0};  // up, keep, down
    for (std::size_t r = 0; r < comm_b.rows(); ++r) {
      for (std::size_t c = 0; c < comm_b.cols(); ++c) {
        const double v = std::abs(comm_b(r, c));
        if (v == 0.0) continue;
        const int twice_dl = basis[r].l.twice() - basis[c].l.twice();
        const int slot = twice_dl > 0 ? 0 : (twice_dl == 0 ? 1 : 2);
        by_shift[slot] = std::max(by_shift[slot], v);
      }
    }
    rows.push_back({static_cast<double>(shells), shift_label(+2), by_shift[0]});
    rows.push_back({static_cast<double>(shells), shift_label(0), by_shift[1]});
    rows.push_back({static_cast<double>(shells), shift_label(-2), by_shift[2]});
  }
  return rows;
}

std::vector<ScanRow> classical_limit_scan(std::span<const double> q_values, int shells,
                                          const DiracParams& params, int margin) {
  std::vector<ScanRow> rows;
  for (double q : q_values) {
    const QContext ctx(q);
    const Truncation trunc(shells, margin);

    // Spectrum deviation from the classical values ±|z|(l + 1/2).
    const std::vector<double> computed = la::eigenvalues_hermitian(build_dirac(ctx, trunc, params));
    std::vector<double> classical;
    classical.reserve(computed.size());
    for (int s = 0; s < shells; ++s) {
      const double value = std::abs(params.z) * (s + 1.0);
      for (int i = 0; i < 2 * s + 2; ++i) {
        classical.push_back(-value);
        classical.push_back(value);
      }
    }
    std::sort(classical.begin(), classical.end());
    double dev = 0.0;
    for (std::size_t i = 0; i < classical.size(); ++i) {
      dev = std::max(dev, std::abs(computed[i] - classical[i]));
    }
    rows.push_back({q, "spectrum", dev});

    SuiteParams sp{ctx, trunc, q, params.z};
    double worst = 0.0;
    for (const auto& r : run_verify_suite(sp)) worst = std::max(worst, r.residual);
    rows.push_back({q, "checks", worst});
  }
  return rows;
}

std::vector<SpectrumRow> spectrum_table(const QContext& ctx, const Truncation& trunc,
                                        const DiracParams& params) {
  const std::vector<double> computed = la::eigenvalues_hermitian(build_dirac(ctx, trunc, params));

  // Analytic multiplets sorted by value; [l + 1/2] is strictly increasing
  // in l, so segments of the sorted numeric list line up with them.
  struct Multiplet {
    HalfInt l;
    double value;
    int count;
  };
  std::vector<Multiplet> multiplets;
  for (int s = trunc.shells() - 1; s >= 0; --s) {
    const HalfInt l = halves(2 * s + 1);
    multiplets.push_back({l, -dirac_shell_value(ctx, params.z, l), l.twice() + 1});
  }
  for (int s = 0; s < trunc.shells(); ++s) {
    const HalfInt l = halves(2 * s + 1);
    multiplets.push_back({l, dirac_shell_value(ctx, params.z, l), l.twice() + 1});
  }

  std::vector<SpectrumRow> rows;
  std::size_t offset = 0;
  for (const auto& mult : multiplets) {
    SpectrumRow row;
    row.l = mult.l;
    row.analytic = mult.value;
    row.multiplicity = mult.count;
    row.computed = computed[offset];
    for (int i = 0; i < mult.count; ++i) {
      row.deviation = std::max(row.deviation, std::abs(computed[offset + i] - mult.value));
    }
    offset += static_cast<std::size_t>(mult.count);
    rows.push_back(row);
  }

  // Present per shell: l ascending, negative branch then positive.
  std::sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    if (a.l != b.l) return a.l < b.l;
    return a.analytic < b.analytic;
  });
  return rows;
}

}  // namespace podles::checks
