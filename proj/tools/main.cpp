#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "podles/checks.hpp"
#include "podles/report.hpp"

// Exit codes: 0 all checks pass, 1 at least one check failed,
// 2 configuration error, 3 overflow guard tripped.

namespace {

using podles::DiracParams;
using podles::QContext;
using podles::Truncation;
namespace checks = podles::checks;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitOverflow = 3;

struct Options {
  std::string q;
  std::string shells;
  double z_re = 1.0;
  double z_im = 0.0;
  std::optional<double> p;
  int margin = 2;
  double tol = 1e-9;
  std::string out = "-";
  std::string format;  // json or csv; default depends on the subcommand
  std::string op_name; // export only
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("trailing junk in " + what + ": '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("trailing junk in " + what + ": '" + text + "'");
  return v;
}

double parse_scalar_q(const Options& o) {
  if (o.q.empty()) throw std::invalid_argument("--q is required");
  return parse_double(o.q, "--q");
}

int parse_scalar_shells(const Options& o) {
  if (o.shells.empty()) throw std::invalid_argument("--shells is required");
  return parse_int(o.shells, "--shells");
}

/// Rejects parameter combinations whose largest q-power already exceeds the
/// double exponent range, before any matrix is allocated.
void overflow_preflight(double q, int shells) {
  if (q <= 0.0 || q >= 1.0) return;
  const double worst_exponent = (2.0 * shells + 3.0) * -std::log(q);
  if (worst_exponent > 709.0) {
    throw std::overflow_error("q = " + std::to_string(q) + ", shells = " + std::to_string(shells));
  }
}

checks::SuiteParams suite_params(const Options& o, double q, int shells) {
  overflow_preflight(q, shells);
  checks::SuiteParams sp{QContext(q), Truncation(shells, o.margin), o.p.value_or(q)};
  sp.z = {o.z_re, o.z_im};
  sp.tolerance = o.tol;
  if (sp.z == podles::la::Complex{}) throw std::invalid_argument("z must be nonzero");
  if (!(sp.p > 0.0)) throw std::invalid_argument("p must be positive");
  return sp;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
  os << content;
}

std::string pick_format(const Options& o, const std::string& fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "csv") throw std::invalid_argument("format must be json or csv");
  return f;
}

int cmd_verify(const Options& o) {
  const auto sp = suite_params(o, parse_scalar_q(o), parse_scalar_shells(o));
  (void)sp.trunc.interior_mask();  // fail early with a config error when empty
  const auto reports = checks::run_verify_suite(sp);
  const std::string format = pick_format(o, "json");
  write_output(o.out, format == "json" ? checks::report_json(reports, sp, "verify")
                                       : checks::report_csv(reports, sp, "verify"));
  return checks::all_passed(reports) ? kExitPass : kExitCheckFailure;
}

int cmd_spectrum(const Options& o) {
  const auto sp = suite_params(o, parse_scalar_q(o), parse_scalar_shells(o));
  const auto rows = checks::spectrum_table(sp.ctx, sp.trunc, DiracParams{sp.z});
  const std::string comment = checks::config_line("spectrum", sp);
  const std::string format = pick_format(o, "csv");
  write_output(o.out,
               format == "csv" ? checks::spectrum_csv(rows, comment) : checks::spectrum_json(rows, comment));
  return kExitPass;
}

int cmd_bound_scan(const Options& o) {
  if (o.q.empty()) throw std::invalid_argument("--q is required");
  if (o.shells.empty()) throw std::invalid_argument("--shells is required");
  const double q = parse_double(o.q, "--q");
  std::vector<int> shells_list;
  for (const auto& item : split_list(o.shells)) shells_list.push_back(parse_int(item, "--shells"));
  if (shells_list.empty()) throw std::invalid_argument("--shells list is empty");
  for (std::size_t i = 1; i < shells_list.size(); ++i) {
    if (shells_list[i] <= shells_list[i - 1]) throw std::invalid_argument("--shells list must ascend");
  }
  for (int shells : shells_list) overflow_preflight(q, shells);

  const auto sp = suite_params(o, q, shells_list.back());
  const auto rows = checks::bound_scan(sp.ctx, DiracParams{sp.z}, shells_list, o.margin);
  const std::string comment = checks::config_line("bound-scan", sp);
  const std::string format = pick_format(o, "csv");
  write_output(o.out, format == "csv" ? checks::scan_csv(rows, "shells", "norm", comment)
                                      : checks::scan_json(rows, "shells", "norm", comment));
  return kExitPass;
}

int cmd_limit_scan(const Options& o) {
  if (o.q.empty()) throw std::invalid_argument("--q is required");
  std::vector<double> q_values;
  for (const auto& item : split_list(o.q)) q_values.push_back(parse_double(item, "--q"));
  if (q_values.empty()) throw std::invalid_argument("--q list is empty");
  const int shells = parse_scalar_shells(o);
  for (double q : q_values) {
    const QContext probe(q);  // validates the range before any work
    (void)probe;
    overflow_preflight(q, shells);
  }
  if (o.p) throw std::invalid_argument("limit-scan pins p = q; drop --p");

  const auto sp = suite_params(o, q_values.back(), shells);
  const auto rows = checks::classical_limit_scan(q_values, shells, DiracParams{sp.z}, o.margin);
  const std::string comment = checks::config_line("limit-scan", sp);
  const std::string format = pick_format(o, "csv");
  write_output(o.out, format == "csv" ? checks::scan_csv(rows, "q", "deviation", comment)
                                      : checks::scan_json(rows, "q", "deviation", comment));
  return kExitPass;
}

int cmd_export(const Options& o) {
  const auto sp = suite_params(o, parse_scalar_q(o), parse_scalar_shells(o));
  podles::la::Matrix m;
  if (o.op_name == "A" || o.op_name == "B" || o.op_name == "Bstar") {
    const auto gen = o.op_name == "A" ? podles::SphereGen::A
                                      : (o.op_name == "B" ? podles::SphereGen::B : podles::SphereGen::Bstar);
    m = podles::build_sphere_gen(sp.ctx, sp.trunc, gen);
  } else if (o.op_name == "e" || o.op_name == "f" || o.op_name == "k" || o.op_name == "kinv") {
    const auto gen = o.op_name == "e"
                         ? podles::UqGen::e
                         : (o.op_name == "f" ? podles::UqGen::f
                                             : (o.op_name == "k" ? podles::UqGen::k : podles::UqGen::k_inv));
    m = podles::build_uq_gen(sp.ctx, sp.trunc, gen);
  } else if (o.op_name == "gamma") {
    m = podles::build_gamma(sp.trunc);
  } else if (o.op_name == "D") {
    m = podles::build_dirac(sp.ctx, sp.trunc, DiracParams{sp.z});
  } else if (o.op_name == "J") {
    m = podles::build_reality(sp.trunc, sp.p).matrix();
  } else {
    throw std::invalid_argument("unknown operator '" + o.op_name +
                                "' (expected A, B, Bstar, e, f, k, kinv, gamma, D, J)");
  }
  std::ostringstream os;
  podles::write_triplets(m, os);
  write_output(o.out, os.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite truncations of the equivariant spectral geometry on the standard "
               "Podles quantum sphere, with residual checks of its defining identities"};
  app.require_subcommand(1);
  app.fallthrough();  // shared options may appear after the subcommand

  Options o;
  app.set_config("--config", "", "flat key=value configuration file");
  app.add_option("--q", o.q, "deformation parameter in (0,1]; comma list for limit-scan");
  app.add_option("--shells", o.shells, "number of shells kept; comma list for bound-scan");
  app.add_option("--z-re", o.z_re, "real part of the Dirac parameter z");
  app.add_option("--z-im", o.z_im, "imaginary part of the Dirac parameter z");
  app.add_option("--p", o.p, "reality operator parameter (default: p = q)");
  app.add_option("--margin", o.margin, "interior margin in shells")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", o.tol, "tolerance for identity checks");
  app.add_option("--out", o.out, "output path, or - for stdout");
  app.add_option("--format", o.format, "output format: json or csv");

  auto* verify = app.add_subcommand("verify", "run the full identity suite, write a report");
  auto* spectrum = app.add_subcommand("spectrum", "Dirac spectrum against the analytic values");
  auto* bound = app.add_subcommand("bound-scan", "commutator norms over growing truncations");
  auto* limit = app.add_subcommand("limit-scan", "spectral deviation from the classical sphere");
  auto* exp = app.add_subcommand("export", "write one operator as sparse triplets");
  exp->add_option("--op", o.op_name, "operator name: A, B, Bstar, e, f, k, kinv, gamma, D, J")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (bound->parsed()) return cmd_bound_scan(o);
    if (limit->parsed()) return cmd_limit_scan(o);
    if (exp->parsed()) return cmd_export(o);
    std::cerr << "error: config: no subcommand\n";
    return kExitConfigError;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: overflow guard: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitConfigError;
  }
}
