#include "podles/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace podles::checks {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(std::string_view command, const SuiteParams& sp) {
  return ordered_json{
      {"command", std::string(command)},
      {"q", sp.ctx.q()},
      {"shells", sp.trunc.shells()},
      {"margin", sp.trunc.margin()},
      {"p", sp.p},
      {"z", {sp.z.real(), sp.z.imag()}},
      {"tolerance", sp.tolerance},
  };
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string config_line(std::string_view command, const SuiteParams& sp) {
  std::ostringstream os;
  os << command << " q=" << format_double(sp.ctx.q()) << " shells=" << sp.trunc.shells()
     << " margin=" << sp.trunc.margin() << " p=" << format_double(sp.p)
     << " z=" << format_double(sp.z.real()) << "+" << format_double(sp.z.imag()) << "i"
     << " tol=" << format_double(sp.tolerance);
  return os.str();
}

std::string report_json(std::span<const CheckReport> reports, const SuiteParams& sp,
                        std::string_view command) {
  ordered_json checks = ordered_json::array();
  for (const auto& r : reports) {
    checks.push_back(ordered_json{
        {"check", r.check},
        {"paper_anchor", r.anchor},
        {"q", r.q},
        {"shells", r.shells},
        {"p", r.p},
        {"z", {r.z.real(), r.z.imag()}},
        {"residual", r.residual},
        {"tolerance", r.tolerance},
        {"passed", r.passed},
    });
  }
  ordered_json root{{"config", config_json(command, sp)}, {"checks", std::move(checks)}};
  return root.dump(2) + "\n";
}

std::string report_csv(std::span<const CheckReport> reports, const SuiteParams& sp,
                       std::string_view command) {
  std::ostringstream os;
  os << "# " << config_line(command, sp) << "\n";
  os << "check,q,shells,p,z_re,z_im,residual,tolerance,passed\n";
  for (const auto& r : reports) {
    os << r.check << "," << format_double(r.q) << "," << r.shells << "," << format_double(r.p) << ","
       << format_double(r.z.real()) << "," << format_double(r.z.imag()) << ","
       << format_double(r.residual) << "," << format_double(r.tolerance) << ","
       << (r.passed ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string scan_csv(std::span<const ScanRow> rows, std::string_view key_column,
                     std::string_view value_column, std::string_view config_comment) {
  std::ostringstream os;
  os << "# " << config_comment << "\n";
  os << key_column << ",alpha," << value_column << "\n";
  for (const auto& r : rows) {
    os << format_double(r.key) << "," << r.label << "," << format_double(r.value) << "\n";
  }
  return os.str();
}

std::string scan_json(std::span<const ScanRow> rows, std::string_view key_column,
                      std::string_view value_column, std::string_view config_comment) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back(ordered_json{{std::string(key_column), r.key},
                               {"alpha", r.label},
                               {std::string(value_column), r.value}});
  }
  ordered_json root{{"config", std::string(config_comment)}, {"rows", std::move(arr)}};
  return root.dump(2) + "\n";
}

std::string spectrum_csv(std::span<const SpectrumRow> rows, std::string_view config_comment) {
  std::ostringstream os;
  os << "# " << config_comment << "\n";
  os << "l,analytic,multiplicity,computed,deviation\n";
  for (const auto& r : rows) {
    os << format_double(r.l.value()) << "," << format_double(r.analytic) << "," << r.multiplicity << ","
       << format_double(r.computed) << "," << format_double(r.deviation) << "\n";
  }
  return os.str();
}

std::string spectrum_json(std::span<const SpectrumRow> rows, std::string_view config_comment) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back(ordered_json{{"l", r.l.value()},
                               {"analytic", r.analytic},
                               {"multiplicity", r.multiplicity},
                               {"computed", r.computed},
                               {"deviation", r.deviation}});
  }
  ordered_json root{{"config", std::string(config_comment)}, {"rows", std::move(arr)}};
  return root.dump(2) + "\n";
}

}  // namespace podles::checks
