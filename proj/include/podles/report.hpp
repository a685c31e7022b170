#pragma once

#include <span>
#include <string>
#include <string_view>

#include "podles/checks.hpp"

namespace podles::checks {

/// Formats a double with enough digits to round-trip, deterministically.
std::string format_double(double v);

/// One-line summary of the effective configuration, echoed into every
/// report so a run can be reproduced from its output alone.
std::string config_line(std::string_view command, const SuiteParams& sp);

std::string report_json(std::span<const CheckReport> reports, const SuiteParams& sp,
                        std::string_view command);
std::string report_csv(std::span<const CheckReport> reports, const SuiteParams& sp,
                       std::string_view command);

std::string scan_csv(std::span<const ScanRow> rows, std::string_view key_column,
                     std::string_view value_column, std::string_view config_comment);
std::string scan_json(std::span<const ScanRow> rows, std::string_view key_column,
                      std::string_view value_column, std::string_view config_comment);

std::string spectrum_csv(std::span<const SpectrumRow> rows, std::string_view config_comment);
std::string spectrum_json(std::span<const SpectrumRow> rows, std::string_view config_comment);

}  // namespace podles::checks
