#pragma once

#include <string>
#include <vector>

#include "lamk/verify.hpp"

namespace lamk {

enum class ReportFormat { Json, Csv, Text };
ReportFormat parse_report_format(const std::string& name);

/// Field order is fixed: checkId, model, params, status, witness, millis (JSON adds detail).
std::string render_report(const std::vector<CheckReport>& reports, ReportFormat format);

}  // namespace lamk
