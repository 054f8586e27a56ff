#include "lamk/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "lamk/errors.hpp"

namespace lamk {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw InputError("unknown format '" + name + "' (expected json, csv or text)");
}

namespace {

std::string millis_text(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

std::string witness_text(const CheckReport& r) {
  if (!r.witness) return "";
  return r.witness->element + " not in " + r.witness->expected_level;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["checkId"] = r.check_id;
        j["model"] = r.model;
        j["params"] = r.params;
        j["status"] = to_string(r.status);
        if (r.witness) {
          j["witness"] = {{"element", r.witness->element},
                          {"expectedLevel", r.witness->expected_level},
                          {"actualMember", r.witness->actual_member}};
        } else {
          j["witness"] = nullptr;
        }
        j["millis"] = r.millis;
        j["detail"] = r.detail;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv:
      out << "checkId,model,params,status,witness,millis\n";
      for (const auto& r : reports)
        out << csv_field(r.check_id) << ',' << csv_field(r.model) << ',' << csv_field(r.params) << ','
            << to_string(r.status) << ',' << csv_field(witness_text(r)) << ',' << millis_text(r.millis) << "\n";
      break;
    case ReportFormat::Text:
      for (const auto& r : reports) {
        out << std::left << std::setw(13) << ("[" + to_string(r.status) + "]") << std::setw(22) << r.check_id << ' '
            << r.model << " (" << r.params << ") " << millis_text(r.millis) << " ms\n";
        if (r.witness) out << "    witness: " << witness_text(r) << "\n";
        if (!r.detail.empty()) out << "    " << r.detail << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace lamk
