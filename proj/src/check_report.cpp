#include "facering/check_report.hpp"

#include <sstream>

namespace facering {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["verdict"] = std::string(to_string(report.verdict));
  if (!report.witness.empty()) j["witness"] = report.witness;
  if (!report.details.empty()) j["details"] = report.details;
  if (!report.children.empty()) {
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.children) j["checks"].push_back(to_json(c));
  }
  return j;
}

std::string to_text(const CheckReport& report, int indent) {
  std::ostringstream os;
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << report.name << ": "
     << to_string(report.verdict);
  if (!report.witness.empty()) os << "  [" << report.witness << "]";
  os << '\n';
  for (const auto& [key, value] : report.details.items()) {
    os << std::string(static_cast<std::size_t>(indent) * 2 + 4, ' ') << key << " = "
       << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (const auto& c : report.children) os << to_text(c, indent + 1);
  return os.str();
}

}  // namespace facering
