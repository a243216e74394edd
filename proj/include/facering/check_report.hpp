#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace facering {

enum class Verdict { kPass, kFail, kNotApplicable };

std::string_view to_string(Verdict v);

/// Structured verdict of a check. A failing report carries a concrete
/// witness; `details` holds the computed quantities the verdict rests on.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::kPass;
  std::string witness;
  nlohmann::json details = nlohmann::json::object();
  std::vector<CheckReport> children;

  bool passed() const { return verdict == Verdict::kPass; }

  static CheckReport pass(std::string name) { return {std::move(name), Verdict::kPass, {}, nlohmann::json::object(), {}}; }
  static CheckReport fail(std::string name, std::string witness) {
    return {std::move(name), Verdict::kFail, std::move(witness), nlohmann::json::object(), {}};
  }
};

nlohmann::json to_json(const CheckReport& report);
/// Indented human-readable rendering, one line per report node.
std::string to_text(const CheckReport& report, int indent = 0);

}  // namespace facering
