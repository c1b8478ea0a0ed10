#include "ncjacobi/report.hpp"

#include <algorithm>
#include <sstream>

namespace ncjacobi {

void VerificationReport::absorb(const VerificationReport& other) {
  terms_checked += other.terms_checked;
  for (const auto& f : other.failures) {
    failures.push_back({other.identity + ": " + f.index, f.lhs, f.rhs});
  }
  for (const auto& note : other.convention_notes) {
    if (std::find(convention_notes.begin(), convention_notes.end(), note) ==
        convention_notes.end())
      convention_notes.push_back(note);
  }
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  nlohmann::json j = nlohmann::json::object();
  j["identity"] = report.identity;
  j["parameters"] = report.parameters;
  j["terms_checked"] = report.terms_checked;
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = report.elapsed_ms;
  j["convention_notes"] = report.convention_notes;
  return j;
}

std::string summary_line(const VerificationReport& report) {
  std::ostringstream os;
  os << report.identity << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
     << report.terms_checked << " terms, " << report.failures.size()
     << " failures, " << report.elapsed_ms << " ms)";
  return os.str();
}

}  // namespace ncjacobi
