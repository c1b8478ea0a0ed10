#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncjacobi {

/// One failing index of an identity sweep, with both sides rendered.
struct Failure {
  std::string index;
  std::string lhs;
  std::string rhs;
};

/// Outcome of a verification sweep. Passes iff `failures` is empty.
struct VerificationReport {
  std::string identity;
  nlohmann::json parameters = nlohmann::json::object();
  std::int64_t terms_checked = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> convention_notes;

  bool passed() const { return failures.empty(); }

  void fail(std::string index, std::string lhs, std::string rhs) {
    failures.push_back({std::move(index), std::move(lhs), std::move(rhs)});
  }

  /// Folds another report's counts, failures and notes into this one;
  /// failure indices are prefixed with the other report's identity.
  void absorb(const VerificationReport& other);
};

/// JSON object with exactly the keys identity, parameters, terms_checked,
/// failures, elapsed_ms, convention_notes.
nlohmann::json to_json(const VerificationReport& report);

/// Single-line human summary, e.g. "verify-hirota: PASS (1234 terms, 0 failures)".
std::string summary_line(const VerificationReport& report);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace ncjacobi
