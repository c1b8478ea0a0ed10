#pragma once

#include <iosfwd>
#include <string>

#include "ncjacobi/report.hpp"

namespace ncjacobi::cli {

/// Deliberate defects for mutation testing.
enum class Mutation { none, split_charge, raw_tilde, rho };

struct RunConfig {
  unsigned threads = 1;
  Mutation mutation = Mutation::none;
};

/// Every identity at "quick" (CI) or "full" (desk-scale) parameters, folded
/// into one report. Throws std::invalid_argument for an unknown profile.
VerificationReport run_all(const std::string& profile, const RunConfig& cfg);

/// Parses the command line, runs, prints a summary to `out` and optionally
/// writes the JSON report. Returns 0 on pass, 1 on failure, 2 on usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncjacobi::cli
