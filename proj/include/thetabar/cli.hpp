#pragma once

// Command dispatch for the `thetabar` tool, kept in the library so tests can
// drive it in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thetabar/valued.hpp"

namespace thetabar {

struct SessionConfig {
  std::string system = "A2";
  std::optional<long> prime;  ///< unset with tadic, else defaults to 2
  bool tadic = false;
  std::string base;           ///< presentation base b > 1; defaults to p (or 2 for t-adic)
  std::uint64_t seed = 1;
  std::string out;

  CoefficientModel model() const;
  /// Throws Usage unless b > 1.
  Rational base_value() const;
};

/// Runs one command line (args exclude the program name).  Returns the exit
/// status: 0 on success, 1 on a failed check or a library error, 2 on a usage
/// error.  Errors are reported on `err` as a single "error[kind]: message" line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetabar
