#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetabar {

enum class ErrorKind {
  InvalidRootSystem,
  CapExceeded,
  Parse,
  Domain,
  ChartMismatch,
  RingMismatch,
  NoLimit,
  PatternMismatch,
  Usage,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind, which the CLI turns
// into its single-line "error[kind]: ..." prefix.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thetabar
