#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setorbits {

/// Failure categories. The CLI prints them as the machine-readable prefix
/// `error[<kind>]:`.
enum class ErrorKind {
  parse,
  degree_mismatch,
  out_of_range,
  cap_exceeded,
  overflow,
  catalog,
  data_gap,
  usage,
  internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace setorbits
