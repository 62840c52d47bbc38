#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace caspol {

enum class ErrorKind {
  TooCloseToWall,
  OutOfDomain,
  TailBoundViolated,
  InvalidGrid,
};

[[nodiscard]] std::string_view error_name(ErrorKind kind) noexcept;

/// Raised by every numerical routine in the library. The kind is stable and
/// is what the command-line front end reports on the diagnostic stream.
class CasimirError : public std::runtime_error {
 public:
  CasimirError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace caspol
