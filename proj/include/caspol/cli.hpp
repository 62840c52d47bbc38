#pragma once

// Command-line front end. Exit status: 0 success, 1 malformed configuration,
// 2 domain error (the error name is written to the diagnostic stream);
// `verify` exits with the number of failing checks.

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace caspol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitDomainError = 2;

/// Malformed or inconsistent configuration (exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flag name (without leading dashes) to its textual value.
using RawConfig = std::map<std::string, std::string>;

/// Parses flat `key = value` lines; `#` starts a comment, keys may carry a
/// leading `--`, a bare key means `true`.
[[nodiscard]] RawConfig parse_config_text(const std::string& text);
[[nodiscard]] RawConfig read_config_file(const std::string& path);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace caspol::cli
