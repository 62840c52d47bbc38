#pragma once

// Self-verification: every closed form and identity in the library is checked
// against an independent route (image sums, Hurwitz zeta, finite differences,
// brute-force scans). Failures are reported, never thrown.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace caspol {

enum class VerificationLevel { quick, full };

[[nodiscard]] std::string_view level_name(VerificationLevel level) noexcept;

/// How a check's measured error is compared with its tolerance.
enum class CheckMetric { absolute, relative, violations };

[[nodiscard]] std::string_view metric_name(CheckMetric metric) noexcept;

struct CheckRecord {
  std::string name;
  std::string description;
  CheckMetric metric = CheckMetric::absolute;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  std::size_t points_tested = 0;
  bool passed = false;

  /// The error that is compared with the tolerance.
  [[nodiscard]] double measured() const noexcept;
};

struct VerificationReport {
  VerificationLevel level = VerificationLevel::quick;
  std::vector<CheckRecord> checks;

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] std::size_t failure_count() const noexcept;
};

/// Raw outcome of a check before it is judged against a tolerance.
struct Measurement {
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  std::size_t points_tested = 0;
};

struct Check {
  std::string name;
  std::string description;
  CheckMetric metric = CheckMetric::absolute;
  double quick_tolerance = 0.0;
  double full_tolerance = 0.0;
  /// Called with the requested sample count (10 for quick, >= 100 for full).
  std::function<Measurement(std::size_t samples)> run;
};

/// Names that must each be registered exactly once.
[[nodiscard]] std::span<const std::string_view> required_check_names() noexcept;

/// The immutable registry. Built on first use; throws std::logic_error if it
/// does not match required_check_names().
[[nodiscard]] const std::vector<Check>& verification_registry();

[[nodiscard]] std::size_t samples_for(VerificationLevel level) noexcept;

[[nodiscard]] CheckRecord evaluate_check(const Check& check, VerificationLevel level);

[[nodiscard]] VerificationReport run_verification(VerificationLevel level);

}  // namespace caspol
