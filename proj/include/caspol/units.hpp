#pragma once

#include <optional>
#include <string_view>

namespace caspol {

/// hbar * c in joule metres (CODATA 2018, exact SI definitions of c and h).
inline constexpr double kHbarC = 1.054571817e-34 * 299792458.0;

enum class UnitMode { natural, si };

[[nodiscard]] std::string_view unit_mode_name(UnitMode mode) noexcept;
[[nodiscard]] std::optional<UnitMode> parse_unit_mode(std::string_view name) noexcept;

/// Output conversion. Lengths and polarizabilities are read as metres and
/// cubic metres in SI mode, so every natural-unit result (energy, force,
/// correlator) only picks up one factor of hbar c.
struct UnitSystem {
  UnitMode mode = UnitMode::natural;

  [[nodiscard]] double factor() const noexcept { return mode == UnitMode::si ? kHbarC : 1.0; }
  [[nodiscard]] double to_output(double natural_value) const noexcept { return natural_value * factor(); }
  [[nodiscard]] double from_output(double output_value) const noexcept { return output_value / factor(); }
};

}  // namespace caspol
