#include "caspol/units.hpp"

namespace caspol {

std::string_view unit_mode_name(UnitMode mode) noexcept { return mode == UnitMode::si ? "si" : "natural"; }

std::optional<UnitMode> parse_unit_mode(std::string_view name) noexcept {
  if (name == "natural") return UnitMode::natural;
  if (name == "si") return UnitMode::si;
  return std::nullopt;
}

}  // namespace caspol
