#pragma once

// Parameter sweeps and single-wall limit studies built on the potentials.

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "caspol/potentials.hpp"

namespace caspol {

enum class Quantity { V, V_E, V_M, force, EE_trace, BB_trace };

inline constexpr std::array<Quantity, 6> kAllQuantities = {Quantity::V,     Quantity::V_E,      Quantity::V_M,
                                                           Quantity::force, Quantity::EE_trace, Quantity::BB_trace};

[[nodiscard]] std::string_view quantity_name(Quantity q) noexcept;
/// Inverse of quantity_name; std::nullopt for unknown names.
[[nodiscard]] std::optional<Quantity> parse_quantity(std::string_view name) noexcept;

struct UniformGrid {
  std::size_t count = 2;
  double z_min = 0.0;
  double z_max = 0.0;
};

using ZGrid = std::variant<UniformGrid, std::vector<double>>;

/// Expands a grid to its points; throws InvalidGrid unless the points are
/// strictly increasing inside (0, a) and a uniform grid has count >= 2.
[[nodiscard]] std::vector<double> grid_points(const ZGrid& grid, double separation);

struct SweepSpec {
  Geometry geometry{GeometryKind::ConductorConductor, 1.0};
  AtomResponse atom{};
  ZGrid grid = UniformGrid{};
  std::vector<Quantity> quantities{Quantity::V};
  GuardPolicy guard{};
  /// Adds the single-wall reference V_wall for the nearer wall.
  bool limit_reference = false;
  /// Worker threads; the output does not depend on this.
  unsigned threads = 1;
};

struct CurveRow {
  double z = 0.0;
  /// Indexed by Quantity; only requested entries are meaningful.
  std::array<double, kAllQuantities.size()> values{};
  double v_wall = 0.0;
  Regime regime = Regime::exact;

  [[nodiscard]] double operator[](Quantity q) const noexcept { return values[static_cast<std::size_t>(q)]; }
};

struct PotentialCurve {
  std::vector<Quantity> quantities;
  bool limit_reference = false;
  std::vector<CurveRow> rows;

  [[nodiscard]] std::vector<double> column(Quantity q) const;
};

[[nodiscard]] PotentialCurve run_sweep(const SweepSpec& spec);

/// Single-wall reference for the wall nearer to z: conducting on both sides of
/// a conductor pair; conducting for z <= a/2 and permeable beyond otherwise.
[[nodiscard]] double nearest_wall_limit(const AtomResponse& atom, const Geometry& geom, double z);

struct LimitRow {
  double a = 0.0;
  double v_exact = 0.0;
  double v_limit = 0.0;
  /// |V_exact / V_limit - 1|; empty when the limit vanishes (alpha0 == beta0).
  std::optional<double> rel_error;
};

struct LimitStudy {
  WallType wall = WallType::conducting;
  double z = 0.0;
  bool degenerate = false;
  std::vector<LimitRow> rows;
  /// log(r_i / r_{i+1}) / log(a_{i+1} / a_i) for consecutive rows.
  std::vector<double> local_exponents;
  /// Least-squares slope of -log(rel_error) against log(a).
  std::optional<double> fitted_exponent;
  bool monotone_decreasing = false;
};

/// Compares the two-wall potential with the single-wall law as a grows. For a
/// conducting wall the atom sits at distance z from the plate at 0 between two
/// conductors; for a permeable wall it sits at distance z from the permeable
/// plate at a, opposite a conductor.
[[nodiscard]] LimitStudy limit_convergence_study(const AtomResponse& atom, WallType wall, double z,
                                                 const std::vector<double>& a_values, const GuardPolicy& guard = {});

}  // namespace caspol
