#pragma once

// Casimir-Polder potentials for an atom with static electric and magnetic
// polarizabilities between two walls. Natural units: with polarizabilities in
// length^3, energies come out in length^-1 and forces in length^-2.
//
// Sign convention: force_z > 0 pushes the atom toward larger z, i.e. toward
// the wall at z = a.

#include <string>
#include <string_view>
#include <vector>

#include "caspol/correlators.hpp"

namespace caspol {

struct AtomResponse {
  double alpha0 = 0.0;
  double beta0 = 0.0;

  /// Throws OutOfDomain for non-finite polarizabilities.
  void validate() const;
  /// Non-fatal notes, e.g. a negative polarizability.
  [[nodiscard]] std::vector<std::string> diagnostics() const;
  [[nodiscard]] bool degenerate() const noexcept { return alpha0 == beta0; }
};

enum class WallType { conducting, permeable };

[[nodiscard]] std::string_view wall_type_name(WallType type) noexcept;

enum class Regime { exact, asymptotic };

[[nodiscard]] std::string_view regime_name(Regime regime) noexcept;

struct PotentialSample {
  double z = 0.0;
  double V_E = 0.0;
  double V_M = 0.0;
  double V = 0.0;
  double force_z = 0.0;
  Regime regime = Regime::exact;
};

[[nodiscard]] double potential_e(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard = {});
[[nodiscard]] double potential_m(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard = {});
[[nodiscard]] double potential_total(const AtomResponse& atom, const Geometry& geom, double z,
                                     const GuardPolicy& guard = {});

/// -dV/dz from the differentiated profile functions.
[[nodiscard]] double force(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard = {});

[[nodiscard]] PotentialSample sample_potential(const AtomResponse& atom, const Geometry& geom, double z,
                                               const GuardPolicy& guard = {});

/// Single-wall potential -/+ 3 (alpha - beta) / (8 pi d^4) at distance d from
/// a conducting / permeable wall.
[[nodiscard]] double single_wall_limit(const AtomResponse& atom, WallType wall, double distance);

enum class StationaryKind { min, max, saddle_flat };

[[nodiscard]] std::string_view stationary_kind_name(StationaryKind kind) noexcept;

struct StationaryPoint {
  double z = 0.0;
  StationaryKind kind = StationaryKind::saddle_flat;
};

struct StationarySearch {
  std::vector<StationaryPoint> points;
  std::vector<std::string> diagnostics;
};

struct StationaryOptions {
  std::size_t scan_points = 2048;
  GuardPolicy guard{};
};

/// All sign changes of the force on [z_lo, z_hi], refined by bisection until
/// the bracket is narrower than tol. An empty list is a valid answer.
[[nodiscard]] StationarySearch stationary_points(const AtomResponse& atom, const Geometry& geom, double z_lo,
                                                 double z_hi, double tol, const StationaryOptions& options = {});

}  // namespace caspol
