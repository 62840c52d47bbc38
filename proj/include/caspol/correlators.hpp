#pragma once

// Renormalized equal-time vacuum correlators <X_i X_j> at a point between two
// plane walls, in natural units (length^-4).

#include <array>
#include <string_view>

#include "caspol/specfun.hpp"

namespace caspol {

enum class GeometryKind {
  ConductorConductor,  // conducting walls at z = 0 and z = a
  ConductorPermeable,  // conducting wall at z = 0, permeable wall at z = a
};

[[nodiscard]] std::string_view geometry_name(GeometryKind kind) noexcept;

class Geometry {
 public:
  /// Throws OutOfDomain unless separation is finite and positive.
  Geometry(GeometryKind kind, double separation);

  [[nodiscard]] GeometryKind kind() const noexcept { return kind_; }
  [[nodiscard]] double separation() const noexcept { return separation_; }

  /// xi = pi z / a; throws OutOfDomain unless 0 < z < a.
  [[nodiscard]] Xi scaled(double z) const;

 private:
  GeometryKind kind_;
  double separation_;
};

/// (pi/a)^4 * 2/(3 pi), shared by every correlator.
[[nodiscard]] double correlator_prefactor(double separation);

enum class FieldPair { EE, BB, EB };

[[nodiscard]] std::string_view field_pair_name(FieldPair pair) noexcept;

struct CorrelatorTensor {
  FieldPair field_pair = FieldPair::EE;
  std::array<std::array<double, 3>, 3> components{};

  [[nodiscard]] double trace() const noexcept {
    return components[0][0] + components[1][1] + components[2][2];
  }
  [[nodiscard]] double operator()(int i, int j) const { return components.at(i).at(j); }
};

[[nodiscard]] CorrelatorTensor correlator_ee(const Geometry& geom, double z, const GuardPolicy& guard = {});
[[nodiscard]] CorrelatorTensor correlator_bb(const Geometry& geom, double z, const GuardPolicy& guard = {});
/// Always the zero tensor; still validates z.
[[nodiscard]] CorrelatorTensor correlator_eb(const Geometry& geom, double z);

/// <E^2> and <B^2>, the traces of the corresponding tensors.
[[nodiscard]] double mean_square_e(const Geometry& geom, double z, const GuardPolicy& guard = {});
[[nodiscard]] double mean_square_b(const Geometry& geom, double z, const GuardPolicy& guard = {});

}  // namespace caspol
