#include "caspol/correlators.hpp"

#include <cmath>
#include <fmt/format.h>

#include "caspol/error.hpp"

namespace caspol {

std::string_view geometry_name(GeometryKind kind) noexcept {
  switch (kind) {
    case GeometryKind::ConductorConductor: return "cc";
    case GeometryKind::ConductorPermeable: return "cp";
  }
  return "?";
}

std::string_view field_pair_name(FieldPair pair) noexcept {
  switch (pair) {
    case FieldPair::EE: return "EE";
    case FieldPair::BB: return "BB";
    case FieldPair::EB: return "EB";
  }
  return "?";
}

Geometry::Geometry(GeometryKind kind, double separation) : kind_(kind), separation_(separation) {
  if (!std::isfinite(separation) || !(separation > 0.0)) {
    throw CasimirError(ErrorKind::OutOfDomain, fmt::format("plate separation must be positive, got {:g}", separation));
  }
}

Xi Geometry::scaled(double z) const {
  if (!std::isfinite(z) || !(z > 0.0) || !(z < separation_)) {
    throw CasimirError(ErrorKind::OutOfDomain,
                       fmt::format("z = {:.17g} is outside the gap (0, {:.17g})", z, separation_));
  }
  return Xi(kPi * z / separation_);
}

double correlator_prefactor(double separation) {
  const double k = kPi / separation;
  return (k * k) * (k * k) * (2.0 / (3.0 * kPi));
}

namespace {

// prefactor * [ (-delta_par + delta_perp) * constant + sign * profile * delta ]
CorrelatorTensor diagonal_tensor(FieldPair pair, double prefactor, double constant, double profile) {
  CorrelatorTensor t;
  t.field_pair = pair;
  const double sign = pair == FieldPair::BB ? -1.0 : 1.0;
  const double parallel = prefactor * (-constant + sign * profile);
  t.components[0][0] = parallel;
  t.components[1][1] = parallel;
  t.components[2][2] = prefactor * (constant + sign * profile);
  return t;
}

CorrelatorTensor build(FieldPair pair, const Geometry& geom, double z, const GuardPolicy& guard) {
  const Xi xi = geom.scaled(z);
  const double prefactor = correlator_prefactor(geom.separation());
  if (geom.kind() == GeometryKind::ConductorConductor) {
    return diagonal_tensor(pair, prefactor, kWallConstant, eval_f(xi, guard));
  }
  return diagonal_tensor(pair, prefactor, -kPermeableRatio * kWallConstant, eval_g(xi, guard));
}

}  // namespace

CorrelatorTensor correlator_ee(const Geometry& geom, double z, const GuardPolicy& guard) {
  return build(FieldPair::EE, geom, z, guard);
}

CorrelatorTensor correlator_bb(const Geometry& geom, double z, const GuardPolicy& guard) {
  return build(FieldPair::BB, geom, z, guard);
}

CorrelatorTensor correlator_eb(const Geometry& geom, double z) {
  static_cast<void>(geom.scaled(z));
  CorrelatorTensor t;
  t.field_pair = FieldPair::EB;
  return t;
}

double mean_square_e(const Geometry& geom, double z, const GuardPolicy& guard) {
  return correlator_ee(geom, z, guard).trace();
}

double mean_square_b(const Geometry& geom, double z, const GuardPolicy& guard) {
  return correlator_bb(geom, z, guard).trace();
}

}  // namespace caspol
