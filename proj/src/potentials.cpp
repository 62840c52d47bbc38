#include "caspol/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "caspol/error.hpp"

namespace caspol {

namespace {

// pi^3 / a^4
double energy_scale(double a) {
  const double a2 = a * a;
  return kPi * kPi * kPi / (a2 * a2);
}

bool conductor_pair(const Geometry& geom) { return geom.kind() == GeometryKind::ConductorConductor; }

double profile(const Geometry& geom, const Xi& xi, const GuardPolicy& guard) {
  return conductor_pair(geom) ? eval_f(xi, guard) : eval_g(xi, guard);
}

double profile_prime(const Geometry& geom, const Xi& xi, const GuardPolicy& guard) {
  return conductor_pair(geom) ? eval_f_prime(xi, guard) : eval_g_prime(xi, guard);
}

// Constant carried by the parallel/perpendicular split of the correlators:
// 1/120 between conductors, -(7/8)/120 with a permeable wall.
double split_constant(const Geometry& geom) {
  return conductor_pair(geom) ? kWallConstant : -kPermeableRatio * kWallConstant;
}

}  // namespace

void AtomResponse::validate() const {
  if (!std::isfinite(alpha0) || !std::isfinite(beta0)) {
    throw CasimirError(ErrorKind::OutOfDomain, "polarizabilities must be finite");
  }
}

std::vector<std::string> AtomResponse::diagnostics() const {
  std::vector<std::string> notes;
  if (alpha0 < 0.0) notes.push_back(fmt::format("negative electric polarizability alpha0 = {:g}", alpha0));
  if (beta0 < 0.0) notes.push_back(fmt::format("negative magnetic polarizability beta0 = {:g}", beta0));
  return notes;
}

std::string_view wall_type_name(WallType type) noexcept {
  return type == WallType::conducting ? "conducting" : "permeable";
}

std::string_view regime_name(Regime regime) noexcept { return regime == Regime::exact ? "exact" : "asymptotic"; }

std::string_view stationary_kind_name(StationaryKind kind) noexcept {
  switch (kind) {
    case StationaryKind::min: return "min";
    case StationaryKind::max: return "max";
    case StationaryKind::saddle_flat: return "saddle-flat";
  }
  return "?";
}

// V_E = -(alpha/2) <E^2> = -(alpha pi^3 / 3a^4) [3P - c], with c the split constant.
double potential_e(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard) {
  atom.validate();
  const Xi xi = geom.scaled(z);
  const double p = profile(geom, xi, guard);
  return -atom.alpha0 * energy_scale(geom.separation()) / 3.0 * (3.0 * p - split_constant(geom));
}

// V_M = -(beta/2) <B^2> = +(beta pi^3 / 3a^4) [3P + c].
double potential_m(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard) {
  atom.validate();
  const Xi xi = geom.scaled(z);
  const double p = profile(geom, xi, guard);
  return atom.beta0 * energy_scale(geom.separation()) / 3.0 * (3.0 * p + split_constant(geom));
}

// V = -(alpha - beta) (pi^3/a^4) P + (alpha + beta) (pi^3/a^4) c / 3
double potential_total(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard) {
  atom.validate();
  const Xi xi = geom.scaled(z);
  const double p = profile(geom, xi, guard);
  const double scale = energy_scale(geom.separation());
  return -(atom.alpha0 - atom.beta0) * scale * p + (atom.alpha0 + atom.beta0) * scale * (split_constant(geom) / 3.0);
}

// -dV/dz = (alpha - beta) (pi^3/a^4) P'(xi) dxi/dz, dxi/dz = pi/a.
double force(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard) {
  atom.validate();
  const Xi xi = geom.scaled(z);
  const double a = geom.separation();
  return (atom.alpha0 - atom.beta0) * energy_scale(a) * (kPi / a) * profile_prime(geom, xi, guard);
}

PotentialSample sample_potential(const AtomResponse& atom, const Geometry& geom, double z, const GuardPolicy& guard) {
  PotentialSample s;
  s.z = z;
  s.V_E = potential_e(atom, geom, z, guard);
  s.V_M = potential_m(atom, geom, z, guard);
  s.V = potential_total(atom, geom, z, guard);
  s.force_z = force(atom, geom, z, guard);
  s.regime = guard.inside(geom.scaled(z)) ? Regime::asymptotic : Regime::exact;
  return s;
}

double single_wall_limit(const AtomResponse& atom, WallType wall, double distance) {
  atom.validate();
  if (!std::isfinite(distance) || !(distance > 0.0)) {
    throw CasimirError(ErrorKind::OutOfDomain, fmt::format("wall distance must be positive, got {:g}", distance));
  }
  const double d2 = distance * distance;
  const double magnitude = 3.0 * (atom.alpha0 - atom.beta0) / (8.0 * kPi * d2 * d2);
  return wall == WallType::conducting ? -magnitude : magnitude;
}

namespace {

StationaryKind classify(const AtomResponse& atom, const Geometry& geom, double z, double z_lo, double z_hi,
                        const GuardPolicy& guard) {
  const double a = geom.separation();
  double h = 1e-4 * a;
  h = std::min({h, 0.5 * (z - z_lo), 0.5 * (z_hi - z)});
  if (!(h > 0.0)) return StationaryKind::saddle_flat;
  // V'' = -d(force)/dz
  const double curvature = -(force(atom, geom, z + h, guard) - force(atom, geom, z - h, guard)) / (2.0 * h);
  const double a2 = a * a;
  const double natural = (std::abs(atom.alpha0) + std::abs(atom.beta0)) * std::pow(kPi, 5) / (a2 * a2 * a2);
  if (std::abs(curvature) <= 1e-9 * natural) return StationaryKind::saddle_flat;
  return curvature > 0.0 ? StationaryKind::min : StationaryKind::max;
}

}  // namespace

StationarySearch stationary_points(const AtomResponse& atom, const Geometry& geom, double z_lo, double z_hi,
                                   double tol, const StationaryOptions& options) {
  atom.validate();
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw CasimirError(ErrorKind::OutOfDomain, fmt::format("bisection tolerance must be positive, got {:g}", tol));
  }
  if (!(z_lo < z_hi)) {
    throw CasimirError(ErrorKind::InvalidGrid, fmt::format("empty bracket [{:g}, {:g}]", z_lo, z_hi));
  }
  if (options.scan_points < 2) {
    throw CasimirError(ErrorKind::InvalidGrid, "stationary-point scan needs at least two points");
  }
  const GuardPolicy& guard = options.guard;
  guard.validate();
  for (double z : {z_lo, z_hi}) {
    if (guard.inside(geom.scaled(z))) {
      throw CasimirError(ErrorKind::TooCloseToWall,
                         fmt::format("bracket end z = {:.17g} lies inside the guard band", z));
    }
  }

  StationarySearch result;
  if (atom.degenerate()) {
    result.diagnostics.emplace_back("flat potential: alpha0 == beta0 makes V independent of z");
    return result;
  }

  const auto force_at = [&](double z) { return force(atom, geom, z, guard); };
  const std::size_t n = options.scan_points;
  const auto grid = [&](std::size_t i) {
    return i + 1 == n ? z_hi : z_lo + (z_hi - z_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };

  double z_prev = grid(0);
  double f_prev = force_at(z_prev);
  if (f_prev == 0.0) result.points.push_back({z_prev, classify(atom, geom, z_prev, z_lo, z_hi, guard)});
  for (std::size_t i = 1; i < n; ++i) {
    const double z_cur = grid(i);
    const double f_cur = force_at(z_cur);
    if (f_cur == 0.0) {
      result.points.push_back({z_cur, classify(atom, geom, z_cur, z_lo, z_hi, guard)});
    } else if (f_prev != 0.0 && std::signbit(f_prev) != std::signbit(f_cur)) {
      double lo = z_prev;
      double hi = z_cur;
      double f_lo = f_prev;
      while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = force_at(mid);
        if (f_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      result.points.push_back({root, classify(atom, geom, root, z_lo, z_hi, guard)});
    }
    z_prev = z_cur;
    f_prev = f_cur;
  }
  return result;
}

}  // namespace caspol
