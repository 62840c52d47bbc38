#include "caspol/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <mutex>
#include <thread>

#include "caspol/error.hpp"

namespace caspol {

std::string_view quantity_name(Quantity q) noexcept {
  switch (q) {
    case Quantity::V: return "V";
    case Quantity::V_E: return "V_E";
    case Quantity::V_M: return "V_M";
    case Quantity::force: return "force";
    case Quantity::EE_trace: return "EE_trace";
    case Quantity::BB_trace: return "BB_trace";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) noexcept {
  for (Quantity q : kAllQuantities) {
    if (quantity_name(q) == name) return q;
  }
  return std::nullopt;
}

std::vector<double> grid_points(const ZGrid& grid, double separation) {
  std::vector<double> points;
  if (const auto* uniform = std::get_if<UniformGrid>(&grid)) {
    if (uniform->count < 2) {
      throw CasimirError(ErrorKind::InvalidGrid, fmt::format("grid needs at least 2 points, got {}", uniform->count));
    }
    if (!(uniform->z_min < uniform->z_max)) {
      throw CasimirError(ErrorKind::InvalidGrid,
                         fmt::format("z_min = {:g} must be below z_max = {:g}", uniform->z_min, uniform->z_max));
    }
    points.resize(uniform->count);
    const double span = uniform->z_max - uniform->z_min;
    const double last = static_cast<double>(uniform->count - 1);
    for (std::size_t i = 0; i < uniform->count; ++i) {
      points[i] = uniform->z_min + span * (static_cast<double>(i) / last);
    }
    points.back() = uniform->z_max;
  } else {
    points = std::get<std::vector<double>>(grid);
    if (points.empty()) throw CasimirError(ErrorKind::InvalidGrid, "explicit grid is empty");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double z = points[i];
    if (!std::isfinite(z) || !(z > 0.0) || !(z < separation)) {
      throw CasimirError(ErrorKind::OutOfDomain, fmt::format("grid point z = {:.17g} is outside (0, {:g})", z, separation));
    }
    if (i > 0 && !(points[i - 1] < z)) {
      throw CasimirError(ErrorKind::InvalidGrid, "grid points must be strictly increasing");
    }
  }
  return points;
}

std::vector<double> PotentialCurve::column(Quantity q) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const CurveRow& row : rows) out.push_back(row[q]);
  return out;
}

double nearest_wall_limit(const AtomResponse& atom, const Geometry& geom, double z) {
  const double a = geom.separation();
  const bool far_side = z > 0.5 * a;
  const double distance = far_side ? a - z : z;
  const WallType wall =
      (far_side && geom.kind() == GeometryKind::ConductorPermeable) ? WallType::permeable : WallType::conducting;
  return single_wall_limit(atom, wall, distance);
}

namespace {

CurveRow evaluate_row(const SweepSpec& spec, double z) {
  const Geometry& geom = spec.geometry;
  CurveRow row;
  row.z = z;
  row.regime = spec.guard.inside(geom.scaled(z)) ? Regime::asymptotic : Regime::exact;
  for (Quantity q : spec.quantities) {
    double value = 0.0;
    switch (q) {
      case Quantity::V: value = potential_total(spec.atom, geom, z, spec.guard); break;
      case Quantity::V_E: value = potential_e(spec.atom, geom, z, spec.guard); break;
      case Quantity::V_M: value = potential_m(spec.atom, geom, z, spec.guard); break;
      case Quantity::force: value = force(spec.atom, geom, z, spec.guard); break;
      case Quantity::EE_trace: value = mean_square_e(geom, z, spec.guard); break;
      case Quantity::BB_trace: value = mean_square_b(geom, z, spec.guard); break;
    }
    row.values[static_cast<std::size_t>(q)] = value;
  }
  if (spec.limit_reference) row.v_wall = nearest_wall_limit(spec.atom, geom, z);
  return row;
}

}  // namespace

PotentialCurve run_sweep(const SweepSpec& spec) {
  spec.atom.validate();
  spec.guard.validate();
  const std::vector<double> points = grid_points(spec.grid, spec.geometry.separation());

  PotentialCurve curve;
  for (Quantity q : kAllQuantities) {
    if (std::find(spec.quantities.begin(), spec.quantities.end(), q) != spec.quantities.end()) {
      curve.quantities.push_back(q);
    }
  }
  curve.limit_reference = spec.limit_reference;
  curve.rows.resize(points.size());

  const std::size_t workers = std::clamp<std::size_t>(spec.threads, 1, points.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) curve.rows[i] = evaluate_row(spec, points[i]);
    return curve;
  }

  // Each worker owns a strided slice of rows; the first failure (lowest index)
  // is rethrown so errors are as deterministic as the results.
  std::mutex error_mutex;
  std::size_t error_index = points.size();
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) {
          try {
            curve.rows[i] = evaluate_row(spec, points[i]);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (i < error_index) {
              error_index = i;
              error = std::current_exception();
            }
            return;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return curve;
}

LimitStudy limit_convergence_study(const AtomResponse& atom, WallType wall, double z,
                                   const std::vector<double>& a_values, const GuardPolicy& guard) {
  atom.validate();
  if (a_values.empty()) throw CasimirError(ErrorKind::InvalidGrid, "no plate separations given");
  if (!std::isfinite(z) || !(z > 0.0)) {
    throw CasimirError(ErrorKind::InvalidGrid, fmt::format("wall distance must be positive, got {:g}", z));
  }
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    if (!std::isfinite(a_values[i]) || !(a_values[i] > z)) {
      throw CasimirError(ErrorKind::InvalidGrid,
                         fmt::format("separation a = {:g} must exceed the wall distance {:g}", a_values[i], z));
    }
    if (i > 0 && !(a_values[i - 1] < a_values[i])) {
      throw CasimirError(ErrorKind::InvalidGrid, "separations must be strictly increasing");
    }
  }

  LimitStudy study;
  study.wall = wall;
  study.z = z;
  study.degenerate = atom.degenerate();
  const double v_limit = single_wall_limit(atom, wall, z);
  for (double a : a_values) {
    LimitRow row;
    row.a = a;
    if (wall == WallType::conducting) {
      row.v_exact = potential_total(atom, Geometry(GeometryKind::ConductorConductor, a), z, guard);
    } else {
      row.v_exact = potential_total(atom, Geometry(GeometryKind::ConductorPermeable, a), a - z, guard);
    }
    row.v_limit = v_limit;
    if (!study.degenerate) row.rel_error = std::abs(row.v_exact / v_limit - 1.0);
    study.rows.push_back(row);
  }
  if (study.degenerate) return study;

  study.monotone_decreasing = true;
  for (std::size_t i = 1; i < study.rows.size(); ++i) {
    const LimitRow& prev = study.rows[i - 1];
    const LimitRow& cur = study.rows[i];
    if (!(*cur.rel_error < *prev.rel_error)) study.monotone_decreasing = false;
    study.local_exponents.push_back(std::log(*prev.rel_error / *cur.rel_error) / std::log(cur.a / prev.a));
  }

  if (study.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const LimitRow& row : study.rows) {
      if (!(*row.rel_error > 0.0)) continue;
      const double x = std::log(row.a);
      const double y = -std::log(*row.rel_error);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    const double nn = static_cast<double>(n);
    const double denom = nn * sxx - sx * sx;
    if (n >= 2 && denom > 0.0) study.fitted_exponent = (nn * sxy - sx * sy) / denom;
  }
  return study;
}

}  // namespace caspol
