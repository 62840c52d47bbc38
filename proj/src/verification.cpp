#include "caspol/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "caspol/analysis.hpp"
#include "caspol/correlators.hpp"
#include "caspol/potentials.hpp"
#include "caspol/specfun.hpp"

namespace caspol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::string_view, 27> kRequiredChecks = {
    "F_vs_image_sum",
    "F_vs_hurwitz",
    "G_vs_image_sum",
    "G_vs_hurwitz",
    "F_reflection_symmetry",
    "G_reflection_antisymmetry",
    "F_expansion_near_0",
    "G_expansion_near_0",
    "G_expansion_near_pi",
    "F_prime_vs_finite_difference",
    "G_prime_vs_finite_difference",
    "F_positive",
    "profile_midpoint_values",
    "tensor_delta_structure",
    "EB_identically_zero",
    "trace_sum_constant_cc",
    "trace_sum_constant_cp",
    "correlator_scaling",
    "correlator_reflection",
    "potential_additivity",
    "potential_correlator_consistency",
    "potential_linearity",
    "potential_scaling",
    "potential_reflection",
    "potential_midpoint_value",
    "single_wall_convergence",
    "force_vs_finite_difference",
};

// The stationary-point cross check is extra to the invariant list above.
constexpr std::string_view kStationaryCheck = "stationary_points_vs_scan";

double rel_diff(double x, double ref) {
  const double scale = std::max(std::abs(x), std::abs(ref));
  return scale == 0.0 ? 0.0 : std::abs(x - ref) / scale;
}

struct ErrorAccumulator {
  Measurement m;

  void add(double value, double reference) {
    m.max_abs_error = std::max(m.max_abs_error, std::abs(value - reference));
    m.max_rel_error = std::max(m.max_rel_error, rel_diff(value, reference));
    ++m.points_tested;
  }
  void violation(bool failed) {
    if (failed) {
      m.max_abs_error += 1.0;
      m.max_rel_error = kInf;
    }
    ++m.points_tested;
  }
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

std::vector<double> geomspace(double lo, double hi, std::size_t n) {
  std::vector<double> out = linspace(std::log(lo), std::log(hi), n);
  for (double& x : out) x = std::exp(x);
  return out;
}

std::vector<double> random_points(double lo, double hi, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

const Geometry kUnitCC{GeometryKind::ConductorConductor, 1.0};
const Geometry kUnitCP{GeometryKind::ConductorPermeable, 1.0};

// Central difference of f at x with step h.
template <class Fn>
double central_difference(Fn&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// ---------------------------------------------------------------- specfun

Measurement oracle_agreement(std::size_t n, double (*closed)(const Xi&, const GuardPolicy&),
                             double (*oracle)(const Xi&)) {
  ErrorAccumulator acc;
  for (double x : linspace(0.05, kPi - 0.05, n)) {
    const Xi xi(x);
    acc.add(closed(xi, GuardPolicy{}), oracle(xi));
  }
  return acc.m;
}

double f_image_oracle(const Xi& xi) { return oracle_f_image_sum(xi, OracleConfig{0, 1e-12}); }
double g_image_oracle(const Xi& xi) { return oracle_g_image_sum(xi, OracleConfig{0, 1e-12}); }

// Spread of the fitted remainder coefficient C = (P - pole - constant) / u^2
// over u in [0.025, 0.1]; a wrong constant makes C drift like u^-2.
Measurement expansion_spread(std::size_t n, double pole_sign, double constant, bool far_wall,
                             double (*profile)(const Xi&, const GuardPolicy&)) {
  std::vector<double> coefficients;
  for (double t : geomspace(0.025, 0.1, n)) {
    const Xi xi(far_wall ? kPi - t : t);
    const double u = far_wall ? xi.value() - kPi : xi.value();
    const double u2 = u * u;
    const double remainder = profile(xi, GuardPolicy{}) - pole_sign * kPoleCoefficient / (u2 * u2) - constant;
    coefficients.push_back(remainder / u2);
  }
  const auto [lo, hi] = std::minmax_element(coefficients.begin(), coefficients.end());
  Measurement m;
  m.max_abs_error = *hi - *lo;
  const double scale = std::max(std::abs(*lo), std::abs(*hi));
  m.max_rel_error = scale == 0.0 ? 0.0 : m.max_abs_error / scale;
  m.points_tested = coefficients.size();
  return m;
}

Measurement derivative_vs_fd(std::size_t n, std::uint64_t seed, double (*value)(const Xi&, const GuardPolicy&),
                             double (*derivative)(const Xi&, const GuardPolicy&)) {
  ErrorAccumulator acc;
  const double h = 1e-6;
  for (double x : random_points(0.05, kPi - 0.05, n, seed)) {
    const double fd = central_difference([&](double y) { return value(Xi(y), GuardPolicy{}); }, x, h);
    acc.add(derivative(Xi(x), GuardPolicy{}), fd);
  }
  return acc.m;
}

// ---------------------------------------------------------------- correlators

Measurement trace_sum_constant(std::size_t n, GeometryKind kind) {
  ErrorAccumulator acc;
  const double constant = kind == GeometryKind::ConductorConductor ? kWallConstant : -kPermeableRatio * kWallConstant;
  for (double a : {1.0, 2.5}) {
    const Geometry geom(kind, a);
    const double expected = -2.0 * constant * correlator_prefactor(a);
    for (double z : linspace(0.2 * a, 0.8 * a, n)) {
      acc.add(correlator_ee(geom, z).trace() + correlator_bb(geom, z).trace(), expected);
    }
  }
  return acc.m;
}

// ---------------------------------------------------------------- potentials

constexpr std::array<AtomResponse, 4> kAtoms = {
    AtomResponse{1.0, 0.0}, AtomResponse{0.0, 1.0}, AtomResponse{1.0, 0.3}, AtomResponse{0.2, 1.5}};

std::vector<Check> build_registry() {
  std::vector<Check> checks;
  const auto add = [&](std::string name, std::string description, CheckMetric metric, double quick, double full,
                       std::function<Measurement(std::size_t)> run) {
    checks.push_back(Check{std::move(name), std::move(description), metric, quick, full, std::move(run)});
  };

  add("F_vs_image_sum", "closed-form F against the certified image sum on [0.05, pi-0.05]", CheckMetric::absolute,
      1e-9, 1e-10, [](std::size_t n) { return oracle_agreement(n, eval_f, f_image_oracle); });
  add("F_vs_hurwitz", "closed-form F against the Hurwitz-zeta form", CheckMetric::absolute, 1e-9, 1e-10,
      [](std::size_t n) { return oracle_agreement(n, eval_f, oracle_f_hurwitz); });
  add("G_vs_image_sum", "closed-form G against the alternating image sum", CheckMetric::absolute, 1e-9, 1e-10,
      [](std::size_t n) { return oracle_agreement(n, eval_g, g_image_oracle); });
  add("G_vs_hurwitz", "closed-form G against the Hurwitz-zeta form", CheckMetric::absolute, 1e-9, 1e-10,
      [](std::size_t n) { return oracle_agreement(n, eval_g, oracle_g_hurwitz); });

  add("F_reflection_symmetry", "F(xi) = F(pi - xi)", CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
    ErrorAccumulator acc;
    for (double x : linspace(1e-3, kPi / 2, n)) acc.add(eval_f(Xi(x)), eval_f(Xi(kPi - x)));
    return acc.m;
  });
  add("G_reflection_antisymmetry", "G(xi) = -G(pi - xi)", CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
    ErrorAccumulator acc;
    for (double x : linspace(1e-3, kPi / 2 - 0.01, n)) acc.add(eval_g(Xi(x)), -eval_g(Xi(kPi - x)));
    return acc.m;
  });

  add("F_expansion_near_0", "F - 3/8 xi^-4 - 1/120 = O(xi^2): fitted coefficient stable", CheckMetric::relative, 0.01,
      0.01, [](std::size_t n) { return expansion_spread(n, 1.0, kWallConstant, false, eval_f); });
  add("G_expansion_near_0", "G - 3/8 xi^-4 + (7/8)/120 = O(xi^2): fitted coefficient stable",
      CheckMetric::relative, 0.01, 0.01,
      [](std::size_t n) { return expansion_spread(n, 1.0, -kPermeableRatio * kWallConstant, false, eval_g); });
  add("G_expansion_near_pi", "G + 3/8 (xi-pi)^-4 - (7/8)/120 = O((xi-pi)^2): fitted coefficient stable",
      CheckMetric::relative, 0.01, 0.01,
      [](std::size_t n) { return expansion_spread(n, -1.0, kPermeableRatio * kWallConstant, true, eval_g); });

  add("F_prime_vs_finite_difference", "F' against central differences of F, h = 1e-6", CheckMetric::relative, 1e-7,
      1e-7, [](std::size_t n) { return derivative_vs_fd(n, 0xF1, eval_f, eval_f_prime); });
  add("G_prime_vs_finite_difference", "G' against central differences of G, h = 1e-6", CheckMetric::relative, 1e-7,
      1e-7, [](std::size_t n) { return derivative_vs_fd(n, 0x61, eval_g, eval_g_prime); });

  add("F_positive", "F > 0 on the open interval", CheckMetric::violations, 0.0, 0.0, [](std::size_t n) {
    ErrorAccumulator acc;
    for (double x : linspace(1e-3, kPi - 1e-3, n)) acc.violation(!(eval_f(Xi(x)) > 0.0));
    return acc.m;
  });

  add("profile_midpoint_values", "F(pi/2) = 1/8 and G(pi/2) = 0", CheckMetric::absolute, 1e-14, 1e-14,
      [](std::size_t) {
        ErrorAccumulator acc;
        acc.add(eval_f(Xi(kPi / 2)), 0.125);
        acc.add(eval_g(Xi(kPi / 2)), 0.0);
        return acc.m;
      });

  add("tensor_delta_structure", "off-diagonals vanish and xx = yy exactly", CheckMetric::absolute, 0.0, 0.0,
      [](std::size_t n) {
        ErrorAccumulator acc;
        for (const Geometry& geom : {kUnitCC, kUnitCP}) {
          for (double z : random_points(0.01, 0.99, n, 0xD5)) {
            for (const CorrelatorTensor& t : {correlator_ee(geom, z), correlator_bb(geom, z)}) {
              double worst = std::abs(t(0, 0) - t(1, 1));
              for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                  if (i != j) worst = std::max(worst, std::abs(t(i, j)));
                }
              }
              acc.add(worst, 0.0);
            }
          }
        }
        return acc.m;
      });

  add("EB_identically_zero", "every <E_i B_j> component is exactly zero", CheckMetric::absolute, 0.0, 0.0,
      [](std::size_t n) {
        ErrorAccumulator acc;
        for (const Geometry& geom : {kUnitCC, kUnitCP}) {
          for (double z : linspace(0.01, 0.99, n)) {
            const CorrelatorTensor t = correlator_eb(geom, z);
            for (const auto& row : t.components) {
              for (double v : row) acc.add(v, 0.0);
            }
          }
        }
        return acc.m;
      });

  add("trace_sum_constant_cc", "tr<EE> + tr<BB> = -(pi/a)^4 (2/3pi)(2/120) for every z", CheckMetric::relative,
      1e-12, 1e-12, [](std::size_t n) { return trace_sum_constant(n, GeometryKind::ConductorConductor); });
  add("trace_sum_constant_cp", "tr<EE> + tr<BB> = +(pi/a)^4 (2/3pi)(7/8)(2/120) for every z",
      CheckMetric::relative, 1e-12, 1e-12,
      [](std::size_t n) { return trace_sum_constant(n, GeometryKind::ConductorPermeable); });

  add("correlator_scaling", "components scale as a^-4 at fixed z/a", CheckMetric::relative, 1e-12, 1e-12,
      [](std::size_t n) {
        ErrorAccumulator acc;
        for (GeometryKind kind : {GeometryKind::ConductorConductor, GeometryKind::ConductorPermeable}) {
          const Geometry base(kind, 1.0);
          for (double s : {0.5, 2.0, 3.0, 10.0}) {
            const Geometry scaled(kind, s);
            const double s4 = (s * s) * (s * s);
            for (double z : random_points(0.01, 0.99, n, 0x5C)) {
              const CorrelatorTensor t0 = correlator_ee(base, z);
              const CorrelatorTensor t1 = correlator_ee(scaled, s * z);
              const CorrelatorTensor b0 = correlator_bb(base, z);
              const CorrelatorTensor b1 = correlator_bb(scaled, s * z);
              for (int i = 0; i < 3; ++i) {
                acc.add(s4 * t1(i, i), t0(i, i));
                acc.add(s4 * b1(i, i), b0(i, i));
              }
            }
          }
        }
        return acc.m;
      });

  add("correlator_reflection", "conductor-pair tensors satisfy T(z) = T(a-z); the permeable case does not",
      CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
        ErrorAccumulator acc;
        for (double z : linspace(0.05, 0.45, n)) {
          const CorrelatorTensor t0 = correlator_ee(kUnitCC, z);
          const CorrelatorTensor t1 = correlator_ee(kUnitCC, 1.0 - z);
          for (int i = 0; i < 3; ++i) acc.add(t1(i, i), t0(i, i));
        }
        const double near = correlator_ee(kUnitCP, 0.25)(2, 2);
        const double far = correlator_ee(kUnitCP, 0.75)(2, 2);
        acc.violation(!(rel_diff(near, far) > 1e-6));
        return acc.m;
      });

  add("potential_additivity", "V = V_E + V_M", CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
    ErrorAccumulator acc;
    for (const Geometry& geom : {kUnitCC, kUnitCP}) {
      for (const AtomResponse& atom : kAtoms) {
        for (double z : random_points(0.01, 0.99, n, 0xAD)) {
          acc.add(potential_e(atom, geom, z) + potential_m(atom, geom, z), potential_total(atom, geom, z));
        }
      }
    }
    return acc.m;
  });

  add("potential_correlator_consistency", "V_E = -(alpha/2) <E^2> and V_M = -(beta/2) <B^2>",
      CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
        ErrorAccumulator acc;
        const AtomResponse atom{1.0, 1.0};
        for (const Geometry& geom : {kUnitCC, kUnitCP}) {
          for (double z : random_points(0.01, 0.99, n, 0xC0)) {
            acc.add(potential_e(atom, geom, z), -0.5 * atom.alpha0 * mean_square_e(geom, z));
            acc.add(potential_m(atom, geom, z), -0.5 * atom.beta0 * mean_square_b(geom, z));
          }
        }
        return acc.m;
      });

  add("potential_linearity", "V(c alpha, c beta) = c V(alpha, beta)", CheckMetric::relative, 1e-15, 1e-15,
      [](std::size_t n) {
        ErrorAccumulator acc;
        const AtomResponse atom{1.0, 0.25};
        for (const Geometry& geom : {kUnitCC, kUnitCP}) {
          for (double c : {0.25, 0.5, 2.0, 3.0}) {
            const AtomResponse scaled{c * atom.alpha0, c * atom.beta0};
            for (double z : random_points(0.01, 0.99, n, 0x11)) {
              acc.add(potential_total(scaled, geom, z), c * potential_total(atom, geom, z));
              acc.add(potential_e(scaled, geom, z), c * potential_e(atom, geom, z));
              acc.add(potential_m(scaled, geom, z), c * potential_m(atom, geom, z));
            }
          }
        }
        return acc.m;
      });

  add("potential_scaling", "V(z; a) = s^4 V(sz; sa)", CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
    ErrorAccumulator acc;
    const AtomResponse atom{1.0, 0.3};
    for (GeometryKind kind : {GeometryKind::ConductorConductor, GeometryKind::ConductorPermeable}) {
      for (double a : {1.0, 3.0}) {
        const Geometry base(kind, a);
        for (double s : {0.5, 2.0, 7.0}) {
          const Geometry scaled(kind, s * a);
          const double s4 = (s * s) * (s * s);
          for (double u : random_points(0.01, 0.99, n, 0x5A)) {
            acc.add(s4 * potential_total(atom, scaled, s * u * a), potential_total(atom, base, u * a));
          }
        }
      }
    }
    return acc.m;
  });

  add("potential_reflection",
      "conductor pair: V(z) = V(a-z); permeable wall: the G term flips sign under z -> a-z, the constant does not",
      CheckMetric::relative, 1e-12, 1e-12, [](std::size_t n) {
        ErrorAccumulator acc;
        const AtomResponse atom{1.0, 0.3};
        for (double z : linspace(0.05, 0.45, n)) {
          acc.add(potential_total(atom, kUnitCC, 1.0 - z), potential_total(atom, kUnitCC, z));
        }
        // V_CP(z) + V_CP(a - z) leaves twice the constant term.
        const double constant = -kPermeableRatio * (atom.alpha0 + atom.beta0) * kPi * kPi * kPi * kWallConstant / 3.0;
        for (double z : linspace(0.25, 0.5, n)) {
          acc.add(potential_total(atom, kUnitCP, z) + potential_total(atom, kUnitCP, 1.0 - z), 2.0 * constant);
        }
        acc.violation(!(rel_diff(potential_total(atom, kUnitCP, 0.25), potential_total(atom, kUnitCP, 0.75)) > 1e-6));
        return acc.m;
      });

  add("potential_midpoint_value", "conductor pair, alpha=1, beta=0, a=1: V(1/2) = -11 pi^3 / 90",
      CheckMetric::relative, 1e-12, 1e-12, [](std::size_t) {
        ErrorAccumulator acc;
        acc.add(potential_total(AtomResponse{1.0, 0.0}, kUnitCC, 0.5), -11.0 * kPi * kPi * kPi / 90.0);
        return acc.m;
      });

  add("single_wall_convergence",
      "|V/V_wall - 1| decreases monotonically in a for z/a <= 0.05 with exponent in [3.5, 4.5]",
      CheckMetric::violations, 0.0, 0.0, [](std::size_t n) {
        ErrorAccumulator acc;
        const AtomResponse atom{1.0, 0.0};
        const std::vector<double> a_values = geomspace(20.0, 400.0, n);
        for (WallType wall : {WallType::conducting, WallType::permeable}) {
          const LimitStudy study = limit_convergence_study(atom, wall, 1.0, a_values);
          for (std::size_t i = 1; i < study.rows.size(); ++i) {
            acc.violation(!(*study.rows[i].rel_error < *study.rows[i - 1].rel_error));
          }
          const bool in_window =
              study.fitted_exponent && *study.fitted_exponent >= 3.5 && *study.fitted_exponent <= 4.5;
          acc.violation(!in_window);
        }
        return acc.m;
      });

  add("force_vs_finite_difference", "analytic force against -dV/dz by central differences, h = a 1e-6",
      CheckMetric::relative, 1e-6, 1e-6, [](std::size_t n) {
        ErrorAccumulator acc;
        for (GeometryKind kind : {GeometryKind::ConductorConductor, GeometryKind::ConductorPermeable}) {
          for (double a : {1.0, 4.0}) {
            const Geometry geom(kind, a);
            const double h = 1e-6 * a;
            for (const AtomResponse& atom : kAtoms) {
              for (double u : random_points(0.01, 0.99, n, 0xFD)) {
                const double z = u * a;
                const double fd =
                    -central_difference([&](double y) { return potential_total(atom, geom, y); }, z, h);
                acc.add(force(atom, geom, z), fd);
              }
            }
          }
        }
        return acc.m;
      });

  add(std::string(kStationaryCheck), "scan-plus-bisection stationary points against a brute-force scan of V",
      CheckMetric::violations, 0.0, 0.0, [](std::size_t n) {
        ErrorAccumulator acc;
        struct Case {
          Geometry geom;
          AtomResponse atom;
        };
        const std::array<Case, 3> cases = {Case{kUnitCC, {1.0, 0.0}}, Case{kUnitCC, {0.0, 1.0}},
                                           Case{kUnitCP, {1.0, 0.0}}};
        const std::size_t scan = n >= 100 ? 10000 : 1000;
        const double lo = 0.01;
        const double hi = 0.99;
        const double spacing = (hi - lo) / static_cast<double>(scan - 1);
        for (const Case& c : cases) {
          const StationarySearch found = stationary_points(c.atom, c.geom, lo, hi, 1e-12);
          std::vector<StationaryPoint> brute;
          const std::vector<double> zs = linspace(lo, hi, scan);
          std::vector<double> vs(zs.size());
          for (std::size_t i = 0; i < zs.size(); ++i) vs[i] = potential_total(c.atom, c.geom, zs[i]);
          // Turning points of the discrete slope; flat steps keep the last sign.
          int last_sign = 0;
          std::size_t last_change = 0;
          for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
            const double d = vs[i + 1] - vs[i];
            const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
            if (sign == 0) continue;
            if (last_sign != 0 && sign != last_sign) {
              const double z = 0.5 * (zs[last_change] + zs[i]);
              brute.push_back({z, last_sign > 0 ? StationaryKind::max : StationaryKind::min});
            }
            last_sign = sign;
            last_change = i + 1;
          }
          acc.violation(found.points.size() != brute.size());
          for (std::size_t i = 0; i < std::min(found.points.size(), brute.size()); ++i) {
            acc.violation(found.points[i].kind != brute[i].kind);
            acc.violation(std::abs(found.points[i].z - brute[i].z) > spacing);
          }
        }
        return acc.m;
      });

  return checks;
}

}  // namespace

std::string_view level_name(VerificationLevel level) noexcept {
  return level == VerificationLevel::quick ? "quick" : "full";
}

std::string_view metric_name(CheckMetric metric) noexcept {
  switch (metric) {
    case CheckMetric::absolute: return "absolute";
    case CheckMetric::relative: return "relative";
    case CheckMetric::violations: return "violations";
  }
  return "?";
}

double CheckRecord::measured() const noexcept {
  return metric == CheckMetric::relative ? max_rel_error : max_abs_error;
}

bool VerificationReport::passed() const noexcept { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
}

std::span<const std::string_view> required_check_names() noexcept { return kRequiredChecks; }

const std::vector<Check>& verification_registry() {
  static const std::vector<Check> registry = [] {
    std::vector<Check> checks = build_registry();
    for (std::string_view name : kRequiredChecks) {
      const auto hits = std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
      if (hits != 1) {
        throw std::logic_error("verification registry must contain '" + std::string(name) + "' exactly once");
      }
    }
    return checks;
  }();
  return registry;
}

std::size_t samples_for(VerificationLevel level) noexcept { return level == VerificationLevel::quick ? 10 : 200; }

CheckRecord evaluate_check(const Check& check, VerificationLevel level) {
  CheckRecord record;
  record.name = check.name;
  record.description = check.description;
  record.metric = check.metric;
  record.tolerance = level == VerificationLevel::quick ? check.quick_tolerance : check.full_tolerance;
  try {
    const Measurement m = check.run(samples_for(level));
    record.max_abs_error = m.max_abs_error;
    record.max_rel_error = m.max_rel_error;
    record.points_tested = m.points_tested;
    const double measured = record.measured();
    record.passed = std::isfinite(measured) && measured <= record.tolerance;
  } catch (const std::exception& e) {
    record.description += std::string(" [threw: ") + e.what() + "]";
    record.max_abs_error = kInf;
    record.max_rel_error = kInf;
    record.passed = false;
  }
  return record;
}

VerificationReport run_verification(VerificationLevel level) {
  VerificationReport report;
  report.level = level;
  for (const Check& check : verification_registry()) report.checks.push_back(evaluate_check(check, level));
  return report;
}

}  // namespace caspol
