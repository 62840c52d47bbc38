#include "caspol/specfun.hpp"

#include <array>
#include <cmath>
#include <fmt/format.h>

#include "caspol/error.hpp"

namespace caspol {

namespace {

using Real = long double;

constexpr Real kPiL = std::numbers::pi_v<long double>;

// Trig data at the reflected variable t = min(xi, pi - xi). t is formed in
// double, where pi - xi is exact for xi in [pi/2, pi].
struct Reflected {
  Real s;  // sin t > 0
  Real c;  // cos t >= 0
  bool far;
};

Reflected reflect(const Xi& xi) {
  const Real t = xi.wall_distance();
  return {std::sin(t), std::cos(t), xi.near_far_wall()};
}

// F = csc^2 (2 cot^2 + csc^2) / 8 = (2c^2 + 1) / (8 s^4), symmetric.
Real f_closed(const Reflected& r) {
  const Real s2 = r.s * r.s;
  return (2 * r.c * r.c + 1) / (8 * s2 * s2);
}

// G = csc cot (cot^2 + 5 csc^2) / 16 = c (c^2 + 5) / (16 s^4), antisymmetric.
Real g_closed(const Reflected& r) {
  const Real s2 = r.s * r.s;
  const Real v = r.c * (r.c * r.c + 5) / (16 * s2 * s2);
  return r.far ? -v : v;
}

// F' = -csc^2 cot (cot^2 + 2 csc^2) / 2 = -c (c^2 + 2) / (2 s^5), antisymmetric.
Real f_prime_closed(const Reflected& r) {
  const Real s2 = r.s * r.s;
  const Real v = -r.c * (r.c * r.c + 2) / (2 * s2 * s2 * r.s);
  return r.far ? -v : v;
}

// G' = -csc (cot^4 + 18 csc^2 cot^2 + 5 csc^4) / 16
//    = -(c^4 + 18 c^2 + 5) / (16 s^5), symmetric.
Real g_prime_closed(const Reflected& r) {
  const Real s2 = r.s * r.s;
  const Real c2 = r.c * r.c;
  return -(c2 * c2 + 18 * c2 + 5) / (16 * s2 * s2 * r.s);
}

void require_guard(const Xi& xi, const GuardPolicy& guard) {
  guard.validate();
  if (guard.mode == GuardMode::reject && guard.inside(xi)) {
    throw CasimirError(ErrorKind::TooCloseToWall,
                       fmt::format("xi = {:.17g} is within {:g} of a wall", xi.value(), guard.epsilon));
  }
}

Real inverse_fourth(Real u) {
  const Real u2 = u * u;
  return 1 / (u2 * u2);
}

}  // namespace

Xi::Xi(double value) : value_(value), wall_distance_(0.0) {
  if (!std::isfinite(value) || !(value > 0.0) || !(value < kPi)) {
    throw CasimirError(ErrorKind::OutOfDomain,
                       fmt::format("xi = {:.17g} is outside the open interval (0, pi)", value));
  }
  wall_distance_ = value > kPi / 2 ? kPi - value : value;
}

void GuardPolicy::validate() const {
  if (!std::isfinite(epsilon) || !(epsilon > 0.0)) {
    throw CasimirError(ErrorKind::OutOfDomain, fmt::format("guard epsilon must be positive, got {:g}", epsilon));
  }
}

double eval_f(const Xi& xi, const GuardPolicy& guard) {
  require_guard(xi, guard);
  if (guard.inside(xi)) return asymptotic_f(xi);
  return static_cast<double>(f_closed(reflect(xi)));
}

double eval_g(const Xi& xi, const GuardPolicy& guard) {
  require_guard(xi, guard);
  if (guard.inside(xi)) return asymptotic_g(xi);
  return static_cast<double>(g_closed(reflect(xi)));
}

double eval_f_prime(const Xi& xi, const GuardPolicy& guard) {
  require_guard(xi, guard);
  if (guard.inside(xi)) return asymptotic_f_prime(xi);
  return static_cast<double>(f_prime_closed(reflect(xi)));
}

double eval_g_prime(const Xi& xi, const GuardPolicy& guard) {
  require_guard(xi, guard);
  if (guard.inside(xi)) return asymptotic_g_prime(xi);
  return static_cast<double>(g_prime_closed(reflect(xi)));
}

double asymptotic_f(const Xi& xi) {
  const Real pole = kPoleCoefficient * inverse_fourth(xi.wall_distance());
  return static_cast<double>(pole + Real{kWallConstant});
}

double asymptotic_g(const Xi& xi) {
  const Real pole = kPoleCoefficient * inverse_fourth(xi.wall_distance());
  const Real constant = Real{kPermeableRatio} * Real{kWallConstant};
  return static_cast<double>(xi.near_far_wall() ? constant - pole : pole - constant);
}

double asymptotic_f_prime(const Xi& xi) {
  const Real t = xi.wall_distance();
  const Real v = -4 * Real{kPoleCoefficient} * inverse_fourth(t) / t;
  return static_cast<double>(xi.near_far_wall() ? -v : v);
}

double asymptotic_g_prime(const Xi& xi) {
  const Real t = xi.wall_distance();
  return static_cast<double>(-4 * Real{kPoleCoefficient} * inverse_fourth(t) / t);
}

double image_tail_bound(const Xi& xi, std::size_t image_terms) {
  if (image_terms == 0) {
    throw CasimirError(ErrorKind::TailBoundViolated, "image sum needs at least one image pair");
  }
  // sum_{n>N} (n pi - xi)^-4 <= int_N^inf (x pi - xi)^-4 dx, same on the other side.
  const Real n = static_cast<Real>(image_terms);
  const Real x = xi.value();
  const Real right = n * kPiL - x;
  const Real left = n * kPiL + x;
  const Real bound = (1 / (right * right * right) + 1 / (left * left * left)) / (3 * kPiL);
  return static_cast<double>(Real{kPoleCoefficient} * bound);
}

std::size_t minimal_image_terms(const Xi& xi, double tol) {
  if (!(tol > 0.0)) {
    throw CasimirError(ErrorKind::TailBoundViolated, fmt::format("tail tolerance must be positive, got {:g}", tol));
  }
  // The bound is below (3/8) * 2 / (3 pi ((N-1) pi)^3); start from that estimate.
  const double guess = std::cbrt(1.0 / (4.0 * kPi * kPi * kPi * kPi * tol));
  std::size_t n = guess > 2.0 ? static_cast<std::size_t>(guess) - 1 : 1;
  while (n > 1 && image_tail_bound(xi, n - 1) <= tol) --n;
  while (image_tail_bound(xi, n) > tol) ++n;
  return n;
}

double image_partial_sum(const Xi& xi, std::size_t image_terms, bool alternating) {
  // Distances to the images: n >= 1 at (n - 1) pi + t_far, n <= -1 at |n| pi + xi,
  // where t_far = pi - xi is taken exactly in double to agree with the closed forms.
  const Real x = xi.value();
  const Real t_far = kPi - xi.value();
  Real sum = 0;
  for (std::size_t k = image_terms; k >= 1; --k) {
    const Real kr = static_cast<Real>(k);
    const Real right = inverse_fourth((kr - 1) * kPiL + t_far);
    const Real left = inverse_fourth(kr * kPiL + x);
    const bool odd = (k % 2) == 1;
    const Real sign = (alternating && odd) ? -1 : 1;
    sum += sign * (right + left);
  }
  sum += inverse_fourth(x);
  return static_cast<double>(Real{kPoleCoefficient} * sum);
}

namespace {

double checked_image_sum(const Xi& xi, const OracleConfig& cfg, bool alternating) {
  std::size_t n = cfg.image_terms;
  if (n == 0) {
    n = minimal_image_terms(xi, cfg.target_abs_tol);
  } else {
    const double bound = image_tail_bound(xi, n);
    if (bound > cfg.target_abs_tol) {
      throw CasimirError(ErrorKind::TailBoundViolated,
                         fmt::format("{} image pairs leave a tail of up to {:.3g}, above the target {:.3g}", n,
                                     bound, cfg.target_abs_tol));
    }
  }
  return image_partial_sum(xi, n, alternating);
}

// sum_{n in Z} (y - n)^-4 for y in (0, 1), given y and 1 - y separately so
// neither is formed by cancellation.
Real periodic_quartic(Real y, Real one_minus_y) { return hurwitz_zeta(4, y) + hurwitz_zeta(4, one_minus_y); }

}  // namespace

double oracle_f_image_sum(const Xi& xi, const OracleConfig& cfg) { return checked_image_sum(xi, cfg, false); }

double oracle_g_image_sum(const Xi& xi, const OracleConfig& cfg) { return checked_image_sum(xi, cfg, true); }

double oracle_f_hurwitz(const Xi& xi) {
  const Real x = Real{xi.value()} / kPiL;
  const Real one_minus_x = (Real{kPi} - Real{xi.value()}) / kPiL;
  const Real pi4 = kPiL * kPiL * kPiL * kPiL;
  return static_cast<double>(3 / (8 * pi4) * periodic_quartic(x, one_minus_x));
}

double oracle_g_hurwitz(const Xi& xi) {
  const Real x = Real{xi.value()} / kPiL;
  const Real one_minus_x = (Real{kPi} - Real{xi.value()}) / kPiL;
  const Real pi4 = kPiL * kPiL * kPiL * kPiL;
  // Even images give S(x/2), odd images S((x - 1)/2) = S((x + 1)/2).
  const Real even = periodic_quartic(x / 2, 1 - x / 2);
  const Real odd = periodic_quartic((1 + x) / 2, one_minus_x / 2);
  return static_cast<double>(3 / (128 * pi4) * (even - odd));
}

long double hurwitz_zeta(long double s, long double q) {
  if (!(s > 1) || !(q > 0)) {
    throw CasimirError(ErrorKind::OutOfDomain, "hurwitz_zeta requires s > 1 and q > 0");
  }
  // B_{2j} / (2j)!
  static constexpr std::array<Real, 7> kBernoulliOverFactorial = {
      1.0L / 6 / 2,
      -1.0L / 30 / 24,
      1.0L / 42 / 720,
      -1.0L / 30 / 40320,
      5.0L / 66 / 3628800,
      -691.0L / 2730 / 479001600,
      7.0L / 6 / 87178291200,
  };
  constexpr int kDirectTerms = 16;

  Real sum = 0;
  for (int k = kDirectTerms - 1; k >= 0; --k) sum += std::pow(q + k, -s);

  const Real w = q + kDirectTerms;
  Real tail = std::pow(w, 1 - s) / (s - 1) + std::pow(w, -s) / 2;
  // Rising factorial s (s+1) ... (s+2j-2) times w^{-s-2j+1}.
  Real rising = s;
  Real power = std::pow(w, -s - 1);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    tail += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power /= w * w;
  }
  return sum + tail;
}

}  // namespace caspol
