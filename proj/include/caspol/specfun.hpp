#pragma once

// Profile functions of the scaled wall coordinate xi = pi z / a.
//
//   F(xi) = -(1/16) d^3/dxi^3 cot(xi) = (3/8) sum_n (xi - n pi)^-4
//   G(xi) = -(1/16) d^3/dxi^3 csc(xi) = (3/8) sum_n (-1)^n (xi - n pi)^-4
//
// The walls sit at xi = 0 and xi = pi (the double-precision value of pi, so
// that z = a maps exactly onto the far wall). Both functions diverge like
// (3/8) u^-4 at either wall; evaluation is done on the reflected variable
// t = min(xi, pi - xi) to keep full relative accuracy next to the far wall.

#include <cstddef>
#include <numbers>

namespace caspol {

inline constexpr double kPi = std::numbers::pi;

/// Constant term of F at either wall.
#ifdef CASPOL_FAULT_INJECT
// Deliberately wrong value; only compiled into the fault-injection targets
// used to prove that the verification suite catches a bad expansion constant.
inline constexpr double kWallConstant = 1.0 / 120.0 * (1.0 + 1e-3);
#else
inline constexpr double kWallConstant = 1.0 / 120.0;
#endif

/// Ratio between the conductor-permeable and conductor-conductor constants.
inline constexpr double kPermeableRatio = 7.0 / 8.0;

/// Leading coefficient of the u^-4 divergence of F and G.
inline constexpr double kPoleCoefficient = 3.0 / 8.0;

/// Scaled position strictly inside (0, pi).
class Xi {
 public:
  /// Throws CasimirError(OutOfDomain) unless 0 < value < pi.
  explicit Xi(double value);

  [[nodiscard]] double value() const noexcept { return value_; }
  /// Distance to the nearest wall, min(xi, pi - xi).
  [[nodiscard]] double wall_distance() const noexcept { return wall_distance_; }
  /// True when the far wall (xi = pi) is the nearer one.
  [[nodiscard]] bool near_far_wall() const noexcept { return value_ > kPi / 2; }

 private:
  double value_;
  double wall_distance_;
};

enum class GuardMode { reject, asymptotic };

struct GuardPolicy {
  double epsilon = 1e-6;
  GuardMode mode = GuardMode::reject;

  /// Throws OutOfDomain for non-positive or non-finite epsilon.
  void validate() const;
  [[nodiscard]] bool inside(const Xi& xi) const noexcept { return xi.wall_distance() < epsilon; }
};

struct OracleConfig {
  std::size_t image_terms = 0;
  double target_abs_tol = 1e-12;
};

// Closed forms. Inside the guard band these either throw TooCloseToWall or
// fall back to the near-wall expansions, depending on the policy.
[[nodiscard]] double eval_f(const Xi& xi, const GuardPolicy& guard = {});
[[nodiscard]] double eval_g(const Xi& xi, const GuardPolicy& guard = {});
[[nodiscard]] double eval_f_prime(const Xi& xi, const GuardPolicy& guard = {});
[[nodiscard]] double eval_g_prime(const Xi& xi, const GuardPolicy& guard = {});

// Near-wall expansions, using the nearer wall. With u = xi or u = xi - pi:
//   F ~ (3/8) u^-4 + 1/120
//   G ~ +(3/8) u^-4 - (7/8)/120   near xi = 0
//   G ~ -(3/8) u^-4 + (7/8)/120   near xi = pi
[[nodiscard]] double asymptotic_f(const Xi& xi);
[[nodiscard]] double asymptotic_g(const Xi& xi);
[[nodiscard]] double asymptotic_f_prime(const Xi& xi);
[[nodiscard]] double asymptotic_g_prime(const Xi& xi);

/// Upper bound on (3/8) sum_{|n|>N} |xi - n pi|^-4, from an integral estimate.
/// Requires N >= 1.
[[nodiscard]] double image_tail_bound(const Xi& xi, std::size_t image_terms);

/// Smallest N whose tail bound is at most tol.
[[nodiscard]] std::size_t minimal_image_terms(const Xi& xi, double tol);

/// (3/8) sum_{n=-N..N} s_n (xi - n pi)^-4 with s_n = 1 or (-1)^n. No tail check.
[[nodiscard]] double image_partial_sum(const Xi& xi, std::size_t image_terms, bool alternating);

// Image-sum oracles. A zero image_terms picks N from the tail bound; an
// explicit N whose tail bound exceeds target_abs_tol throws TailBoundViolated.
[[nodiscard]] double oracle_f_image_sum(const Xi& xi, const OracleConfig& cfg = {});
[[nodiscard]] double oracle_g_image_sum(const Xi& xi, const OracleConfig& cfg = {});

// Hurwitz-zeta oracles:
//   F = 3/(8 pi^4) [zeta(4, x) + zeta(4, 1 - x)],  x = xi / pi
//   G = 3/(128 pi^4) [S(x/2) - S((x+1)/2)],         S(y) = zeta(4, y) + zeta(4, 1 - y)
[[nodiscard]] double oracle_f_hurwitz(const Xi& xi);
[[nodiscard]] double oracle_g_hurwitz(const Xi& xi);

/// Hurwitz zeta sum_{k>=0} (q + k)^-s for s > 1, q > 0. Direct summation
/// followed by an Euler-Maclaurin tail.
[[nodiscard]] long double hurwitz_zeta(long double s, long double q);

}  // namespace caspol
