#include <doctest.h>

#include <cmath>

#include "caspol/error.hpp"
#include "caspol/specfun.hpp"
#include "oracles.hpp"

using namespace caspol;
using caspol::test::rel_diff;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const CasimirError& e) {
    return e.kind();
  }
  FAIL("expected a CasimirError");
  return ErrorKind::OutOfDomain;
}

}  // namespace

TEST_CASE("Xi rejects points outside the open gap") {
  CHECK(kind_of([] { return Xi(0.0); }) == ErrorKind::OutOfDomain);
  CHECK(kind_of([] { return Xi(kPi); }) == ErrorKind::OutOfDomain);
  CHECK(kind_of([] { return Xi(-0.5); }) == ErrorKind::OutOfDomain);
  CHECK(kind_of([] { return Xi(4.0); }) == ErrorKind::OutOfDomain);
  CHECK(kind_of([] { return Xi(std::nan("")); }) == ErrorKind::OutOfDomain);
  CHECK(Xi(0.3).wall_distance() == 0.3);
  CHECK(Xi(kPi - 0.25).wall_distance() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("closed forms match the defining third derivatives") {
  for (double x : {0.3, 0.7, 1.0, 1.4, 1.9, 2.5, 2.9}) {
    CAPTURE(x);
    CHECK(rel_diff(eval_f(Xi(x)), caspol::test::defining_f(x)) < 1e-5);
    if (std::abs(x - kPi / 2) > 0.1) CHECK(rel_diff(eval_g(Xi(x)), caspol::test::defining_g(x)) < 1e-5);
  }
}

TEST_CASE("F spot values") {
  CHECK(eval_f(Xi(kPi / 2)) == 0.125);
  CHECK(eval_f(Xi(kPi / 4)) == doctest::Approx(eval_f(Xi(3 * kPi / 4))).epsilon(1e-14));

  // Leading pole and constant of the near-wall expansion.
  const double x = 0.01;
  CHECK(eval_f(Xi(1e-4)) * std::pow(1e-4, 4) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(eval_f(Xi(x)) - 0.375 / std::pow(x, 4) == doctest::Approx(1.0 / 120).epsilon(1e-4));
}

TEST_CASE("G spot values") {
  CHECK(std::abs(eval_g(Xi(kPi / 2))) < 1e-15);
  const double x = 0.01;
  CHECK(eval_g(Xi(x)) - 0.375 / std::pow(x, 4) == doctest::Approx(-7.0 / 960).epsilon(1e-4));
  const Xi far(kPi - x);
  const double u = far.value() - kPi;
  CHECK(eval_g(far) + 0.375 / std::pow(u, 4) == doctest::Approx(7.0 / 960).epsilon(1e-4));
}

TEST_CASE("expansion remainders are O(xi^2) with the zeta-derived coefficients") {
  for (double x : {0.1, 0.05, 0.025}) {
    CAPTURE(x);
    const double x2 = x * x;
    const double f_rem = (eval_f(Xi(x)) - 0.375 / (x2 * x2) - 1.0 / 120) / x2;
    const double g_rem = (eval_g(Xi(x)) - 0.375 / (x2 * x2) + 7.0 / 960) / x2;
    CHECK(f_rem == doctest::Approx(caspol::test::kFQuadraticCoefficient).epsilon(2e-3));
    CHECK(g_rem == doctest::Approx(caspol::test::kGQuadraticCoefficient).epsilon(2e-3));

    const Xi far(kPi - x);
    const double u = far.value() - kPi;
    const double far_rem = (eval_g(far) + 0.375 / std::pow(u, 4) - 7.0 / 960) / (u * u);
    CHECK(far_rem == doctest::Approx(-caspol::test::kGQuadraticCoefficient).epsilon(2e-3));
  }
}

TEST_CASE("derivatives") {
  CHECK(std::abs(eval_f_prime(Xi(kPi / 2))) < 1e-15);

  const auto f = [](double y) { return eval_f(Xi(y)); };
  const auto g = [](double y) { return eval_g(Xi(y)); };
  CHECK(rel_diff(eval_f_prime(Xi(kPi / 4)), caspol::test::central_difference(f, kPi / 4, 1e-6)) < 1e-8);
  CHECK(rel_diff(eval_g_prime(Xi(kPi / 3)), caspol::test::central_difference(g, kPi / 3, 1e-6)) < 1e-8);

  CHECK(eval_g_prime(Xi(kPi / 4)) == doctest::Approx(eval_g_prime(Xi(3 * kPi / 4))).epsilon(1e-14));
  CHECK(eval_f_prime(Xi(kPi / 4)) == doctest::Approx(-eval_f_prime(Xi(3 * kPi / 4))).epsilon(1e-14));

  const double x = 1e-3;
  CHECK(eval_f_prime(Xi(x)) * std::pow(x, 5) == doctest::Approx(-1.5).epsilon(1e-8));
  CHECK(eval_g_prime(Xi(x)) * std::pow(x, 5) == doctest::Approx(-1.5).epsilon(1e-8));
}

TEST_CASE("image-sum oracle for F") {
  const Xi mid(kPi / 2);
  const OracleConfig certified{0, 1e-12};
  CHECK(minimal_image_terms(mid, 1e-12) >= 100);
  CHECK(std::abs(oracle_f_image_sum(mid, certified) - 0.125) < 1e-10);
  CHECK(std::abs(oracle_f_image_sum(Xi(kPi / 4), certified) - eval_f(Xi(kPi / 4))) < 1e-10);

  // A hundred pairs leave a tail of a few 1e-9: fine for 1e-8, not for 1e-10.
  CHECK(std::abs(oracle_f_image_sum(mid, OracleConfig{100, 1e-8}) - 0.125) < 1e-8);
  CHECK(kind_of([&] { return oracle_f_image_sum(mid, OracleConfig{100, 1e-10}); }) == ErrorKind::TailBoundViolated);

  const Xi x(0.3);
  const double coarse = image_partial_sum(x, 1, false);
  const double fine = image_partial_sum(x, 10000, false);
  CHECK(fine - coarse >= 0.0);
  CHECK(fine - coarse <= image_tail_bound(x, 1));
  // The bound is an integral estimate; once the images are far away it is tight.
  const double tail = fine - image_partial_sum(x, 100, false);
  CHECK(tail <= image_tail_bound(x, 100));
  CHECK(tail > 0.9 * image_tail_bound(x, 100));
}

TEST_CASE("image-sum oracle for G") {
  const OracleConfig certified{0, 1e-12};
  CHECK(std::abs(oracle_g_image_sum(Xi(kPi / 2), certified)) < 1e-12);
  CHECK(std::abs(oracle_g_image_sum(Xi(kPi / 4), certified) - eval_g(Xi(kPi / 4))) < 1e-10);
  const double x = 0.01;
  CHECK(std::abs(oracle_g_image_sum(Xi(x), certified) - 0.375 / std::pow(x, 4) + 7.0 / 960) < 1e-6);
}

TEST_CASE("Hurwitz zeta") {
  const long double pi4 = std::pow(caspol::test::kPiL, 4);
  CHECK(static_cast<double>(hurwitz_zeta(4, 1)) == doctest::Approx(static_cast<double>(pi4 / 90)).epsilon(1e-15));
  CHECK(static_cast<double>(hurwitz_zeta(4, 0.5L)) == doctest::Approx(static_cast<double>(pi4 / 6)).epsilon(1e-15));
  CHECK(static_cast<double>(hurwitz_zeta(2, 1)) ==
        doctest::Approx(static_cast<double>(caspol::test::kPiL * caspol::test::kPiL / 6)).epsilon(1e-15));
  // zeta(s, q) = q^-s + zeta(s, q + 1)
  CHECK(static_cast<double>(hurwitz_zeta(4, 0.3L)) ==
        doctest::Approx(static_cast<double>(std::pow(0.3L, -4) + hurwitz_zeta(4, 1.3L))).epsilon(1e-15));
  CHECK(kind_of([] { return hurwitz_zeta(1, 0.5L); }) == ErrorKind::OutOfDomain);
}

TEST_CASE("Hurwitz oracles") {
  CHECK(std::abs(oracle_f_hurwitz(Xi(kPi / 2)) - 0.125) < 1e-10);
  CHECK(std::abs(oracle_f_hurwitz(Xi(1.0)) - eval_f(Xi(1.0))) < 1e-10);
  CHECK(std::abs(oracle_f_hurwitz(Xi(kPi - 0.2)) - eval_f(Xi(kPi - 0.2))) < 1e-10);
  CHECK(std::abs(oracle_g_hurwitz(Xi(kPi / 2))) < 1e-14);
  CHECK(std::abs(oracle_g_hurwitz(Xi(0.7)) - eval_g(Xi(0.7))) < 1e-10);
}

TEST_CASE("asymptotic forms") {
  CHECK(asymptotic_f(Xi(0.01)) == doctest::Approx(0.375e8 + 1.0 / 120).epsilon(1e-15));
  CHECK(asymptotic_f(Xi(kPi - 0.01)) == doctest::Approx(asymptotic_f(Xi(0.01))).epsilon(1e-12));
  CHECK(rel_diff(asymptotic_f(Xi(0.05)), eval_f(Xi(0.05))) < 1e-3);
  CHECK(asymptotic_g(Xi(0.01)) == doctest::Approx(0.375e8 - 7.0 / 960).epsilon(1e-15));
  CHECK(asymptotic_g(Xi(kPi - 0.01)) == doctest::Approx(-0.375e8 + 7.0 / 960).epsilon(1e-12));
  CHECK(rel_diff(asymptotic_f_prime(Xi(0.01)), eval_f_prime(Xi(0.01))) < 1e-6);
  CHECK(rel_diff(asymptotic_f_prime(Xi(kPi - 0.01)), eval_f_prime(Xi(kPi - 0.01))) < 1e-6);
  CHECK(rel_diff(asymptotic_g_prime(Xi(kPi - 0.01)), eval_g_prime(Xi(kPi - 0.01))) < 1e-6);
}

TEST_CASE("guard band policy") {
  const Xi close(1e-7);
  CHECK(kind_of([&] { return eval_f(close); }) == ErrorKind::TooCloseToWall);
  CHECK(kind_of([&] { return eval_g_prime(Xi(kPi - 1e-7)); }) == ErrorKind::TooCloseToWall);
  const GuardPolicy lenient{1e-6, GuardMode::asymptotic};
  CHECK(eval_f(close, lenient) == asymptotic_f(close));
  CHECK(eval_g(close, lenient) == asymptotic_g(close));
  CHECK(eval_f_prime(close, lenient) == asymptotic_f_prime(close));
  CHECK(kind_of([&] { return eval_f(Xi(0.5), GuardPolicy{0.0, GuardMode::reject}); }) == ErrorKind::OutOfDomain);
  // Outside the band the policy changes nothing.
  CHECK(eval_f(Xi(0.5), lenient) == eval_f(Xi(0.5)));
}

TEST_CASE("properties on random interior points") {
  const auto points = caspol::test::uniform_sample(1e-3, kPi - 1e-3, 500, 42);
  for (double x : points) {
    CAPTURE(x);
    const Xi xi(x);
    CHECK(eval_f(xi) > 0.0);
    CHECK(rel_diff(eval_f(xi), eval_f(Xi(kPi - x))) < 1e-12);
    if (std::abs(x - kPi / 2) > 1e-2) CHECK(rel_diff(eval_g(xi), -eval_g(Xi(kPi - x))) < 1e-12);
  }

  const auto f = [](double y) { return eval_f(Xi(y)); };
  const auto g = [](double y) { return eval_g(Xi(y)); };
  for (double x : caspol::test::uniform_sample(0.05, kPi - 0.05, 50, 7)) {
    CAPTURE(x);
    CHECK(rel_diff(eval_f_prime(Xi(x)), caspol::test::central_difference(f, x, 1e-6)) < 1e-7);
    CHECK(rel_diff(eval_g_prime(Xi(x)), caspol::test::central_difference(g, x, 1e-6)) < 1e-7);
  }
}

TEST_CASE("closed forms agree with both oracles across the gap") {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Xi xi(0.05 + (kPi - 0.1) * i / 199.0);
    worst = std::max({worst, std::abs(eval_f(xi) - oracle_f_image_sum(xi)), std::abs(eval_f(xi) - oracle_f_hurwitz(xi)),
                      std::abs(eval_g(xi) - oracle_g_image_sum(xi)), std::abs(eval_g(xi) - oracle_g_hurwitz(xi))});
  }
  CHECK(worst <= 1e-10);
}
