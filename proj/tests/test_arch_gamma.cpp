#include "doctest.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "eiscomb/arch_gamma.hpp"
#include "eiscomb/models.hpp"
#include "support.hpp"

using namespace eiscomb;

TEST_CASE("gamma values agree with std::tgamma") {
  for (int twice = 1; twice <= 40; ++twice) {
    const Half x = Half::from_twice(twice);
    const double expect = std::tgamma(x.to_double());
    CHECK(gamma_value(x).to_double() == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(gamma_value(Half(0)).is_pole());
  CHECK(gamma_value(Half(-3)).is_pole());
  CHECK_THROWS_WITH(gamma_value(half_of(-3)), doctest::Contains("out of supported range"));
}

TEST_CASE("PiRational normalisation keeps powers of two out of q") {
  auto x = PiRational::finite(Rational(12, 5), Half(1));
  CHECK(x.odd_part() == Rational(3, 5));
  CHECK(x.two_exponent() == Half(2));
  CHECK(x.two_pi_coefficient() == Rational(6, 5));
  auto y = PiRational::two_pi_power(Rational(1, 3), Half(2));
  CHECK((x * y) / y == x);
  CHECK((x * y).to_double() == doctest::Approx(x.to_double() * y.to_double()));
}

TEST_CASE("GL2 successive ratio is 2 pi / m") {
  for (int m = 1; m <= 12; ++m) {
    auto r = successive_ratio({Half(m), Half(-m)}, Half(0));
    CHECK(r == PiRational::two_pi_power(Rational(1, m), Half(1)));
    CHECK(r.to_double() == doctest::Approx(2 * std::numbers::pi / m));
  }
  CHECK_THROWS(successive_ratio({Half(0), Half(0)}, Half(0)));
}

TEST_CASE("GL2 rotation value is cos(theta)^{2m} e^{...}: unit modulus at theta = 0") {
  for (int m = 1; m <= 4; ++m) {
    CHECK(gl2_rotation_value(m, 0.0) == doctest::Approx(1.0));
    CHECK(gl2_minimal_ktype_value(m, 0.0, 0.3) == doctest::Approx(1.0));
  }
}

TEST_CASE("GL2 integrand is the explicit power of 1 + r^2") {
  for (int m = 1; m <= 4; ++m)
    for (double r : {0.1, 0.7, 2.5, 13.0})
      for (double th : {0.0, 1.1, 4.0}) {
        CHECK(gl2_minimal_ktype_value(m, r, th) == doctest::Approx(std::pow(1 + r * r, -(2 * m + 1) / 2.0)).epsilon(1e-12));
        CHECK(gl2_minimal_ktype_value(m, r, th, Modulus::Complex) ==
              doctest::Approx(std::pow(1 + r * r, -(2 * m + 2) / 2.0)).epsilon(1e-12));
      }
}

TEST_CASE("GL2 intertwining integral: numeric against 2 pi / (2m - 1)") {
  for (int m = 1; m <= 6; ++m) {
    const auto start = std::chrono::steady_clock::now();
    const double R = gl2_r_max_for(m, 1e-8);
    const double v = gl2_intertwining_numeric(m, R);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(std::abs(v - gl2_exact(m)) / gl2_exact(m) < 1e-6);
    CHECK(secs < 1.0);
    // tail bound accounts for the truncation
    CHECK(gl2_exact(m) - v <= 2 * std::numbers::pi * gl2_tail_bound(m, R) * (1 + 1e-6) + 1e-9);
  }
}

TEST_CASE("GL2 slow theta path agrees with the fast one") {
  QuadratureOptions slow;
  slow.fast_theta = false;
  slow.theta_steps = 5;
  for (int m = 1; m <= 3; ++m) CHECK(gl2_intertwining_numeric(m, 50.0, slow) == doctest::Approx(gl2_intertwining_numeric(m, 50.0)).epsilon(1e-9));
}

TEST_CASE("numeric over symbolic quotient is m / (2m - 1)") {
  for (int m = 1; m <= 6; ++m) {
    const double num = gl2_intertwining_numeric(m, gl2_r_max_for(m, 1e-8));
    const double sym = successive_ratio({Half(m), Half(-m)}, Half(0)).to_double();
    CHECK(num / sym == doctest::Approx(static_cast<double>(m) / (2 * m - 1)).epsilon(1e-6));
  }
}

TEST_CASE("factorization schedule for (3,2)") {
  auto s = factorization_schedule(3, 2);
  REQUIRE(s.size() == 6);
  const int expect[6][3] = {{3, 3, 1}, {4, 3, 2}, {2, 2, 1}, {3, 2, 2}, {1, 1, 1}, {2, 1, 2}};
  for (int i = 0; i < 6; ++i) {
    CHECK(s[i].reflection == expect[i][0]);
    CHECK(s[i].i == expect[i][1]);
    CHECK(s[i].j == expect[i][2]);
  }
}

TEST_CASE("schedule product equals the Rankin-Selberg ratio") {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 100; ++t) {
    auto m = t % 2 ? models::imaginary_quadratic() : models::random_layered_cm(1, 1 + t % 2, rng);
    const int n = 1 + t % 3, np = 1 + (t / 3) % 2;
    auto mu = support::random_strongly_pure(m, n, -6, 6, rng);
    auto mup = support::random_strongly_pure(m, np, -6, 6, rng);
    auto wd = widths(mu, mup, m);
    auto cs = critical_set(wd);
    if (cs.empty || cs.points().size() < 2) continue;
    const Half x = cs.lower;
    auto a = rankin_selberg_ratio(wd, x);
    auto b = schedule_ratio_product(mu, mup, m, x);
    CHECK(a == b);
    CHECK(a.pi_exponent() == Half(static_cast<std::int64_t>(wd.places.size()) * n * np));
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("non-critical m is refused with the violating index") {
  const auto m = models::imaginary_quadratic();
  Weight mu{1, {{0}, {-2}}}, mup{1, {{0}, {0}}};
  auto wd = widths(mu, mup, m);
  CHECK_THROWS_WITH(rankin_selberg_ratio(wd, Half(5)), doctest::Contains("(v=1, i=1, j=1)"));
}
