// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "thermoline/kinematics.hpp"
#include "thermoline/random_stream.hpp"

using namespace thermoline;

namespace {

Vec3 random_direction(RandomStream& rs, double magnitude) {
  const double mu = 2.0 * rs.next_double() - 1.0;
  const double ph = 2.0 * 3.14159265358979323846 * rs.next_double();
  const double s = std::sqrt(1.0 - mu * mu);
  return {magnitude * s * std::cos(ph), magnitude * s * std::sin(ph),
          magnitude * mu};
}

}  // namespace

TEST_CASE("doppler factor") {
  CHECK(doppler_factor(EmissionState(0.0, 0.3)) == 1.0);
  CHECK(doppler_factor(EmissionState(0.6, 1.0)) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(doppler_factor(EmissionState(0.6, 0.0)) ==
        doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("intensity boost factors") {
  CHECK(energy_rate_boost(EmissionState(0.0, 0.5)) == 1.0);
  CHECK(energy_rate_boost(EmissionState(0.6, 1.0)) ==
        doctest::Approx(6.4).epsilon(1e-14));
  CHECK(energy_rate_boost(EmissionState(0.6, -1.0)) ==
        doctest::Approx(0.1).epsilon(1e-14));

  CHECK(power_boost(EmissionState(0.0, -0.2)) == 1.0);
  CHECK(power_boost(EmissionState(0.6, 1.0)) ==
        doctest::Approx(16.0).epsilon(1e-14));
  CHECK(power_boost(EmissionState(0.6, -1.0)) ==
        doctest::Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("power boost equals energy-rate boost over the retardation factor") {
  RandomStream rs(3, 0);
  for (int i = 0; i < 500; ++i) {
    const double b = 0.999 * rs.next_double();
    const double c = 2.0 * rs.next_double() - 1.0;
    const EmissionState s(b, c);
    CHECK(power_boost(s) ==
          doctest::Approx(energy_rate_boost(s) / (1.0 - b * c))
              .epsilon(1e-13));
  }
}

TEST_CASE("aberration") {
  CHECK(aberration(0.37, 0.0) == 0.37);
  CHECK(aberration(1.0, 0.0) == 1.0);
  CHECK(aberration(1.0, 0.9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(aberration(0.0, 0.6) == doctest::Approx(-0.6).epsilon(1e-15));
  RandomStream rs(4, 0);
  for (int i = 0; i < 500; ++i) {
    const double c = 2.0 * rs.next_double() - 1.0;
    const double b = rs.next_double();
    const double cp = aberration(c, b);
    CHECK(cp >= -1.0);
    CHECK(cp <= 1.0);
  }
}

TEST_CASE("four-acceleration components") {
  SUBCASE("inertial motion gives zero") {
    const FourAcceleration a = four_acceleration({{0.3, -0.2, 0.1}, {}});
    CHECK(a.time_component == 0.0);
    CHECK(norm(a.space_component) == 0.0);
  }

  SUBCASE("rest-frame limit") {
    const FourAcceleration a = four_acceleration({{}, {0.7, 0.0, 0.0}});
    CHECK(a.time_component == 0.0);
    CHECK(a.space_component.x == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(a.space_component.y == 0.0);
  }

  SUBCASE("orthogonal to the four-velocity for random states") {
    RandomStream rs(5, 0);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 beta = random_direction(rs, 0.99 * rs.next_double());
      const Vec3 beta_dot = random_direction(rs, 2.0 * rs.next_double());
      const FourAcceleration a = four_acceleration({beta, beta_dot});
      const double scale =
          std::abs(a.time_component) + norm(a.space_component) + 1e-30;
      CHECK(std::abs(acceleration_velocity_contraction(a, beta)) / scale <=
            1e-12);
    }
  }
}

TEST_CASE("coordinate acceleration from the proper acceleration") {
  SUBCASE("at rest: beta_dot = a'") {
    const Vec3 r = coordinate_acceleration({0.2, -0.4, 1.0}, {});
    CHECK(r.x == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(r.y == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(r.z == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("longitudinal case reduces to a'/gamma^3") {
    const double b = 0.8;
    const double g = 1.0 / std::sqrt(1.0 - b * b);
    const Vec3 r = coordinate_acceleration({2.0, 0.0, 0.0}, {b, 0.0, 0.0});
    CHECK(r.x == doctest::Approx(2.0 / (g * g * g)).epsilon(1e-14));
    CHECK(r.y == 0.0);
  }

  SUBCASE("round-trip through the four-acceleration and back") {
    RandomStream rs(6, 0);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 beta = random_direction(rs, 0.99 * rs.next_double());
      const Vec3 rest = random_direction(rs, 0.1 + 3.0 * rs.next_double());
      const Vec3 beta_dot = coordinate_acceleration(rest, beta);
      const FourAcceleration lab = four_acceleration({beta, beta_dot});
      const FourAcceleration back = boost_to_rest(lab, beta);
      const double err = norm(back.space_component - rest) +
                         std::abs(back.time_component);
      CHECK(err / norm(rest) <= 1e-10);
    }
  }
}

TEST_CASE("doppler support band") {
  SUBCASE("at rest the band collapses to the proper frequency") {
    const DopplerSupport s = doppler_support(0.0);
    CHECK(s.x_min == 1.0);
    CHECK(s.x_max == 1.0);
  }

  SUBCASE("beta = 0.6 reaches one octave each way") {
    const DopplerSupport s = doppler_support(0.6);
    CHECK(s.x_min == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.x_max == doctest::Approx(2.0).epsilon(1e-15));
  }

  SUBCASE("band edges multiply to one and bound the doppler factor") {
    RandomStream rs(8, 0);
    for (int i = 0; i < 500; ++i) {
      const double b = rs.next_double();
      const DopplerSupport s = doppler_support(b);
      CHECK(s.x_min * s.x_max == doctest::Approx(1.0).epsilon(1e-14));
      const double c = 2.0 * rs.next_double() - 1.0;
      const double x = doppler_factor(EmissionState(b, c));
      CHECK(x >= s.x_min * (1.0 - 1e-14));
      CHECK(x <= s.x_max * (1.0 + 1e-14));
    }
  }
}

TEST_CASE("minimal speed for a frequency ratio") {
  CHECK(beta_min(2.0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(beta_min(1.0) == 0.0);
  RandomStream rs(9, 0);
  for (int i = 0; i < 500; ++i) {
    const double x = 0.02 * std::pow(2500.0, rs.next_double());
    CHECK(beta_min(x) == doctest::Approx(beta_min(1.0 / x)).epsilon(1e-12));
    // the support of the minimal speed just reaches x
    const DopplerSupport s = doppler_support(beta_min(x));
    const double edge = x >= 1.0 ? s.x_max : s.x_min;
    CHECK(edge == doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(EmissionState(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(EmissionState(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(EmissionState(0.5, 1.5), std::domain_error);
  CHECK_THROWS_AS(doppler_support(1.0), std::domain_error);
  CHECK_THROWS_AS(beta_min(0.0), std::domain_error);
  CHECK_THROWS_AS(four_acceleration({{1.0, 0.0, 0.0}, {}}), std::domain_error);
}

TEST_CASE("emission state derives a consistent gamma") {
  RandomStream rs(10, 0);
  for (int i = 0; i < 500; ++i) {
    const double b = rs.next_double();
    const EmissionState s(b, 0.0);
    CHECK(s.gamma >= 1.0);
    CHECK(s.gamma * std::sqrt((1.0 - b) * (1.0 + b)) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}
