// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_oracles.hpp"
#include "thermoline/histogram.hpp"
#include "thermoline/juttner.hpp"
#include "thermoline/quadrature.hpp"
#include "thermoline/random_stream.hpp"

using namespace thermoline;

TEST_CASE("quadrature is exact on polynomials") {
  const auto r = integrate_adaptive([](double x) { return x; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.error_estimate <= 1e-10 * 0.5);

  const auto cubic = integrate_adaptive(
      [](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0, 2.0);
  CHECK(cubic.value == doctest::Approx(3.0 / 4.0).epsilon(1e-13));
}

TEST_CASE("mapped infinite interval reproduces K_0(1)") {
  const auto r = integrate_to_infinity(
      [](double t) { return std::exp(-std::cosh(t)); }, 0.0);
  CHECK(r.value == doctest::Approx(0.42102443824070834).epsilon(1e-11));
}

TEST_CASE("Juttner density integrates to one") {
  for (const double alpha : {0.5, 5.0, 50.0}) {
    QuadratureOptions opts;
    opts.rel_tol = 1e-12;
    const auto r = integrate_adaptive(
        [alpha](double b) { return juttner_pdf(b, alpha); }, 0.0, 1.0, opts);
    CHECK_MESSAGE(std::abs(r.value - 1.0) <= 1e-10, "alpha=", alpha,
                  " integral=", r.value);
  }
}

TEST_CASE("quadrature is linear in the integrand") {
  RandomStream rs(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c = 20.0 * rs.next_double() - 10.0;
    auto f = [](double x) { return std::exp(-x * x) + 0.5 * x; };
    const double base = integrate_adaptive(f, 0.0, 3.0).value;
    const double scaled =
        integrate_adaptive([&](double x) { return c * f(x); }, 0.0, 3.0).value;
    CHECK(scaled == doctest::Approx(c * base).epsilon(1e-9));
  }
}

TEST_CASE("convergence failure carries the best estimate") {
  QuadratureOptions opts;
  opts.rel_tol = 1e-14;
  opts.max_evaluations = 200;  // far too few for this oscillatory integrand
  try {
    integrate_adaptive([](double x) { return std::sin(50.0 / (x + 0.01)); },
                       0.0, 1.0, opts);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate.value));
    CHECK(e.best_estimate.evaluations <= 200);
    CHECK(e.best_estimate.error_estimate > 0.0);
  }
}

TEST_CASE("integrable endpoint boundary layer converges") {
  // beta-marginal style integrand: vanishes like exp(-alpha gamma) against
  // the (1-beta^2)^{-3/2} growth at the upper endpoint
  const double alpha = 5.0;
  auto f = [alpha](double b) -> double {
    const double om = (1.0 - b) * (1.0 + b);
    const double g = 1.0 / std::sqrt(om);
    const double lf = std::log(b) + 3.0 * std::log(g) - alpha * (g - 1.0);
    return lf < -745.0 ? 0.0 : std::exp(lf);
  };
  const auto r = integrate_adaptive(f, 0.0, 1.0, {1e-11, 1e-300, 2000000});
  // exact value: e^{alpha(1 - u0)}/alpha with u0 = 1 at x = 1
  CHECK(r.value == doctest::Approx(1.0 / alpha).epsilon(1e-10));
}

TEST_CASE("random streams are reproducible and splittable") {
  RandomStream a(42, 0);
  RandomStream b(42, 0);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  RandomStream s0(42, 0);
  RandomStream s1(42, 1);
  CHECK(s0.next_u64() != s1.next_u64());

  RandomStream other_seed(43, 0);
  RandomStream base(42, 0);
  CHECK(base.next_u64() != other_seed.next_u64());
}

TEST_CASE("uniform draws have the right mean and range") {
  RandomStream rs(7, 3);
  const int n = 1000000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rs.next_double();
    sum += u;
    if (i < 1000) {
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
  }
  const double mean = sum / n;
  const double sigma = 1.0 / std::sqrt(12.0 * n);
  CHECK(std::abs(mean - 0.5) <= 5.0 * sigma);
}

TEST_CASE("normal and exponential draws match their moments") {
  RandomStream rs(19, 0);
  const int n = 200000;
  double sn = 0.0, sn2 = 0.0, se = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rs.next_normal();
    sn += z;
    sn2 += z * z;
    se += rs.next_exponential();
  }
  CHECK(std::abs(sn / n) <= 5.0 / std::sqrt(static_cast<double>(n)));
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(se / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("histogram bin conventions") {
  WeightedHistogram h = WeightedHistogram::uniform(0.0, 1.0, 4);

  SUBCASE("empty histogram is all zeros") {
    for (const double c : h.weighted_counts()) CHECK(c == 0.0);
    CHECK(h.total_weight() == 0.0);
  }

  SUBCASE("interior edge goes to the right-hand bin") {
    h.add(0.25, 1.0);
    CHECK(h.weighted_counts()[1] == 1.0);
    CHECK(h.weighted_counts()[0] == 0.0);
  }

  SUBCASE("upper edge lands in the final closed bin") {
    h.add(1.0, 2.0);
    CHECK(h.weighted_counts()[3] == 2.0);
    CHECK(h.out_of_range_weight() == 0.0);
  }

  SUBCASE("out-of-range weight is tracked, not dropped") {
    h.add(-0.5, 1.0);
    h.add(1.5, 3.0);
    CHECK(h.out_of_range_weight() == 4.0);
    CHECK(h.total_weight() == 4.0);
  }

  SUBCASE("NaN rejected") {
    CHECK_THROWS_AS(h.add(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(h.add(0.5, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(h.add(0.5, -1.0), std::invalid_argument);
  }
}

TEST_CASE("histogram mass conservation and uniform fill statistics") {
  WeightedHistogram h = WeightedHistogram::uniform(0.0, 1.0, 10);
  RandomStream rs(5, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) h.add(rs.next_double(), 1.0);

  double in_range = 0.0;
  for (const double c : h.weighted_counts()) {
    in_range += c;
    // binomial: mean 1000, sd ~ 30; 5 sigma band
    CHECK(std::abs(c - 1000.0) <= 5.0 * std::sqrt(1000.0 * 0.9));
  }
  CHECK(h.total_weight() ==
        doctest::Approx(in_range + h.out_of_range_weight()).epsilon(1e-12));
}

TEST_CASE("histogram merge equals sequential accumulation") {
  WeightedHistogram whole = WeightedHistogram::uniform(0.0, 2.0, 8);
  WeightedHistogram part1 = whole;
  WeightedHistogram part2 = whole;
  RandomStream rs(17, 0);
  for (int i = 0; i < 500; ++i) {
    const double v = 2.2 * rs.next_double() - 0.1;
    const double w = rs.next_double();
    whole.add(v, w);
    (i % 2 == 0 ? part1 : part2).add(v, w);
  }
  part1.merge(part2);
  CHECK(part1.total_weight() ==
        doctest::Approx(whole.total_weight()).epsilon(1e-12));
  for (std::size_t i = 0; i < whole.bins(); ++i) {
    CHECK(part1.weighted_counts()[i] ==
          doctest::Approx(whole.weighted_counts()[i]).epsilon(1e-12));
  }
  WeightedHistogram incompatible = WeightedHistogram::uniform(0.0, 1.0, 8);
  CHECK_THROWS_AS(part1.merge(incompatible), std::invalid_argument);
}
