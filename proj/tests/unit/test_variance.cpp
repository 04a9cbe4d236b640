#include <doctest.h>

#include <cmath>
#include <functional>

#include "planchlab/bessel.hpp"
#include "planchlab/errors.hpp"
#include "planchlab/kernels.hpp"
#include "planchlab/mc.hpp"
#include "planchlab/rng.hpp"
#include "planchlab/variance.hpp"

using namespace planch;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kHalfPi = 1.5707963267948966;
}  // namespace

TEST_CASE("pattern spec normalization") {
  const PatternSpec p({3, 5, 4});
  CHECK(p.offsets() == std::vector<std::int64_t>{0, 1, 2});
  CHECK(p.to_string() == "0,1,2");
  CHECK(PatternSpec::parse("0,1").diameter() == 1);
  CHECK_THROWS_AS(PatternSpec({}), Error);
  CHECK_THROWS_AS(PatternSpec({0, 0}), Error);
  CHECK_THROWS_AS(PatternSpec({0, 13}), Error);
}

TEST_CASE("poissonized variance single site") {
  const double theta = 50.0;
  const auto v = poissonized_variance(0, 0, theta);
  const BesselTable t(2.0 * theta, edge_cutoff(theta) + 1);
  const double diag = bessel_kernel(0, 0, theta, t);
  CHECK(v.value_trace_form == doctest::Approx(diag - diag * diag).epsilon(1e-12));
  CHECK(v.value_inside_outside ==
        doctest::Approx(v.value_trace_form).epsilon(1e-9));
}

TEST_CASE("poissonized variance two forms agree") {
  RngStream rng(RngSeed{31}, 0);
  for (double theta : {5.0, 50.0, 500.0}) {
    const auto table =
        std::make_shared<BesselTable>(2.0 * theta, edge_cutoff(theta) + 1);
    for (int rep = 0; rep < 10; ++rep) {
      const std::int64_t half = static_cast<std::int64_t>(1.5 * theta);
      const std::int64_t a = -half + static_cast<std::int64_t>(rng.below(half));
      const std::int64_t b = a + static_cast<std::int64_t>(rng.below(half));
      const auto v = poissonized_variance(a, b, theta, table);
      CHECK(std::abs(v.value_inside_outside - v.value_trace_form) <
            std::max(1e-6, 2.0 * v.truncation_bound));
      CHECK(v.value_inside_outside >= 0.0);
      CHECK(v.value_trace_form >= 0.0);
    }
  }
}

TEST_CASE("poissonized variance guards") {
  CHECK_THROWS_AS(poissonized_variance(3, 1, 5.0), Error);
  CHECK_THROWS_AS(poissonized_variance(0, 0, -2.0), Error);
  try {
    poissonized_variance(-4000, 4000, 5.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::interval_beyond_edge);
  }
}

TEST_CASE("monotone growth over nested centered intervals") {
  // Monotonicity is not a theorem; violations are reported, not asserted.
  // It does hold while the interval stays inside the spectrum - once the
  // endpoints pass +-2 theta the count freezes and the variance collapses.
  const double theta = 500.0;
  const auto table = std::make_shared<BesselTable>(2.0 * theta, edge_cutoff(theta) + 1);
  double prev = -1.0;
  for (std::int64_t L : {8, 32, 128, 512}) {
    const auto v = poissonized_variance(-L / 2, L / 2 - 1, theta, table);
    CHECK(v.value_inside_outside > prev);
    prev = v.value_inside_outside;
  }
  const auto beyond = poissonized_variance(-1024, 1023, theta, table);
  WARN_MESSAGE(beyond.value_inside_outside > prev,
               "monotonicity break at L=2048 (interval spans the full spectrum): ",
               beyond.value_inside_outside, " after ", prev);
}

TEST_CASE("predicted_log_variance") {
  CHECK(predicted_log_variance(7) ==
        doctest::Approx(std::log(7.0) / (kPi * kPi)).epsilon(1e-15));
  CHECK(predicted_log_variance(2) == doctest::Approx(0.0702305).epsilon(1e-5));
  CHECK_THROWS_AS(predicted_log_variance(1), Error);
}

TEST_CASE("theta=50 ratio against the log prediction stays O(1)") {
  const double theta = 50.0;
  const auto v = poissonized_variance(-25, 25, theta);
  const double ratio = v.value_inside_outside / predicted_log_variance(51);
  CHECK(ratio > 0.8);
  CHECK(ratio < 1.6);
}

TEST_CASE("pattern expectations under the sine process") {
  const PatternSpec single({0});
  for (double phi : {0.7, kHalfPi, 2.9})
    CHECK(pattern_expectation(single, phi) == doctest::Approx(phi / kPi).epsilon(1e-14));

  const PatternSpec pair({0, 1});
  CHECK(pattern_expectation(pair, kHalfPi) ==
        doctest::Approx(0.25 - 1.0 / (kPi * kPi)).epsilon(1e-14));

  const PatternSpec triple({0, 1, 2});
  CHECK(pattern_expectation(triple, kHalfPi) ==
        doctest::Approx(0.125 - 1.0 / (kPi * kPi)).epsilon(1e-13));
}

TEST_CASE("pattern covariances") {
  const PatternSpec single({0});
  CHECK(pattern_covariance(single, 1, kHalfPi) ==
        doctest::Approx(-1.0 / (kPi * kPi)).epsilon(1e-14));
  for (double phi : {0.9, kHalfPi}) {
    const double p = phi / kPi;
    CHECK(pattern_covariance(single, 0, phi) == doctest::Approx(p - p * p).epsilon(1e-14));
  }
  const PatternSpec pair({0, 1});
  const double e = pattern_expectation(pair, kHalfPi);
  CHECK(pattern_covariance(pair, 0, kHalfPi) == doctest::Approx(e - e * e).epsilon(1e-13));
  // symmetry in d for a single pattern
  for (std::int64_t d : {1, 2, 5, 9})
    CHECK(pattern_covariance(pair, d, kHalfPi) ==
          doctest::Approx(pattern_covariance(pair, -d, kHalfPi)).epsilon(1e-12));
}

TEST_CASE("variance density of a single site vanishes") {
  const auto d = pattern_variance_density(PatternSpec({0}), kHalfPi, 100000);
  CHECK(std::abs(d.value) < 1e-3);
  const auto d2 = pattern_variance_density(PatternSpec({0}), kPi / 4.0, 100000);
  CHECK(std::abs(d2.value) < 1e-3);
}

TEST_CASE("variance density of the adjacent pair") {
  const auto d = pattern_variance_density(PatternSpec({0, 1}), kHalfPi, 100000);
  const double expected = 1.0 / 12.0 - 3.0 / (8.0 * kPi * kPi);
  CHECK(std::abs(d.value - expected) < 1e-3);
  CHECK(d.tail_bound >= 0.0);
  CHECK_THROWS_AS(pattern_variance_density(PatternSpec({0, 1}), kHalfPi, 100), Error);
}

TEST_CASE("corner density is strictly positive") {
  const auto d =
      pattern_variance_density(PatternSpec({0}), PatternSpec({0, 1}), kHalfPi, 10000);
  CHECK(d.value > 0.03);
  CHECK(d.value < 0.10);
}

TEST_CASE("finite window variance approaches the density") {
  const PatternSpec pair({0, 1});
  const double density = pattern_variance_density(pair, kHalfPi, 1000000).value;
  const double windowed = pattern_window_variance(pair, 10000, kHalfPi) / 10000.0;
  CHECK(std::abs(windowed - density) / density < 0.05);
}

TEST_CASE("difference window variance matches its bilinear expansion") {
  const PatternSpec a({0}), b({0, 1});
  const std::int64_t L = 64;
  double direct = 0.0;
  for (std::int64_t i = 0; i < L; ++i)
    for (std::int64_t j = 0; j < L; ++j) {
      const std::int64_t d = j - i;
      direct += pattern_covariance(a, a, d, kHalfPi) - pattern_covariance(a, b, d, kHalfPi) -
                pattern_covariance(b, a, d, kHalfPi) + pattern_covariance(b, b, d, kHalfPi);
    }
  CHECK(difference_window_variance(a, b, L, kHalfPi) == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("poissonized variance vs Monte Carlo at small scale") {
  const double theta = 16.0;
  const std::int64_t n = 256;
  const auto exact = poissonized_variance(-8, 8, theta);
  const auto rep = mc_linear_statistic(n, -8, 8, PatternSpec({0}), 4000, RngSeed{12345});
  const double tol = std::max(0.15 * exact.value_inside_outside,
                              3.0 * rep.std_error_of_variance);
  CHECK(std::abs(rep.variance - exact.value_inside_outside) < tol);
}
