#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "planchlab/errors.hpp"
#include "planchlab/mc.hpp"
#include "planchlab/partition.hpp"
#include "planchlab/sampling.hpp"

using namespace planch;

TEST_CASE("rsk_shape on degenerate orders") {
  std::vector<std::int64_t> inc{1, 2, 3, 4, 5, 6};
  CHECK(rsk_shape(inc).to_string() == "6");
  std::vector<std::int64_t> dec{6, 5, 4, 3, 2, 1};
  CHECK(rsk_shape(dec).to_string() == "1,1,1,1,1,1");
  std::vector<std::int64_t> mid{3, 1, 2};
  CHECK(rsk_shape(mid).to_string() == "2,1");
  std::vector<std::int64_t> dup{1, 2, 1};
  CHECK_THROWS_AS(rsk_shape(dup), Error);
}

TEST_CASE("first row equals an independent LIS oracle") {
  RngStream rng(RngSeed{2024}, 0);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::int64_t n = static_cast<std::int64_t>(rng.below(201));
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::int64_t{1});
    for (std::int64_t i = n - 1; i > 0; --i) {
      const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    const Partition shape = rsk_shape(perm);
    const std::int64_t lis = oracle::lis_length(perm);
    const std::int64_t row1 = shape.empty() ? 0 : shape.parts()[0];
    CHECK(row1 == lis);
    CHECK(shape.size() == n);
  }
}

TEST_CASE("sample_plancherel trivial sizes") {
  RngStream rng(RngSeed{5}, 0);
  CHECK(sample_plancherel(0, rng).empty());
  CHECK(sample_plancherel(1, rng).to_string() == "1");
}

TEST_CASE("sample_plancherel matches the exact law at n=3") {
  const std::int64_t samples = 100000;
  std::int64_t hits = 0;
  for (std::int64_t k = 0; k < samples; ++k) {
    RngStream rng(RngSeed{99}, static_cast<std::uint64_t>(k));
    if (sample_plancherel(3, rng).to_string() == "2,1") ++hits;
  }
  // P(2,1) = 2/3; four-sigma band for 1e5 draws.
  const double freq = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / static_cast<double>(samples));
  CHECK(std::abs(freq - 2.0 / 3.0) < 4.0 * se);
}

TEST_CASE("mc_linear_statistic on a deterministic diagram") {
  // n=1 has a single diagram; c_0((1)) = 1.
  const auto rep = mc_linear_statistic(1, 0, 0, PatternSpec({0}), 100, RngSeed{1});
  CHECK(rep.mean == 1.0);
  CHECK(rep.variance == 0.0);
  CHECK(rep.n_samples == 100);
}

TEST_CASE("mc_linear_statistic is thread-count invariant") {
  const PatternSpec pattern({0, 1});
  const auto a = mc_linear_statistic(64, -6, 6, pattern, 500, RngSeed{7}, 1);
  const auto b = mc_linear_statistic(64, -6, 6, pattern, 500, RngSeed{7}, 3);
  const auto c = mc_linear_statistic(64, -6, 6, pattern, 500, RngSeed{7}, 8);
  CHECK(a.mean == b.mean);
  CHECK(a.mean == c.mean);
  CHECK(a.variance == b.variance);
  CHECK(a.variance == c.variance);
  CHECK(a.std_error_of_variance == c.std_error_of_variance);
  CHECK(a.skewness == c.skewness);
  CHECK(a.excess_kurtosis == c.excess_kurtosis);
}

TEST_CASE("mc guards") {
  CHECK_THROWS_AS(mc_linear_statistic(5, 3, 1, PatternSpec({0}), 10, RngSeed{0}), Error);
  CHECK_THROWS_AS(mc_linear_statistic(5, 0, 1, PatternSpec({0}), 1, RngSeed{0}), Error);
}

TEST_CASE("report_from_samples basics") {
  const std::vector<double> two{-1.0, 1.0};
  const auto r = report_from_samples(two, RngSeed{0});
  CHECK(r.mean == 0.0);
  CHECK(r.variance == 2.0);
}
