#include "planchlab/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "planchlab/errors.hpp"

namespace planch {

namespace {

// Row-insertion that keeps only the shape: each row is strictly increasing;
// an incoming value replaces the first larger entry and bumps it down a row.
Partition rsk_shape_unchecked(std::span<const std::int64_t> sequence) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::int64_t value : sequence) {
    std::int64_t carry = value;
    bool placed = false;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        placed = true;
        break;
      }
      std::swap(carry, *it);
    }
    if (!placed) rows.push_back({carry});
  }
  std::vector<std::int64_t> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<std::int64_t>(row.size()));
  return Partition(std::move(parts));
}

}  // namespace

Partition rsk_shape(std::span<const std::int64_t> sequence) {
  std::vector<std::int64_t> sorted(sequence.begin(), sequence.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    raise(Errc::duplicate_entry, "rsk_shape requires pairwise distinct entries");
  return rsk_shape_unchecked(sequence);
}

Partition sample_plancherel(std::int64_t n, RngStream& rng) {
  if (n < 0) raise(Errc::invalid_argument, "n must be nonnegative");
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), std::int64_t{1});
  for (std::int64_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return rsk_shape_unchecked(perm);
}

Partition sample_plancherel(std::int64_t n, RngSeed seed) {
  RngStream rng(seed, 0);
  return sample_plancherel(n, rng);
}

}  // namespace planch
