#pragma once

#include <cstdint>
#include <span>

#include "planchlab/partition.hpp"
#include "planchlab/rng.hpp"

namespace planch {

/// Shape of Schensted row insertion of a sequence of pairwise distinct values
/// (Errc::duplicate_entry otherwise). The first row length equals the longest
/// increasing subsequence.
Partition rsk_shape(std::span<const std::int64_t> sequence);

/// Plancherel-random diagram with n cells: RSK shape of a uniformly random
/// permutation drawn from the stream.
Partition sample_plancherel(std::int64_t n, RngStream& rng);

/// Single-sample convenience wrapper (stream index 0 of the seed).
Partition sample_plancherel(std::int64_t n, RngSeed seed);

}  // namespace planch
