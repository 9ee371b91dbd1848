#pragma once

// Seeded random generators for points, group elements and configurations.
// Draws use `rng() % bound` so results are identical across standard
// libraries for a fixed seed.

#include <cstdint>
#include <random>

#include "m0n/geometry.hpp"

namespace m0n {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// A point a/b with |a| <= height, 1 <= b <= height, or infinity with
/// probability about 1 / (2 * height).
ProjPoint random_point(Rng& rng, std::int64_t height = 12);

/// Integer matrix with entries in [-height, height] and nonzero determinant.
Mobius random_mobius(Rng& rng, std::int64_t height = 9);

/// n pairwise distinct random points.
Configuration random_distinct_configuration(Rng& rng, std::size_t n, std::int64_t height = 12);

FpMobius random_fp_mobius(Rng& rng, const PrimeField& f);

}  // namespace m0n
