#pragma once

// Brute-force verifiers that share no code path with the formulas they
// check: finite-field ranks of evaluation matrices, explicit Mobius
// transport, and exact point sampling against the orbit-closure forms.

#include <cstdint>
#include <string>
#include <vector>

#include "m0n/configurations.hpp"
#include "m0n/kernels.hpp"
#include "m0n/sampling.hpp"

namespace m0n {

/// Extra rows drawn beyond the expected rank.
inline constexpr std::size_t kRankMargin = 10;

/// Rows needed for multidegree t on n points: the generic Hilbert function
/// value sum_{|I| <= 3} prod t_i, plus kRankMargin.
std::size_t required_rank_samples(const std::vector<int>& t);

/// Rank over F_p of the matrix with one row per orbit sample g_j x (random
/// g_j in PGL_2(F_p)) and one column per monomial of multidegree t. Throws
/// BadReduction if two coordinates of x that differ over Q collide mod p,
/// and InsufficientSamples if samples < required_rank_samples(t).
std::size_t hilbert_function_rank(const Configuration& x, const std::vector<int>& t, std::uint32_t p,
                                  std::size_t samples, std::uint64_t seed, Kernel kernel = Kernel::Auto);

/// 1 if some g maps x_I onto y_I (then gx lies in the fiber through y over
/// the coordinates I), 0 if x_I has a repeated point. `i` is a 3-subset of
/// 1..n.
int unique_transport_count(const Configuration& x, const Configuration& y, const LabelSet& i);

struct SampleCount {
    std::uint64_t samples = 0;
    std::uint64_t passed = 0;

    bool all_passed() const noexcept { return samples == passed; }
};

struct DegenerationReport {
    SampleCount z_prime;           // g * (x', x_i) satisfies every form
    SampleCount z_double_prime;    // free i, n and a shared value elsewhere
    SampleCount intersection;      // x_i = x_n, shared value elsewhere
    SampleCount off_union;         // random points off both components violate some form

    bool ok() const noexcept {
        return z_prime.all_passed() && z_double_prime.all_passed() && intersection.all_passed() &&
               off_union.all_passed();
    }
};

/// Samples the special fiber of the family moving x_n onto x_i. The forms
/// are those of the limit configuration (x_1, ..., x_{n-1}, x_i).
DegenerationReport degeneration_fiber_check(const Configuration& x, int i, std::size_t samples, std::uint64_t seed);

struct BoundaryReport {
    std::vector<SampleCount> diagonal;  // per i: coordinate i free, the rest equal
    SampleCount orbit;                  // g x
    SampleCount wrong_cross_ratio;      // distinct points not in the orbit: rejected

    bool ok() const noexcept;
    std::uint64_t false_negatives() const noexcept;
    std::uint64_t false_positives() const noexcept { return wrong_cross_ratio.samples - wrong_cross_ratio.passed; }
};

BoundaryReport boundary_membership_check(const Configuration& x, std::size_t samples, std::uint64_t seed);

}  // namespace m0n
