#pragma once

// Row operations modulo a prime p < 2^20 on rows of doubles holding
// canonical residues. Every product and sum stays below 2^53, so the double
// arithmetic is exact; the AVX2 variant returns bit-identical rows.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace m0n {

enum class Kernel { Auto, Scalar, Avx2 };

/// row[i] = (row[i] + f * pivot[i]) mod p, with 0 <= f < p.
void axpy_mod_scalar(double* row, const double* pivot, double f, std::size_t len, double p) noexcept;
void axpy_mod_avx2(double* row, const double* pivot, double f, std::size_t len, double p) noexcept;

bool avx2_available() noexcept;
/// The kernel Auto resolves to on this machine.
Kernel resolve_kernel(Kernel k) noexcept;
const char* kernel_name(Kernel k) noexcept;

void axpy_mod(Kernel k, double* row, const double* pivot, double f, std::size_t len, double p) noexcept;

/// Rank over F_p of a row-major rows x cols matrix of residues. The matrix
/// is consumed.
std::size_t rank_mod_p(std::vector<double> matrix, std::size_t rows, std::size_t cols, std::uint32_t p,
                       Kernel k = Kernel::Auto);

}  // namespace m0n
