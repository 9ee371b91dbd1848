#include "m0n/kernels.hpp"

#include <cmath>
#include <utility>

#include "m0n/error.hpp"

namespace m0n {

void axpy_mod_scalar(double* row, const double* pivot, double f, std::size_t len, double p) noexcept {
    const auto pi = static_cast<std::uint64_t>(p);
    const auto fi = static_cast<std::uint64_t>(f);
    for (std::size_t i = 0; i < len; ++i) {
        const auto x = static_cast<std::uint64_t>(row[i]) + fi * static_cast<std::uint64_t>(pivot[i]);
        row[i] = static_cast<double>(x % pi);
    }
}

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

Kernel resolve_kernel(Kernel k) noexcept {
    if (k == Kernel::Auto) return avx2_available() ? Kernel::Avx2 : Kernel::Scalar;
    if (k == Kernel::Avx2 && !avx2_available()) return Kernel::Scalar;
    return k;
}

const char* kernel_name(Kernel k) noexcept {
    switch (resolve_kernel(k)) {
        case Kernel::Avx2: return "avx2";
        default: return "scalar";
    }
}

void axpy_mod(Kernel k, double* row, const double* pivot, double f, std::size_t len, double p) noexcept {
    if (resolve_kernel(k) == Kernel::Avx2) axpy_mod_avx2(row, pivot, f, len, p);
    else axpy_mod_scalar(row, pivot, f, len, p);
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank_mod_p(std::vector<double> m, std::size_t rows, std::size_t cols, std::uint32_t p, Kernel k) {
    if (m.size() != rows * cols) throw Error(ErrorCode::InvalidArgument, "matrix size does not match its shape");
    if (p >= (1u << 20)) throw Error(ErrorCode::InvalidArgument, "modulus too large for exact double arithmetic");
    const Kernel kernel = resolve_kernel(k);
    const double pd = p;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
        }
        double* prow = &m[rank * cols];
        const std::uint64_t inv = inverse_mod(static_cast<std::uint64_t>(prow[c]), p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            double* row = &m[r * cols];
            if (row[c] == 0) continue;
            // row += (p - row[c] / pivot[c]) * pivot
            const std::uint64_t ratio = static_cast<std::uint64_t>(row[c]) * inv % p;
            const double f = static_cast<double>((p - ratio) % p);
            axpy_mod(kernel, row + c, prow + c, f, cols - c, pd);
        }
        ++rank;
    }
    return rank;
}

}  // namespace m0n
