#pragma once

// Exact arithmetic on the projective line over Q and over prime fields.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "m0n/error.hpp"

namespace m0n {

using Integer = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A point [a : b] of P^1(Q), kept primitive with b > 0, or [1 : 0] for
/// infinity. Two points are equal iff their stored coordinates are equal.
class ProjPoint {
public:
    /// The point 0 = [0 : 1].
    ProjPoint() : a_(0), b_(1) {}
    ProjPoint(Integer a, Integer b);
    ProjPoint(long long value) : a_(value), b_(1) {}  // NOLINT: integers embed in P^1

    static ProjPoint infinity() { return ProjPoint(1, 0); }
    static ProjPoint from_rat(const Rat& r);
    /// Accepts "inf", "a", or "a/b".
    static ProjPoint parse(std::string_view text);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    bool is_infinity() const noexcept { return b_ == 0; }
    Rat to_rat() const;
    std::string to_string() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend bool operator<(const ProjPoint& p, const ProjPoint& q) {
        return p.a_ < q.a_ || (p.a_ == q.a_ && p.b_ < q.b_);
    }

private:
    Integer a_;
    Integer b_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

/// [pq] = a_p b_q - a_q b_p. Zero iff p == q.
Integer bracket(const ProjPoint& p, const ProjPoint& q);

/// An element of PGL_2(Q) acting by z -> (m00 z + m01) / (m10 z + m11).
/// Entries are primitive and the first nonzero of (m11, m10, m01, m00) is
/// positive, so equality in PGL_2 is structural.
class Mobius {
public:
    Mobius() : m_{1, 0, 0, 1} {}
    Mobius(Integer m00, Integer m01, Integer m10, Integer m11);

    static Mobius identity() { return {}; }

    const Integer& at(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
    Integer det() const;

    ProjPoint apply(const ProjPoint& p) const;
    /// (*this) o inner.
    Mobius compose(const Mobius& inner) const;
    Mobius inverse() const;

    std::string to_string() const;

    friend bool operator==(const Mobius&, const Mobius&) = default;

private:
    std::array<Integer, 4> m_;
};

ProjPoint mobius_apply(const Mobius& g, const ProjPoint& p);

/// The unique g with g(src[i]) = dst[i]; throws CoincidentPoints if either
/// triple repeats a point.
Mobius mobius_from_triples(std::span<const ProjPoint, 3> src, std::span<const ProjPoint, 3> dst);
Mobius mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst);

/// Points of X^n; entry i is the coordinate of marking i + 1 unless a caller
/// supplies its own label list.
using Configuration = std::vector<ProjPoint>;

Configuration apply(const Mobius& g, const Configuration& x);
bool all_distinct(std::span<const ProjPoint> x);

/// Comma separated points, e.g. "0,1,inf,2/3".
Configuration parse_configuration(std::string_view csv);
std::string to_string(const Configuration& x);

// ---------------------------------------------------------------------------
// Prime fields

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t reduce(const Integer& v) const;
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
        std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept { return x >= y ? x - y : x + p_ - y; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p_);
    }
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept;
    std::uint32_t inv(std::uint32_t x) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// A point of P^1(F_p), normalized as [a : 1] or [1 : 0].
struct FpPoint {
    std::uint32_t a = 0;
    std::uint32_t b = 1;

    friend bool operator==(const FpPoint&, const FpPoint&) = default;
};

FpPoint make_fp_point(const PrimeField& f, std::uint32_t a, std::uint32_t b);
/// Throws BadReduction when both coordinates vanish mod p.
FpPoint reduce(const ProjPoint& p, const PrimeField& f);

struct FpMobius {
    std::array<std::uint32_t, 4> m{1, 0, 0, 1};

    FpPoint apply(const PrimeField& f, const FpPoint& p) const;
    std::uint32_t det(const PrimeField& f) const;
};

}  // namespace m0n
