#include "m0n/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace m0n {

namespace {

Integer gcd_abs(const Integer& x, const Integer& y) {
    return boost::multiprecision::gcd(abs(x), abs(y));
}

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
        }
    }
    Integer v(std::string(text.substr(start)));
    return text[0] == '-' ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Columns are the images of [1:0] and [0:1]; sends 0, 1, inf to p0, p1, p2.
std::array<Integer, 4> frame_matrix(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2) {
    // p1 = mu * p2 + lambda * p0, solved by Cramer up to the common factor.
    Integer mu = bracket(p1, p0);
    Integer lambda = bracket(p2, p1);
    return {mu * p2.a(), lambda * p0.a(), mu * p2.b(), lambda * p0.b()};
}

}  // namespace

ProjPoint::ProjPoint(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 && b_ == 0) throw Error(ErrorCode::InvalidPoint, "[0:0] is not a point of P^1");
    if (b_ == 0) {
        a_ = 1;
        return;
    }
    Integer g = gcd_abs(a_, b_);
    if (g != 1) {
        a_ /= g;
        b_ /= g;
    }
    if (b_ < 0) {
        a_ = -a_;
        b_ = -b_;
    }
}

ProjPoint ProjPoint::from_rat(const Rat& r) {
    return ProjPoint(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

ProjPoint ProjPoint::parse(std::string_view text) {
    text = trim(text);
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return ProjPoint(parse_integer(text), 1);
    Integer num = parse_integer(trim(text.substr(0, slash)));
    Integer den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'; use 'inf'");
    return ProjPoint(std::move(num), std::move(den));
}

Rat ProjPoint::to_rat() const {
    if (is_infinity()) throw Error(ErrorCode::InvalidPoint, "infinity has no rational value");
    return Rat(a_, b_);
}

std::string ProjPoint::to_string() const {
    if (is_infinity()) return "inf";
    if (b_ == 1) return a_.str();
    return a_.str() + "/" + b_.str();
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }

Integer bracket(const ProjPoint& p, const ProjPoint& q) { return p.a() * q.b() - q.a() * p.b(); }

Mobius::Mobius(Integer m00, Integer m01, Integer m10, Integer m11)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
    if (det() == 0) throw Error(ErrorCode::InvalidMobius, "singular matrix");
    Integer g = 0;
    for (const auto& e : m_) g = gcd_abs(g, e);
    for (auto& e : m_) e /= g;
    for (int idx : {3, 2, 1, 0}) {
        if (m_[static_cast<std::size_t>(idx)] == 0) continue;
        if (m_[static_cast<std::size_t>(idx)] < 0) {
            for (auto& e : m_) e = -e;
        }
        break;
    }
}

Integer Mobius::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

ProjPoint Mobius::apply(const ProjPoint& p) const {
    return ProjPoint(m_[0] * p.a() + m_[1] * p.b(), m_[2] * p.a() + m_[3] * p.b());
}

Mobius Mobius::compose(const Mobius& in) const {
    return Mobius(m_[0] * in.m_[0] + m_[1] * in.m_[2], m_[0] * in.m_[1] + m_[1] * in.m_[3],
                  m_[2] * in.m_[0] + m_[3] * in.m_[2], m_[2] * in.m_[1] + m_[3] * in.m_[3]);
}

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

std::string Mobius::to_string() const {
    std::ostringstream os;
    os << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
    return os.str();
}

ProjPoint mobius_apply(const Mobius& g, const ProjPoint& p) { return g.apply(p); }

Mobius mobius_from_triples(std::span<const ProjPoint, 3> src, std::span<const ProjPoint, 3> dst) {
    if (!all_distinct(src)) throw Error(ErrorCode::CoincidentPoints, "source triple has a repeated point");
    if (!all_distinct(dst)) throw Error(ErrorCode::CoincidentPoints, "target triple has a repeated point");
    auto s = frame_matrix(src[0], src[1], src[2]);
    auto d = frame_matrix(dst[0], dst[1], dst[2]);
    // d * adj(s)
    Mobius d_m(d[0], d[1], d[2], d[3]);
    Mobius s_adj(s[3], -s[1], -s[2], s[0]);
    return d_m.compose(s_adj);
}

Mobius mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
    return mobius_from_triples(std::span<const ProjPoint, 3>(src), std::span<const ProjPoint, 3>(dst));
}

Configuration apply(const Mobius& g, const Configuration& x) {
    Configuration out;
    out.reserve(x.size());
    for (const auto& p : x) out.push_back(g.apply(p));
    return out;
}

bool all_distinct(std::span<const ProjPoint> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) return false;
    return true;
}

Configuration parse_configuration(std::string_view csv) {
    Configuration out;
    while (true) {
        auto comma = csv.find(',');
        out.push_back(ProjPoint::parse(csv.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
    }
    return out;
}

std::string to_string(const Configuration& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += x[i].to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    }
}

std::uint32_t PrimeField::reduce(const Integer& v) const {
    Integer r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t PrimeField::pow(std::uint32_t x, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t x) const {
    if (x % p_ == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
    return pow(x, p_ - 2);
}

FpPoint make_fp_point(const PrimeField& f, std::uint32_t a, std::uint32_t b) {
    a %= f.p();
    b %= f.p();
    if (b == 0) {
        if (a == 0) throw Error(ErrorCode::BadReduction, "point reduces to [0:0]");
        return {1, 0};
    }
    return {f.mul(a, f.inv(b)), 1};
}

FpPoint reduce(const ProjPoint& p, const PrimeField& f) {
    return make_fp_point(f, f.reduce(p.a()), f.reduce(p.b()));
}

FpPoint FpMobius::apply(const PrimeField& f, const FpPoint& p) const {
    return make_fp_point(f, f.add(f.mul(m[0], p.a), f.mul(m[1], p.b)), f.add(f.mul(m[2], p.a), f.mul(m[3], p.b)));
}

std::uint32_t FpMobius::det(const PrimeField& f) const { return f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2])); }

}  // namespace m0n
