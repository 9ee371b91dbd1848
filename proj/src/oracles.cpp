#include "m0n/oracles.hpp"

#include <array>
#include <optional>

namespace m0n {

std::size_t required_rank_samples(const std::vector<int>& t) {
    // sum over I with |I| <= 3 of prod t_i, via elementary symmetric sums
    std::array<std::uint64_t, 4> e{1, 0, 0, 0};
    for (int ti : t) {
        if (ti < 0) throw Error(ErrorCode::InvalidArgument, "multidegree entries must be nonnegative");
        for (std::size_t k = 3; k >= 1; --k) e[k] += e[k - 1] * static_cast<std::uint64_t>(ti);
    }
    return static_cast<std::size_t>(e[0] + e[1] + e[2] + e[3]) + kRankMargin;
}

std::size_t hilbert_function_rank(const Configuration& x, const std::vector<int>& t, std::uint32_t p,
                                  std::size_t samples, std::uint64_t seed, Kernel kernel) {
    const std::size_t n = x.size();
    if (t.size() != n) throw Error(ErrorCode::InvalidArgument, "multidegree length differs from n");
    const std::size_t needed = required_rank_samples(t);
    if (samples < needed) {
        throw Error(ErrorCode::InsufficientSamples,
                    std::to_string(samples) + " samples, need at least " + std::to_string(needed));
    }
    const PrimeField f(p);
    std::vector<FpPoint> xs;
    for (const auto& pt : x) xs.push_back(reduce(pt, f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((xs[i].a == xs[j].a && xs[i].b == xs[j].b) != (x[i] == x[j])) {
                throw Error(ErrorCode::BadReduction, "coordinates " + std::to_string(i + 1) + " and " +
                                                         std::to_string(j + 1) + " collide mod " + std::to_string(p));
            }

    std::size_t cols = 1;
    for (int ti : t) cols *= static_cast<std::size_t>(ti + 1);
    std::vector<double> matrix;
    matrix.reserve(samples * cols);
    Rng rng(seed);
    std::vector<std::uint32_t> row, next;
    for (std::size_t r = 0; r < samples; ++r) {
        const FpMobius g = random_fp_mobius(rng, f);
        row.assign(1, 1);
        for (std::size_t i = 0; i < n; ++i) {
            const FpPoint z = g.apply(f, xs[i]);
            const auto ti = static_cast<std::size_t>(t[i]);
            // a^e b^(t-e) for e = 0..t
            std::vector<std::uint32_t> mono(ti + 1);
            for (std::size_t e = 0; e <= ti; ++e) mono[e] = f.mul(f.pow(z.a, e), f.pow(z.b, ti - e));
            next.resize(row.size() * (ti + 1));
            for (std::size_t k = 0; k < row.size(); ++k)
                for (std::size_t e = 0; e <= ti; ++e) next[k * (ti + 1) + e] = f.mul(row[k], mono[e]);
            row.swap(next);
        }
        for (auto v : row) matrix.push_back(static_cast<double>(v));
    }
    return rank_mod_p(std::move(matrix), samples, cols, p, kernel);
}

int unique_transport_count(const Configuration& x, const Configuration& y, const LabelSet& i) {
    if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "configurations differ in length");
    if (!all_distinct(y)) throw Error(ErrorCode::InvalidArgument, "y must have pairwise distinct coordinates");
    if (type_of(x).size() < 3) throw Error(ErrorCode::TooDegenerateType, "type has fewer than three parts");
    if (i.size() != 3) throw Error(ErrorCode::InvalidArgument, "transport needs a 3-subset");
    std::array<ProjPoint, 3> src, dst;
    for (std::size_t k = 0; k < 3; ++k) {
        if (i[k] < 1 || static_cast<std::size_t>(i[k]) > x.size()) throw Error(ErrorCode::IndexOutOfRange, "label outside 1..n");
        src[k] = x[static_cast<std::size_t>(i[k] - 1)];
        dst[k] = y[static_cast<std::size_t>(i[k] - 1)];
    }
    if (!all_distinct(src)) return 0;
    const Mobius g = mobius_from_triples(src, dst);
    for (std::size_t k = 0; k < 3; ++k) {
        if (g.apply(src[k]) != dst[k]) throw Error(ErrorCode::InvalidMobius, "transport missed its target");
    }
    return 1;
}

DegenerationReport degeneration_fiber_check(const Configuration& x, int i, std::size_t samples, std::uint64_t seed) {
    const int n = static_cast<int>(x.size());
    if (n < 4 || i < 1 || i > n - 1) throw Error(ErrorCode::IndexOutOfRange, "need n >= 4 and 1 <= i <= n-1");
    if (!all_distinct(x)) throw Error(ErrorCode::InvalidArgument, "x must have pairwise distinct coordinates");
    const auto ui = static_cast<std::size_t>(i - 1);
    const auto un = static_cast<std::size_t>(n - 1);
    Configuration limit = x;
    limit[un] = x[ui];
    const auto forms = orbit_ideal_forms(limit);

    Rng rng(seed);
    DegenerationReport report;
    auto record = [](SampleCount& c, bool ok) {
        ++c.samples;
        if (ok) ++c.passed;
    };
    for (std::size_t s = 0; s < samples; ++s) {
        record(report.z_prime, forms_vanish(forms, m0n::apply(random_mobius(rng), limit)));

        Configuration z(x.size(), random_point(rng));
        z[ui] = random_point(rng);
        z[un] = random_point(rng);
        record(report.z_double_prime, forms_vanish(forms, z));

        Configuration w(x.size(), random_point(rng));
        w[ui] = w[un] = random_point(rng);
        record(report.intersection, forms_vanish(forms, w));

        Configuration r;
        while (true) {
            r.clear();
            for (int k = 0; k < n; ++k) r.push_back(random_point(rng));
            bool others_equal = true;
            std::optional<ProjPoint> shared;
            for (std::size_t k = 0; k < un; ++k) {
                if (k == ui) continue;
                if (!shared) shared = r[k];
                else if (r[k] != *shared) others_equal = false;
            }
            if (r[ui] != r[un] && !others_equal) break;
        }
        record(report.off_union, !forms_vanish(forms, r));
    }
    return report;
}

bool BoundaryReport::ok() const noexcept {
    for (const auto& d : diagonal)
        if (!d.all_passed()) return false;
    return orbit.all_passed() && wrong_cross_ratio.all_passed();
}

std::uint64_t BoundaryReport::false_negatives() const noexcept {
    std::uint64_t n = orbit.samples - orbit.passed;
    for (const auto& d : diagonal) n += d.samples - d.passed;
    return n;
}

BoundaryReport boundary_membership_check(const Configuration& x, std::size_t samples, std::uint64_t seed) {
    const std::size_t n = x.size();
    if (n < 4) throw Error(ErrorCode::InvalidArgument, "boundary checks need n >= 4");
    if (!all_distinct(x)) throw Error(ErrorCode::InvalidArgument, "x must have pairwise distinct coordinates");
    const auto quads = subsets_of_size(range_labels(static_cast<int>(n)), 4);
    Rng rng(seed);
    BoundaryReport report;
    report.diagonal.resize(n);
    auto record = [](SampleCount& c, bool ok) {
        ++c.samples;
        if (ok) ++c.passed;
    };
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            Configuration z(n, random_point(rng));
            z[i] = random_point(rng);
            record(report.diagonal[i], in_orbit_closure(x, z));
        }
        record(report.orbit, in_orbit_closure(x, m0n::apply(random_mobius(rng), x)));

        Configuration z;
        bool differs = false;
        while (!differs) {
            z = random_distinct_configuration(rng, n);
            for (const auto& q : quads) {
                if (cross_ratio(project(z, to_quad(q))) != cross_ratio(project(x, to_quad(q)))) {
                    differs = true;
                    break;
                }
            }
        }
        record(report.wrong_cross_ratio, !in_orbit_closure(x, z));
    }
    return report;
}

}  // namespace m0n
