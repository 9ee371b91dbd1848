#include "m0n/sampling.hpp"

#include <algorithm>

namespace m0n {

std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

ProjPoint random_point(Rng& rng, std::int64_t height) {
    if (random_int(rng, 0, 2 * height) == 0) return ProjPoint::infinity();
    return ProjPoint(random_int(rng, -height, height), random_int(rng, 1, height));
}

Mobius random_mobius(Rng& rng, std::int64_t height) {
    while (true) {
        std::int64_t e[4];
        for (auto& v : e) v = random_int(rng, -height, height);
        if (e[0] * e[3] - e[1] * e[2] != 0) return Mobius(e[0], e[1], e[2], e[3]);
    }
}

Configuration random_distinct_configuration(Rng& rng, std::size_t n, std::int64_t height) {
    Configuration x;
    while (x.size() < n) {
        ProjPoint p = random_point(rng, height);
        if (std::find(x.begin(), x.end(), p) == x.end()) x.push_back(std::move(p));
    }
    return x;
}

FpMobius random_fp_mobius(Rng& rng, const PrimeField& f) {
    while (true) {
        FpMobius g;
        for (auto& v : g.m) v = static_cast<std::uint32_t>(rng() % f.p());
        if (g.det(f) != 0) return g;
    }
}

}  // namespace m0n
