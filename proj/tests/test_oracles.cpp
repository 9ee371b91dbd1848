#include <doctest.h>

#include "m0n/chow.hpp"
#include "m0n/hilbert.hpp"
#include "m0n/oracles.hpp"
#include "support.hpp"

using namespace m0n;

namespace {

std::size_t rank_of(const Configuration& x, const std::vector<int>& t, std::uint32_t p = kDefaultPrime, std::uint64_t seed = 1) {
    return hilbert_function_rank(x, t, p, required_rank_samples(t), seed);
}

Integer value_at(const MultilinearPoly& q, const std::vector<int>& t) {
    return evaluate(q, std::vector<Integer>(t.begin(), t.end()));
}

// A configuration of type p: the parts take the values of y in order.
Configuration of_type(const SetPartition& p, const Configuration& y) {
    const LabelSet ground = p.ground();
    Configuration x(ground.size());
    for (Label l : ground) x[static_cast<std::size_t>(l - 1)] = y[p.part_of(l)];
    return x;
}

}  // namespace

TEST_CASE("required_rank_samples") {
    CHECK(required_rank_samples({1, 1, 1, 1}) == 15 + kRankMargin);
    CHECK(required_rank_samples({2, 2, 2}) == 27 + kRankMargin);
    CHECK(required_rank_samples({2, 1, 1, 1, 1}) == static_cast<std::size_t>(evaluate(generic_orbit_hilbert(5), std::vector<Integer>{2, 1, 1, 1, 1})) + kRankMargin);
    CHECK_ERROR(required_rank_samples({1, -1, 1}), ErrorCode::InvalidArgument);
}

TEST_CASE("hilbert_function_rank examples") {
    CHECK(rank_of(parse_configuration("0,1,inf,2"), {1, 1, 1, 1}) == 15);
    CHECK(rank_of(parse_configuration("0,1,inf,2,3"), {1, 1, 1, 1, 1}) == 26);
    CHECK(rank_of(parse_configuration("0,1,inf"), {2, 2, 2}) == 27);
    CHECK(rank_of(parse_configuration("5,-1/2,7/3"), {2, 2, 2}) == 27);
}

TEST_CASE("hilbert_function_rank guards") {
    const auto x = parse_configuration("0,1,inf,2");
    CHECK_ERROR(hilbert_function_rank(x, {1, 1, 1, 1}, kDefaultPrime, 24, 1), ErrorCode::InsufficientSamples);
    CHECK_ERROR(rank_of(parse_configuration("0,1,inf,32003"), {1, 1, 1, 1}), ErrorCode::BadReduction);
    CHECK_NOTHROW(rank_of(parse_configuration("0,1,inf,32003"), {1, 1, 1, 1}, 65537));
    CHECK_ERROR(rank_of(x, {1, 1, 1}), ErrorCode::InvalidArgument);
}

TEST_CASE("hilbert_function_rank is deterministic for a fixed seed") {
    const auto x = parse_configuration("0,1,inf,2,-3");
    const std::vector<int> t{2, 1, 2, 1, 1};
    CHECK(rank_of(x, t, 65537, 9) == rank_of(x, t, 65537, 9));
}

TEST_CASE("rank matches the generic polynomial for n = 4, 5 and entries in {1, 2}") {
    for (int n = 4; n <= 5; ++n) {
        const auto q = generic_orbit_hilbert(n);
        Configuration x;
        for (int i = 0; i < n; ++i) x.push_back(i == 2 ? ProjPoint::infinity() : ProjPoint(i < 2 ? i : i - 1));
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> t;
            for (int i = 0; i < n; ++i) t.push_back(mask >> i & 1 ? 2 : 1);
            CHECK(Integer(rank_of(x, t)) == value_at(q, t));
        }
    }
}

TEST_CASE("degenerate types match the pushed-forward polynomial") {
    CHECK(rank_of(parse_configuration("0,0,1,inf"), {1, 1, 1, 1}) == 12);
    Rng rng(4);
    for (int n = 4; n <= 5; ++n) {
        for (const auto& p : all_set_partitions(range_labels(n))) {
            if (p.size() < 3 || p.size() == static_cast<std::size_t>(n)) continue;
            const auto x = of_type(p, random_distinct_configuration(rng, p.size()));
            const auto pushed = push_hilbert_along_partition(generic_orbit_hilbert(static_cast<int>(p.size())), p);
            for (const std::vector<int>& t : {std::vector<int>(static_cast<std::size_t>(n), 1), std::vector<int>(static_cast<std::size_t>(n), 2)}) {
                CHECK_MESSAGE(Integer(rank_of(x, t, 65537)) == value_at(pushed, t), p.to_string());
            }
        }
    }
}

TEST_CASE("unique_transport_count examples") {
    const auto y = parse_configuration("3,-1,1/2,5");
    CHECK(unique_transport_count(parse_configuration("0,1,inf,2"), y, {1, 2, 4}) == 1);
    CHECK(unique_transport_count(parse_configuration("0,0,inf,2"), y, {1, 2, 3}) == 0);
    CHECK(unique_transport_count(parse_configuration("0,0,inf,2"), y, {1, 3, 4}) == 1);
    CHECK_ERROR(unique_transport_count(parse_configuration("0,0,1,1"), y, {1, 2, 3}), ErrorCode::TooDegenerateType);
    CHECK_ERROR(unique_transport_count(parse_configuration("0,1,inf,2"), parse_configuration("0,0,1,2"), {1, 2, 3}),
                ErrorCode::InvalidArgument);
}

TEST_CASE("transport counts reproduce the orbit classes, n <= 5") {
    Rng rng(6);
    for (int n = 3; n <= 5; ++n) {
        for (const auto& p : all_set_partitions(range_labels(n))) {
            if (p.size() < 3) continue;
            const auto c = orbit_class_of_type(p);
            const auto x = of_type(p, random_distinct_configuration(rng, p.size()));
            const auto y = random_distinct_configuration(rng, static_cast<std::size_t>(n));
            for (const auto& i : subsets_of_size(range_labels(n), 3)) CHECK(Integer(unique_transport_count(x, y, i)) == c.coefficient(i));
        }
    }
}

TEST_CASE("degeneration_fiber_check") {
    for (auto [x, i] : {std::pair{parse_configuration("0,1,inf,2"), 1}, std::pair{parse_configuration("0,1,inf,2,3"), 2}}) {
        const auto r = degeneration_fiber_check(x, i, 100, 3);
        CHECK(r.ok());
        CHECK(r.z_prime.samples == 100);
        CHECK(r.intersection.passed == 100);
        CHECK(r.off_union.passed == 100);
    }
    CHECK_ERROR(degeneration_fiber_check(parse_configuration("0,1,inf,2"), 4, 10, 1), ErrorCode::IndexOutOfRange);
    CHECK_ERROR(degeneration_fiber_check(parse_configuration("0,1,inf"), 1, 10, 1), ErrorCode::IndexOutOfRange);
}

TEST_CASE("boundary_membership_check") {
    const auto r4 = boundary_membership_check(parse_configuration("0,1,inf,2"), 100, 5);
    CHECK(r4.ok());
    CHECK(r4.diagonal.size() == 4);
    CHECK(r4.diagonal[2].passed == 100);
    CHECK(r4.false_negatives() == 0);
    CHECK(r4.false_positives() == 0);
    const auto r5 = boundary_membership_check(parse_configuration("0,1,inf,2,-1/3"), 100, 6);
    CHECK(r5.ok());
    CHECK(r5.diagonal[0].passed == 100);
    CHECK_ERROR(boundary_membership_check(parse_configuration("0,1,1,2"), 10, 1), ErrorCode::InvalidArgument);
}
