#include <doctest.h>

#include "m0n/hilbert.hpp"
#include "m0n/sampling.hpp"
#include "support.hpp"

using namespace m0n;

namespace {

std::vector<Integer> ones(int n) { return std::vector<Integer>(static_cast<std::size_t>(n), 1); }

// sum over |I| <= 3 of prod t_i, by brute force over subsets
Integer generic_value(const std::vector<Integer>& t) {
    const std::size_t n = t.size();
    Integer total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > 3) continue;
        Integer term = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) term *= t[i];
        total += term;
    }
    return total;
}

StableTree make_tree(std::vector<LabelSet> marks, std::vector<TreeEdge> edges) {
    LabelSet all;
    for (const auto& m : marks) all = set_union(all, m);
    return StableTree(all, std::move(marks), std::move(edges));
}

}  // namespace

TEST_CASE("ambient_hilbert examples") {
    CHECK(ambient_hilbert(1) == MultilinearPoly::one_plus_sum({1}, {1}));
    CHECK(evaluate(ambient_hilbert(2), std::vector<Integer>{3, 5}) == 24);
    const auto p3 = ambient_hilbert(3);
    CHECK(p3.terms().size() == 8);
    for (const auto& s : all_subsets(range_labels(3))) CHECK(p3.coefficient(s) == 1);
}

TEST_CASE("generic_orbit_hilbert examples") {
    CHECK(generic_orbit_hilbert(3) == ambient_hilbert(3));
    CHECK(evaluate(generic_orbit_hilbert(4), ones(4)) == 15);
    const auto p5 = generic_orbit_hilbert(5);
    CHECK(p5.coefficient({1, 2, 3, 4}) == 0);
    CHECK(p5.coefficient({1, 2, 3}) == 1);
    CHECK(p5.terms().size() == 1 + 5 + 10 + 10);
    CHECK_ERROR(generic_orbit_hilbert(2), ErrorCode::InvalidArgument);
}

TEST_CASE("generic_orbit_hilbert matches the brute-force sum") {
    Rng rng(5);
    for (int n = 3; n <= 8; ++n) {
        const auto p = generic_orbit_hilbert(n);
        for (int k = 0; k < 20; ++k) {
            std::vector<Integer> t;
            for (int i = 0; i < n; ++i) t.emplace_back(random_int(rng, -4, 9));
            CHECK(evaluate(p, t) == generic_value(t));
        }
    }
}

TEST_CASE("glued_hilbert examples") {
    const LabelSet k{1, 2}, l{3, 4, 5};
    const auto pk = ambient_hilbert(LabelSet{kStar, 1, 2});
    const auto pl = generic_orbit_hilbert(LabelSet{kStar, 3, 4, 5});
    CHECK(glued_hilbert(pk, pl, k, l) == generic_orbit_hilbert(5));
    CHECK(glued_hilbert(pl, pk, l, k) == glued_hilbert(pk, pl, k, l));

    // with zero inputs only the subtracted term remains
    const auto zk = MultilinearPoly::constant({kStar, 1, 2}, 0);
    const auto zl = MultilinearPoly::constant({kStar, 3, 4}, 0);
    CHECK(evaluate(glued_hilbert(zk, zl, {1, 2}, {3, 4}), ones(4)) == -9);
}

TEST_CASE("glued_hilbert accepts named legs") {
    const auto pk = ambient_hilbert(LabelSet{1, 2, 8});
    const auto pl = generic_orbit_hilbert(LabelSet{3, 4, 5, 9});
    CHECK(glued_hilbert(pk, pl, {1, 2}, {3, 4, 5}, 8, 9) == generic_orbit_hilbert(5));
}

TEST_CASE("tree_hilbert examples") {
    CHECK(tree_hilbert(StableTree::single_vertex(range_labels(6))) == generic_orbit_hilbert(6));
    const auto caterpillar = make_tree({{1, 2}, {3, 4}, {5, 6}}, {{0, 1}, {1, 2}});
    REQUIRE(caterpillar.edges().size() == 2);
    const auto first = tree_hilbert_split_at(caterpillar, 0);
    const auto second = tree_hilbert_split_at(caterpillar, 1);
    CHECK(first == second);
    CHECK(first == generic_orbit_hilbert(6));
}

TEST_CASE("tree_hilbert is the generic polynomial for every tree, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const auto generic = generic_orbit_hilbert(n);
        for (const auto& t : enumerate_stable_trees(n)) {
            CHECK(tree_hilbert(t) == generic);
            for (std::size_t e = 0; e < t.edges().size(); ++e) CHECK(tree_hilbert_split_at(t, e) == generic);
        }
    }
}

TEST_CASE("relabelling markings permutes the variables of tree_hilbert") {
    const auto t = make_tree({{1, 2}, {3}, {4, 5}}, {{0, 1}, {1, 2}});
    const std::vector<std::pair<Label, Label>> renaming{{1, 12}, {2, 7}, {3, 10}, {4, 11}, {5, 8}};
    CHECK(tree_hilbert(relabel(t, renaming)) == relabel(tree_hilbert(t), renaming));
}

TEST_CASE("push_hilbert_along_partition examples") {
    const auto q = generic_orbit_hilbert(4);
    CHECK(push_hilbert_along_partition(q, SetPartition::singletons(range_labels(4))) == q);
    CHECK(push_hilbert_along_partition(ambient_hilbert(1), SetPartition::parse("1,2")) ==
          MultilinearPoly::one_plus_sum({1, 2}, {1, 2}));
    const auto pushed = push_hilbert_along_partition(generic_orbit_hilbert(3), SetPartition::parse("1,2|3|4"));
    CHECK(evaluate(pushed, ones(4)) == 12);
    // parts are reindexed by least element: ({1,4},{2},{3}) sends t1 -> t1 + t4
    const auto other = push_hilbert_along_partition(generic_orbit_hilbert(3), SetPartition::parse("1,4|2|3"));
    CHECK(other.coefficient({2, 3, 4}) == 1);
    CHECK(other.coefficient({1, 4}) == 0);
    CHECK_ERROR(push_hilbert_along_partition(generic_orbit_hilbert(4), SetPartition::parse("1,2|3|4")),
                ErrorCode::InvalidArgument);
}

TEST_CASE("degeneration_pieces") {
    for (auto [n, i] : {std::pair{4, 1}, std::pair{5, 3}}) {
        const auto d = degeneration_pieces(n, i);
        CHECK(d.z_prime + d.z_double_prime - d.diagonal == generic_orbit_hilbert(n));
    }
    const auto d = degeneration_pieces(4, 1);
    CHECK(evaluate(d.diagonal, ones(4)) == 9);
    CHECK(evaluate(d.z_double_prime, ones(4)) == 12);
    CHECK(evaluate(d.z_prime, ones(4)) == 12);
    CHECK_ERROR(degeneration_pieces(3, 1), ErrorCode::IndexOutOfRange);
    CHECK_ERROR(degeneration_pieces(5, 5), ErrorCode::IndexOutOfRange);
    CHECK_ERROR(degeneration_pieces(5, 0), ErrorCode::IndexOutOfRange);
}
