#include <doctest.h>

#include <set>

#include "m0n/trees.hpp"
#include "support.hpp"

using namespace m0n;

namespace {

StableTree make_tree(std::vector<LabelSet> marks, std::vector<TreeEdge> edges) {
    LabelSet all;
    for (const auto& m : marks) all = set_union(all, m);
    return StableTree(all, std::move(marks), std::move(edges));
}

// {1,2} on vertex 0 with the node at inf, {3,4,5} on vertex 1 with the node at 2.
DecoratedStableTree two_vertex_five() {
    return DecoratedStableTree(range_labels(5),
                               {{{1, ProjPoint(0)}, {2, ProjPoint(1)}},
                                {{3, ProjPoint(0)}, {4, ProjPoint(1)}, {5, ProjPoint::infinity()}}},
                               {{0, 1, ProjPoint::infinity(), ProjPoint(2)}});
}

// A stable tree is determined by its nontrivial splits; each is stored as
// the side containing the least label.
std::set<LabelSet> splits(const StableTree& t) {
    std::set<LabelSet> out;
    for (const auto& side : node_splits(t)) {
        const LabelSet other = set_difference(t.markings(), side);
        out.insert(contains(side, t.markings().front()) ? side : other);
    }
    return out;
}

std::set<LabelSet> restricted_splits(const StableTree& t, const LabelSet& keep) {
    std::set<LabelSet> out;
    for (const auto& side : node_splits(t)) {
        const LabelSet a = set_intersection(side, keep);
        const LabelSet b = set_difference(keep, a);
        if (a.size() < 2 || b.size() < 2) continue;
        out.insert(contains(a, keep.front()) ? a : b);
    }
    return out;
}

// Rooted trees with m labelled leaves and every internal vertex of degree
// >= 2 below it; rooting a stable tree at marking n gives f(n - 1).
std::vector<std::uint64_t> total_partition_counts(int max_m) {
    std::vector<std::vector<std::uint64_t>> binom(max_m + 1, std::vector<std::uint64_t>(max_m + 1, 0));
    for (int a = 0; a <= max_m; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }
    std::vector<std::uint64_t> f(max_m + 1, 0), g(max_m + 1, 0);
    g[0] = 1;
    f[1] = g[1] = 1;
    for (int m = 2; m <= max_m; ++m) {
        for (int j = 1; j < m; ++j) f[m] += binom[m - 1][j - 1] * f[j] * g[m - j];
        g[m] = 2 * f[m];
    }
    return f;
}

}  // namespace

TEST_CASE("validate examples") {
    CHECK(validate(StableTree::single_vertex(range_labels(3))).ok());
    CHECK(validate(make_tree({{1, 2}, {3, 4}}, {{0, 1}})).ok());
    const auto bad = validate(StableTree(range_labels(4), {{1}, {2, 3, 4}}, {{0, 1}}));
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.violations.front().find("vertex 0") != std::string::npos);
    CHECK_FALSE(validate(StableTree(range_labels(6), {{1, 2}, {3, 4}, {5, 6}}, {{0, 1}, {1, 2}, {2, 0}})).ok());
    CHECK_FALSE(validate(StableTree(range_labels(6), {{1, 2, 3}, {4, 5, 6}}, {})).ok());
    CHECK_FALSE(validate(StableTree(range_labels(5), {{1, 2}, {2, 3, 4}}, {{0, 1}})).ok());
}

TEST_CASE("decorated trees need distinct special points per vertex") {
    CHECK(validate(two_vertex_five()).ok());
    const DecoratedStableTree clash(range_labels(4), {{{1, ProjPoint(0)}, {2, ProjPoint(1)}}, {{3, ProjPoint(0)}, {4, ProjPoint(1)}}},
                                    {{0, 1, ProjPoint(1), ProjPoint(5)}});
    CHECK_FALSE(validate(clash).ok());
}

TEST_CASE("canonical form makes equal types structurally equal") {
    const auto a = make_tree({{3, 4, 5}, {1, 2}}, {{1, 0}});
    const auto b = make_tree({{1, 2}, {3, 4, 5}}, {{0, 1}});
    CHECK(a == b);
    CHECK(a.marks(0) == LabelSet{1, 2});
    CHECK(make_tree({{5, 6}, {3}, {1, 2}, {4, 7}}, {{0, 1}, {1, 2}, {3, 1}}) ==
          make_tree({{1, 2}, {3}, {4, 7}, {5, 6}}, {{0, 1}, {1, 2}, {1, 3}}));
}

TEST_CASE("glue examples") {
    const auto k = StableTree::single_vertex({kStar, 1, 2});
    const auto l = StableTree::single_vertex({kStar, 3, 4});
    CHECK(glue(k, l) == make_tree({{1, 2}, {3, 4}}, {{0, 1}}));
    const auto l5 = StableTree::single_vertex({kStar, 3, 4, 5});
    const auto g = glue(k, l5);
    CHECK(g == make_tree({{1, 2}, {3, 4, 5}}, {{0, 1}}));
    CHECK(g.num_vertices() == k.num_vertices() + l5.num_vertices());
    CHECK_ERROR(glue(k, StableTree::single_vertex({kStar, 2, 3})), ErrorCode::OverlappingMarkingSets);
}

TEST_CASE("gluing three components in either order gives the same caterpillar") {
    const auto a = StableTree::single_vertex({kStar, 1, 2});
    const auto b = StableTree::single_vertex({kStar, 3, 6});
    const auto c = StableTree::single_vertex({kStar, 4, 5});
    const auto left = glue(glue(a, b), c, 6, kStar);
    const auto right = glue(a, glue(b, c, 6, kStar));
    CHECK(left == right);
    CHECK(left == make_tree({{1, 2}, {3}, {4, 5}}, {{0, 1}, {1, 2}}));
}

TEST_CASE("decorated glue takes node positions from the legs") {
    const auto a = smooth_curve({kStar, 1, 2}, parse_configuration("5,0,1"));
    const auto b = smooth_curve({kStar, 3, 4}, parse_configuration("7,0,inf"));
    const auto g = glue(a, b);
    REQUIRE(g.tree().num_vertices() == 2);
    CHECK(g.edge_position_at(0, g.tree().vertex_of(1)) == ProjPoint(5));
    CHECK(g.edge_position_at(0, g.tree().vertex_of(3)) == ProjPoint(7));
    CHECK(g.mark_position(4).is_infinity());
}

TEST_CASE("stabilize examples") {
    const auto t = two_vertex_five();
    const auto to3 = stabilize(t, {1, 2, 3});
    CHECK(to3.tree() == StableTree::single_vertex({1, 2, 3}));
    CHECK(stabilize(t, {1, 2, 3, 4}).tree() == make_tree({{1, 2}, {3, 4}}, {{0, 1}}));

    const auto contracted = stabilize(t, {1, 3, 4, 5});
    REQUIRE(contracted.tree().num_vertices() == 1);
    CHECK(contracted.mark_position(1) == ProjPoint(2));
    CHECK(contracted.mark_position(3) == ProjPoint(0));
    CHECK(contracted.mark_position(5).is_infinity());
    CHECK_ERROR(stabilize(t, {1, 2}), ErrorCode::TooFewMarkings);
}

TEST_CASE("a component left with two nodes passes its node through") {
    // {1,2} - {3} - {4,5}; forgetting 3 leaves the middle with two nodes
    const DecoratedStableTree t(range_labels(5),
                                {{{1, ProjPoint(0)}, {2, ProjPoint(1)}},
                                 {{3, ProjPoint(5)}},
                                 {{4, ProjPoint(0)}, {5, ProjPoint(1)}}},
                                {{0, 1, ProjPoint(7), ProjPoint(0)}, {1, 2, ProjPoint(1), ProjPoint(-1)}});
    const auto s = stabilize(t, {1, 2, 4, 5});
    REQUIRE(s.tree().num_vertices() == 2);
    const std::size_t v12 = s.tree().vertex_of(1);
    const std::size_t v45 = s.tree().vertex_of(4);
    CHECK(s.edge_position_at(0, v12) == ProjPoint(7));
    CHECK(s.edge_position_at(0, v45) == ProjPoint(-1));
}

TEST_CASE("stabilized splits are the restricted splits") {
    for (int n = 4; n <= 6; ++n) {
        for (const auto& t : enumerate_stable_trees(n)) {
            for (std::size_t k = 3; k <= static_cast<std::size_t>(n); ++k) {
                for (const auto& keep : subsets_of_size(t.markings(), k)) {
                    const auto s = stabilize(t, keep);
                    CHECK(validate(s).ok());
                    CHECK(s.markings() == keep);
                    CHECK(splits(s) == restricted_splits(t, keep));
                }
            }
        }
    }
}

TEST_CASE("stabilization is functorial on decorated trees") {
    Rng rng(17);
    for (const auto& t : enumerate_stable_trees(6)) {
        const auto d = decorate_random(t, rng);
        for (const auto& j : subsets_of_size(d.markings(), 5)) {
            const auto sj = stabilize(d, j);
            for (const auto& i : subsets_of_size(j, 4)) CHECK(stabilize(sj, i) == stabilize(d, i));
            for (const auto& i : subsets_of_size(j, 3)) CHECK(stabilize(sj, i) == stabilize(d, i));
        }
    }
}

TEST_CASE("stabilizing a glued tree") {
    // |I cap K| >= 2 and |I cap L| >= 2 keeps the node; otherwise one side collapses
    const auto k = StableTree::single_vertex({kStar, 1, 2, 3});
    const auto l = StableTree::single_vertex({kStar, 4, 5, 6});
    const auto g = glue(k, l);
    CHECK(stabilize(g, {1, 2, 4, 5}) == glue(stabilize(k, {kStar, 1, 2}), stabilize(l, {kStar, 4, 5})));
    CHECK(stabilize(g, {1, 2, 3, 4}) == relabel(k, {{kStar, 4}}));
    CHECK(stabilize(g, {1, 4, 5, 6}) == relabel(l, {{kStar, 1}}));
    CHECK(stabilize(g, {1, 2, 3}) == StableTree::single_vertex({1, 2, 3}));
}

TEST_CASE("cut_at_node undoes glue") {
    for (const auto& t : enumerate_stable_trees(6)) {
        for (std::size_t e = 0; e < t.edges().size(); ++e) {
            const Label leg = 7;
            const auto [a, b] = cut_at_node(t, e, leg);
            CHECK(validate(a).ok());
            CHECK(validate(b).ok());
            CHECK(set_union(without_label(a.markings(), leg), without_label(b.markings(), leg)) == t.markings());
            CHECK(glue(a, b, leg, leg) == t);
        }
    }
}

TEST_CASE("component_configuration examples") {
    const auto one = smooth_curve({1, 2, 3, 4}, parse_configuration("0,1,inf,3"));
    CHECK(component_configuration(one, 0) == parse_configuration("0,1,inf,3"));

    const auto t = two_vertex_five();
    CHECK(component_configuration(t, t.tree().vertex_of(1)) == parse_configuration("0,1,inf,inf,inf"));
    CHECK(component_configuration(t, t.tree().vertex_of(3)) == parse_configuration("2,2,0,1,inf"));

    const DecoratedStableTree cat(range_labels(5),
                                  {{{1, ProjPoint(0)}, {2, ProjPoint(1)}},
                                   {{3, ProjPoint(5)}},
                                   {{4, ProjPoint(0)}, {5, ProjPoint(1)}}},
                                  {{0, 1, ProjPoint(7), ProjPoint(0)}, {1, 2, ProjPoint(1), ProjPoint(-1)}});
    CHECK(component_configuration(cat, cat.tree().vertex_of(3)) == parse_configuration("0,0,5,1,1"));
    CHECK(branch_partition(cat.tree(), cat.tree().vertex_of(3)) == SetPartition::parse("1,2|3|4,5"));
}

TEST_CASE("component configurations have at least three distinct values") {
    Rng rng(23);
    for (const auto& t : enumerate_stable_trees(6)) {
        const auto d = decorate_random(t, rng);
        for (std::size_t v = 0; v < t.num_vertices(); ++v) {
            const auto x = component_configuration(d, v);
            CHECK(type_of(x, t.markings()) == branch_partition(t, v));
            CHECK(type_of(x).size() >= 3);
        }
    }
}

TEST_CASE("separating_node_exists examples") {
    const auto t = make_tree({{1, 2}, {3, 4}}, {{0, 1}});
    CHECK(separating_node_exists(t, {1, 2}, {3, 4}));
    CHECK_FALSE(separating_node_exists(t, {1, 3}, {2, 4}));
    CHECK_ERROR(separating_node_exists(t, {1}, {2, 3, 4}), ErrorCode::InvalidPartition);
    CHECK_ERROR(separating_node_exists(t, {1, 2}, {3}), ErrorCode::InvalidPartition);
}

TEST_CASE("a separating node exists iff every pair of pairs is separated") {
    for (int n = 4; n <= 6; ++n) {
        for (const auto& t : enumerate_stable_trees(n)) {
            for (const auto& k : all_subsets(t.markings())) {
                const LabelSet l = set_difference(t.markings(), k);
                if (k.size() < 2 || l.size() < 2) continue;
                bool pairwise = true;
                for (const auto& i : subsets_of_size(k, 2))
                    for (const auto& j : subsets_of_size(l, 2)) pairwise = pairwise && separates(t, i, j);
                CHECK(separating_node_exists(t, k, l) == pairwise);
            }
        }
    }
}

TEST_CASE("enumerate_stable_trees counts") {
    const auto expected = total_partition_counts(7);
    const std::uint64_t frozen[] = {1, 4, 26, 236, 2752};
    for (int n = 3; n <= 7; ++n) {
        const auto trees = enumerate_stable_trees(n);
        CHECK(trees.size() == expected[static_cast<std::size_t>(n - 1)]);
        CHECK(trees.size() == frozen[n - 3]);
        std::set<StableTree> distinct(trees.begin(), trees.end());
        CHECK(distinct.size() == trees.size());
        for (const auto& t : trees) {
            CHECK(validate(t).ok());
            CHECK(t.markings() == range_labels(n));
        }
    }
    CHECK_ERROR(enumerate_stable_trees(2), ErrorCode::OutOfRange);
    CHECK_ERROR(enumerate_stable_trees(9), ErrorCode::OutOfRange);
}

TEST_CASE("m04_point_of examples") {
    CHECK(m04_point_of(smooth_curve({1, 2, 3, 4}, parse_configuration("0,1,inf,5/2"))) == M04Point::interior(ProjPoint(5, 2)));
    CHECK(m04_point_of(smooth_curve({1, 2, 3, 4}, parse_configuration("1,2,3,4"))) == M04Point::interior(ProjPoint(-3)));
    CHECK(m04_point_of(decorate_default(make_tree({{1, 2}, {3, 4}}, {{0, 1}}))) == M04Point::boundary({1, 2}, {3, 4}));
    CHECK(m04_point_of(decorate_default(make_tree({{1, 4}, {2, 3}}, {{0, 1}}))) == M04Point::boundary({3, 2}, {4, 1}));
}

TEST_CASE("M04 points print and parse") {
    for (const char* s : {"interior 2", "interior -1/3", "boundary 1,3|2,4"}) {
        CHECK(M04Point::parse(s).to_string() == s);
    }
    CHECK(M04Point::boundary({4, 2}, {3, 1}).to_string() == "boundary 1,3|2,4");
    CHECK_ERROR(M04Point::parse("boundary 1,2,3|4"), ErrorCode::ParseError);
    CHECK_ERROR(M04Point::parse("smooth 2"), ErrorCode::ParseError);
}

TEST_CASE("relabelling an M04 point matches relabelling the curve") {
    Rng rng(29);
    std::array<Label, 4> to{3, 9, 1, 4};
    const Quad from{1, 2, 3, 4};
    do {
        for (int k = 0; k < 10; ++k) {
            const auto d = smooth_curve({1, 2, 3, 4}, random_distinct_configuration(rng, 4));
            std::vector<std::pair<Label, Label>> renaming;
            for (std::size_t i = 0; i < 4; ++i) renaming.emplace_back(from[i], to[i]);
            CHECK(m04_point_of(relabel(d, renaming)) == relabel(m04_point_of(d), from, to));
        }
    } while (std::next_permutation(to.begin(), to.end()));
}

TEST_CASE("interior values avoid 0, 1 and inf") {
    CHECK_ERROR(M04Point::interior(ProjPoint::infinity()), ErrorCode::InvalidArgument);
    CHECK_ERROR(M04Point::interior(ProjPoint(1)), ErrorCode::InvalidArgument);
}
