#include <doctest.h>

#include "m0n/chow.hpp"
#include "m0n/sampling.hpp"
#include "support.hpp"

using namespace m0n;

namespace {

ChowClass h(const LabelSet& ambient, const LabelSet& s) { return ChowClass::basis(ambient, s); }

ChowClass by_condition(const SetPartition& p) {
    ChowClass::Terms terms;
    for (const auto& s : subsets_of_size(p.ground(), 3)) {
        bool ok = true;
        for (const auto& part : p.parts()) ok = ok && set_intersection(part, s).size() <= 1;
        if (ok) terms[s] = 1;
    }
    return ChowClass(p.ground(), 3, terms);
}

ChowClass random_class(Rng& rng, const LabelSet& ambient, std::size_t grade) {
    ChowClass::Terms terms;
    for (const auto& s : subsets_of_size(ambient, grade)) terms[s] = random_int(rng, -3, 3);
    return ChowClass(ambient, grade, terms);
}

}  // namespace

TEST_CASE("generic_orbit_class examples") {
    CHECK(generic_orbit_class(4).terms().size() == 4);
    CHECK(generic_orbit_class(5).terms().size() == 10);
    CHECK(generic_orbit_class(3) == h(range_labels(3), {1, 2, 3}));
    for (const auto& [s, c] : generic_orbit_class(6).terms()) {
        CHECK(s.size() == 3);
        CHECK(c == 1);
    }
}

TEST_CASE("orbit_class_of_type examples") {
    CHECK(orbit_class_of_type(SetPartition::singletons(range_labels(5))) == generic_orbit_class(5));
    const auto c = orbit_class_of_type(SetPartition::parse("1,2|3|4|5"));
    CHECK(c.terms().size() == 7);
    CHECK(c.coefficient({1, 2, 3}) == 0);
    CHECK(orbit_class_of_type(SetPartition::parse("1,2|3|4")) == h(range_labels(4), {1, 3, 4}) + h(range_labels(4), {2, 3, 4}));
    CHECK_ERROR(orbit_class_of_type(SetPartition::parse("1,2|3,4")), ErrorCode::TooDegenerateType);
}

TEST_CASE("classes have one grade") {
    CHECK_ERROR(ChowClass(range_labels(3), 2, {{{1, 2}, 1}, {{1}, 1}}), ErrorCode::GradeMismatch);
    CHECK_ERROR(ChowClass(range_labels(3), 1, {{{4}, 1}}), ErrorCode::InvalidArgument);
    CHECK(ChowClass(range_labels(3), 2, {{{1, 2}, 0}}).is_zero());
}

TEST_CASE("intersection_number examples") {
    const auto x4 = range_labels(4);
    CHECK(intersection_number(h(x4, {1, 2, 3}), h(x4, {4})) == 1);
    CHECK(intersection_number(h(x4, {1, 2, 3}), h(x4, {3})) == 0);
    CHECK(intersection_number(generic_orbit_class(4), h(x4, {4})) == 1);
    CHECK_ERROR(intersection_number(h(x4, {1, 2}), h(x4, {3})), ErrorCode::GradeMismatch);
}

TEST_CASE("the basis is self-dual under the pairing, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto x = range_labels(n);
        const auto subsets = all_subsets(x);
        for (const auto& i : subsets) {
            for (const auto& j : subsets) {
                if (i.size() + j.size() != x.size()) continue;
                CHECK(intersection_number(h(x, i), h(x, j)) == (j == set_difference(x, i) ? 1 : 0));
            }
        }
    }
}

TEST_CASE("orbit classes pair to 1 exactly on the transversal 3-subsets") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& p : all_set_partitions(range_labels(n))) {
            if (p.size() < 3) continue;
            const auto c = orbit_class_of_type(p);
            CHECK(c == by_condition(p));
            for (const auto& i : subsets_of_size(p.ground(), 3)) {
                bool ok = true;
                for (const auto& part : p.parts()) ok = ok && set_intersection(part, i).size() <= 1;
                CHECK(intersection_number(c, h(p.ground(), set_difference(p.ground(), i))) == (ok ? 1 : 0));
            }
        }
    }
}

TEST_CASE("pushforward_projection examples") {
    CHECK(pushforward_projection(generic_orbit_class(5), {1, 2, 3, 4}) == generic_orbit_class(4));
    CHECK(pushforward_projection(h(range_labels(5), {1, 2, 5}), {1, 2, 3, 4}).is_zero());
    CHECK(pushforward_projection(orbit_class_of_type(SetPartition::parse("1,2|3|4|5")), {1, 3, 4, 5}) ==
          generic_orbit_class(LabelSet{1, 3, 4, 5}));
}

TEST_CASE("pushforward_projection is functorial") {
    Rng rng(9);
    for (int k = 0; k < 50; ++k) {
        const auto c = random_class(rng, range_labels(6), 3);
        for (const auto& j : subsets_of_size(range_labels(6), 5))
            for (const auto& jj : subsets_of_size(j, 4))
                CHECK(pushforward_projection(pushforward_projection(c, j), jj) == pushforward_projection(c, jj));
    }
}

TEST_CASE("pushforward_diagonal examples") {
    Rng rng(4);
    const auto c = random_class(rng, range_labels(4), 2);
    CHECK(pushforward_diagonal(c, SetPartition::singletons(range_labels(4))) == c);
    CHECK(pushforward_diagonal(h(range_labels(2), {1, 2}), SetPartition::parse("1,2|3")) ==
          h(range_labels(3), {1, 3}) + h(range_labels(3), {2, 3}));
}

TEST_CASE("diagonal pushforward of the generic class is the orbit class of the type, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& p : all_set_partitions(range_labels(n))) {
            if (p.size() < 3) continue;
            CHECK(pushforward_diagonal(generic_orbit_class(static_cast<int>(p.size())), p) == orbit_class_of_type(p));
        }
    }
}

TEST_CASE("pushforward_glue examples") {
    const auto ck = generic_orbit_class(LabelSet{kStar, 1, 2});
    const auto cl = generic_orbit_class(LabelSet{kStar, 3, 4, 5});
    const auto glued = pushforward_glue(ck, cl);
    CHECK(glued.grade() == 3);
    CHECK(glued.ambient() == range_labels(5));
    CHECK(glued == generic_orbit_class(5));

    const auto zero_l = ChowClass(LabelSet{kStar, 3, 4}, 2, {});
    CHECK(pushforward_glue(h({kStar, 1, 2}, {1, 2}), zero_l) == h(range_labels(4), {1, 2}));
    CHECK(pushforward_glue(h({kStar, 1, 2}, {kStar, 1}), zero_l) == h(range_labels(4), {1, 3}) + h(range_labels(4), {1, 4}));
}

TEST_CASE("tree_cycle_class examples") {
    CHECK(tree_cycle_class(StableTree::single_vertex(range_labels(5))) == generic_orbit_class(5));
    const StableTree t(range_labels(4), {{1, 2}, {3, 4}}, {{0, 1}});
    const auto k_side = orbit_class_of_type(branch_partition(t, t.vertex_of(1)));
    CHECK(k_side.terms().size() == 2);
    CHECK(tree_cycle_class(t) == generic_orbit_class(4));
    for (int n = 3; n <= 6; ++n)
        for (const auto& tree : enumerate_stable_trees(n)) CHECK(tree_cycle_class(tree) == generic_orbit_class(n));
}

TEST_CASE("relabel and printing") {
    const auto c = h(range_labels(3), {1, 3}) + h(range_labels(3), {2, 3});
    CHECK(relabel(c, {{3, kStar}}) == h({kStar, 1, 2}, {kStar, 1}) + h({kStar, 1, 2}, {kStar, 2}));
    CHECK(c.to_string() == "H{1,3} + H{2,3}");
}
