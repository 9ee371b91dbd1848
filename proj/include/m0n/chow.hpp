#pragma once

// Cycle classes on (P^1)^n in the basis H_I, where H_I is the class of
// {fixed point} x (P^1)^I: a class of dimension |I|.

#include <map>
#include <string>

#include "m0n/configurations.hpp"
#include "m0n/geometry.hpp"
#include "m0n/labels.hpp"
#include "m0n/trees.hpp"

namespace m0n {

class ChowClass {
public:
    using Terms = std::map<LabelSet, Integer>;

    ChowClass() = default;
    /// All subsets share the cardinality `grade` (GradeMismatch otherwise)
    /// and lie inside `ambient`. Zero coefficients are dropped. A zero class
    /// keeps its grade even when that exceeds the number of factors.
    ChowClass(LabelSet ambient, std::size_t grade, Terms terms);

    static ChowClass basis(LabelSet ambient, LabelSet subset);

    const LabelSet& ambient() const noexcept { return ambient_; }
    std::size_t grade() const noexcept { return grade_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const LabelSet& subset) const;

    std::string to_string() const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

private:
    LabelSet ambient_;
    std::size_t grade_ = 0;
    Terms terms_;
};

/// Same ambient and grade required.
ChowClass operator+(const ChowClass& a, const ChowClass& b);

/// beta = sum_{|I| = 3} H_I on `labels`.
ChowClass generic_orbit_class(const LabelSet& labels);
ChowClass generic_orbit_class(int n);

/// Sum of H_I over 3-subsets meeting every part at most once.
/// TooDegenerateType below three parts.
ChowClass orbit_class_of_type(const SetPartition& p);

/// sum_I c(I) c'(complement of I). Grades must add up to n (GradeMismatch).
Integer intersection_number(const ChowClass& c, const ChowClass& d);

/// H_I -> H_I if I is inside J, else 0.
ChowClass pushforward_projection(const ChowClass& c, const LabelSet& j);

/// c on 1..l pushed along the diagonal embedding of the partition: H_J ->
/// sum over choices f(j) in P_j of H_{f(J)}.
ChowClass pushforward_diagonal(const ChowClass& c, const SetPartition& p);

/// i_K*(cK) + i_L*(cL); cK lives on K + {leg_k}, cL on L + {leg_l}. The leg
/// coordinate becomes the small diagonal across the other side.
ChowClass pushforward_glue(const ChowClass& ck, const ChowClass& cl, Label leg_k = kStar, Label leg_l = kStar);

/// Sum over components of the diagonal pushforward of the orbit class of
/// the component configuration type.
ChowClass tree_cycle_class(const StableTree& t);

ChowClass relabel(const ChowClass& c, const std::vector<std::pair<Label, Label>>& renaming);

}  // namespace m0n
