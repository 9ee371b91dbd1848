#pragma once

// Types of configurations, cross-ratios and the (1,1,1,1)-forms vanishing on
// PGL_2-orbit closures in (P^1)^4.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "m0n/geometry.hpp"
#include "m0n/labels.hpp"

namespace m0n {

/// A set partition with parts ordered by least element.
class SetPartition {
public:
    SetPartition() = default;
    /// Throws InvalidPartition on empty or overlapping parts.
    explicit SetPartition(std::vector<LabelSet> parts);

    /// "1,2|3|4,5".
    static SetPartition parse(std::string_view text);
    static SetPartition singletons(const LabelSet& ground);

    const std::vector<LabelSet>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    LabelSet ground() const;
    /// Index of the part containing `l`; throws InvalidPartition if absent.
    std::size_t part_of(Label l) const;

    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend bool operator<(const SetPartition& p, const SetPartition& q) { return p.parts_ < q.parts_; }

private:
    std::vector<LabelSet> parts_;
};

/// All set partitions of `ground`.
std::vector<SetPartition> all_set_partitions(const LabelSet& ground);

/// Labels i, j share a part iff x_i == x_j. Default labels are 1..n.
SetPartition type_of(const Configuration& x);
SetPartition type_of(const Configuration& x, const LabelSet& labels);

/// t(x) = (x4-x1)(x2-x3) / ((x2-x1)(x4-x3)), computed with brackets so that
/// infinite coordinates need no special casing. Requires 4 distinct points.
ProjPoint cross_ratio(std::span<const ProjPoint> x);

/// True iff at least three of the four points coincide.
bool in_small_diagonals(std::span<const ProjPoint> x);

/// An element of H^0((P^1)^4, O(1,1,1,1)) up to scale. Slot S (a bitmask
/// over coordinates 1..4) holds the coefficient of prod_{i in S} a_i *
/// prod_{i not in S} b_i. Stored primitive with the lowest nonzero slot
/// positive.
class SectionForm {
public:
    using Coefficients = std::array<Integer, 16>;

    /// Throws InvalidArgument for the zero form.
    explicit SectionForm(Coefficients raw);

    const Coefficients& coefficients() const noexcept { return coeffs_; }
    const Integer& coefficient(unsigned mask) const { return coeffs_.at(mask); }

    Integer evaluate(std::span<const ProjPoint> z) const;
    bool vanishes_at(std::span<const ProjPoint> z) const { return evaluate(z) == 0; }

    friend bool operator==(const SectionForm&, const SectionForm&) = default;

private:
    Coefficients coeffs_;
};

/// Coefficients of the homogenized f_x before normalization:
/// f_x = [41][23](x) * [21][43](z) - [21][43](x) * [41][23](z).
SectionForm::Coefficients orbit_form_coefficients(std::span<const ProjPoint> x);

/// Normalized f_x; throws DegenerateConfiguration when x lies in a small
/// diagonal (where f_x vanishes identically).
SectionForm orbit_form(std::span<const ProjPoint> x);

/// The forms f_{pi_I(x)} for every 4-subset I of {1..n} with pi_I(x) outside
/// the small diagonals. Throws TooDegenerateType if type_of(x) has fewer
/// than three parts.
std::map<Quad, SectionForm> orbit_ideal_forms(const Configuration& x);

/// True iff every form of the map vanishes at the matching projection of z.
bool forms_vanish(const std::map<Quad, SectionForm>& forms, const Configuration& z);

/// Membership of z in the closure of the orbit of x (x pairwise distinct).
bool in_orbit_closure(const Configuration& x, const Configuration& z);

/// pi_I(x) for labels 1..n.
Configuration project(const Configuration& x, const Quad& quad);

}  // namespace m0n
