#pragma once

// The operad P of 4-subset signatures, the signature morphism from stable
// curves, and executable checks of the procyclic axioms for P, for stable
// trees and for cycle classes.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m0n/chow.hpp"
#include "m0n/trees.hpp"

namespace m0n {

/// A point of the product of M_{0,4}-bar over all 4-subsets of a label set.
/// A 3-label set has the empty product as its only element.
class Signature {
public:
    using Values = std::map<Quad, M04Point>;

    Signature() = default;
    /// Throws TooFewMarkings below three labels and InvalidArgument unless
    /// `values` covers exactly the 4-subsets of `labels`.
    Signature(LabelSet labels, Values values);

    const LabelSet& labels() const noexcept { return labels_; }
    const Values& values() const noexcept { return values_; }
    const M04Point& at(const Quad& q) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    LabelSet labels_;
    Values values_;
};

/// Value at J is the M_{0,4} point of stabilize(t, J).
Signature signature_of(const DecoratedStableTree& t);

/// Restriction to the 4-subsets of K (|K| >= 3, else TooFewMarkings).
Signature p_project(const Signature& s, const LabelSet& k);

/// Composition along the legs leg_x of x and leg_y of y. The remaining label
/// sets must be disjoint (OverlappingLabels).
Signature p_compose(const Signature& x, const Signature& y, Label leg_x = kStar, Label leg_y = kStar);

Signature relabel(const Signature& s, const std::vector<std::pair<Label, Label>>& renaming);

/// For every 4-subset, the boundary split or nothing for interior values.
std::map<Quad, std::optional<M04Point::Boundary>> boundary_pattern(const Signature& s);

struct AxiomCheck {
    std::string operad;  // "P", "tree" or "chow"
    std::string axiom;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    std::vector<std::string> failures;  // first few, human readable

    std::uint64_t total_violations() const;
    std::uint64_t total_instances() const;
};

struct AxiomOptions {
    int max_n = 7;                 // largest label set I + J
    int samples_per_split = 2;     // random elements drawn for every K + L
    std::uint64_t seed = 1;
    std::size_t max_failures = 20;
};

/// Sweeps every split N = K + L with |N| <= max_n and every I inside N,
/// checking for each operad: the three boundary compatibility diagrams,
/// projection functoriality, symmetry and associativity of composition, and
/// the morphism squares from stable trees to P (signatures) and to cycle
/// classes.
AxiomReport check_procyclic_axioms(const AxiomOptions& options);

}  // namespace m0n
