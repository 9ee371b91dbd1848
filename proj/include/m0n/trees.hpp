#pragma once

// Stable n-marked genus-0 curves as trees of components.
//
// Vertices are irreducible components, edges are nodes, and each marking
// sits on exactly one vertex. A decorated tree additionally fixes a chart on
// every component: a position for each marking on it and for each node
// branch meeting it. Charts of different vertices are never compared.
//
// Every operation returns trees in canonical form: the root is the vertex
// carrying the least marking, vertices are sorted by the least marking of the
// subtree they hang (ties broken toward the ancestor), edges point from
// parent to child and are sorted by child. Structural equality is then
// equality of combinatorial type (and of decorations).

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "m0n/configurations.hpp"
#include "m0n/geometry.hpp"
#include "m0n/labels.hpp"
#include "m0n/sampling.hpp"

namespace m0n {

struct TreeEdge {
    std::size_t v = 0;
    std::size_t w = 0;

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

class StableTree {
public:
    StableTree() = default;
    /// Stores the data as given and canonicalizes it when `validate` passes.
    StableTree(LabelSet markings, std::vector<LabelSet> vertex_marks, std::vector<TreeEdge> edges);

    static StableTree single_vertex(LabelSet markings);

    const LabelSet& markings() const noexcept { return markings_; }
    std::size_t num_vertices() const noexcept { return marks_.size(); }
    const LabelSet& marks(std::size_t v) const { return marks_.at(v); }
    const std::vector<TreeEdge>& edges() const noexcept { return edges_; }

    std::size_t vertex_of(Label l) const;
    std::vector<std::size_t> incident_edges(std::size_t v) const;
    std::size_t special_count(std::size_t v) const;
    std::size_t other_end(std::size_t edge, std::size_t v) const;
    /// Markings on the half containing endpoint `side` (0: .v, 1: .w) after
    /// deleting `edge`.
    LabelSet side_markings(std::size_t edge, std::size_t side) const;

    std::string to_string() const;

    friend bool operator==(const StableTree&, const StableTree&) = default;
    friend bool operator<(const StableTree& a, const StableTree& b);

private:
    friend class DecoratedStableTree;

    LabelSet markings_;
    std::vector<LabelSet> marks_;
    std::vector<TreeEdge> edges_;
};

/// For each edge, the markings on its .w side.
std::vector<LabelSet> node_splits(const StableTree& t);

/// Tree shape, marking partition and stability (>= 3 special points per
/// vertex). Reports every violation found, first failure first.
ValidationReport validate(const StableTree& t);

struct DecoratedEdge {
    std::size_t v = 0;
    std::size_t w = 0;
    ProjPoint pos_v;  // the node's position in the chart of v
    ProjPoint pos_w;
};

using MarkedPoints = std::vector<std::pair<Label, ProjPoint>>;

class DecoratedStableTree {
public:
    DecoratedStableTree() = default;
    /// vertices[v] lists the markings on v with their positions. Stored as
    /// given and canonicalized (decorations included) when the underlying
    /// tree validates.
    DecoratedStableTree(LabelSet markings, std::vector<MarkedPoints> vertices, std::vector<DecoratedEdge> edges);

    const StableTree& tree() const noexcept { return tree_; }
    const LabelSet& markings() const noexcept { return tree_.markings(); }
    const std::vector<ProjPoint>& mark_positions(std::size_t v) const { return mark_pos_.at(v); }
    const std::array<ProjPoint, 2>& edge_positions(std::size_t e) const { return edge_pos_.at(e); }
    /// Position of the node `e` on its endpoint `v`.
    const ProjPoint& edge_position_at(std::size_t e, std::size_t v) const;
    const ProjPoint& mark_position(Label l) const;

    friend bool operator==(const DecoratedStableTree&, const DecoratedStableTree&) = default;

private:
    StableTree tree_;
    std::vector<std::vector<ProjPoint>> mark_pos_;
    std::vector<std::array<ProjPoint, 2>> edge_pos_;
};

/// Tree validity plus pairwise distinct special points at every vertex.
ValidationReport validate(const DecoratedStableTree& t);

/// Chart positions 0, 1, inf, 2, 3, ... assigned to the special points of
/// each vertex in order (marks first, then incident edges).
DecoratedStableTree decorate_default(const StableTree& t);
/// Random pairwise distinct special points at every vertex.
DecoratedStableTree decorate_random(const StableTree& t, Rng& rng, std::int64_t height = 12);
/// A one-vertex curve with marking labels[i] at x[i]; x must be distinct.
DecoratedStableTree smooth_curve(const LabelSet& labels, const Configuration& x);

/// Renames markings along an injective map (labels missing from the map are
/// kept).
StableTree relabel(const StableTree& t, const std::vector<std::pair<Label, Label>>& renaming);
DecoratedStableTree relabel(const DecoratedStableTree& t, const std::vector<std::pair<Label, Label>>& renaming);

/// Joins the leg `leg_a` of `a` to the leg `leg_b` of `b` into a node. The
/// remaining marking sets must be disjoint (OverlappingMarkingSets).
StableTree glue(const StableTree& a, const StableTree& b, Label leg_a = kStar, Label leg_b = kStar);
DecoratedStableTree glue(const DecoratedStableTree& a, const DecoratedStableTree& b, Label leg_a = kStar,
                         Label leg_b = kStar);

/// Forgets markings outside `keep` and contracts unstable components until
/// none remain. A component left with a marking and one node is absorbed
/// into its neighbour (the marking takes the node's position there); one
/// left with two nodes is replaced by a single node; one left with only a
/// node is dropped. Throws TooFewMarkings if |keep| < 3.
DecoratedStableTree stabilize(const DecoratedStableTree& t, const LabelSet& keep);
StableTree stabilize(const StableTree& t, const LabelSet& keep);

/// Cuts the node `edge`. The first tree holds the markings of the .v side,
/// the second those of the .w side; each gets `leg` at the former node.
std::pair<StableTree, StableTree> cut_at_node(const StableTree& t, std::size_t edge, Label leg);

/// Retraction of every marking onto component `v`, in the order of
/// t.markings().
Configuration component_configuration(const DecoratedStableTree& t, std::size_t v);

/// The combinatorial type of the component configuration at `v`: markings
/// on v are singletons, each node branch contributes the markings beyond it.
SetPartition branch_partition(const StableTree& t, std::size_t v);

/// Some node has all of `a` on one side and all of `b` on the other.
bool separates(const StableTree& t, const LabelSet& a, const LabelSet& b);

/// K + L must partition the markings with |K|, |L| >= 2 (InvalidPartition).
bool separating_node_exists(const StableTree& t, const LabelSet& k, const LabelSet& l);

/// All combinatorial types of stable trees on {1..n}, canonical and
/// duplicate-free. 3 <= n <= 8, else OutOfRange.
std::vector<StableTree> enumerate_stable_trees(int n);

/// A point of M_{0,4}-bar for a known sorted 4-label set: either the
/// cross-ratio of the four positions taken in ascending label order, or the
/// 2+2 split of a reducible curve.
class M04Point {
public:
    struct Interior {
        ProjPoint value;
        friend bool operator==(const Interior&, const Interior&) = default;
    };
    struct Boundary {
        std::array<Label, 2> first;  // contains the least label
        std::array<Label, 2> second;
        friend bool operator==(const Boundary&, const Boundary&) = default;
    };

    static M04Point interior(ProjPoint value);
    static M04Point boundary(std::array<Label, 2> side_a, std::array<Label, 2> side_b);

    bool is_interior() const noexcept { return std::holds_alternative<Interior>(data_); }
    bool is_boundary() const noexcept { return !is_interior(); }
    const ProjPoint& value() const { return std::get<Interior>(data_).value; }
    const Boundary& split() const { return std::get<Boundary>(data_); }

    /// "interior a/b" or "boundary 1,2|3,4".
    std::string to_string() const;
    static M04Point parse(std::string_view text);

    friend bool operator==(const M04Point&, const M04Point&) = default;

private:
    explicit M04Point(std::variant<Interior, Boundary> d) : data_(std::move(d)) {}
    std::variant<Interior, Boundary> data_;
};

/// Transports a point on the sorted label set `from` along the bijection
/// from[i] -> to[i], re-expressing interior values in the ascending order
/// of the new labels.
M04Point relabel(const M04Point& p, const Quad& from, const std::array<Label, 4>& to);

M04Point m04_point_of(const DecoratedStableTree& t);

}  // namespace m0n
