#include "m0n/hilbert.hpp"

#include <algorithm>

namespace m0n {

MultilinearPoly ambient_hilbert(const LabelSet& labels) {
    if (labels.empty()) throw Error(ErrorCode::InvalidArgument, "ambient polynomial needs n >= 1");
    MultilinearPoly::Terms terms;
    for (const auto& s : all_subsets(labels)) terms[s] = 1;
    return MultilinearPoly(labels, std::move(terms));
}

MultilinearPoly ambient_hilbert(int n) { return ambient_hilbert(range_labels(n)); }

MultilinearPoly generic_orbit_hilbert(const LabelSet& labels) {
    if (labels.size() < 3) throw Error(ErrorCode::InvalidArgument, "generic orbit closures need n >= 3");
    MultilinearPoly::Terms terms;
    for (std::size_t k = 0; k <= 3; ++k)
        for (const auto& s : subsets_of_size(labels, k)) terms[s] = 1;
    return MultilinearPoly(labels, std::move(terms));
}

MultilinearPoly generic_orbit_hilbert(int n) { return generic_orbit_hilbert(range_labels(n)); }

MultilinearPoly glued_hilbert(const MultilinearPoly& pk, const MultilinearPoly& pl, const LabelSet& k,
                              const LabelSet& l, Label leg_k, Label leg_l) {
    if (!disjoint(k, l)) throw Error(ErrorCode::OverlappingLabels, "K and L must be disjoint");
    if (!is_subset(pk.vars(), with_label(k, leg_k)) || !is_subset(pl.vars(), with_label(l, leg_l))) {
        throw Error(ErrorCode::InvalidArgument, "polynomial variables outside K + leg / L + leg");
    }
    LabelSet all = set_union(k, l);
    MultilinearPoly a = substitute_sum(pk.embed({leg_k}), leg_k, l);
    MultilinearPoly b = substitute_sum(pl.embed({leg_l}), leg_l, k);
    MultilinearPoly overlap = MultilinearPoly::one_plus_sum(all, k) * MultilinearPoly::one_plus_sum(all, l);
    return (a + b - overlap).embed(all);
}

namespace {

MultilinearPoly glue_halves(const StableTree& t, std::size_t edge);

MultilinearPoly recurse(const StableTree& t) {
    if (t.num_vertices() == 1) return generic_orbit_hilbert(t.markings());
    // a leaf component: exactly one node
    for (std::size_t v = t.num_vertices(); v-- > 0;) {
        auto inc = t.incident_edges(v);
        if (inc.size() == 1) return glue_halves(t, inc.front());
    }
    throw Error(ErrorCode::InvalidTree, "tree without a leaf component");
}

MultilinearPoly glue_halves(const StableTree& t, std::size_t edge) {
    const Label leg = t.markings().back() + 1;
    auto [tk, tl] = cut_at_node(t, edge, leg);
    LabelSet k = without_label(tk.markings(), leg);
    LabelSet l = without_label(tl.markings(), leg);
    return glued_hilbert(recurse(tk), recurse(tl), k, l, leg, leg);
}

}  // namespace

MultilinearPoly tree_hilbert(const StableTree& t) {
    auto report = validate(t);
    if (!report.ok()) throw Error(ErrorCode::InvalidTree, report.violations.front());
    return recurse(t);
}

MultilinearPoly tree_hilbert_split_at(const StableTree& t, std::size_t edge) {
    auto report = validate(t);
    if (!report.ok()) throw Error(ErrorCode::InvalidTree, report.violations.front());
    if (edge >= t.edges().size()) throw Error(ErrorCode::IndexOutOfRange, "no such node");
    return glue_halves(t, edge);
}

MultilinearPoly push_hilbert_along_partition(const MultilinearPoly& q, const SetPartition& p) {
    const int l = static_cast<int>(p.size());
    if (!is_subset(q.vars(), range_labels(l))) {
        throw Error(ErrorCode::InvalidArgument, "polynomial variables must be 1.." + std::to_string(l));
    }
    std::vector<std::pair<Label, LabelSet>> rules;
    for (int j = 1; j <= l; ++j) rules.emplace_back(j, p.parts()[static_cast<std::size_t>(j - 1)]);
    return substitute_sums(q.embed(range_labels(l)), rules);
}

DegenerationPieces degeneration_pieces(int n, int i) {
    if (n < 4 || i < 1 || i > n - 1) throw Error(ErrorCode::IndexOutOfRange, "need n >= 4 and 1 <= i <= n-1");
    LabelSet all = range_labels(n);
    LabelSet rest = set_difference(all, {i, n});
    DegenerationPieces out;
    out.z_prime = substitute_sum(generic_orbit_hilbert(n - 1), i, {i, n}).embed(all);
    out.z_double_prime = MultilinearPoly::one_plus_sum(all, {i}) * MultilinearPoly::one_plus_sum(all, {n}) *
                         MultilinearPoly::one_plus_sum(all, rest);
    out.diagonal = MultilinearPoly::one_plus_sum(all, {i, n}) * MultilinearPoly::one_plus_sum(all, rest);
    return out;
}

}  // namespace m0n
