#pragma once

// Marking labels and sorted label sets.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace m0n {

using Label = int;

/// The attaching leg of a gluing; printed as "*".
inline constexpr Label kStar = 0;

/// Sorted, duplicate-free.
using LabelSet = std::vector<Label>;

LabelSet make_label_set(std::vector<Label> labels);
LabelSet range_labels(int n);  // {1, ..., n}

bool contains(const LabelSet& s, Label l);
bool is_subset(const LabelSet& sub, const LabelSet& super);
bool disjoint(const LabelSet& a, const LabelSet& b);
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);
LabelSet with_label(LabelSet s, Label l);
LabelSet without_label(LabelSet s, Label l);

/// All k-element subsets of s in lexicographic order.
std::vector<LabelSet> subsets_of_size(const LabelSet& s, std::size_t k);
/// All subsets of s, ordered by bitmask over the positions of s.
std::vector<LabelSet> all_subsets(const LabelSet& s);

std::string label_to_string(Label l);
Label parse_label(std::string_view text);
std::string to_string(const LabelSet& s);  // "1,2,5"
LabelSet parse_label_set(std::string_view csv);

using Quad = std::array<Label, 4>;  // a sorted 4-subset
Quad to_quad(const LabelSet& s);
LabelSet from_quad(const Quad& q);

}  // namespace m0n
