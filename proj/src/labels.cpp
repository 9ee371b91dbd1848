#include "m0n/labels.hpp"

#include <charconv>

#include "m0n/error.hpp"

namespace m0n {

LabelSet make_label_set(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

LabelSet range_labels(int n) {
    LabelSet s;
    for (int i = 1; i <= n; ++i) s.push_back(i);
    return s;
}

bool contains(const LabelSet& s, Label l) { return std::binary_search(s.begin(), s.end(), l); }

bool is_subset(const LabelSet& sub, const LabelSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool disjoint(const LabelSet& a, const LabelSet& b) { return set_intersection(a, b).empty(); }

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LabelSet with_label(LabelSet s, Label l) {
    auto it = std::lower_bound(s.begin(), s.end(), l);
    if (it == s.end() || *it != l) s.insert(it, l);
    return s;
}

LabelSet without_label(LabelSet s, Label l) {
    auto it = std::lower_bound(s.begin(), s.end(), l);
    if (it != s.end() && *it == l) s.erase(it);
    return s;
}

std::vector<LabelSet> subsets_of_size(const LabelSet& s, std::size_t k) {
    std::vector<LabelSet> out;
    if (k > s.size()) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        LabelSet sub(k);
        for (std::size_t i = 0; i < k; ++i) sub[i] = s[idx[i]];
        out.push_back(std::move(sub));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == s.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<LabelSet> all_subsets(const LabelSet& s) {
    std::vector<LabelSet> out;
    const std::size_t n = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        LabelSet sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(s[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

std::string label_to_string(Label l) { return l == kStar ? "*" : std::to_string(l); }

Label parse_label(std::string_view text) {
    if (text == "*") return kStar;
    Label l = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), l);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError, "bad label '" + std::string(text) + "'");
    }
    return l;
}

std::string to_string(const LabelSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += label_to_string(s[i]);
    }
    return out;
}

LabelSet parse_label_set(std::string_view csv) {
    std::vector<Label> out;
    while (!csv.empty()) {
        auto comma = csv.find(',');
        auto item = csv.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        out.push_back(parse_label(item));
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
    }
    return make_label_set(std::move(out));
}

Quad to_quad(const LabelSet& s) {
    if (s.size() != 4) throw Error(ErrorCode::InvalidArgument, "expected a 4-element label set");
    return {s[0], s[1], s[2], s[3]};
}

LabelSet from_quad(const Quad& q) { return LabelSet(q.begin(), q.end()); }

}  // namespace m0n
