#include "m0n/chow.hpp"

#include <functional>

namespace m0n {

namespace {

void add_term(ChowClass::Terms& terms, const LabelSet& s, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(s, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

}  // namespace

ChowClass::ChowClass(LabelSet ambient, std::size_t grade, Terms terms)
    : ambient_(make_label_set(std::move(ambient))), grade_(grade) {
    for (const auto& [s, c] : terms) {
        LabelSet set = make_label_set(s);
        if (set.size() != grade_) throw Error(ErrorCode::GradeMismatch, "subset " + m0n::to_string(set) + " has the wrong size");
        if (!is_subset(set, ambient_)) throw Error(ErrorCode::InvalidArgument, "subset outside the ambient labels");
        add_term(terms_, set, c);
    }
}

ChowClass ChowClass::basis(LabelSet ambient, LabelSet subset) {
    subset = make_label_set(std::move(subset));
    const std::size_t g = subset.size();
    return ChowClass(std::move(ambient), g, {{subset, Integer(1)}});
}

Integer ChowClass::coefficient(const LabelSet& subset) const {
    auto it = terms_.find(make_label_set(subset));
    return it == terms_.end() ? Integer(0) : it->second;
}

std::string ChowClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        Integer mag = abs(c);
        if (mag != 1) out += mag.str() + "*";
        out += "H{" + m0n::to_string(s) + "}";
    }
    return out;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorCode::InvalidArgument, "classes live on different products");
    if (a.grade() != b.grade()) throw Error(ErrorCode::GradeMismatch, "cannot add classes of different grades");
    auto terms = a.terms();
    for (const auto& [s, c] : b.terms()) add_term(terms, s, c);
    return ChowClass(a.ambient(), a.grade(), std::move(terms));
}

ChowClass generic_orbit_class(const LabelSet& labels) {
    if (labels.size() < 3) throw Error(ErrorCode::InvalidArgument, "generic orbit closures need n >= 3");
    ChowClass::Terms terms;
    for (const auto& s : subsets_of_size(labels, 3)) terms[s] = 1;
    return ChowClass(labels, 3, std::move(terms));
}

ChowClass generic_orbit_class(int n) { return generic_orbit_class(range_labels(n)); }

ChowClass orbit_class_of_type(const SetPartition& p) {
    if (p.size() < 3) throw Error(ErrorCode::TooDegenerateType, "type has fewer than three parts");
    ChowClass::Terms terms;
    for (const auto& s : subsets_of_size(p.ground(), 3)) {
        if (p.part_of(s[0]) != p.part_of(s[1]) && p.part_of(s[0]) != p.part_of(s[2]) &&
            p.part_of(s[1]) != p.part_of(s[2])) {
            terms[s] = 1;
        }
    }
    return ChowClass(p.ground(), 3, std::move(terms));
}

Integer intersection_number(const ChowClass& c, const ChowClass& d) {
    if (c.ambient() != d.ambient()) throw Error(ErrorCode::InvalidArgument, "classes live on different products");
    if (c.grade() + d.grade() != c.ambient().size()) {
        throw Error(ErrorCode::GradeMismatch, "grades " + std::to_string(c.grade()) + " and " + std::to_string(d.grade()) +
                                                  " are not complementary in dimension " +
                                                  std::to_string(c.ambient().size()));
    }
    Integer sum = 0;
    for (const auto& [s, coeff] : c.terms()) sum += coeff * d.coefficient(set_difference(c.ambient(), s));
    return sum;
}

ChowClass pushforward_projection(const ChowClass& c, const LabelSet& j) {
    LabelSet target = make_label_set(j);
    if (!is_subset(target, c.ambient())) throw Error(ErrorCode::InvalidArgument, "projection target not a subset");
    ChowClass::Terms terms;
    for (const auto& [s, coeff] : c.terms())
        if (is_subset(s, target)) terms[s] = coeff;
    return ChowClass(target, c.grade(), std::move(terms));
}

ChowClass pushforward_diagonal(const ChowClass& c, const SetPartition& p) {
    const int l = static_cast<int>(p.size());
    if (c.ambient() != range_labels(l)) {
        throw Error(ErrorCode::InvalidArgument, "class must live on 1.." + std::to_string(l));
    }
    ChowClass::Terms terms;
    for (const auto& [s, coeff] : c.terms()) {
        LabelSet chosen;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == s.size()) {
                add_term(terms, make_label_set(chosen), coeff);
                return;
            }
            for (Label i : p.parts()[static_cast<std::size_t>(s[k] - 1)]) {
                chosen.push_back(i);
                rec(k + 1);
                chosen.pop_back();
            }
        };
        rec(0);
    }
    return ChowClass(p.ground(), c.grade(), std::move(terms));
}

namespace {

// i_*: the leg coordinate spreads over `other`.
void push_one_side(ChowClass::Terms& out, const ChowClass& c, Label leg, const LabelSet& other) {
    for (const auto& [s, coeff] : c.terms()) {
        if (!contains(s, leg)) {
            add_term(out, s, coeff);
            continue;
        }
        LabelSet base = without_label(s, leg);
        for (Label l : other) add_term(out, with_label(base, l), coeff);
    }
}

}  // namespace

ChowClass pushforward_glue(const ChowClass& ck, const ChowClass& cl, Label leg_k, Label leg_l) {
    if (!contains(ck.ambient(), leg_k) || !contains(cl.ambient(), leg_l)) {
        throw Error(ErrorCode::InvalidArgument, "glued classes must carry their legs");
    }
    LabelSet k = without_label(ck.ambient(), leg_k);
    LabelSet l = without_label(cl.ambient(), leg_l);
    if (!disjoint(k, l)) throw Error(ErrorCode::OverlappingLabels, "K and L must be disjoint");
    if (ck.grade() != cl.grade()) throw Error(ErrorCode::GradeMismatch, "glued classes differ in grade");
    ChowClass::Terms terms;
    push_one_side(terms, ck, leg_k, l);
    push_one_side(terms, cl, leg_l, k);
    return ChowClass(set_union(k, l), ck.grade(), std::move(terms));
}

ChowClass tree_cycle_class(const StableTree& t) {
    auto report = validate(t);
    if (!report.ok()) throw Error(ErrorCode::InvalidTree, report.violations.front());
    ChowClass total(t.markings(), 3, {});
    for (std::size_t v = 0; v < t.num_vertices(); ++v) {
        SetPartition type = branch_partition(t, v);
        total = total + pushforward_diagonal(generic_orbit_class(static_cast<int>(type.size())), type);
    }
    return total;
}

ChowClass relabel(const ChowClass& c, const std::vector<std::pair<Label, Label>>& renaming) {
    auto image = [&](Label x) {
        for (const auto& [from, to] : renaming)
            if (from == x) return to;
        return x;
    };
    LabelSet ambient;
    for (Label x : c.ambient()) ambient.push_back(image(x));
    if (make_label_set(ambient).size() != ambient.size()) throw Error(ErrorCode::InvalidArgument, "renaming is not injective");
    ChowClass::Terms terms;
    for (const auto& [s, coeff] : c.terms()) {
        LabelSet m;
        for (Label x : s) m.push_back(image(x));
        terms[make_label_set(m)] = coeff;
    }
    return ChowClass(std::move(ambient), c.grade(), std::move(terms));
}

}  // namespace m0n
