#include "m0n/multilinear.hpp"

namespace m0n {

namespace {

void add_term(MultilinearPoly::Terms& terms, const LabelSet& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

}  // namespace

MultilinearPoly::MultilinearPoly(LabelSet vars, Terms terms) : vars_(make_label_set(std::move(vars))) {
    for (auto& [m, c] : terms) {
        LabelSet mono = make_label_set(m);
        if (mono.size() != m.size()) throw Error(ErrorCode::NotMultilinear, "monomial repeats a variable");
        if (!is_subset(mono, vars_)) throw Error(ErrorCode::InvalidArgument, "monomial uses an undeclared variable");
        add_term(terms_, mono, c);
    }
}

MultilinearPoly MultilinearPoly::constant(LabelSet vars, Integer c) {
    Terms t;
    t[{}] = std::move(c);
    return MultilinearPoly(std::move(vars), std::move(t));
}

MultilinearPoly MultilinearPoly::variable(LabelSet vars, Label v) {
    if (!contains(make_label_set(vars), v)) throw Error(ErrorCode::MissingVariable, "variable not declared");
    Terms t;
    t[{v}] = 1;
    return MultilinearPoly(std::move(vars), std::move(t));
}

MultilinearPoly MultilinearPoly::one_plus_sum(LabelSet vars, const LabelSet& s) {
    Terms t;
    t[{}] = 1;
    for (Label l : s) t[{l}] += 1;
    return MultilinearPoly(std::move(vars), std::move(t));
}

Integer MultilinearPoly::coefficient(const LabelSet& monomial) const {
    auto it = terms_.find(make_label_set(monomial));
    return it == terms_.end() ? Integer(0) : it->second;
}

MultilinearPoly MultilinearPoly::embed(const LabelSet& vars) const {
    MultilinearPoly out = *this;
    out.vars_ = set_union(vars_, make_label_set(vars));
    return out;
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer mag = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        bool show_coeff = m.empty() || mag != 1;
        if (show_coeff) out += mag.str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (show_coeff || i) out += "*";
            out += "t" + label_to_string(m[i]);
        }
    }
    return out;
}

MultilinearPoly operator+(const MultilinearPoly& p, const MultilinearPoly& q) {
    auto terms = p.terms();
    for (const auto& [m, c] : q.terms()) add_term(terms, m, c);
    return MultilinearPoly(set_union(p.vars(), q.vars()), std::move(terms));
}

MultilinearPoly operator-(const MultilinearPoly& p) { return scale(p, -1); }

MultilinearPoly operator-(const MultilinearPoly& p, const MultilinearPoly& q) { return p + (-q); }

MultilinearPoly scale(const MultilinearPoly& p, const Integer& c) {
    MultilinearPoly::Terms terms;
    for (const auto& [m, v] : p.terms()) add_term(terms, m, v * c);
    return MultilinearPoly(p.vars(), std::move(terms));
}

MultilinearPoly multiply(const MultilinearPoly& p, const MultilinearPoly& q) {
    MultilinearPoly::Terms good;
    std::map<std::pair<LabelSet, LabelSet>, Integer> bad;  // (squared vars, rest)
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            LabelSet shared = set_intersection(m1, m2);
            if (shared.empty()) {
                add_term(good, set_union(m1, m2), c1 * c2);
            } else {
                bad[{shared, set_difference(set_union(m1, m2), shared)}] += c1 * c2;
            }
        }
    }
    for (const auto& [key, c] : bad) {
        if (c != 0) {
            throw Error(ErrorCode::NotMultilinear, "t" + label_to_string(key.first.front()) + " would reach degree 2");
        }
    }
    return MultilinearPoly(set_union(p.vars(), q.vars()), std::move(good));
}

MultilinearPoly substitute_sums(const MultilinearPoly& p, const std::vector<std::pair<Label, LabelSet>>& rules) {
    LabelSet replaced, images;
    for (const auto& [v, s] : rules) {
        if (contains(replaced, v)) throw Error(ErrorCode::InvalidArgument, "variable substituted twice");
        LabelSet img = make_label_set(s);
        if (!disjoint(images, img)) throw Error(ErrorCode::NotMultilinear, "substitution images overlap");
        replaced = with_label(replaced, v);
        images = set_union(images, img);
    }
    LabelSet kept = set_difference(p.vars(), replaced);
    LabelSet vars = set_union(kept, images);
    MultilinearPoly::Terms out;
    for (const auto& [m, c] : p.terms()) {
        MultilinearPoly term = MultilinearPoly::constant(vars, c);
        for (Label l : m) {
            MultilinearPoly factor(vars, {});
            auto rule = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.first == l; });
            if (rule == rules.end()) {
                factor = MultilinearPoly::variable(vars, l);
            } else {
                MultilinearPoly::Terms t;
                for (Label s : rule->second) t[{s}] = 1;
                factor = MultilinearPoly(vars, std::move(t));
            }
            term = multiply(term, factor);
        }
        for (const auto& [mono, coeff] : term.terms()) add_term(out, mono, coeff);
    }
    return MultilinearPoly(vars, std::move(out));
}

MultilinearPoly substitute_sum(const MultilinearPoly& p, Label v, const LabelSet& s) {
    return substitute_sums(p, {{v, s}});
}

Integer evaluate(const MultilinearPoly& p, const std::map<Label, Integer>& assignment) {
    for (Label v : p.vars()) {
        if (!assignment.count(v)) throw Error(ErrorCode::MissingVariable, "no value for t" + label_to_string(v));
    }
    Integer sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer term = c;
        for (Label l : m) term *= assignment.at(l);
        sum += term;
    }
    return sum;
}

Integer evaluate(const MultilinearPoly& p, const std::vector<Integer>& values) {
    if (values.size() != p.vars().size()) {
        throw Error(ErrorCode::MissingVariable, "expected " + std::to_string(p.vars().size()) + " values");
    }
    std::map<Label, Integer> a;
    for (std::size_t i = 0; i < values.size(); ++i) a[p.vars()[i]] = values[i];
    return evaluate(p, a);
}

MultilinearPoly relabel(const MultilinearPoly& p, const std::vector<std::pair<Label, Label>>& renaming) {
    auto image = [&](Label l) {
        for (const auto& [from, to] : renaming)
            if (from == l) return to;
        return l;
    };
    LabelSet vars;
    for (Label v : p.vars()) vars.push_back(image(v));
    if (make_label_set(vars).size() != vars.size()) throw Error(ErrorCode::InvalidArgument, "renaming is not injective");
    MultilinearPoly::Terms terms;
    for (const auto& [m, c] : p.terms()) {
        LabelSet mm;
        for (Label l : m) mm.push_back(image(l));
        terms[make_label_set(mm)] = c;
    }
    return MultilinearPoly(std::move(vars), std::move(terms));
}

}  // namespace m0n
