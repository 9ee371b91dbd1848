#include "m0n/configurations.hpp"

#include <algorithm>
#include <functional>

namespace m0n {

SetPartition::SetPartition(std::vector<LabelSet> parts) {
    for (auto& p : parts) {
        p = make_label_set(std::move(p));
        if (p.empty()) throw Error(ErrorCode::InvalidPartition, "empty part");
    }
    std::sort(parts.begin(), parts.end(), [](const LabelSet& a, const LabelSet& b) { return a.front() < b.front(); });
    LabelSet seen;
    for (const auto& p : parts) {
        if (!disjoint(seen, p)) throw Error(ErrorCode::InvalidPartition, "parts overlap");
        seen = set_union(seen, p);
    }
    parts_ = std::move(parts);
}

SetPartition SetPartition::parse(std::string_view text) {
    std::vector<LabelSet> parts;
    while (true) {
        auto bar = text.find('|');
        parts.push_back(parse_label_set(text.substr(0, bar)));
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    return SetPartition(std::move(parts));
}

SetPartition SetPartition::singletons(const LabelSet& ground) {
    std::vector<LabelSet> parts;
    for (Label l : ground) parts.push_back({l});
    return SetPartition(std::move(parts));
}

LabelSet SetPartition::ground() const {
    LabelSet g;
    for (const auto& p : parts_) g = set_union(g, p);
    return g;
}

std::size_t SetPartition::part_of(Label l) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (contains(parts_[i], l)) return i;
    throw Error(ErrorCode::InvalidPartition, "label " + label_to_string(l) + " not covered");
}

std::string SetPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '|';
        out += m0n::to_string(parts_[i]);
    }
    return out;
}

std::vector<SetPartition> all_set_partitions(const LabelSet& ground) {
    std::vector<SetPartition> out;
    std::vector<LabelSet> parts;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ground.size()) {
            out.emplace_back(parts);
            return;
        }
        for (std::size_t k = 0; k < parts.size(); ++k) {
            parts[k].push_back(ground[i]);
            rec(i + 1);
            parts[k].pop_back();
        }
        parts.push_back({ground[i]});
        rec(i + 1);
        parts.pop_back();
    };
    rec(0);
    return out;
}

SetPartition type_of(const Configuration& x) { return type_of(x, range_labels(static_cast<int>(x.size()))); }

SetPartition type_of(const Configuration& x, const LabelSet& labels) {
    if (labels.size() != x.size()) throw Error(ErrorCode::InvalidArgument, "label count does not match configuration");
    std::vector<LabelSet> parts;
    std::vector<ProjPoint> values;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto it = std::find(values.begin(), values.end(), x[i]);
        if (it == values.end()) {
            values.push_back(x[i]);
            parts.push_back({labels[i]});
        } else {
            parts[static_cast<std::size_t>(it - values.begin())].push_back(labels[i]);
        }
    }
    return SetPartition(std::move(parts));
}

ProjPoint cross_ratio(std::span<const ProjPoint> x) {
    if (x.size() != 4) throw Error(ErrorCode::InvalidArgument, "cross-ratio needs four points");
    if (!all_distinct(x)) throw Error(ErrorCode::CoincidentPoints, "cross-ratio needs four distinct points");
    return ProjPoint(bracket(x[3], x[0]) * bracket(x[1], x[2]), bracket(x[1], x[0]) * bracket(x[3], x[2]));
}

bool in_small_diagonals(std::span<const ProjPoint> x) {
    if (x.size() != 4) throw Error(ErrorCode::InvalidArgument, "expected four points");
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<ProjPoint> rest;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) rest.push_back(x[i]);
        if (rest[0] == rest[1] && rest[1] == rest[2]) return true;
    }
    return false;
}

namespace {

using Coefficients = SectionForm::Coefficients;

// [ij](z) as a form: a_i b_j - a_j b_i (indices 0-based).
Coefficients bracket_form(int i, int j) {
    Coefficients c{};
    c[1u << i] += 1;
    c[1u << j] -= 1;
    return c;
}

// Product of forms in disjoint variables.
Coefficients multiply_disjoint(const Coefficients& p, const Coefficients& q) {
    Coefficients out{};
    for (unsigned s = 0; s < 16; ++s) {
        if (p[s] == 0) continue;
        for (unsigned t = 0; t < 16; ++t) {
            if (q[t] == 0) continue;
            out[s | t] += p[s] * q[t];
        }
    }
    return out;
}

}  // namespace

SectionForm::SectionForm(Coefficients raw) : coeffs_(std::move(raw)) {
    Integer g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, abs(c));
    if (g == 0) throw Error(ErrorCode::InvalidArgument, "zero section form");
    bool flip = false;
    for (const auto& c : coeffs_) {
        if (c != 0) {
            flip = c < 0;
            break;
        }
    }
    for (auto& c : coeffs_) {
        c /= g;
        if (flip) c = -c;
    }
}

Integer SectionForm::evaluate(std::span<const ProjPoint> z) const {
    if (z.size() != 4) throw Error(ErrorCode::InvalidArgument, "forms are evaluated at four points");
    Integer sum = 0;
    for (unsigned s = 0; s < 16; ++s) {
        if (coeffs_[s] == 0) continue;
        Integer term = coeffs_[s];
        for (unsigned i = 0; i < 4; ++i) term *= (s >> i & 1) ? z[i].a() : z[i].b();
        sum += term;
    }
    return sum;
}

Coefficients orbit_form_coefficients(std::span<const ProjPoint> x) {
    if (x.size() != 4) throw Error(ErrorCode::InvalidArgument, "orbit forms need four points");
    const Integer a = bracket(x[3], x[0]) * bracket(x[1], x[2]);
    const Integer b = bracket(x[1], x[0]) * bracket(x[3], x[2]);
    const auto z21_43 = multiply_disjoint(bracket_form(1, 0), bracket_form(3, 2));
    const auto z41_23 = multiply_disjoint(bracket_form(3, 0), bracket_form(1, 2));
    Coefficients out{};
    for (unsigned s = 0; s < 16; ++s) out[s] = a * z21_43[s] - b * z41_23[s];
    return out;
}

SectionForm orbit_form(std::span<const ProjPoint> x) {
    auto raw = orbit_form_coefficients(x);
    if (std::all_of(raw.begin(), raw.end(), [](const Integer& c) { return c == 0; })) {
        throw Error(ErrorCode::DegenerateConfiguration, "configuration lies in a small diagonal");
    }
    return SectionForm(std::move(raw));
}

Configuration project(const Configuration& x, const Quad& quad) {
    Configuration out;
    for (Label l : quad) {
        if (l < 1 || static_cast<std::size_t>(l) > x.size()) throw Error(ErrorCode::IndexOutOfRange, "label outside 1..n");
        out.push_back(x[static_cast<std::size_t>(l - 1)]);
    }
    return out;
}

std::map<Quad, SectionForm> orbit_ideal_forms(const Configuration& x) {
    if (x.size() < 4) throw Error(ErrorCode::InvalidArgument, "orbit ideal forms need n >= 4");
    if (type_of(x).size() < 3) throw Error(ErrorCode::TooDegenerateType, "type has fewer than three parts");
    std::map<Quad, SectionForm> out;
    for (const auto& sub : subsets_of_size(range_labels(static_cast<int>(x.size())), 4)) {
        Quad q = to_quad(sub);
        Configuration px = project(x, q);
        if (in_small_diagonals(px)) continue;
        out.emplace(q, orbit_form(px));
    }
    return out;
}

bool forms_vanish(const std::map<Quad, SectionForm>& forms, const Configuration& z) {
    for (const auto& [quad, form] : forms) {
        if (!form.vanishes_at(project(z, quad))) return false;
    }
    return true;
}

bool in_orbit_closure(const Configuration& x, const Configuration& z) {
    if (x.size() < 4) throw Error(ErrorCode::InvalidArgument, "orbit closure membership needs n >= 4");
    if (z.size() != x.size()) throw Error(ErrorCode::InvalidArgument, "configurations differ in length");
    if (!all_distinct(x)) throw Error(ErrorCode::InvalidArgument, "x must have pairwise distinct coordinates");
    return forms_vanish(orbit_ideal_forms(x), z);
}

}  // namespace m0n
