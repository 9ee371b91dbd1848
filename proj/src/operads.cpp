#include "m0n/operads.hpp"

#include <algorithm>
#include <functional>

namespace m0n {

Signature::Signature(LabelSet labels, Values values) : labels_(make_label_set(std::move(labels))), values_(std::move(values)) {
    if (labels_.size() < 3) throw Error(ErrorCode::TooFewMarkings, "signatures need at least three labels");
    const auto quads = subsets_of_size(labels_, 4);
    if (values_.size() != quads.size()) throw Error(ErrorCode::InvalidArgument, "signature is not total");
    for (const auto& q : quads) {
        if (!values_.count(to_quad(q))) throw Error(ErrorCode::InvalidArgument, "signature misses " + to_string(q));
    }
}

const M04Point& Signature::at(const Quad& q) const {
    auto it = values_.find(q);
    if (it == values_.end()) throw Error(ErrorCode::InvalidArgument, "4-subset outside the signature");
    return it->second;
}

Signature signature_of(const DecoratedStableTree& t) {
    if (t.markings().size() < 3) throw Error(ErrorCode::TooFewMarkings, "signatures need at least three markings");
    Signature::Values values;
    for (const auto& j : subsets_of_size(t.markings(), 4)) values.emplace(to_quad(j), m04_point_of(stabilize(t, j)));
    return Signature(t.markings(), std::move(values));
}

Signature p_project(const Signature& s, const LabelSet& k) {
    LabelSet target = make_label_set(k);
    if (target.size() < 3) throw Error(ErrorCode::TooFewMarkings, "projection needs at least three labels");
    if (!is_subset(target, s.labels())) throw Error(ErrorCode::InvalidArgument, "projection target not a subset");
    Signature::Values values;
    for (const auto& j : subsets_of_size(target, 4)) values.emplace(to_quad(j), s.at(to_quad(j)));
    return Signature(std::move(target), std::move(values));
}

namespace {

// x at (part + leg), transported to (part + other).
M04Point across(const Signature& x, const LabelSet& part, Label leg, Label other) {
    Quad from = to_quad(with_label(part, leg));
    std::array<Label, 4> to = from;
    std::replace(to.begin(), to.end(), leg, other);
    return relabel(x.at(from), from, to);
}

}  // namespace

Signature p_compose(const Signature& x, const Signature& y, Label leg_x, Label leg_y) {
    if (!contains(x.labels(), leg_x) || !contains(y.labels(), leg_y)) {
        throw Error(ErrorCode::InvalidArgument, "composition leg is not a label");
    }
    const LabelSet i = without_label(x.labels(), leg_x);
    const LabelSet j = without_label(y.labels(), leg_y);
    if (!disjoint(i, j)) throw Error(ErrorCode::OverlappingLabels, "composed signatures share labels");
    const LabelSet all = set_union(i, j);
    Signature::Values values;
    for (const auto& k : subsets_of_size(all, 4)) {
        const Quad q = to_quad(k);
        const LabelSet ki = set_intersection(k, i);
        const LabelSet kj = set_intersection(k, j);
        if (kj.empty()) {
            values.emplace(q, x.at(q));
        } else if (ki.empty()) {
            values.emplace(q, y.at(q));
        } else if (ki.size() == 3) {
            values.emplace(q, across(x, ki, leg_x, kj.front()));
        } else if (kj.size() == 3) {
            values.emplace(q, across(y, kj, leg_y, ki.front()));
        } else {
            values.emplace(q, M04Point::boundary({ki[0], ki[1]}, {kj[0], kj[1]}));
        }
    }
    return Signature(all, std::move(values));
}

Signature relabel(const Signature& s, const std::vector<std::pair<Label, Label>>& renaming) {
    auto image = [&](Label l) {
        for (const auto& [from, to] : renaming)
            if (from == l) return to;
        return l;
    };
    LabelSet labels;
    for (Label l : s.labels()) labels.push_back(image(l));
    if (make_label_set(labels).size() != labels.size()) throw Error(ErrorCode::InvalidArgument, "renaming is not injective");
    Signature::Values values;
    for (const auto& [q, p] : s.values()) {
        std::array<Label, 4> to{image(q[0]), image(q[1]), image(q[2]), image(q[3])};
        Quad sorted = to;
        std::sort(sorted.begin(), sorted.end());
        values.emplace(sorted, relabel(p, q, to));
    }
    return Signature(std::move(labels), std::move(values));
}

std::map<Quad, std::optional<M04Point::Boundary>> boundary_pattern(const Signature& s) {
    std::map<Quad, std::optional<M04Point::Boundary>> out;
    for (const auto& [q, p] : s.values()) {
        if (p.is_boundary()) out.emplace(q, p.split());
        else out.emplace(q, std::nullopt);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::uint64_t AxiomReport::total_violations() const {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.violations;
    return n;
}

std::uint64_t AxiomReport::total_instances() const {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.instances;
    return n;
}

namespace {

class Recorder {
public:
    Recorder(AxiomReport& report, std::size_t max_failures) : report_(report), max_failures_(max_failures) {}

    void operator()(const std::string& operad, const std::string& axiom, bool ok, const std::function<std::string()>& detail) {
        auto key = std::make_pair(operad, axiom);
        auto it = index_.find(key);
        if (it == index_.end()) {
            it = index_.emplace(key, report_.checks.size()).first;
            report_.checks.push_back({operad, axiom, 0, 0});
        }
        auto& check = report_.checks[it->second];
        ++check.instances;
        if (ok) return;
        ++check.violations;
        if (report_.failures.size() < max_failures_) report_.failures.push_back(operad + " / " + axiom + ": " + detail());
    }

private:
    AxiomReport& report_;
    std::size_t max_failures_;
    std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    Signature signature(const LabelSet& labels) {
        Signature::Values values;
        for (const auto& q : subsets_of_size(labels, 4)) {
            auto kind = random_int(rng_, 0, 3);
            if (kind == 0) {
                values.emplace(to_quad(q), M04Point::boundary({q[0], q[1]}, {q[2], q[3]}));
            } else if (kind == 1) {
                values.emplace(to_quad(q), M04Point::boundary({q[0], q[2]}, {q[1], q[3]}));
            } else if (kind == 2) {
                values.emplace(to_quad(q), M04Point::boundary({q[0], q[3]}, {q[1], q[2]}));
            } else {
                ProjPoint v = random_point(rng_);
                while (v == ProjPoint(0) || v == ProjPoint(1) || v.is_infinity()) v = random_point(rng_);
                values.emplace(to_quad(q), M04Point::interior(v));
            }
        }
        return Signature(labels, std::move(values));
    }

    DecoratedStableTree tree(const LabelSet& labels) {
        const int n = static_cast<int>(labels.size());
        auto& types = types_[n];
        if (types.empty()) types = enumerate_stable_trees(n);
        const auto& t = types[static_cast<std::size_t>(random_int(rng_, 0, static_cast<std::int64_t>(types.size()) - 1))];
        std::vector<std::pair<Label, Label>> renaming;
        for (int i = 0; i < n; ++i) renaming.emplace_back(i + 1, labels[static_cast<std::size_t>(i)]);
        return relabel(decorate_random(t, rng_, 6), renaming);
    }

    ChowClass chow(const LabelSet& labels) {
        ChowClass::Terms terms;
        for (const auto& s : subsets_of_size(labels, 3)) terms[s] = random_int(rng_, -3, 3);
        return ChowClass(labels, 3, std::move(terms));
    }

    LabelSet random_superset(const LabelSet& inner, const LabelSet& outer) {
        LabelSet out = inner;
        for (Label l : set_difference(outer, inner))
            if (random_int(rng_, 0, 1)) out.push_back(l);
        return make_label_set(out);
    }

    Rng& rng() { return rng_; }

private:
    Rng rng_;
    std::map<int, std::vector<StableTree>> types_;
};

std::string show(const Signature& s) {
    std::string out = "{";
    for (const auto& [q, p] : s.values()) out += " " + to_string(from_quad(q)) + ":" + p.to_string();
    return out + " }";
}

std::string show(const DecoratedStableTree& t) { return t.tree().to_string(); }
std::string show(const ChowClass& c) { return c.to_string(); }

template <typename T>
std::function<std::string()> mismatch(const LabelSet& where, const T& lhs, const T& rhs) {
    return [=] { return "I=" + to_string(where) + " lhs=" + show(lhs) + " rhs=" + show(rhs); };
}

}  // namespace

AxiomReport check_procyclic_axioms(const AxiomOptions& options) {
    if (options.max_n < 4 || options.max_n > 8) throw Error(ErrorCode::OutOfRange, "max_n must lie in 4..8");
    AxiomReport report;
    Recorder record(report, options.max_failures);
    Generator gen(options.seed);

    for (int n = 4; n <= options.max_n; ++n) {
        const LabelSet all = range_labels(n);
        for (const auto& k : all_subsets(all)) {
            if (k.size() < 2 || k.size() + 2 > all.size()) continue;
            const LabelSet l = set_difference(all, k);
            const LabelSet k_leg = with_label(k, kStar);
            const LabelSet l_leg = with_label(l, kStar);
            for (int sample = 0; sample < options.samples_per_split; ++sample) {
                const Signature x = gen.signature(k_leg), y = gen.signature(l_leg);
                const Signature xy = p_compose(x, y);
                const DecoratedStableTree a = gen.tree(k_leg), b = gen.tree(l_leg);
                const DecoratedStableTree ab = glue(a, b);
                const ChowClass ck = gen.chow(k_leg), cl = gen.chow(l_leg);
                const ChowClass cg = pushforward_glue(ck, cl);
                const Signature sig_ab = signature_of(ab);
                const ChowClass cyc_ab = tree_cycle_class(ab.tree());

                record("P", "symmetry", p_compose(y, x) == xy, mismatch(all, p_compose(y, x), xy));
                record("tree", "symmetry", glue(b, a) == ab, mismatch(all, glue(b, a), ab));
                record("chow", "symmetry", pushforward_glue(cl, ck) == cg, mismatch(all, pushforward_glue(cl, ck), cg));

                const Signature composed_sig = p_compose(signature_of(a), signature_of(b));
                record("tree->P", "composition square", sig_ab == composed_sig, mismatch(all, sig_ab, composed_sig));
                const ChowClass composed_cyc = pushforward_glue(tree_cycle_class(a.tree()), tree_cycle_class(b.tree()));
                record("tree->chow", "composition square", cyc_ab == composed_cyc, mismatch(all, cyc_ab, composed_cyc));

                for (const auto& i : all_subsets(all)) {
                    if (i.size() < 3) continue;
                    const LabelSet ik = set_intersection(i, k), il = set_intersection(i, l);
                    const Signature lhs_p = p_project(xy, i);
                    const DecoratedStableTree lhs_t = stabilize(ab, i);
                    const ChowClass lhs_c = pushforward_projection(cg, i);
                    Signature rhs_p;
                    DecoratedStableTree rhs_t;
                    ChowClass rhs_c;
                    std::string axiom;
                    if (ik.size() >= 2 && il.size() >= 2) {
                        axiom = "boundary square";
                        rhs_p = p_compose(p_project(x, with_label(ik, kStar)), p_project(y, with_label(il, kStar)));
                        rhs_t = glue(stabilize(a, with_label(ik, kStar)), stabilize(b, with_label(il, kStar)));
                        rhs_c = pushforward_glue(pushforward_projection(ck, with_label(ik, kStar)),
                                                 pushforward_projection(cl, with_label(il, kStar)));
                    } else if (il.empty() || ik.empty()) {
                        axiom = "one side forgotten";
                        const bool in_k = il.empty();
                        rhs_p = p_project(in_k ? x : y, i);
                        rhs_t = stabilize(in_k ? a : b, i);
                        rhs_c = pushforward_projection(in_k ? ck : cl, i);
                    } else {
                        axiom = "one marking across";
                        const bool in_k = il.size() == 1;
                        const LabelSet& big = in_k ? ik : il;
                        const Label single = in_k ? il.front() : ik.front();
                        const std::vector<std::pair<Label, Label>> to_single{{kStar, single}};
                        rhs_p = relabel(p_project(in_k ? x : y, with_label(big, kStar)), to_single);
                        rhs_t = relabel(stabilize(in_k ? a : b, with_label(big, kStar)), to_single);
                        rhs_c = relabel(pushforward_projection(in_k ? ck : cl, with_label(big, kStar)), to_single);
                    }
                    record("P", axiom, lhs_p == rhs_p, mismatch(i, lhs_p, rhs_p));
                    record("tree", axiom, lhs_t == rhs_t, mismatch(i, lhs_t, rhs_t));
                    record("chow", axiom, lhs_c == rhs_c, mismatch(i, lhs_c, rhs_c));

                    const LabelSet j = gen.random_superset(i, all);
                    const Signature via_p = p_project(p_project(xy, j), i);
                    record("P", "projection functoriality", via_p == lhs_p, mismatch(i, via_p, lhs_p));
                    const DecoratedStableTree via_t = stabilize(stabilize(ab, j), i);
                    record("tree", "projection functoriality", via_t == lhs_t, mismatch(i, via_t, lhs_t));
                    const ChowClass via_c = pushforward_projection(pushforward_projection(cg, j), i);
                    record("chow", "projection functoriality", via_c == lhs_c, mismatch(i, via_c, lhs_c));

                    const Signature nat_p = signature_of(lhs_t);
                    const Signature proj_sig = p_project(sig_ab, i);
                    record("tree->P", "projection square", nat_p == proj_sig, mismatch(i, nat_p, proj_sig));
                    const ChowClass nat_c = tree_cycle_class(lhs_t.tree());
                    const ChowClass proj_cyc = pushforward_projection(cyc_ab, i);
                    record("tree->chow", "projection square", nat_c == proj_cyc, mismatch(i, nat_c, proj_cyc));
                }

                // Associativity: x on K + {*}, y on L1 + {-1, -2}, z on L2 + {*}.
                if (l.size() >= 3) {
                    LabelSet l1, l2;
                    while (l1.empty() || l2.size() < 2) {
                        l1.clear();
                        l2.clear();
                        for (Label m : l) (random_int(gen.rng(), 0, 1) ? l1 : l2).push_back(m);
                    }
                    const Label b1 = -1, b2 = -2;
                    const LabelSet mid = with_label(with_label(l1, b1), b2);
                    const LabelSet z_leg = with_label(l2, kStar);
                    {
                        const Signature ym = gen.signature(mid), z = gen.signature(z_leg);
                        const Signature left = p_compose(p_compose(x, ym, kStar, b1), z, b2, kStar);
                        const Signature right = p_compose(x, p_compose(ym, z, b2, kStar), kStar, b1);
                        record("P", "associativity", left == right, mismatch(all, left, right));
                    }
                    {
                        const DecoratedStableTree ym = gen.tree(mid), z = gen.tree(z_leg);
                        const DecoratedStableTree left = glue(glue(a, ym, kStar, b1), z, b2, kStar);
                        const DecoratedStableTree right = glue(a, glue(ym, z, b2, kStar), kStar, b1);
                        record("tree", "associativity", left == right, mismatch(all, left, right));
                    }
                    {
                        const ChowClass ym = gen.chow(mid), z = gen.chow(z_leg);
                        const ChowClass left = pushforward_glue(pushforward_glue(ck, ym, kStar, b1), z, b2, kStar);
                        const ChowClass right = pushforward_glue(ck, pushforward_glue(ym, z, b2, kStar), kStar, b1);
                        record("chow", "associativity", left == right, mismatch(all, left, right));
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace m0n
