#include "m0n/trees.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

namespace m0n {

namespace {

struct Adjacency {
    std::vector<std::vector<std::size_t>> edges_at;  // edge ids per vertex
};

Adjacency adjacency(std::size_t nv, const std::vector<TreeEdge>& edges) {
    Adjacency adj{std::vector<std::vector<std::size_t>>(nv)};
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj.edges_at[edges[e].v].push_back(e);
        adj.edges_at[edges[e].w].push_back(e);
    }
    return adj;
}

std::size_t far_end(const TreeEdge& e, std::size_t v) { return e.v == v ? e.w : e.v; }

ProjPoint default_position(std::size_t k) {
    if (k == 0) return ProjPoint(0);
    if (k == 1) return ProjPoint(1);
    if (k == 2) return ProjPoint::infinity();
    return ProjPoint(static_cast<long long>(k) - 1);
}

// Vertex permutation and edge orientation putting a valid tree in canonical
// form.
struct CanonicalOrder {
    std::vector<std::size_t> new_of_old;
    std::vector<std::size_t> old_edge_of_new;
    std::vector<bool> flipped;  // indexed by new edge
    std::vector<TreeEdge> new_edges;
};

CanonicalOrder canonical_order(const LabelSet& markings, const std::vector<LabelSet>& marks,
                               const std::vector<TreeEdge>& edges) {
    const std::size_t nv = marks.size();
    std::size_t root = 0;
    for (std::size_t v = 0; v < nv; ++v)
        if (contains(marks[v], markings.front())) root = v;
    auto adj = adjacency(nv, edges);
    std::vector<std::size_t> parent_edge(nv, SIZE_MAX), depth(nv, 0), order;
    std::vector<bool> seen(nv, false);
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (std::size_t e : adj.edges_at[v]) {
            std::size_t u = far_end(edges[e], v);
            if (seen[u]) continue;
            seen[u] = true;
            parent_edge[u] = e;
            depth[u] = depth[v] + 1;
            queue.push_back(u);
        }
    }
    std::vector<Label> min_below(nv, std::numeric_limits<Label>::max());
    std::vector<std::size_t> size_below(nv, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t v = *it;
        for (Label l : marks[v]) min_below[v] = std::min(min_below[v], l);
        size_below[v] += marks[v].size();
        if (parent_edge[v] != SIZE_MAX) {
            std::size_t p = far_end(edges[parent_edge[v]], v);
            min_below[p] = std::min(min_below[p], min_below[v]);
            size_below[p] += size_below[v];
        }
    }
    std::vector<std::size_t> by_rank(nv);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) {
        return std::make_tuple(min_below[a], -static_cast<long>(size_below[a]), depth[a]) <
               std::make_tuple(min_below[b], -static_cast<long>(size_below[b]), depth[b]);
    });
    CanonicalOrder out;
    out.new_of_old.assign(nv, 0);
    for (std::size_t r = 0; r < nv; ++r) out.new_of_old[by_rank[r]] = r;
    std::vector<std::size_t> old_edges(edges.size());
    std::iota(old_edges.begin(), old_edges.end(), 0);
    std::vector<std::size_t> child_of_edge(edges.size());
    for (std::size_t v = 0; v < nv; ++v)
        if (parent_edge[v] != SIZE_MAX) child_of_edge[parent_edge[v]] = v;
    std::sort(old_edges.begin(), old_edges.end(), [&](std::size_t a, std::size_t b) {
        return out.new_of_old[child_of_edge[a]] < out.new_of_old[child_of_edge[b]];
    });
    for (std::size_t e : old_edges) {
        std::size_t child = child_of_edge[e];
        std::size_t parent = far_end(edges[e], child);
        out.old_edge_of_new.push_back(e);
        out.flipped.push_back(edges[e].v != parent);
        out.new_edges.push_back({out.new_of_old[parent], out.new_of_old[child]});
    }
    return out;
}

// Mutable form used by glue and stabilize.
struct WorkSpecial {
    bool is_edge = false;
    Label label = 0;
    std::size_t edge = 0;
    ProjPoint pos;
};

struct WorkTree {
    std::vector<std::vector<WorkSpecial>> verts;
    std::vector<bool> vert_alive;
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<bool> edge_alive;

    std::size_t add_vertex() {
        verts.emplace_back();
        vert_alive.push_back(true);
        return verts.size() - 1;
    }
    std::size_t add_edge(std::size_t v, std::size_t w) {
        edges.push_back({v, w});
        edge_alive.push_back(true);
        return edges.size() - 1;
    }
    const WorkSpecial& special_for_edge(std::size_t v, std::size_t e) const {
        for (const auto& s : verts[v])
            if (s.is_edge && s.edge == e) return s;
        throw Error(ErrorCode::InvalidTree, "corrupt work tree");
    }
    WorkSpecial& special_for_edge(std::size_t v, std::size_t e) {
        return const_cast<WorkSpecial&>(std::as_const(*this).special_for_edge(v, e));
    }
    std::size_t other(std::size_t e, std::size_t v) const { return edges[e][0] == v ? edges[e][1] : edges[e][0]; }
};

WorkTree to_work(const DecoratedStableTree& t) {
    WorkTree w;
    const auto& tree = t.tree();
    for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
        w.add_vertex();
        for (std::size_t i = 0; i < tree.marks(v).size(); ++i)
            w.verts[v].push_back({false, tree.marks(v)[i], 0, t.mark_positions(v)[i]});
    }
    for (std::size_t e = 0; e < tree.edges().size(); ++e) {
        const auto& edge = tree.edges()[e];
        w.add_edge(edge.v, edge.w);
        w.verts[edge.v].push_back({true, 0, e, t.edge_positions(e)[0]});
        w.verts[edge.w].push_back({true, 0, e, t.edge_positions(e)[1]});
    }
    return w;
}

// Appends b's vertices and edges after a's.
void append(WorkTree& a, const WorkTree& b) {
    std::size_t voff = a.verts.size(), eoff = a.edges.size();
    for (std::size_t v = 0; v < b.verts.size(); ++v) {
        a.verts.push_back(b.verts[v]);
        a.vert_alive.push_back(b.vert_alive[v]);
        for (auto& s : a.verts.back())
            if (s.is_edge) s.edge += eoff;
    }
    for (std::size_t e = 0; e < b.edges.size(); ++e) {
        a.edges.push_back({b.edges[e][0] + voff, b.edges[e][1] + voff});
        a.edge_alive.push_back(b.edge_alive[e]);
    }
}

DecoratedStableTree from_work(const WorkTree& w) {
    std::vector<std::size_t> new_index(w.verts.size(), SIZE_MAX);
    std::vector<MarkedPoints> vertices;
    LabelSet markings;
    for (std::size_t v = 0; v < w.verts.size(); ++v) {
        if (!w.vert_alive[v]) continue;
        new_index[v] = vertices.size();
        MarkedPoints mp;
        for (const auto& s : w.verts[v]) {
            if (s.is_edge) continue;
            mp.emplace_back(s.label, s.pos);
            markings.push_back(s.label);
        }
        vertices.push_back(std::move(mp));
    }
    std::vector<DecoratedEdge> edges;
    for (std::size_t e = 0; e < w.edges.size(); ++e) {
        if (!w.edge_alive[e]) continue;
        auto [v, u] = w.edges[e];
        edges.push_back({new_index[v], new_index[u], w.special_for_edge(v, e).pos, w.special_for_edge(u, e).pos});
    }
    return DecoratedStableTree(make_label_set(std::move(markings)), std::move(vertices), std::move(edges));
}

void require_valid(const StableTree& t, const char* what) {
    auto report = validate(t);
    if (!report.ok()) throw Error(ErrorCode::InvalidTree, std::string(what) + ": " + report.violations.front());
}

void require_valid(const DecoratedStableTree& t, const char* what) {
    auto report = validate(t);
    if (!report.ok()) throw Error(ErrorCode::InvalidTree, std::string(what) + ": " + report.violations.front());
}

StableTree strip(const DecoratedStableTree& t) { return t.tree(); }

}  // namespace

// ---------------------------------------------------------------------------
// StableTree

StableTree::StableTree(LabelSet markings, std::vector<LabelSet> vertex_marks, std::vector<TreeEdge> edges)
    : markings_(make_label_set(std::move(markings))), marks_(std::move(vertex_marks)), edges_(std::move(edges)) {
    for (auto& m : marks_) std::sort(m.begin(), m.end());
    if (!validate(*this).ok()) return;
    auto order = canonical_order(markings_, marks_, edges_);
    std::vector<LabelSet> marks(marks_.size());
    for (std::size_t v = 0; v < marks_.size(); ++v) marks[order.new_of_old[v]] = std::move(marks_[v]);
    marks_ = std::move(marks);
    edges_ = std::move(order.new_edges);
}

StableTree StableTree::single_vertex(LabelSet markings) {
    LabelSet m = make_label_set(std::move(markings));
    return StableTree(m, {m}, {});
}

std::size_t StableTree::vertex_of(Label l) const {
    for (std::size_t v = 0; v < marks_.size(); ++v)
        if (contains(marks_[v], l)) return v;
    throw Error(ErrorCode::InvalidArgument, "marking " + label_to_string(l) + " not in tree");
}

std::vector<std::size_t> StableTree::incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].v == v || edges_[e].w == v) out.push_back(e);
    return out;
}

std::size_t StableTree::special_count(std::size_t v) const { return marks_.at(v).size() + incident_edges(v).size(); }

std::size_t StableTree::other_end(std::size_t edge, std::size_t v) const { return far_end(edges_.at(edge), v); }

LabelSet StableTree::side_markings(std::size_t edge, std::size_t side) const {
    const TreeEdge& cut = edges_.at(edge);
    std::size_t start = side == 0 ? cut.v : cut.w;
    std::vector<bool> seen(marks_.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    LabelSet out;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        out.insert(out.end(), marks_[v].begin(), marks_[v].end());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (e == edge) continue;
            const auto& ed = edges_[e];
            std::size_t u;
            if (ed.v == v) u = ed.w;
            else if (ed.w == v) u = ed.v;
            else continue;
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    return make_label_set(std::move(out));
}

std::string StableTree::to_string() const {
    std::string out;
    for (std::size_t v = 0; v < marks_.size(); ++v) out += "[" + m0n::to_string(marks_[v]) + "]";
    for (const auto& e : edges_) out += " " + std::to_string(e.v) + "-" + std::to_string(e.w);
    return out;
}

bool operator<(const StableTree& a, const StableTree& b) {
    std::vector<std::pair<std::size_t, std::size_t>> ea, eb;
    for (const auto& x : a.edges_) ea.emplace_back(x.v, x.w);
    for (const auto& x : b.edges_) eb.emplace_back(x.v, x.w);
    return std::tie(a.markings_, a.marks_, ea) < std::tie(b.markings_, b.marks_, eb);
}

std::vector<LabelSet> node_splits(const StableTree& t) {
    std::vector<LabelSet> out;
    for (std::size_t e = 0; e < t.edges().size(); ++e) out.push_back(t.side_markings(e, 1));
    return out;
}

ValidationReport validate(const StableTree& t) {
    ValidationReport r;
    const std::size_t nv = t.num_vertices();
    if (nv == 0) {
        r.violations.push_back("tree has no vertices");
        return r;
    }
    bool edges_ok = true;
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        const auto& ed = t.edges()[e];
        if (ed.v >= nv || ed.w >= nv) {
            r.violations.push_back("edge " + std::to_string(e) + " has an endpoint out of range");
            edges_ok = false;
        } else if (ed.v == ed.w) {
            r.violations.push_back("edge " + std::to_string(e) + " is a loop");
            edges_ok = false;
        }
    }
    if (edges_ok) {
        if (t.edges().size() + 1 != nv) {
            r.violations.push_back("graph is not a tree: " + std::to_string(nv) + " vertices, " +
                                   std::to_string(t.edges().size()) + " edges");
        } else {
            std::vector<bool> seen(nv, false);
            std::vector<std::size_t> stack{0};
            seen[0] = true;
            std::size_t count = 0;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                ++count;
                for (const auto& ed : t.edges()) {
                    std::size_t u;
                    if (ed.v == v) u = ed.w;
                    else if (ed.w == v) u = ed.v;
                    else continue;
                    if (!seen[u]) {
                        seen[u] = true;
                        stack.push_back(u);
                    }
                }
            }
            if (count != nv) r.violations.push_back("graph is not connected");
        }
    }
    std::vector<Label> placed;
    for (std::size_t v = 0; v < nv; ++v) placed.insert(placed.end(), t.marks(v).begin(), t.marks(v).end());
    std::sort(placed.begin(), placed.end());
    if (std::adjacent_find(placed.begin(), placed.end()) != placed.end()) {
        r.violations.push_back("a marking sits on more than one vertex");
    }
    if (make_label_set(placed) != t.markings()) {
        r.violations.push_back("vertex markings do not partition the marking set");
    }
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t deg = 0;
        for (const auto& ed : t.edges())
            if (ed.v == v || ed.w == v) ++deg;
        if (t.marks(v).size() + deg < 3) {
            r.violations.push_back("vertex " + std::to_string(v) + " is unstable: " + std::to_string(t.marks(v).size()) +
                                   " marks + " + std::to_string(deg) + " edges < 3");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// DecoratedStableTree

DecoratedStableTree::DecoratedStableTree(LabelSet markings, std::vector<MarkedPoints> vertices,
                                         std::vector<DecoratedEdge> edges) {
    tree_.markings_ = make_label_set(std::move(markings));
    for (auto& mp : vertices) {
        std::sort(mp.begin(), mp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        LabelSet m;
        std::vector<ProjPoint> pos;
        for (auto& [l, p] : mp) {
            m.push_back(l);
            pos.push_back(std::move(p));
        }
        tree_.marks_.push_back(std::move(m));
        mark_pos_.push_back(std::move(pos));
    }
    for (auto& e : edges) {
        tree_.edges_.push_back({e.v, e.w});
        edge_pos_.push_back({std::move(e.pos_v), std::move(e.pos_w)});
    }
    if (!validate(tree_).ok()) return;
    auto order = canonical_order(tree_.markings_, tree_.marks_, tree_.edges_);
    std::vector<LabelSet> marks(tree_.marks_.size());
    std::vector<std::vector<ProjPoint>> mpos(tree_.marks_.size());
    for (std::size_t v = 0; v < marks.size(); ++v) {
        marks[order.new_of_old[v]] = std::move(tree_.marks_[v]);
        mpos[order.new_of_old[v]] = std::move(mark_pos_[v]);
    }
    std::vector<std::array<ProjPoint, 2>> epos;
    for (std::size_t ne = 0; ne < order.old_edge_of_new.size(); ++ne) {
        auto p = edge_pos_[order.old_edge_of_new[ne]];
        if (order.flipped[ne]) std::swap(p[0], p[1]);
        epos.push_back(std::move(p));
    }
    tree_.marks_ = std::move(marks);
    tree_.edges_ = std::move(order.new_edges);
    mark_pos_ = std::move(mpos);
    edge_pos_ = std::move(epos);
}

const ProjPoint& DecoratedStableTree::edge_position_at(std::size_t e, std::size_t v) const {
    const auto& ed = tree_.edges().at(e);
    if (ed.v == v) return edge_pos_[e][0];
    if (ed.w == v) return edge_pos_[e][1];
    throw Error(ErrorCode::InvalidArgument, "vertex is not an endpoint of the edge");
}

const ProjPoint& DecoratedStableTree::mark_position(Label l) const {
    std::size_t v = tree_.vertex_of(l);
    auto it = std::lower_bound(tree_.marks(v).begin(), tree_.marks(v).end(), l);
    return mark_pos_[v][static_cast<std::size_t>(it - tree_.marks(v).begin())];
}

ValidationReport validate(const DecoratedStableTree& t) {
    ValidationReport r = validate(t.tree());
    if (!r.ok()) return r;
    const auto& tree = t.tree();
    for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
        std::vector<ProjPoint> special = t.mark_positions(v);
        for (std::size_t e : tree.incident_edges(v)) special.push_back(t.edge_position_at(e, v));
        if (!all_distinct(special)) {
            r.violations.push_back("vertex " + std::to_string(v) + " has coincident special points");
        }
    }
    return r;
}

namespace {

template <typename PositionFn>
DecoratedStableTree decorate_with(const StableTree& t, PositionFn next_positions) {
    std::vector<MarkedPoints> vertices(t.num_vertices());
    std::vector<DecoratedEdge> edges;
    for (const auto& e : t.edges()) edges.push_back({e.v, e.w, {}, {}});
    for (std::size_t v = 0; v < t.num_vertices(); ++v) {
        auto inc = t.incident_edges(v);
        std::vector<ProjPoint> pos = next_positions(t.marks(v).size() + inc.size());
        std::size_t k = 0;
        for (Label l : t.marks(v)) vertices[v].emplace_back(l, pos[k++]);
        for (std::size_t e : inc) {
            if (t.edges()[e].v == v) edges[e].pos_v = pos[k++];
            else edges[e].pos_w = pos[k++];
        }
    }
    return DecoratedStableTree(t.markings(), std::move(vertices), std::move(edges));
}

}  // namespace

DecoratedStableTree decorate_default(const StableTree& t) {
    require_valid(t, "decorate_default");
    return decorate_with(t, [](std::size_t k) {
        std::vector<ProjPoint> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(default_position(i));
        return out;
    });
}

DecoratedStableTree decorate_random(const StableTree& t, Rng& rng, std::int64_t height) {
    require_valid(t, "decorate_random");
    return decorate_with(t, [&](std::size_t k) { return random_distinct_configuration(rng, k, height); });
}

DecoratedStableTree smooth_curve(const LabelSet& labels, const Configuration& x) {
    if (labels.size() != x.size()) throw Error(ErrorCode::InvalidArgument, "label count does not match configuration");
    MarkedPoints mp;
    for (std::size_t i = 0; i < x.size(); ++i) mp.emplace_back(labels[i], x[i]);
    DecoratedStableTree t(labels, {mp}, {});
    require_valid(t, "smooth_curve");
    return t;
}

namespace {

Label rename(Label l, const std::vector<std::pair<Label, Label>>& renaming) {
    for (const auto& [from, to] : renaming)
        if (from == l) return to;
    return l;
}

}  // namespace

StableTree relabel(const StableTree& t, const std::vector<std::pair<Label, Label>>& renaming) {
    return relabel(decorate_default(t), renaming).tree();
}

DecoratedStableTree relabel(const DecoratedStableTree& t, const std::vector<std::pair<Label, Label>>& renaming) {
    require_valid(t, "relabel");
    WorkTree w = to_work(t);
    std::vector<Label> image;
    for (auto& vert : w.verts)
        for (auto& s : vert)
            if (!s.is_edge) {
                s.label = rename(s.label, renaming);
                image.push_back(s.label);
            }
    if (make_label_set(image).size() != image.size()) {
        throw Error(ErrorCode::InvalidArgument, "relabeling is not injective");
    }
    return from_work(w);
}

// ---------------------------------------------------------------------------
// glue / stabilize

DecoratedStableTree glue(const DecoratedStableTree& a, const DecoratedStableTree& b, Label leg_a, Label leg_b) {
    require_valid(a, "glue");
    require_valid(b, "glue");
    if (!contains(a.markings(), leg_a) || !contains(b.markings(), leg_b)) {
        throw Error(ErrorCode::InvalidArgument, "gluing leg is not a marking");
    }
    if (!disjoint(without_label(a.markings(), leg_a), without_label(b.markings(), leg_b))) {
        throw Error(ErrorCode::OverlappingMarkingSets, "glued trees share markings");
    }
    WorkTree w = to_work(a);
    const std::size_t voff = w.verts.size();
    append(w, to_work(b));
    std::size_t va = a.tree().vertex_of(leg_a);
    std::size_t vb = b.tree().vertex_of(leg_b) + voff;
    std::size_t e = w.add_edge(va, vb);
    for (auto& s : w.verts[va])
        if (!s.is_edge && s.label == leg_a) {
            s.is_edge = true;
            s.edge = e;
        }
    for (auto& s : w.verts[vb])
        if (!s.is_edge && s.label == leg_b) {
            s.is_edge = true;
            s.edge = e;
        }
    return from_work(w);
}

StableTree glue(const StableTree& a, const StableTree& b, Label leg_a, Label leg_b) {
    return strip(glue(decorate_default(a), decorate_default(b), leg_a, leg_b));
}

DecoratedStableTree stabilize(const DecoratedStableTree& t, const LabelSet& keep) {
    require_valid(t, "stabilize");
    if (keep.size() < 3) throw Error(ErrorCode::TooFewMarkings, "stabilization needs at least three markings");
    if (!is_subset(keep, t.markings())) throw Error(ErrorCode::InvalidArgument, "kept markings not in tree");
    WorkTree w = to_work(t);
    for (auto& vert : w.verts) {
        std::erase_if(vert, [&](const WorkSpecial& s) { return !s.is_edge && !contains(keep, s.label); });
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < w.verts.size(); ++v) {
            if (!w.vert_alive[v] || w.verts[v].size() >= 3) continue;
            auto& specials = w.verts[v];
            if (specials.size() == 1 && specials[0].is_edge) {
                std::size_t e = specials[0].edge;
                std::size_t u = w.other(e, v);
                std::erase_if(w.verts[u], [&](const WorkSpecial& s) { return s.is_edge && s.edge == e; });
                w.edge_alive[e] = false;
            } else if (specials.size() == 2 && specials[0].is_edge != specials[1].is_edge) {
                const WorkSpecial& mark = specials[0].is_edge ? specials[1] : specials[0];
                std::size_t e = specials[0].is_edge ? specials[0].edge : specials[1].edge;
                std::size_t u = w.other(e, v);
                WorkSpecial& at_u = w.special_for_edge(u, e);
                at_u.is_edge = false;
                at_u.label = mark.label;
                w.edge_alive[e] = false;
            } else if (specials.size() == 2 && specials[0].is_edge) {
                std::size_t e1 = specials[0].edge, e2 = specials[1].edge;
                std::size_t u1 = w.other(e1, v), u2 = w.other(e2, v);
                w.special_for_edge(u2, e2).edge = e1;
                w.edges[e1] = {u1, u2};
                w.edge_alive[e2] = false;
            } else {
                throw Error(ErrorCode::InvalidTree, "stabilize reached a component with no node");
            }
            w.vert_alive[v] = false;
            specials.clear();
            changed = true;
        }
    }
    return from_work(w);
}

StableTree stabilize(const StableTree& t, const LabelSet& keep) { return strip(stabilize(decorate_default(t), keep)); }

std::pair<StableTree, StableTree> cut_at_node(const StableTree& t, std::size_t edge, Label leg) {
    require_valid(t, "cut_at_node");
    if (edge >= t.edges().size()) throw Error(ErrorCode::IndexOutOfRange, "no such node");
    if (contains(t.markings(), leg)) throw Error(ErrorCode::InvalidArgument, "leg label already used");
    auto half = [&](std::size_t side) {
        LabelSet labels = t.side_markings(edge, side);
        std::size_t start = side == 0 ? t.edges()[edge].v : t.edges()[edge].w;
        std::vector<std::size_t> index(t.num_vertices(), SIZE_MAX);
        std::vector<LabelSet> marks;
        std::vector<std::size_t> stack{start};
        index[start] = marks.size();
        marks.push_back(t.marks(start));
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : t.incident_edges(v)) {
                if (e == edge) continue;
                std::size_t u = t.other_end(e, v);
                if (index[u] != SIZE_MAX) continue;
                index[u] = marks.size();
                marks.push_back(t.marks(u));
                stack.push_back(u);
            }
        }
        marks[0] = with_label(marks[0], leg);
        std::vector<TreeEdge> edges;
        for (std::size_t e = 0; e < t.edges().size(); ++e) {
            const auto& ed = t.edges()[e];
            if (e != edge && index[ed.v] != SIZE_MAX && index[ed.w] != SIZE_MAX) edges.push_back({index[ed.v], index[ed.w]});
        }
        return StableTree(with_label(labels, leg), std::move(marks), std::move(edges));
    };
    return {half(0), half(1)};
}

// ---------------------------------------------------------------------------

namespace {

// For every vertex, the edge leaving `root` on the path toward it.
std::vector<std::size_t> first_edges_from(const StableTree& t, std::size_t root) {
    std::vector<std::size_t> first(t.num_vertices(), SIZE_MAX);
    std::vector<bool> seen(t.num_vertices(), false);
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < t.edges().size(); ++e) {
            const auto& ed = t.edges()[e];
            std::size_t u;
            if (ed.v == v) u = ed.w;
            else if (ed.w == v) u = ed.v;
            else continue;
            if (seen[u]) continue;
            seen[u] = true;
            first[u] = v == root ? e : first[v];
            stack.push_back(u);
        }
    }
    return first;
}

}  // namespace

Configuration component_configuration(const DecoratedStableTree& t, std::size_t v) {
    const auto& tree = t.tree();
    if (v >= tree.num_vertices()) throw Error(ErrorCode::IndexOutOfRange, "no such vertex");
    auto first = first_edges_from(tree, v);
    Configuration out;
    for (Label l : tree.markings()) {
        std::size_t u = tree.vertex_of(l);
        out.push_back(u == v ? t.mark_position(l) : t.edge_position_at(first[u], v));
    }
    return out;
}

SetPartition branch_partition(const StableTree& t, std::size_t v) {
    if (v >= t.num_vertices()) throw Error(ErrorCode::IndexOutOfRange, "no such vertex");
    auto first = first_edges_from(t, v);
    std::vector<LabelSet> parts;
    for (Label l : t.marks(v)) parts.push_back({l});
    for (std::size_t e : t.incident_edges(v)) {
        LabelSet part;
        for (std::size_t u = 0; u < t.num_vertices(); ++u)
            if (u != v && first[u] == e) part = set_union(part, t.marks(u));
        parts.push_back(std::move(part));
    }
    return SetPartition(std::move(parts));
}

bool separates(const StableTree& t, const LabelSet& a, const LabelSet& b) {
    for (const auto& side : node_splits(t)) {
        if (is_subset(a, side) && disjoint(b, side)) return true;
        if (is_subset(b, side) && disjoint(a, side)) return true;
    }
    return false;
}

bool separating_node_exists(const StableTree& t, const LabelSet& k, const LabelSet& l) {
    if (k.size() < 2 || l.size() < 2 || !disjoint(k, l) || set_union(k, l) != t.markings()) {
        throw Error(ErrorCode::InvalidPartition, "K + L must partition the markings with |K|, |L| >= 2");
    }
    return separates(t, k, l);
}

std::vector<StableTree> enumerate_stable_trees(int n) {
    if (n < 3 || n > 8) throw Error(ErrorCode::OutOfRange, "enumeration supports 3 <= n <= 8");
    std::vector<StableTree> level{StableTree::single_vertex({1, 2, 3})};
    for (Label k = 4; k <= n; ++k) {
        std::vector<StableTree> next;
        LabelSet markings = range_labels(k);
        for (const auto& t : level) {
            const std::size_t nv = t.num_vertices();
            std::vector<LabelSet> marks(nv);
            for (std::size_t v = 0; v < nv; ++v) marks[v] = t.marks(v);
            // k on an existing component
            for (std::size_t v = 0; v < nv; ++v) {
                auto m = marks;
                m[v].push_back(k);
                next.emplace_back(markings, std::move(m), t.edges());
            }
            // k on a new component subdividing a node
            for (std::size_t e = 0; e < t.edges().size(); ++e) {
                auto m = marks;
                m.push_back({k});
                auto edges = t.edges();
                std::size_t w = edges[e].w;
                edges[e].w = nv;
                edges.push_back({nv, w});
                next.emplace_back(markings, std::move(m), std::move(edges));
            }
            // k on a new component bubbling off an existing marking
            for (Label l : t.markings()) {
                auto m = marks;
                std::size_t v = t.vertex_of(l);
                m[v] = without_label(m[v], l);
                m.push_back({l, k});
                auto edges = t.edges();
                edges.push_back({v, nv});
                next.emplace_back(markings, std::move(m), std::move(edges));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

// ---------------------------------------------------------------------------
// M04Point

M04Point M04Point::interior(ProjPoint value) {
    if (value == ProjPoint(0) || value == ProjPoint(1) || value.is_infinity()) {
        throw Error(ErrorCode::InvalidArgument, "interior value must avoid 0, 1, inf");
    }
    return M04Point(Interior{std::move(value)});
}

M04Point M04Point::boundary(std::array<Label, 2> a, std::array<Label, 2> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b[0] < a[0]) std::swap(a, b);
    if (a[0] == a[1] || b[0] == b[1] || a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) {
        throw Error(ErrorCode::InvalidArgument, "boundary split needs four distinct labels");
    }
    return M04Point(Boundary{a, b});
}

std::string M04Point::to_string() const {
    if (is_interior()) return "interior " + value().to_string();
    const auto& s = split();
    return "boundary " + label_to_string(s.first[0]) + "," + label_to_string(s.first[1]) + "|" +
           label_to_string(s.second[0]) + "," + label_to_string(s.second[1]);
}

M04Point M04Point::parse(std::string_view text) {
    if (text.starts_with("interior ")) return interior(ProjPoint::parse(text.substr(9)));
    if (text.starts_with("boundary ")) {
        auto partition = SetPartition::parse(text.substr(9));
        if (partition.size() != 2 || partition.parts()[0].size() != 2 || partition.parts()[1].size() != 2) {
            throw Error(ErrorCode::ParseError, "boundary split must be 2+2");
        }
        const auto& p = partition.parts();
        return boundary({p[0][0], p[0][1]}, {p[1][0], p[1][1]});
    }
    throw Error(ErrorCode::ParseError, "expected 'interior ...' or 'boundary ...'");
}

M04Point relabel(const M04Point& p, const Quad& from, const std::array<Label, 4>& to) {
    auto image = [&](Label l) {
        for (std::size_t i = 0; i < 4; ++i)
            if (from[i] == l) return to[i];
        throw Error(ErrorCode::InvalidArgument, "label outside the 4-set");
    };
    if (p.is_boundary()) {
        const auto& s = p.split();
        return M04Point::boundary({image(s.first[0]), image(s.first[1])}, {image(s.second[0]), image(s.second[1])});
    }
    const std::array<ProjPoint, 4> positions{ProjPoint(0), ProjPoint(1), ProjPoint::infinity(), p.value()};
    std::array<std::size_t, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return to[a] < to[b]; });
    Configuration x;
    for (std::size_t i : idx) x.push_back(positions[i]);
    return M04Point::interior(cross_ratio(x));
}

M04Point m04_point_of(const DecoratedStableTree& t) {
    require_valid(t, "m04_point_of");
    const auto& tree = t.tree();
    if (tree.markings().size() != 4) throw Error(ErrorCode::InvalidArgument, "expected a tree on four markings");
    if (tree.num_vertices() == 1) {
        Configuration x;
        for (Label l : tree.markings()) x.push_back(t.mark_position(l));
        return M04Point::interior(cross_ratio(x));
    }
    const auto& a = tree.marks(0);
    const auto& b = tree.marks(1);
    return M04Point::boundary({a[0], a[1]}, {b[0], b[1]});
}

}  // namespace m0n
