#include "m0n/json_io.hpp"

#include <limits>

namespace m0n {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

LabelSet labels_from_json(const Json& j) {
    if (!j.is_array()) parse_fail("expected an array of labels");
    LabelSet out;
    for (const auto& e : j) out.push_back(label_from_json(e));
    LabelSet sorted = make_label_set(out);
    if (sorted.size() != out.size()) parse_fail("repeated label");
    return sorted;
}

Json labels_to_json(const LabelSet& s) {
    Json out = Json::array();
    for (Label l : s) out.push_back(label_to_json(l));
    return out;
}

ProjPoint point_from_json(const Json& j) {
    if (j.is_string()) return ProjPoint::parse(j.get<std::string>());
    if (j.is_number_integer()) return ProjPoint(j.get<long long>());
    parse_fail("expected a point string like \"a/b\" or \"inf\"");
}

}  // namespace

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        auto p = ProjPoint::parse(s);
        if (p.is_infinity() || p.b() != 1) parse_fail("expected an integer, got '" + s + "'");
        return p.a();
    }
    parse_fail("expected an integer");
}

Json label_to_json(Label l) {
    if (l == kStar) return "*";
    return l;
}

Label label_from_json(const Json& j) {
    if (j.is_number_integer()) return j.get<Label>();
    if (j.is_string()) {
        try {
            return parse_label(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(e.what());
        }
    }
    parse_fail("expected a label");
}

Json tree_to_json(const DecoratedStableTree& t) {
    const auto& tree = t.tree();
    Json vertices = Json::array();
    for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
        Json marks = Json::object();
        for (std::size_t i = 0; i < tree.marks(v).size(); ++i) {
            marks[label_to_string(tree.marks(v)[i])] = t.mark_positions(v)[i].to_string();
        }
        vertices.push_back({{"id", v}, {"marks", marks}});
    }
    Json edges = Json::array();
    for (std::size_t e = 0; e < tree.edges().size(); ++e) {
        edges.push_back({{"v", tree.edges()[e].v},
                         {"w", tree.edges()[e].w},
                         {"pos_v", t.edge_positions(e)[0].to_string()},
                         {"pos_w", t.edge_positions(e)[1].to_string()}});
    }
    return {{"markings", labels_to_json(tree.markings())}, {"vertices", vertices}, {"edges", edges}};
}

Json tree_to_json(const StableTree& t) {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < t.num_vertices(); ++v) vertices.push_back({{"id", v}, {"marks", labels_to_json(t.marks(v))}});
    Json edges = Json::array();
    for (const auto& e : t.edges()) edges.push_back({{"v", e.v}, {"w", e.w}});
    return {{"markings", labels_to_json(t.markings())}, {"vertices", vertices}, {"edges", edges}};
}

DecoratedStableTree decorated_tree_from_json(const Json& j) {
    const LabelSet markings = labels_from_json(member(j, "markings"));
    const Json& verts = member(j, "vertices");
    const Json& edges_json = member(j, "edges");
    if (!verts.is_array() || !edges_json.is_array()) parse_fail("vertices and edges must be arrays");

    // vertex ids may come in any order
    std::map<std::int64_t, std::size_t> index;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const auto id = verts[k].contains("id") ? member(verts[k], "id").get<std::int64_t>() : static_cast<std::int64_t>(k);
        if (!index.emplace(id, k).second) parse_fail("duplicate vertex id");
    }
    auto vertex = [&](const Json& id) {
        auto it = index.find(id.get<std::int64_t>());
        if (it == index.end()) parse_fail("edge refers to an unknown vertex");
        return it->second;
    };

    bool positioned = true;
    std::vector<MarkedPoints> vertices(verts.size());
    std::vector<LabelSet> bare(verts.size());
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Json& marks = member(verts[k], "marks");
        if (marks.is_array()) {
            positioned = false;
            bare[k] = labels_from_json(marks);
        } else if (marks.is_object()) {
            for (const auto& [key, value] : marks.items()) {
                Label l = label_from_json(Json(key));
                bare[k].push_back(l);
                if (value.is_null()) positioned = false;
                else vertices[k].emplace_back(l, point_from_json(value));
            }
            bare[k] = make_label_set(bare[k]);
        } else {
            parse_fail("marks must be an object or an array");
        }
    }
    std::vector<DecoratedEdge> edges;
    std::vector<TreeEdge> bare_edges;
    for (const auto& e : edges_json) {
        DecoratedEdge de{vertex(member(e, "v")), vertex(member(e, "w")), {}, {}};
        if (e.contains("pos_v") && e.contains("pos_w")) {
            de.pos_v = point_from_json(e.at("pos_v"));
            de.pos_w = point_from_json(e.at("pos_w"));
        } else {
            positioned = false;
        }
        bare_edges.push_back({de.v, de.w});
        edges.push_back(std::move(de));
    }
    if (!positioned) {
        StableTree t(markings, std::move(bare), std::move(bare_edges));
        auto report = validate(t);
        if (!report.ok()) throw Error(ErrorCode::InvalidTree, report.violations.front());
        return decorate_default(t);
    }
    DecoratedStableTree t(markings, std::move(vertices), std::move(edges));
    auto report = validate(t);
    if (!report.ok()) throw Error(ErrorCode::InvalidTree, report.violations.front());
    return t;
}

StableTree tree_from_json(const Json& j) { return decorated_tree_from_json(j).tree(); }

Json poly_to_json(const MultilinearPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"subset", labels_to_json(m)}, {"coeff", integer_to_json(c)}});
    return {{"vars", labels_to_json(p.vars())}, {"terms", terms}};
}

MultilinearPoly poly_from_json(const Json& j) {
    MultilinearPoly::Terms terms;
    for (const auto& t : member(j, "terms")) {
        LabelSet s = labels_from_json(member(t, "subset"));
        if (terms.count(s)) parse_fail("repeated monomial");
        terms[s] = integer_from_json(member(t, "coeff"));
    }
    return MultilinearPoly(labels_from_json(member(j, "vars")), std::move(terms));
}

Json form_to_json(const SectionForm& f) {
    Json coeffs = Json::object();
    for (unsigned s = 0; s < 16; ++s)
        if (f.coefficient(s) != 0) coeffs[std::to_string(s)] = integer_to_json(f.coefficient(s));
    return {{"coeffs", coeffs}};
}

SectionForm form_from_json(const Json& j) {
    SectionForm::Coefficients c{};
    for (const auto& [key, value] : member(j, "coeffs").items()) {
        std::size_t pos = 0;
        int mask = -1;
        try {
            mask = std::stoi(key, &pos);
        } catch (const std::exception&) {
            parse_fail("bad mask '" + key + "'");
        }
        if (pos != key.size() || mask < 0 || mask > 15) parse_fail("mask must be 0..15");
        c[static_cast<std::size_t>(mask)] = integer_from_json(value);
    }
    return SectionForm(std::move(c));
}

Json chow_to_json(const ChowClass& c) {
    Json terms = Json::array();
    for (const auto& [s, coeff] : c.terms()) terms.push_back({{"subset", labels_to_json(s)}, {"coeff", integer_to_json(coeff)}});
    return {{"ambient", labels_to_json(c.ambient())}, {"grade", c.grade()}, {"terms", terms}};
}

ChowClass chow_from_json(const Json& j) {
    ChowClass::Terms terms;
    for (const auto& t : member(j, "terms")) {
        LabelSet s = labels_from_json(member(t, "subset"));
        if (terms.count(s)) parse_fail("repeated subset");
        terms[s] = integer_from_json(member(t, "coeff"));
    }
    return ChowClass(labels_from_json(member(j, "ambient")), member(j, "grade").get<std::size_t>(), std::move(terms));
}

Json signature_to_json(const Signature& s) {
    Json out = Json::object();
    for (const auto& [q, p] : s.values()) out[to_string(from_quad(q))] = p.to_string();
    return out;
}

Signature signature_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("signature must be an object");
    Signature::Values values;
    LabelSet labels;
    for (const auto& [key, value] : j.items()) {
        LabelSet q = parse_label_set(key);
        if (q.size() != 4) parse_fail("signature keys must be 4-subsets");
        labels = set_union(labels, q);
        values.emplace(to_quad(q), M04Point::parse(value.get<std::string>()));
    }
    return Signature(std::move(labels), std::move(values));
}

Json partition_to_json(const SetPartition& p) {
    Json parts = Json::array();
    for (const auto& part : p.parts()) parts.push_back(labels_to_json(part));
    return parts;
}

}  // namespace m0n
