// Command-line front end. Every subcommand prints one JSON object.
// Exit status: 0 success, 1 domain error or failed verification, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "m0n/chow.hpp"
#include "m0n/hilbert.hpp"
#include "m0n/json_io.hpp"
#include "m0n/operads.hpp"
#include "m0n/oracles.hpp"

using namespace m0n;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

std::vector<Integer> parse_integers(const std::string& csv) {
    std::vector<Integer> out;
    for (const auto& p : parse_configuration(csv)) {
        if (p.is_infinity() || p.b() != 1) throw Error(ErrorCode::ParseError, "expected integers, got '" + csv + "'");
        out.push_back(p.a());
    }
    return out;
}

/// (0, 1, inf, 2, 3, ..., n - 2)
Configuration standard_configuration(int n) {
    Configuration x;
    for (int i = 0; i < n; ++i) x.push_back(i == 2 ? ProjPoint::infinity() : ProjPoint(i < 2 ? i : i - 1));
    return x;
}

struct VerifyOptions {
    std::string suite;
    int n = 5;
    int max_n = 6;
    std::uint64_t seed = 1;
    std::uint32_t prime = kDefaultPrime;
    std::size_t samples = 200;
};

Json verify_hilbert(const VerifyOptions& o) {
    if (o.n < 3 || o.n > 6) throw Error(ErrorCode::OutOfRange, "verify hilbert supports 3 <= n <= 6");
    const Configuration x = standard_configuration(o.n);
    const MultilinearPoly poly = generic_orbit_hilbert(o.n);
    Json results = Json::array();
    std::size_t passed = 0, total = 0;
    for (unsigned mask = 0; mask < (1u << o.n); ++mask) {
        std::vector<int> t;
        std::vector<Integer> tv;
        for (int i = 0; i < o.n; ++i) {
            t.push_back((mask >> i & 1) ? 2 : 1);
            tv.push_back(t.back());
        }
        const auto rank = hilbert_function_rank(x, t, o.prime, required_rank_samples(t), o.seed);
        const Integer value = evaluate(poly, tv);
        const bool ok = Integer(rank) == value;
        ++total;
        passed += ok;
        results.push_back({{"t", t}, {"rank", rank}, {"polynomial", integer_to_json(value)}, {"ok", ok}});
    }
    return {{"suite", "hilbert"}, {"n", o.n}, {"prime", o.prime}, {"seed", o.seed}, {"kernel", kernel_name(Kernel::Auto)},
            {"checks", total}, {"passed", passed}, {"ok", passed == total}, {"results", results}};
}

Json verify_chow(const VerifyOptions& o) {
    if (o.n < 3 || o.n > 7) throw Error(ErrorCode::OutOfRange, "verify chow supports 3 <= n <= 7");
    const LabelSet all = range_labels(o.n);
    Rng rng(o.seed);
    std::size_t types = 0, diagonal_ok = 0, transport_ok = 0;
    for (const auto& p : all_set_partitions(all)) {
        if (p.size() < 3) continue;
        ++types;
        const ChowClass c = orbit_class_of_type(p);
        diagonal_ok += pushforward_diagonal(generic_orbit_class(static_cast<int>(p.size())), p) == c;
        // a configuration of type p and a generic target
        const Configuration values = random_distinct_configuration(rng, p.size());
        Configuration x(all.size(), ProjPoint(0));
        for (Label l : all) x[static_cast<std::size_t>(l - 1)] = values[p.part_of(l)];
        const Configuration y = random_distinct_configuration(rng, all.size());
        bool agree = true;
        for (const auto& i : subsets_of_size(all, 3)) agree &= Integer(unique_transport_count(x, y, i)) == c.coefficient(i);
        transport_ok += agree;
    }
    std::size_t pairs = 0, dual_ok = 0;
    for (const auto& i : all_subsets(all))
        for (const auto& j : all_subsets(all)) {
            if (i.size() + j.size() != all.size()) continue;
            ++pairs;
            const Integer expected = j == set_difference(all, i) ? 1 : 0;
            dual_ok += intersection_number(ChowClass::basis(all, i), ChowClass::basis(all, j)) == expected;
        }
    std::size_t trees = 0, trees_ok = 0;
    const ChowClass beta = generic_orbit_class(o.n);
    for (const auto& t : enumerate_stable_trees(o.n)) {
        ++trees;
        trees_ok += tree_cycle_class(t) == beta;
    }
    const bool ok = diagonal_ok == types && transport_ok == types && dual_ok == pairs && trees_ok == trees;
    return {{"suite", "chow"},           {"n", o.n},
            {"types", types},            {"diagonal_agree", diagonal_ok},
            {"transport_agree", transport_ok}, {"duality_pairs", pairs},
            {"duality_ok", dual_ok},     {"trees", trees},
            {"trees_beta", trees_ok},    {"ok", ok}};
}

Json sample_json(const SampleCount& c) { return {{"samples", c.samples}, {"passed", c.passed}}; }

Json verify_degeneration(const VerifyOptions& o) {
    if (o.n < 4 || o.n > 8) throw Error(ErrorCode::OutOfRange, "verify degeneration supports 4 <= n <= 8");
    const Configuration x = standard_configuration(o.n);
    const MultilinearPoly generic = generic_orbit_hilbert(o.n);
    Json per_i = Json::array();
    bool ok = true;
    for (int i = 1; i < o.n; ++i) {
        const auto pieces = degeneration_pieces(o.n, i);
        const bool identity = pieces.z_prime + pieces.z_double_prime - pieces.diagonal == generic;
        const auto fiber = degeneration_fiber_check(x, i, o.samples, o.seed + static_cast<std::uint64_t>(i));
        ok = ok && identity && fiber.ok();
        per_i.push_back({{"i", i},
                         {"identity", identity},
                         {"z_prime", sample_json(fiber.z_prime)},
                         {"z_double_prime", sample_json(fiber.z_double_prime)},
                         {"intersection", sample_json(fiber.intersection)},
                         {"off_union_rejected", sample_json(fiber.off_union)}});
    }
    return {{"suite", "degeneration"}, {"n", o.n}, {"seed", o.seed}, {"ok", ok}, {"results", per_i}};
}

Json verify_boundary(const VerifyOptions& o) {
    if (o.n < 4 || o.n > 8) throw Error(ErrorCode::OutOfRange, "verify boundary supports 4 <= n <= 8");
    const auto r = boundary_membership_check(standard_configuration(o.n), o.samples, o.seed);
    Json diag = Json::array();
    for (const auto& d : r.diagonal) diag.push_back(sample_json(d));
    return {{"suite", "boundary"},
            {"n", o.n},
            {"seed", o.seed},
            {"diagonals", diag},
            {"orbit", sample_json(r.orbit)},
            {"wrong_cross_ratio_rejected", sample_json(r.wrong_cross_ratio)},
            {"false_negatives", r.false_negatives()},
            {"false_positives", r.false_positives()},
            {"ok", r.ok()}};
}

Json verify_operads(const VerifyOptions& o) {
    AxiomOptions ao;
    ao.max_n = o.max_n;
    ao.seed = o.seed;
    const auto r = check_procyclic_axioms(ao);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"operad", c.operad}, {"axiom", c.axiom}, {"instances", c.instances}, {"violations", c.violations}});
    }
    return {{"suite", "operads"},
            {"max_n", o.max_n},
            {"seed", o.seed},
            {"instances", r.total_instances()},
            {"violations", r.total_violations()},
            {"checks", checks},
            {"failures", r.failures},
            {"ok", r.total_violations() == 0}};
}

int emit(const Json& j) {
    std::cout << j.dump() << "\n";
    return j.contains("ok") && !j.at("ok").get<bool>() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable rational curves, orbit closures and their invariants"};
    app.require_subcommand(1);
    bool json_flag = true;
    app.add_flag("--json", json_flag, "JSON output (the only format)");

    std::string config_text;
    auto* type_of_cmd = app.add_subcommand("type-of", "Set partition of coincident coordinates");
    type_of_cmd->add_option("configuration", config_text, "points like 0,1,inf,2/3")->required();

    auto* cross_cmd = app.add_subcommand("cross-ratio", "Cross-ratio of four distinct points");
    cross_cmd->add_option("configuration", config_text, "four points like 0,1,inf,2")->required();

    auto* form_cmd = app.add_subcommand("orbit-form", "The (1,1,1,1)-form cutting out an orbit closure in (P^1)^4");
    form_cmd->add_option("configuration", config_text, "four points")->required();

    std::string tree_path, tree_path2, keep_text, leg_a_text = "*", leg_b_text = "*";
    auto* stab_cmd = app.add_subcommand("stabilize", "Forget markings and contract unstable components");
    stab_cmd->add_option("--tree", tree_path, "tree JSON file")->required();
    stab_cmd->add_option("--keep", keep_text, "markings to keep, e.g. 1,2,4")->required();

    auto* glue_cmd = app.add_subcommand("glue", "Glue two trees along a leg of each");
    glue_cmd->add_option("first", tree_path, "first tree JSON file")->required();
    glue_cmd->add_option("second", tree_path2, "second tree JSON file")->required();
    glue_cmd->add_option("--leg-a", leg_a_text, "leg of the first tree (default *)");
    glue_cmd->add_option("--leg-b", leg_b_text, "leg of the second tree (default *)");

    int n = 5;
    auto* enum_cmd = app.add_subcommand("enumerate-trees", "All combinatorial types of stable trees on 1..n");
    enum_cmd->add_option("--n", n, "number of markings (3..8)")->required();

    std::string eval_text;
    int generic_n = 0;
    auto* hilb_cmd = app.add_subcommand("hilbert-poly", "Hilbert polynomial of the orbit-closure fiber of a tree");
    auto* hilb_tree = hilb_cmd->add_option("--tree", tree_path, "tree JSON file");
    auto* hilb_n = hilb_cmd->add_option("--n", generic_n, "generic orbit closure on n points instead of a tree");
    hilb_tree->excludes(hilb_n);
    hilb_cmd->add_option("--eval", eval_text, "integer values t1,...,tn");

    std::string type_text;
    auto* chow_cmd = app.add_subcommand("chow-class", "Cycle class of an orbit closure or of a tree fiber");
    auto* chow_type = chow_cmd->add_option("--type", type_text, "set partition like 1,2|3|4|5");
    auto* chow_tree = chow_cmd->add_option("--tree", tree_path, "tree JSON file");
    chow_type->excludes(chow_tree);

    auto* sig_cmd = app.add_subcommand("signature", "M_{0,4} values over all 4-subsets");
    sig_cmd->add_option("--tree", tree_path, "tree JSON file")->required();

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", vo.suite, "hilbert | chow | degeneration | boundary | operads")
        ->required()
        ->check(CLI::IsMember({"hilbert", "chow", "degeneration", "boundary", "operads"}));
    verify_cmd->add_option("--n", vo.n, "number of points");
    verify_cmd->add_option("--max-n", vo.max_n, "largest label set for the operad sweep");
    verify_cmd->add_option("--seed", vo.seed, "random seed");
    verify_cmd->add_option("--prime", vo.prime, "prime modulus for rank computations");
    verify_cmd->add_option("--samples", vo.samples, "samples per sampled check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*type_of_cmd) {
            const auto p = type_of(parse_configuration(config_text));
            return emit({{"type", partition_to_json(p)}, {"text", p.to_string()}});
        }
        if (*cross_cmd) {
            const auto x = parse_configuration(config_text);
            return emit({{"value", cross_ratio(x).to_string()}});
        }
        if (*form_cmd) return emit(form_to_json(orbit_form(parse_configuration(config_text))));
        if (*stab_cmd) {
            const auto t = decorated_tree_from_json(read_json_file(tree_path));
            return emit(tree_to_json(stabilize(t, parse_label_set(keep_text))));
        }
        if (*glue_cmd) {
            const auto a = decorated_tree_from_json(read_json_file(tree_path));
            const auto b = decorated_tree_from_json(read_json_file(tree_path2));
            return emit(tree_to_json(glue(a, b, parse_label(leg_a_text), parse_label(leg_b_text))));
        }
        if (*enum_cmd) {
            const auto trees = enumerate_stable_trees(n);
            Json list = Json::array();
            for (const auto& t : trees) list.push_back(tree_to_json(t));
            return emit({{"n", n}, {"count", trees.size()}, {"trees", list}});
        }
        if (*hilb_cmd) {
            MultilinearPoly p;
            if (!tree_path.empty()) p = tree_hilbert(tree_from_json(read_json_file(tree_path)));
            else if (generic_n > 0) p = generic_orbit_hilbert(generic_n);
            else throw CLI::RequiredError("--tree or --n");
            Json out = poly_to_json(p);
            if (!eval_text.empty()) out["value"] = integer_to_json(evaluate(p, parse_integers(eval_text)));
            return emit(out);
        }
        if (*chow_cmd) {
            if (!type_text.empty()) return emit(chow_to_json(orbit_class_of_type(SetPartition::parse(type_text))));
            if (!tree_path.empty()) return emit(chow_to_json(tree_cycle_class(tree_from_json(read_json_file(tree_path)))));
            throw CLI::RequiredError("--type or --tree");
        }
        if (*sig_cmd) return emit(signature_to_json(signature_of(decorated_tree_from_json(read_json_file(tree_path)))));
        if (*verify_cmd) {
            if (vo.suite == "hilbert") return emit(verify_hilbert(vo));
            if (vo.suite == "chow") return emit(verify_chow(vo));
            if (vo.suite == "degeneration") return emit(verify_degeneration(vo));
            if (vo.suite == "boundary") return emit(verify_boundary(vo));
            return emit(verify_operads(vo));
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cout << Json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
