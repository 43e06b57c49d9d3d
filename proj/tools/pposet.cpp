// Command-line front end: expand generating functions, print structural
// invariants, search for K-equivalent pairs, run the pair constructions
// and the uniqueness audits, and drive the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "pposet/serialize.hpp"
#include "pposet/verify.hpp"

namespace {

using namespace pposet;

int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void emit(const json& payload, bool pretty) {
    std::cout << payload.dump(pretty ? 2 : -1) << "\n";
}

int check_size_cap(const Poset& p, int cap, bool unsafe) {
    if (p.size() <= cap || unsafe) return 0;
    std::cerr << "poset has " << p.size() << " elements; the default cap is " << cap
              << " (pass --unsafe-n to override, runtime is unbounded)\n";
    return 2;
}

int run_expand(const std::string& path, const std::string& basis, bool pretty, bool unsafe) {
    Poset p = parse_poset_file(path);
    if (int rc = check_size_cap(p, 10, unsafe)) return rc;
    QSymElement kp = kp_via_extensions(p);
    if (basis == "M") kp = l_to_m(kp);
    emit(to_json(kp), pretty);
    return 0;
}

int run_invariants(const std::string& path, bool pretty, bool unsafe) {
    Poset p = parse_poset_file(path);
    if (int rc = check_size_cap(p, 10, unsafe)) return rc;
    GreeneData gd = greene_data(p);
    json factors = json::array();
    for (const Poset& f : ordinal_sum_decomposition(p)) factors.push_back(to_json(f));
    json out{{"poset", to_json(p)},
             {"shape", gd.shape.parts()},
             {"max_antichain_unions", gd.max_antichain_unions},
             {"max_chain_unions", gd.max_chain_unions},
             {"ideal_type_counts", to_json(ideal_type_counts(p))},
             {"jump", to_json(jump_statistics(p))},
             {"flag_vectors", to_json(flag_vectors(p))},
             {"ordinal_sum_factors", factors},
             {"linear_extensions", count_linear_extensions(natural_relabel(p))}};
    emit(out, pretty);
    return 0;
}

int run_search(int n, int threads, bool pretty, bool unsafe) {
    if (n < 1 || (n > 8 && !unsafe)) {
        std::cerr << "search supports n between 1 and 8 by default"
                  << " (pass --unsafe-n to go higher, runtime is unbounded)\n";
        return 2;
    }
    EquivalenceReport report = k_equivalence_classes(n, threads);
    emit(to_json(report), pretty);
    if (pretty)
        std::cout << "nontrivial classes: " << report.nontrivial.size() << "\n";
    return 0;
}

json pair_verdict(const Poset& p, const Poset& q) {
    bool k_equal =
        qsym_signature(kp_via_extensions(p)) == qsym_signature(kp_via_extensions(q));
    bool iso = isomorphic(p, q);
    json out{{"P", to_json(p)},
             {"Q", to_json(q)},
             {"k_equal", k_equal},
             {"isomorphic", iso},
             {"shape_P", greene_shape(p).parts()},
             {"shape_Q", greene_shape(q).parts()}};
    return out;
}

int run_construct(const std::string& twist_path, const std::string& shape_arg, bool pretty) {
    if (!twist_path.empty()) {
        TwistInput in = parse_twist_file(twist_path);
        TwistResult r = construct_twisted_pair(in);
        json out = pair_verdict(r.p, r.q);
        out["m"] = r.m;
        out["relabeled"] = r.relabeled;
        emit(out, pretty);
        if (pretty)
            std::cout << "m: " << r.m
                      << ", K-equal: " << (out["k_equal"].get<bool>() ? "true" : "false")
                      << ", isomorphic: " << (out["isomorphic"].get<bool>() ? "true" : "false")
                      << "\n";
        return 0;
    }
    std::vector<int> parts;
    std::stringstream ss(shape_arg);
    for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(std::stoi(tok));
    Partition shape(parts);
    auto [p, q] = equivalent_pair_of_shape(shape);
    json out = pair_verdict(p, q);
    emit(out, pretty);
    if (pretty)
        std::cout << "K-equal: " << (out["k_equal"].get<bool>() ? "true" : "false")
                  << ", isomorphic: " << (out["isomorphic"].get<bool>() ? "true" : "false")
                  << "\n";
    return 0;
}

int run_audit(const std::string& shape_class, int n, const std::string& mode_arg, int threads,
              bool pretty, bool unsafe) {
    if (n < 1 || (n > 8 && !unsafe)) {
        std::cerr << "audit supports n between 1 and 8 by default"
                  << " (pass --unsafe-n to go higher, runtime is unbounded)\n";
        return 2;
    }
    AuditMode mode = mode_arg == "support" ? AuditMode::Support : AuditMode::K;
    bool asserted = shape_class != "open22";
    GenerationCache cache(threads);
    json per_n = json::array();
    bool any_collision = false;
    for (int size = 1; size <= n; ++size) {
        AuditResult a;
        const auto& classes = cache.classes(size);
        if (shape_class == "width2")
            a = injectivity_audit(classes, mode, is_width2_shape, threads);
        else if (shape_class == "hook")
            a = injectivity_audit(classes, mode, is_hook_shape, threads);
        else if (shape_class == "nearhook")
            a = injectivity_audit(classes, mode, is_near_hook_shape, threads);
        else
            a = injectivity_audit(classes, mode, is_open_double_two_shape, threads);
        any_collision = any_collision || !a.collisions.empty();
        json entry = to_json(a);
        entry["n"] = size;
        per_n.push_back(entry);
    }
    json out{{"shape_class", shape_class},
             {"mode", mode_arg},
             {"max_n", n},
             {"results", per_n},
             {"injective", !any_collision}};
    emit(out, pretty);
    return asserted && any_collision ? 1 : 0;
}

int run_verify(const std::string& suite, int threads) {
    GenerationCache cache(threads);
    std::vector<SuiteResult> results;
    if (suite == "all") {
        results = run_all_suites(cache);
    } else {
        std::map<std::string, std::function<SuiteResult()>> suites{
            {"composition-core", [&] { return verify_composition_core(); }},
            {"qsym-basis-roundtrip", [&] { return verify_basis_roundtrip(); }},
            {"qsym-coalgebra", [&] { return verify_coalgebra(); }},
            {"example-pair-reproduction", [&] { return verify_example_pairs(); }},
            {"extremal-indicator", [&] { return verify_extremal_indicator(cache); }},
            {"product-morphism", [&] { return verify_product_morphism(cache); }},
            {"hopf-morphism-pairs", [&] { return verify_hopf_pairs(cache); }},
            {"flag-dual-route", [&] { return verify_flag_routes(cache); }},
            {"ideal-antichain-counts", [&] { return verify_ideal_antichain(cache); }},
            {"greene-duality", [&] { return verify_greene_duality(cache); }},
            {"ordinal-sum-projection", [&] { return verify_ordinal_projection(); }},
            {"ideal-type-dual-route", [&] { return verify_ideal_type_routes(cache); }},
            {"shape-from-support", [&] { return verify_shape_from_support(cache); }},
            {"jump-from-support", [&] { return verify_jump_from_support(cache); }},
            {"coefficient-reconstruction",
             [&] { return verify_coefficient_reconstruction(cache); }},
            {"width2-and-antichain-ops", [&] { return verify_width2_operations(cache); }},
            {"canonical-invariance", [&] { return verify_canonical_invariance(cache); }},
            {"twist-construction-examples", [&] { return verify_twist_examples(); }},
            {"shape-family-pairs",
             [&] {
                 return verify_shape_families(
                     {Partition({3, 3, 1}), Partition({4, 3, 1}), Partition({3, 3, 2}),
                      Partition({4, 4, 1, 1}), Partition({2, 2, 2, 2}),
                      Partition({3, 2, 2, 2, 1})});
             }},
            {"generation-counts", [&] { return verify_generation_counts(cache); }},
            {"smallest-collision", [&] { return verify_smallest_collision(cache); }},
            {"width2-uniqueness-audit", [&] { return verify_width2_audit(cache); }},
            {"hook-support-audit", [&] { return verify_hook_audit(cache); }},
            {"nearly-hook-uniqueness-audit", [&] { return verify_nearhook_audit(cache); }},
        };
        auto it = suites.find(suite);
        if (it == suites.end()) {
            std::cerr << "unknown suite '" << suite << "'; available:\n  all\n";
            for (const auto& [name, fn] : suites) std::cerr << "  " << name << "\n";
            return 2;
        }
        results.push_back(it->second());
    }
    bool all_pass = true;
    for (const SuiteResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
        for (const std::string& note : r.notes) std::cout << "     " << note << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-partition generating functions of naturally labeled posets"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    bool unsafe = false;
    int threads = default_threads();
    app.add_flag("--pretty", pretty, "indent JSON and add summary lines");
    app.add_flag("--unsafe-n", unsafe, "lift default size caps (unbounded runtime)");
    app.add_option("--threads", threads, "worker count for search/audit/verify");

    auto* expand = app.add_subcommand("expand", "print the generating function of a poset file");
    expand->fallthrough();
    std::string expand_path, basis = "L";
    expand->add_option("file", expand_path, "poset file")->required();
    expand->add_option("--basis", basis, "L or M")->check(CLI::IsMember({"L", "M"}));

    auto* invariants =
        app.add_subcommand("invariants", "print shape, ideal counts, jump and flag data");
    invariants->fallthrough();
    std::string inv_path;
    invariants->add_option("file", inv_path, "poset file")->required();

    auto* search =
        app.add_subcommand("search", "group all posets of size n by generating function");
    search->fallthrough();
    int search_n = 0;
    search->add_option("--n", search_n, "poset size")->required();

    auto* construct = app.add_subcommand("construct", "build a K-equivalent pair");
    construct->fallthrough();
    std::string twist_path, shape_arg;
    construct->add_option("--lemma52", twist_path, "twist input file (poset + phi/e/f lines)");
    construct->add_option("--shape", shape_arg, "target shape, comma-separated parts");

    auto* audit = app.add_subcommand("audit", "injectivity audit over a shape class");
    audit->fallthrough();
    std::string shape_class, mode = "K";
    int audit_n = 0;
    audit->add_option("--shape-class", shape_class, "width2 | hook | nearhook | open22")
        ->required()
        ->check(CLI::IsMember({"width2", "hook", "nearhook", "open22"}));
    audit->add_option("--n", audit_n, "maximum poset size")->required();
    audit->add_option("--mode", mode, "K | support")->check(CLI::IsMember({"K", "support"}));

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->fallthrough();
    std::string suite = "all";
    verify->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*expand) return run_expand(expand_path, basis, pretty, unsafe);
        if (*invariants) return run_invariants(inv_path, pretty, unsafe);
        if (*search) return run_search(search_n, threads, pretty, unsafe);
        if (*construct) {
            if (twist_path.empty() == shape_arg.empty()) {
                std::cerr << "construct needs exactly one of --lemma52 or --shape\n";
                return 2;
            }
            return run_construct(twist_path, shape_arg, pretty);
        }
        if (*audit) return run_audit(shape_class, audit_n, mode, threads, pretty, unsafe);
        if (*verify) return run_verify(suite, threads);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
