#include "cli.hpp"

#include "tdc/dichotomy.hpp"
#include "tdc/edge_list_io.hpp"
#include "tdc/gadgets.hpp"
#include "tdc/generators.hpp"
#include "tdc/oracle.hpp"
#include "tdc/poly.hpp"

#include <CLI11.hpp>

#include <optional>
#include <random>
#include <sstream>

namespace tdc::cli {

namespace {

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    }
    int uniform_int(int lo, int hi) // inclusive
    {
        return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    }
    Graph connected(int n_lo, int n_hi, double p_lo, double p_hi)
    {
        const int n = uniform_int(n_lo, n_hi);
        const double p = uniform(p_lo, p_hi);
        return random_connected(n, p, rng());
    }
};

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

void print_ids(std::ostream& out, const std::vector<int>& ids)
{
    for (size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    out << "\n";
}

int run_decide(const std::string& file, const std::string& method,
               const std::string& hint_file, bool witness, std::ostream& out)
{
    Graph g = load_edge_list(file);
    bool verdict;
    if (method == "oracle") {
        verdict = decide_by_definition(g);
    } else if (method == "p5free") {
        verdict = decide_p5_free(g);
    } else if (method.rfind("p4kp3=", 0) == 0) {
        const int k = std::stoi(method.substr(6));
        verdict = decide_p4_kp3_free(g, k);
    } else if (method == "auto") {
        std::optional<Graph> hint;
        if (!hint_file.empty()) hint = load_edge_list(hint_file);
        verdict = decide_auto(g, hint);
    } else {
        throw CLI::ValidationError("--method", "unknown method: " + method);
    }
    out << yes_no(verdict) << "\n";
    if (witness && verdict) {
        // Lexicographically first minimum set carrying a 3-vertex path.
        for (const auto& ids : enumerate_min_tds(g).sets) {
            Bitset s(g.vertex_count());
            for (int v : ids) s.set(v);
            if (set_contains_p3(g, s)) {
                print_ids(out, ids);
                break;
            }
        }
    }
    return 0;
}

int verify_thm1(int max_n, int samples, uint64_t seed, std::ostream& out)
{
    Sampler s(seed);
    int disagreements = 0;
    for (int i = 0; i < samples; ++i) {
        Graph g = s.connected(2, max_n, 0.2, 0.8);
        if (decide_by_definition(g) != has_min_tds_with_p3(g)) ++disagreements;
    }
    out << (disagreements == 0 ? "OK" : "FAIL") << " samples=" << samples
        << " max-n=" << max_n << " disagreements=" << disagreements << "\n";
    return disagreements == 0 ? 0 : 1;
}

int verify_claim1(int max_n, int samples, uint64_t seed, std::ostream& out)
{
    Sampler s(seed);
    int failures = 0;
    int done = 0;
    // Fixed path source first, then random sources (promise not required for
    // the gamma_t identity itself).
    std::vector<Graph> sources{path_graph(10)};
    while (static_cast<int>(sources.size()) < 1 + samples)
        sources.push_back(s.connected(4, std::max(4, max_n), 0.2, 0.6));
    for (const auto& src : sources) {
        GadgetOutput gadget = build_even_ds_gadget(src, 2, /*trust_promise=*/true);
        auto value = gamma_t(gadget.graph);
        const long long expect = std::min<long long>(*gadget.source_gamma, 4);
        if (!value || *value != expect) ++failures;
        ++done;
    }
    out << (failures == 0 ? "OK" : "FAIL") << " samples=" << done
        << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int verify_claim9(int max_n, int samples, uint64_t seed, std::ostream& out)
{
    Sampler s(seed);
    int failures = 0;
    for (int i = 0; i < samples; ++i) {
        Graph g(0);
        do {
            g = s.connected(3, max_n, 0.25, 0.55);
        } while (g.edge_count() > 8);
        const int m = g.edge_count();
        Graph sub = four_subdivide_all(g);
        auto before = gamma_t(g);
        auto after = gamma_t(sub);
        if (!before || !after || *after != *before + 2 * m) {
            ++failures;
            continue;
        }
        if (has_min_tds_with_p3(g) != has_min_tds_with_p3(sub)) ++failures;
    }
    out << (failures == 0 ? "OK" : "FAIL") << " samples=" << samples
        << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

int verify_ct3(int max_n, int samples, uint64_t seed, std::ostream& out)
{
    Sampler s(seed);
    int failures = 0;
    int done = 0;
    while (done < samples) {
        Graph g = s.connected(3, max_n, 0.2, 0.6);
        auto value = gamma_t(g);
        if (!value || *value < 3) continue;
        auto ct = ct_gamma_t(g);
        if (!ct || *ct < 1 || *ct > 3) ++failures;
        ++done;
    }
    out << (failures == 0 ? "OK" : "FAIL") << " samples=" << samples
        << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

const char* status_word(VerifyReport::Status st)
{
    switch (st) {
    case VerifyReport::Status::Confirmed: return "confirmed";
    case VerifyReport::Status::Refuted: return "refuted";
    case VerifyReport::Status::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

CnfFormula fixed_sat_formula()
{
    return {3, {{1, 2, 3}, {-1, 2, -3}}};
}

CnfFormula fixed_unsat_formula()
{
    CnfFormula phi{3, {}};
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) phi.clauses.push_back({s1 * 1, s2 * 2, s3 * 3});
    return phi;
}

CnfFormula triple_clause_1in3()
{
    return {3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
}

int verify_gadgets(uint64_t budget_nodes, std::ostream& out)
{
    SearchBudget budget{budget_nodes};
    bool any_refuted = false;
    auto report = [&](const std::string& name, const GadgetOutput& gadget) {
        VerifyReport r = verify_gadget_equivalence(gadget, budget);
        for (const auto& item : r.items) {
            out << name << " " << item.property << " " << status_word(item.status);
            if (!item.detail.empty()) out << " (" << item.detail << ")";
            out << "\n";
        }
        if (!r.all_confirmed_or_budget()) any_refuted = true;
    };
    report("even-ds", build_even_ds_gadget(path_graph(10), 2));
    report("sat-2p4", build_2p4_gadget(fixed_sat_formula()));
    report("unsat-2p4", build_2p4_gadget(fixed_unsat_formula()));
    report("claw-1in3", build_clawfree_gadget(triple_clause_1in3()));
    out << (any_refuted ? "FAIL" : "OK") << "\n";
    return any_refuted ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"total domination edge-contraction toolkit"};
    app.require_subcommand(1);

    std::string file, hint_file, out_file;
    std::string method = "auto";
    bool witness = false;

    auto* c_gammat = app.add_subcommand("gammat", "total domination number of a graph");
    c_gammat->add_option("file", file)->required();
    c_gammat->add_flag("--witness", witness, "also print one minimum set");

    auto* c_gamma = app.add_subcommand("gamma", "domination number of a graph");
    c_gamma->add_option("file", file)->required();

    auto* c_decide = app.add_subcommand(
        "decide", "can one edge contraction lower the total domination number");
    c_decide->add_option("file", file)->required();
    c_decide->add_option("--method", method, "auto|oracle|p5free|p4kp3=K");
    c_decide->add_option("--hint", hint_file, "pattern graph file for class routing");
    c_decide->add_flag("--witness", witness, "on YES, print a minimum set carrying a P3");

    auto* c_ct = app.add_subcommand("ct", "least number of contractions that lowers it");
    c_ct->add_option("file", file)->required();

    auto* c_classify = app.add_subcommand("classify-h", "complexity verdict for a pattern graph");
    c_classify->add_option("file", file)->required();

    auto* c_compile = app.add_subcommand("compile", "build a reduction instance");
    c_compile->require_subcommand(1);
    int ell = 2;
    bool trust_promise = false;
    auto* cc_evends = c_compile->add_subcommand("even-ds", "layered gadget from a graph");
    cc_evends->add_option("--ell", ell, "half the spine length")->check(CLI::PositiveNumber);
    cc_evends->add_flag("--trust-promise", trust_promise,
                        "skip the gamma >= 4 source check");
    cc_evends->add_option("in", file)->required();
    cc_evends->add_option("out", out_file)->required();
    auto* cc_2p4 = c_compile->add_subcommand("sat-2p4", "variable/clause gadget from 3-CNF");
    cc_2p4->add_option("in", file)->required();
    cc_2p4->add_option("out", out_file)->required();
    auto* cc_claw = c_compile->add_subcommand("claw-1in3", "claw-free gadget from 1-in-3 CNF");
    cc_claw->add_option("in", file)->required();
    cc_claw->add_option("out", out_file)->required();
    auto* cc_sub = c_compile->add_subcommand("subdiv4", "4-subdivide every edge");
    cc_sub->add_option("in", file)->required();
    cc_sub->add_option("out", out_file)->required();

    auto* c_verify = app.add_subcommand("verify-lemma", "re-check a key property by search");
    c_verify->require_subcommand(1);
    int vn = 0, vsamples = 0; // 0 picks the per-check default
    uint64_t vseed = 1, vbudget = 5000000;
    auto* cv_thm1 = c_verify->add_subcommand(
        "thm1", "contraction decision vs the P3-in-minimum-set criterion");
    auto* cv_claim1 = c_verify->add_subcommand(
        "claim1", "layered gadget gamma_t identity");
    auto* cv_claim9 = c_verify->add_subcommand(
        "claim9", "4-subdivision gamma_t shift and decision transfer");
    auto* cv_ct3 = c_verify->add_subcommand("ct3", "contraction count bound");
    auto* cv_gadget = c_verify->add_subcommand("gadget", "fixed gadget instances end to end");
    for (CLI::App* sub : {cv_thm1, cv_claim1, cv_claim9, cv_ct3}) {
        sub->add_option("--n", vn, "max graph size");
        sub->add_option("--samples", vsamples, "sample count");
        sub->add_option("--seed", vseed, "random seed");
        sub->add_option("--budget", vbudget, "search node budget");
    }
    cv_gadget->add_option("--budget", vbudget, "search node budget");

    auto* c_gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    c_gen->require_subcommand(1);
    int gn = 0;
    double gp = 0.5;
    uint64_t gseed = 1;
    auto* cg_path = c_gen->add_subcommand("path");
    cg_path->add_option("n", gn)->required();
    auto* cg_cycle = c_gen->add_subcommand("cycle");
    cg_cycle->add_option("n", gn)->required();
    auto* cg_star = c_gen->add_subcommand("star");
    cg_star->add_option("n", gn)->required();
    auto* cg_complete = c_gen->add_subcommand("complete");
    cg_complete->add_option("n", gn)->required();
    auto* cg_random = c_gen->add_subcommand("random");
    cg_random->add_option("n", gn)->required();
    cg_random->add_option("p", gp)->required();
    cg_random->add_option("seed", gseed)->required();

    std::vector<const char*> argv;
    argv.push_back("tdc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*c_gammat) {
            Graph g = load_edge_list(file);
            auto value = gamma_t(g);
            if (value) {
                out << *value << "\n";
                if (witness) print_ids(out, enumerate_min_tds(g).sets.front());
            } else {
                out << "NOTDS\n";
            }
            return 0;
        }
        if (*c_gamma) {
            out << gamma(load_edge_list(file)) << "\n";
            return 0;
        }
        if (*c_decide) return run_decide(file, method, hint_file, witness, out);
        if (*c_ct) {
            auto ct = ct_gamma_t(load_edge_list(file));
            if (ct)
                out << *ct << "\n";
            else
                out << "IRREDUCIBLE\n";
            return 0;
        }
        if (*c_classify) {
            auto cls = classify_h(load_edge_list(file));
            out << cls.verdict_line() << "\n" << cls.explanation() << "\n";
            return 0;
        }
        if (*c_compile) {
            GadgetOutput gadget;
            bool has_roles = true;
            if (*cc_evends) {
                gadget = build_even_ds_gadget(load_edge_list(file), ell, trust_promise);
            } else if (*cc_2p4) {
                gadget = build_2p4_gadget(load_dimacs(file));
            } else if (*cc_claw) {
                gadget = build_clawfree_gadget(load_dimacs(file));
            } else {
                gadget.graph = four_subdivide_all(load_edge_list(file));
                has_roles = false;
            }
            save_edge_list(gadget.graph, out_file);
            if (has_roles) save_role_map(gadget.roles, out_file + ".roles");
            out << gadget.graph.vertex_count() << " " << gadget.graph.edge_count() << "\n";
            return 0;
        }
        if (*c_verify) {
            if (*cv_thm1) return verify_thm1(vn ? vn : 9, vsamples ? vsamples : 10000, vseed, out);
            if (*cv_claim1) return verify_claim1(vn ? vn : 8, vsamples ? vsamples : 20, vseed, out);
            if (*cv_claim9) return verify_claim9(vn ? vn : 6, vsamples ? vsamples : 25, vseed, out);
            if (*cv_ct3) return verify_ct3(vn ? vn : 8, vsamples ? vsamples : 200, vseed, out);
            if (*cv_gadget) return verify_gadgets(vbudget, out);
        }
        if (*c_gen) {
            Graph g(0);
            if (*cg_path)
                g = path_graph(gn);
            else if (*cg_cycle)
                g = cycle_graph(gn);
            else if (*cg_star)
                g = star_graph(gn);
            else if (*cg_complete)
                g = complete_graph(gn);
            else
                g = random_connected(gn, gp, gseed);
            write_edge_list(g, out);
            return 0;
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tdc::cli
