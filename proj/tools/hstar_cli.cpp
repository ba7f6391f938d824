// Command-line front end: family generators, formula/oracle h* computation,
// property certification, verification sweeps, JSON reports.
//
// Exit codes: 0 success, 1 usage/parse error, 2 resource budget exceeded,
// 3 verification mismatch.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hstar/errors.hpp"
#include "hstar/graph_polytopes.hpp"
#include "hstar/json_io.hpp"
#include "hstar/orthant.hpp"
#include "hstar/poset_polytopes.hpp"
#include "hstar/properties.hpp"

using namespace hstar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitVerify = 3;

struct Options {
    std::string method = "auto";  // formula | oracle | both | auto
    std::string output = "json";  // json | csv | pretty
    long max_box = 100000000;
    int max_dim = 9;
};

CountingConfig config_of(const Options& opt) {
    CountingConfig cfg;
    cfg.max_box_volume = Int(opt.max_box);
    cfg.max_dim = opt.max_dim;
    return cfg;
}

json read_json_source(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw invalid_argument_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

// A computable object: the polytope for the oracle route plus, when one of
// the combinatorial formulas applies, the formula route. The polytope is built
// lazily: formula-only requests never pay for (or get blocked by) the hull
// of a high-dimensional instance, and oracle requests hit the dimension cap
// with a clean resource error instead.
struct Instance {
    std::string name;
    int dim = 0;  // intrinsic dimension, known without building the hull
    std::function<VPolytope()> build;
    std::optional<IntPolynomial> formula;
    std::string formula_desc;
    json source;  // echo of the generated family object

    mutable std::optional<VPolytope> cached;
    const VPolytope& polytope() const {
        if (!cached) cached = build();
        return *cached;
    }
};

std::function<VPolytope()> capped(int ambient_dim, const CountingConfig& cfg,
                                  std::function<VPolytope()> fn) {
    int cap = cfg.max_dim;
    return [ambient_dim, cap, fn = std::move(fn)]() {
        if (ambient_dim > cap)
            throw resource_error("ambient dimension " + std::to_string(ambient_dim) +
                                 " exceeds --max-dim " + std::to_string(cap));
        return fn();
    };
}

int want_int(const std::vector<std::string>& args, size_t i, const std::string& what) {
    if (i >= args.size()) throw invalid_argument_error("missing argument: " + what);
    try {
        return std::stoi(args[i]);
    } catch (const std::exception&) {
        throw invalid_argument_error("bad integer for " + what + ": " + args[i]);
    }
}

Instance graph_instance(const std::string& name, const Graph& g, char type,
                        const Options& opt) {
    Instance inst;
    inst.name = name;
    inst.source = to_json(g);
    CountingConfig cfg = config_of(opt);
    if (type == 'A') {
        inst.dim = g.n() - component_count(g);
        inst.build = capped(g.n(), cfg, [g]() { return symmetric_edge_A(g); });
        if (is_connected(g)) {
            inst.formula = hstar_A(g, cfg);
            inst.formula_desc = "hstar_A dispatcher";
        }
    } else {
        inst.dim = g.n();
        inst.build = capped(g.n(), cfg, [g, cfg]() { return symmetric_edge_B(g, cfg); });
        if (is_bipartite(g)) {
            inst.formula = hstar_B(g);
            inst.formula_desc = "interior polynomial of the tilde extension";
        }
    }
    return inst;
}

Instance make_instance(const std::vector<std::string>& args, const Options& opt, char graph_type,
                       bool enriched) {
    if (args.empty()) throw invalid_argument_error("missing source (try: family cycle 3)");
    const std::string& kind = args[0];
    CountingConfig cfg = config_of(opt);

    if (kind == "family") {
        if (args.size() < 2) throw invalid_argument_error("missing family name");
        const std::string& fam = args[1];
        if (fam == "cycle") {
            int n = want_int(args, 2, "cycle length");
            Instance inst = graph_instance("cycle " + std::to_string(n), cycle_graph(n), 'A', opt);
            inst.formula = closed_form_cycle(n);
            inst.formula_desc = "cycle closed form";
            return inst;
        }
        if (fam == "complete") {
            int n = want_int(args, 2, "vertex count");
            Instance inst = graph_instance("complete " + std::to_string(n), complete_graph(n), 'A', opt);
            inst.formula = closed_form_complete(n);
            inst.formula_desc = "complete graph closed form";
            return inst;
        }
        if (fam == "complete_bipartite") {
            int a = want_int(args, 2, "first side");
            int b = want_int(args, 3, "second side");
            if (a < 1 || b < 1) throw invalid_argument_error("complete_bipartite needs sides >= 1");
            Instance inst = graph_instance("complete_bipartite " + std::to_string(a) + " " + std::to_string(b),
                                           complete_bipartite_graph(a, b), 'A', opt);
            // the closed form is stated for K_{m+1,n+1}
            inst.formula = closed_form_complete_bipartite(a - 1, b - 1);
            inst.formula_desc = "complete bipartite closed form";
            return inst;
        }
        if (fam == "tree") {
            if (args.size() < 3) throw invalid_argument_error("tree needs an edge-list file");
            Graph g = graph_from_json(read_json_source(args[2]));
            if (!is_connected(g) || g.edge_count() != g.n() - 1)
                throw invalid_argument_error("graph is not a tree");
            Instance inst = graph_instance("tree " + args[2], g, 'A', opt);
            inst.formula = IntPolynomial::binomial_power(g.n() - 1);
            inst.formula_desc = "(x+1)^(d-1)";
            return inst;
        }
        if (fam == "delpezzo" || fam == "pseudo_delpezzo") {
            int m = want_int(args, 2, "index m");
            Instance inst;
            inst.name = fam + " " + std::to_string(m);
            bool del = fam == "delpezzo";
            inst.dim = 2 * m;
            inst.build = capped(2 * m, cfg, [del, m]() {
                return del ? del_pezzo_polytope(m) : pseudo_del_pezzo_polytope(m);
            });
            inst.formula = del ? closed_form_delpezzo(m) : closed_form_pseudo_delpezzo(m);
            inst.formula_desc = "closed form";
            inst.source = to_json(inst.polytope());
            return inst;
        }
        if (fam == "suspension-of") {
            if (args.size() < 3) throw invalid_argument_error("suspension-of needs a graph file");
            Graph g = graph_from_json(read_json_source(args[2]));
            Instance inst = graph_instance("suspension of " + args[2], suspension(g), 'A', opt);
            inst.formula = hstar_A_suspension(g);
            inst.formula_desc = "cut average";
            return inst;
        }
        if (fam == "graph") {
            if (args.size() < 3) throw invalid_argument_error("graph needs a file");
            Graph g = graph_from_json(read_json_source(args[2]));
            return graph_instance("graph " + args[2], g, graph_type, opt);
        }
        throw invalid_argument_error("unknown family: " + fam);
    }

    if (kind == "poset") {
        if (args.size() < 2) throw invalid_argument_error("missing poset spec");
        Poset p;
        std::string pname;
        if (args[1] == "chain") {
            p = Poset::chain(want_int(args, 2, "chain length"));
            pname = "chain " + args[2];
        } else if (args[1] == "antichain") {
            p = Poset::antichain(want_int(args, 2, "antichain size"));
            pname = "antichain " + args[2];
        } else {
            p = poset_from_json(read_json_source(args[1]));
            pname = "poset " + args[1];
        }
        Instance inst;
        inst.source = to_json(p);
        inst.dim = p.n();
        if (enriched) {
            inst.name = pname + " (enriched chain polytope)";
            inst.build = capped(p.n(), cfg, [p, cfg]() { return enriched_chain_polytope(p, cfg); });
            inst.formula = hstar_enriched_chain(p);
            inst.formula_desc = "left peak polynomial";
        } else {
            inst.name = pname + " (chain polytope)";
            inst.build = capped(p.n(), cfg, [p]() { return chain_polytope(p); });
        }
        return inst;
    }

    if (kind == "twinned") {
        if (args.size() < 3) throw invalid_argument_error("twinned needs two poset files");
        Poset p = poset_from_json(read_json_source(args[1]));
        Poset q = poset_from_json(read_json_source(args[2]));
        Instance inst;
        inst.name = "twinned " + args[1] + " " + args[2];
        inst.dim = p.n();
        inst.build = capped(p.n(), cfg, [p, q]() { return twinned_chain_polytope(p, q); });
        inst.formula = hstar_twinned(p, q);
        inst.formula_desc = "left peak average over sign vectors";
        inst.source = json{{"P", to_json(p)}, {"Q", to_json(q)}};
        return inst;
    }

    if (kind == "assignment") {
        if (args.size() < 2) throw invalid_argument_error("assignment needs a file");
        OrthantAssignment a = orthant_assignment_from_json(read_json_source(args[1]));
        Instance inst;
        inst.name = "assignment " + args[1];
        inst.dim = a.d;
        inst.build = capped(a.d, cfg, [a, cfg]() { return assemble(a, cfg); });
        // checked mode: an inconsistent assignment must fail loudly (exit 3),
        // never average its way to a meaningless polynomial
        inst.formula = hstar_locally_antiblocking(a, PieceMethod::projections, EngineMode::checked, cfg);
        inst.formula_desc = "orthant average";
        inst.source = to_json(a);
        return inst;
    }

    throw invalid_argument_error("unknown source kind: " + kind);
}

json property_flags(const IntPolynomial& h, int dim) {
    json out;
    out["palindromic"] = is_palindromic(h, dim);
    out["unimodal"] = is_unimodal(h);
    out["log_concave"] = h.has_nonnegative_coeffs() ? json(is_log_concave(h)) : json(nullptr);
    out["real_rooted"] = h.is_zero() ? json(nullptr) : json(is_real_rooted(h));
    auto gv = gamma_decompose(h, dim);
    if (gv) {
        json g = json::array();
        bool positive = true;
        for (const Int& gi : *gv) {
            g.push_back(int_to_json(gi));
            if (sgn(gi) < 0) positive = false;
        }
        out["gamma"] = std::move(g);
        out["gamma_positive"] = positive;
    } else {
        out["gamma"] = nullptr;
        out["gamma_positive"] = false;
    }
    return out;
}

void emit(const json& payload, const Options& opt) {
    if (opt.output == "json") {
        std::cout << payload.dump() << "\n";
        return;
    }
    if (opt.output == "csv") {
        std::cout << "key,value\n";
        for (auto it = payload.begin(); it != payload.end(); ++it)
            std::cout << it.key() << "," << it.value().dump() << "\n";
        return;
    }
    for (auto it = payload.begin(); it != payload.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

int cmd_hstar(const Instance& inst, const Options& opt, bool always_verify) {
    CountingConfig cfg = config_of(opt);
    std::string method = opt.method;
    if (always_verify) method = "both";
    if (method == "auto") method = inst.formula ? "formula" : "oracle";
    if (method == "formula" && !inst.formula)
        throw invalid_argument_error("no formula route for this source; use --method oracle");

    json out;
    out["name"] = inst.name;
    std::optional<IntPolynomial> formula = inst.formula;
    std::optional<IntPolynomial> oracle;
    if (method == "oracle" || method == "both" || !formula)
        oracle = ehrhart_data(inst.polytope(), cfg).hstar;

    const IntPolynomial& h = formula && method != "oracle" ? *formula : *oracle;
    const int dim = inst.dim;
    out["dim"] = dim;
    out["hstar"] = to_json(h);
    out["method"] = formula && method != "oracle" ? "formula" : "oracle";
    if (!inst.formula_desc.empty() && method != "oracle") out["formula"] = inst.formula_desc;
    json flags = property_flags(h, dim);
    out.update(flags);

    bool mismatch = false;
    if (method == "both") {
        out["oracle_hstar"] = to_json(*oracle);
        mismatch = *formula != *oracle;
        out["match"] = !mismatch;
    }
    emit(out, opt);
    return mismatch ? kExitVerify : kExitOk;
}

int cmd_ehrhart(const Instance& inst, const Options& opt) {
    EhrhartData data = ehrhart_data(inst.polytope(), config_of(opt));
    json out = to_json(data);
    out["name"] = inst.name;
    emit(out, opt);
    return kExitOk;
}

int cmd_gamma(const Instance& inst, const Options& opt) {
    CountingConfig cfg = config_of(opt);
    IntPolynomial h = inst.formula ? *inst.formula : ehrhart_data(inst.polytope(), cfg).hstar;
    const int dim = inst.dim;
    json out;
    out["name"] = inst.name;
    out["hstar"] = to_json(h);
    out.update(property_flags(h, dim));
    emit(out, opt);
    return kExitOk;
}

int cmd_family(const Instance& inst, const Options& opt) {
    json out;
    out["name"] = inst.name;
    out["object"] = inst.source;
    out["polytope"] = to_json(inst.polytope());
    emit(out, opt);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// report: the built-in exhaustive sweeps at desk scale
// ---------------------------------------------------------------------------

struct SweepResult {
    std::string check;
    int instances = 0;
    int failures = 0;
};

SweepResult sweep_type_a(int maxn, const CountingConfig& cfg) {
    SweepResult r{"typeA formula = oracle (connected graphs)", 0, 0};
    for (int n = 2; n <= maxn; ++n) {
        for (const Graph& g : graphs_up_to_iso(n, [](const Graph& h) { return is_connected(h); })) {
            ++r.instances;
            if (hstar_A(g, cfg) != ehrhart_data(symmetric_edge_A(g), cfg).hstar) ++r.failures;
        }
    }
    return r;
}

SweepResult sweep_type_b(int maxn, const CountingConfig& cfg) {
    SweepResult r{"typeB formula = oracle, gamma-positive (bipartite graphs)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        for (const Graph& g :
             graphs_up_to_iso(n, [](const Graph& h) { return is_connected(h) && is_bipartite(h); })) {
            ++r.instances;
            IntPolynomial f = hstar_B(g);
            if (f != ehrhart_data(symmetric_edge_B(g, cfg), cfg).hstar || !is_gamma_positive(f, g.n()))
                ++r.failures;
        }
    }
    return r;
}

SweepResult sweep_suspension(int maxn, const CountingConfig& cfg) {
    SweepResult r{"suspension cut-average = oracle", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        for (const Graph& g : graphs_up_to_iso(n, nullptr)) {
            ++r.instances;
            if (hstar_A_suspension(g) != ehrhart_data(symmetric_edge_A(suspension(g)), cfg).hstar)
                ++r.failures;
        }
    }
    return r;
}

SweepResult sweep_enriched_chain(int maxn, const CountingConfig& cfg) {
    SweepResult r{"enriched chain formula = oracle (posets)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        for (const Poset& p : all_posets(n)) {
            ++r.instances;
            IntPolynomial f = hstar_enriched_chain(p);
            if (f != ehrhart_data(enriched_chain_polytope(p, cfg), cfg).hstar ||
                !is_gamma_positive(f, p.n()))
                ++r.failures;
        }
    }
    return r;
}

SweepResult sweep_left_enriched_counts(int maxn, int maxm, const CountingConfig& cfg) {
    SweepResult r{"left enriched order polynomial = Ehrhart (natural posets)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        for (const Poset& p : all_natural_posets(n)) {
            VPolytope ce = enriched_chain_polytope(p, cfg);
            for (int m = 1; m <= maxm; ++m) {
                ++r.instances;
                if (left_enriched_order_count(p, m) != count_lattice_points(ce, m, cfg)) ++r.failures;
            }
        }
    }
    return r;
}

SweepResult sweep_twinned(int maxn, const CountingConfig& cfg) {
    SweepResult r{"twinned chain formula = oracle, gamma-positive (poset pairs)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        auto posets = all_posets(n);
        for (const Poset& p : posets) {
            for (const Poset& q : posets) {
                ++r.instances;
                IntPolynomial f = hstar_twinned(p, q);
                if (f != ehrhart_data(twinned_chain_polytope(p, q), cfg).hstar ||
                    !is_gamma_positive(f, n))
                    ++r.failures;
            }
        }
    }
    return r;
}

SweepResult sweep_enriched_pq(int maxn, int maxm, const CountingConfig& cfg) {
    SweepResult r{"enriched (P,Q) counts = Ehrhart (natural pairs)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        auto posets = all_natural_posets(n);
        for (const Poset& p : posets) {
            for (const Poset& q : posets) {
                VPolytope tw = twinned_chain_polytope(p, q);
                for (int m = 1; m <= maxm; ++m) {
                    ++r.instances;
                    if (enriched_PQ_count(p, q, m) != count_lattice_points(tw, m, cfg)) ++r.failures;
                }
            }
        }
    }
    return r;
}

SweepResult sweep_identities(int maxn, const CountingConfig& cfg) {
    SweepResult r{"Gamma/Omega/Cayley companion identities (poset pairs)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        auto posets = all_posets(n);
        for (const Poset& p : posets) {
            for (const Poset& q : posets) {
                ++r.instances;
                IdentityReport rep = related_hstar_identities(p, q, cfg);
                bool ok = rep.gamma_ok && rep.omega_ok && rep.cayley_ok;
                if (rep.common_extension) ok = ok && rep.gamma_oo_ok && rep.omega_oo_ok;
                if (!ok) ++r.failures;
            }
        }
    }
    return r;
}

SweepResult sweep_projection_formula(int maxn, const CountingConfig& cfg) {
    SweepResult r{"projection formula = closure oracle (stable set polytopes)", 0, 0};
    for (int n = 1; n <= maxn; ++n) {
        for (const Graph& g : graphs_up_to_iso(n, nullptr)) {
            ++r.instances;
            VPolytope q = stable_set_polytope(g);
            if (hstar_unconditional_via_projections(q, cfg) !=
                ehrhart_data(unconditional_closure(q, cfg), cfg).hstar)
                ++r.failures;
        }
    }
    return r;
}

// Informational probe, not a pass/fail check: gamma-positivity of type-A
// polytopes outside the theorem-covered classes is conjectural, so observed
// counts are reported without affecting the exit code.
SweepResult sweep_gamma_observed(int maxn, const CountingConfig& cfg) {
    SweepResult r{"INFO: gamma-positive h*(A_G) observed (conjectural, not asserted)", 0, 0};
    for (int n = 2; n <= maxn; ++n) {
        for (const Graph& g : graphs_up_to_iso(n, [](const Graph& h) { return is_connected(h); })) {
            ++r.instances;
            IntPolynomial h = hstar_A(g, cfg);
            if (!is_gamma_positive(h, g.n() - 1)) ++r.failures;
        }
    }
    return r;
}

int cmd_report(const Options& opt, int max_graph, int max_poset, int max_pair) {
    CountingConfig cfg = config_of(opt);
    std::vector<SweepResult> results;
    results.push_back(sweep_type_a(max_graph, cfg));
    results.push_back(sweep_type_b(max_graph, cfg));
    results.push_back(sweep_suspension(std::min(4, max_graph), cfg));
    results.push_back(sweep_projection_formula(std::min(4, max_graph), cfg));
    results.push_back(sweep_enriched_chain(max_poset, cfg));
    results.push_back(sweep_left_enriched_counts(max_poset, 4, cfg));
    results.push_back(sweep_twinned(max_pair, cfg));
    results.push_back(sweep_enriched_pq(max_pair, 4, cfg));
    results.push_back(sweep_identities(max_pair, cfg));
    SweepResult info = sweep_gamma_observed(max_graph, cfg);

    int total_failures = 0;
    if (opt.output == "json") {
        json arr = json::array();
        for (const SweepResult& r : results) {
            arr.push_back(json{{"check", r.check}, {"instances", r.instances}, {"failures", r.failures}});
            total_failures += r.failures;
        }
        arr.push_back(json{{"check", info.check},
                           {"instances", info.instances},
                           {"gamma_positive", info.instances - info.failures},
                           {"informational", true}});
        std::cout << json{{"report", arr}, {"pass", total_failures == 0}}.dump() << "\n";
    } else {
        for (const SweepResult& r : results) {
            total_failures += r.failures;
            std::cout << (r.failures == 0 ? "PASS" : "FAIL") << "  " << r.check << "  ("
                      << r.instances << " instances";
            if (r.failures) std::cout << ", " << r.failures << " failures";
            std::cout << ")\n";
        }
        std::cout << "INFO  gamma-positive h*(A_G) observed on " << (info.instances - info.failures)
                  << " of " << info.instances << " connected graphs (conjectural, not asserted)\n";
    }
    return total_failures == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart / h* computations for lattice polytopes from graphs and posets"};
    app.require_subcommand(1);

    Options opt;
    char graph_type = 'A';
    bool enriched = false;
    int max_graph = 5, max_poset = 4, max_pair = 3;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--method", opt.method, "formula | oracle | both")
            ->check(CLI::IsMember({"auto", "formula", "oracle", "both"}));
        sub->add_option("--output", opt.output, "json | csv | pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--max-box", opt.max_box, "lattice-point scan budget");
        sub->add_option("--max-dim", opt.max_dim, "ambient dimension cap");
        sub->add_flag_callback("--type-b", [&graph_type]() { graph_type = 'B'; },
                               "use the type-B polytope for graph sources");
        sub->add_flag("--enriched", enriched, "use the enriched chain polytope for poset sources");
    };

    std::vector<std::string> source;
    CLI::App* c_hstar = app.add_subcommand("hstar", "print h* with gamma vector and property flags");
    CLI::App* c_ehrhart = app.add_subcommand("ehrhart", "print Ehrhart data (oracle route)");
    CLI::App* c_gamma = app.add_subcommand("gamma", "print the gamma vector and property flags");
    CLI::App* c_verify = app.add_subcommand("verify", "compute formula AND oracle; exit 3 on mismatch");
    CLI::App* c_family = app.add_subcommand("family", "print the generated family object");
    for (CLI::App* sub : {c_hstar, c_ehrhart, c_gamma, c_verify, c_family}) {
        sub->add_option("source", source, "family spec or JSON file path")->expected(-1);
        add_common(sub);
    }
    CLI::App* c_report = app.add_subcommand("report", "run built-in sweeps, print a pass/fail matrix");
    add_common(c_report);
    for (CLI::App* sub : {c_report, c_verify}) {
        sub->add_option("--max-graph", max_graph, "graph sweep size cap");
        sub->add_option("--max-poset", max_poset, "poset sweep size cap");
        sub->add_option("--max-pair", max_pair, "poset pair sweep size cap");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_report->parsed()) return cmd_report(opt, max_graph, max_poset, max_pair);
        if (c_verify->parsed() && !source.empty() && source[0] == "sweep")
            return cmd_report(opt, max_graph, max_poset, max_pair);

        Instance inst = make_instance(source, opt, graph_type, enriched);
        if (c_hstar->parsed()) return cmd_hstar(inst, opt, false);
        if (c_verify->parsed()) {
            if (!inst.formula)
                throw invalid_argument_error("verify needs a source with a formula route");
            return cmd_hstar(inst, opt, true);
        }
        if (c_ehrhart->parsed()) return cmd_ehrhart(inst, opt);
        if (c_gamma->parsed()) return cmd_gamma(inst, opt);
        if (c_family->parsed()) return cmd_family(inst, opt);
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    }
}
