// monodyn command line: generate graphs, build the paper families, verify and
// trace activations, run the exact solver, evaluate bounds, and run the
// acceptance bundles.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
// 3 inconclusive solve.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "monodyn/checks.hpp"
#include "monodyn/io.hpp"

using namespace monodyn;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot open " + path + " for writing");
    out << text;
}

Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, path + ": malformed JSON");
        return graph_from_json(j);
    }
    return graph_from_edge_list(text);
}

json load_json(const std::string& path) {
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, path + ": malformed JSON");
    return j;
}

struct ThresholdFlags {
    std::string file;
    int constant = 0;
    bool simple = false;
    bool strict = false;
    bool unchecked = false;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--thresholds", file, "thresholds JSON file");
        auto* b = cmd->add_option("--constant", constant, "constant threshold t");
        auto* c = cmd->add_flag("--simple-majority", simple, "tau(v) = deg(v)/2");
        auto* d = cmd->add_flag("--strict-majority", strict, "tau(v) = (deg(v)+1)/2");
        cmd->add_flag("--unchecked-thresholds", unchecked,
                      "skip the tau(v) <= deg(v) validity check for file input");
        a->excludes(b)->excludes(c)->excludes(d);
        b->excludes(c)->excludes(d);
        c->excludes(d);
    }

    ThresholdAssignment resolve(const Graph& g) const {
        if (!file.empty()) {
            ThresholdAssignment tau = thresholds_from_json(load_json(file), g.vertex_count());
            if (!unchecked && !tau.valid_for(g))
                fail(errc::threshold_exceeds_degree,
                     "thresholds in " + file + " violate 1 <= tau(v) <= deg(v); pass "
                     "--unchecked-thresholds to use them anyway");
            return tau;
        }
        if (constant > 0) return constant_threshold(g, constant);
        if (simple) return simple_majority(g);
        if (strict) return strict_majority(g);
        fail(errc::invalid_parameter,
             "no thresholds given: use --thresholds, --constant, --simple-majority or "
             "--strict-majority");
    }
};

Construction dispatch_construct(const std::string& family, std::optional<int> m,
                                std::optional<int> n, std::optional<int> t,
                                std::optional<int> k) {
    auto need = [&](const std::optional<int>& v, const char* name) {
        if (!v) fail(errc::invalid_parameter,
                     family + " requires --" + std::string(name));
        return *v;
    };
    if (family == "mon2-torus") return mon2_torus(need(n, "n"));
    if (family == "mon-cycle-complete")
        return mon_cycle_complete(need(m, "m"), need(n, "n"), need(t, "t"));
    if (family == "mon-diag") return mon_diag(need(n, "n"));
    if (family == "mon-block-diag") return mon_block_diag(need(k, "k"), need(t, "t"));
    if (family == "mon-block-complement")
        return mon_block_complement(need(k, "k"), need(t, "t"));
    if (family == "mon-circulant") return mon_circulant(need(n, "n"));
    if (family == "dyn-cycle-complete-t2") return dyn_cycle_complete_t2(need(n, "n"));
    if (family == "dyn-cycle-complete-t3") return dyn_cycle_complete_t3(need(n, "n"));
    if (family == "dyn-cycle-complete-t")
        return dyn_cycle_complete_t(need(m, "m"), need(n, "n"), need(t, "t"));
    if (family == "dyn-cycle-complete") {
        const int tt = need(t, "t");
        if (tt == 2) return dyn_cycle_complete_t2(need(n, "n"));
        if (tt == 3) return dyn_cycle_complete_t3(need(n, "n"));
        return dyn_cycle_complete_t(need(m, "m"), need(n, "n"), tt);
    }
    if (family == "dyn-star-star") return dyn_star_star(need(n, "n"), need(t, "t"));
    if (family == "dyn-complete-complete")
        return dyn_complete_complete(need(m, "m"), need(n, "n"), need(t, "t"));
    if (family == "dyn-complete-complete-small-m")
        return dyn_complete_complete_small_m(need(m, "m"), need(n, "n"), need(t, "t"));
    fail(errc::invalid_parameter, "unknown family \"" + family + "\"");
}

BoundReport dispatch_bound(const std::string& name, const std::map<std::string, int>& p) {
    auto need = [&](const char* key) {
        auto it = p.find(key);
        if (it == p.end())
            fail(errc::invalid_parameter,
                 name + " requires --param " + std::string(key) + "=<int>");
        return it->second;
    };
    if (name == "line-graph-majority-lb") return line_graph_majority_lb(need("n"), need("k"));
    if (name == "dyn-product-cycle-ub")
        return dyn_product_cycle_ub(need("d"), need("n"), need("t"));
    if (name == "dyn-product-complete-ub") return dyn_product_complete_ub(need("d"), need("t"));
    if (name == "dyn-product-naive-ub") return dyn_product_naive_ub(need("dg"), need("dh"));
    if (name == "dyn-product-improved-ub") return dyn_product_improved_ub(need("dg"), need("dh"));
    if (name == "dyn-product-star-corollary-ub")
        return dyn_product_star_corollary_ub(need("dg"), need("dh"));
    if (name == "dyn-product-clique-corollary-ub")
        return dyn_product_clique_corollary_ub(need("g"), need("t"));
    if (name == "regular-bipartite-line-lb")
        return regular_bipartite_line_lb(need("n"), need("r"), need("t"));
    if (name == "biregular-line-lb")
        return biregular_line_lb(need("m"), need("n"), need("r1"), need("r2"), need("t"));
    if (name == "small-m-exact") return small_m_exact(need("m"), need("n"), need("t"));
    fail(errc::invalid_parameter, "unknown bound \"" + name + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monopolies and dynamic monopolies on graph products"};
    app.require_subcommand(1);

    // gen ---------------------------------------------------------------
    std::string gen_family, gen_format = "edgelist", gen_out;
    int gen_n = 0, gen_m = 0;
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("--family", gen_family, "cycle | complete | star | complete-bipartite")
        ->required();
    gen->add_option("--n", gen_n, "order parameter")->required();
    gen->add_option("--m", gen_m, "first part size (complete-bipartite)");
    gen->add_option("--format", gen_format, "edgelist | json");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // product -------------------------------------------------------------
    std::string prod_g, prod_h, prod_format = "json", prod_out;
    auto* prod = app.add_subcommand("product", "Cartesian product of two graph files");
    prod->add_option("first", prod_g, "first factor (edge list or JSON)")->required();
    prod->add_option("second", prod_h, "second factor")->required();
    prod->add_option("--format", prod_format, "json (keeps grid labels) | edgelist");
    prod->add_option("--out", prod_out, "output file (default stdout)");

    // construct -----------------------------------------------------------
    std::string con_family, con_out;
    std::optional<int> con_m, con_n, con_t, con_k;
    bool con_grid = false;
    auto* con = app.add_subcommand("construct", "build a vertex-set family from the theorems");
    con->add_option("--family", con_family, "family tag (see README)")->required();
    con->add_option("--m", con_m, "rows / first factor order");
    con->add_option("--n", con_n, "columns / second factor order");
    con->add_option("--t", con_t, "threshold");
    con->add_option("--k", con_k, "block count (block families)");
    con->add_flag("--grid", con_grid, "also print the ASCII grid");
    con->add_option("--out", con_out, "output file (default stdout)");

    // verify ----------------------------------------------------------------
    std::string ver_kind, ver_graph, ver_set;
    ThresholdFlags ver_tau;
    auto* ver = app.add_subcommand("verify", "check a monopoly or dynamo candidate");
    ver->add_option("--kind", ver_kind, "monopoly | dynamo")->required();
    ver->add_option("--graph", ver_graph, "graph file")->required();
    ver->add_option("--set", ver_set, "vertex-set JSON file")->required();
    ver_tau.attach(ver);

    // trace ----------------------------------------------------------------
    std::string tr_graph, tr_seed, tr_out;
    bool tr_grids = false;
    ThresholdFlags tr_tau;
    auto* tr = app.add_subcommand("trace", "run the activation process and emit the layers");
    tr->add_option("--graph", tr_graph, "graph file")->required();
    tr->add_option("--seed-set", tr_seed, "seed vertex-set JSON file")->required();
    tr->add_flag("--grids", tr_grids, "print per-round grid snapshots (labeled graphs)");
    tr->add_option("--out", tr_out, "output file (default stdout)");
    tr_tau.attach(tr);

    // solve ----------------------------------------------------------------
    std::string so_kind, so_graph, so_out;
    int so_lb = 1, so_threads = 1;
    std::uint64_t so_maxcand = 0;
    std::uint64_t so_maxms = 0;
    ThresholdFlags so_tau;
    auto* so = app.add_subcommand("solve", "exact minimum monopoly/dynamo by exhaustive search");
    so->add_option("--kind", so_kind, "monopoly | dynamo")->required();
    so->add_option("--graph", so_graph, "graph file")->required();
    so->add_option("--lb", so_lb, "start the cardinality scan here (dynamo only)");
    so->add_option("--max-candidates", so_maxcand, "candidate budget (0 = unlimited)");
    so->add_option("--max-ms", so_maxms, "time budget in milliseconds (0 = unlimited)");
    so->add_option("--threads", so_threads, "parallel workers (default 1)");
    so->add_option("--out", so_out, "output file (default stdout)");
    so_tau.attach(so);

    // bound ----------------------------------------------------------------
    std::string bo_name, bo_out;
    std::vector<std::string> bo_params;
    auto* bo = app.add_subcommand("bound", "evaluate a closed-form bound");
    bo->add_option("--name", bo_name, "bound identifier (see README)")->required();
    bo->add_option("--param", bo_params, "parameter as key=value (repeatable)");
    bo->add_option("--out", bo_out, "output file (default stdout)");

    // check-theorem ----------------------------------------------------------
    std::string ct_name = "all";
    std::uint64_t ct_seed = checks::default_seed;
    int ct_threads = 1;
    auto* ct = app.add_subcommand("check-theorem", "run a named acceptance bundle");
    ct->add_option("--name", ct_name, "bundle name or \"all\"");
    ct->add_option("--seed", ct_seed, "seed for the randomized bundles");
    ct->add_option("--threads", ct_threads, "solver workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            Graph g = [&] {
                if (gen_family == "cycle") return cycle(gen_n);
                if (gen_family == "complete") return complete(gen_n);
                if (gen_family == "star") return star(gen_n);
                if (gen_family == "complete-bipartite") {
                    if (gen_m < 1)
                        fail(errc::invalid_parameter, "complete-bipartite requires --m");
                    return complete_bipartite(gen_m, gen_n);
                }
                fail(errc::invalid_parameter, "unknown family \"" + gen_family + "\"");
            }();
            write_output(gen_out,
                         gen_format == "json" ? to_json(g).dump(2) : to_edge_list(g));
            return exit_ok;
        }

        if (*prod) {
            const Graph p = cartesian_product(load_graph(prod_g), load_graph(prod_h));
            write_output(prod_out,
                         prod_format == "edgelist" ? to_edge_list(p) : to_json(p).dump(2));
            return exit_ok;
        }

        if (*con) {
            const Construction c = dispatch_construct(con_family, con_m, con_n, con_t, con_k);
            std::string text = to_json(c).dump(2) + "\n";
            if (con_grid) text += render_grid(c.graph, c.set);
            write_output(con_out, text);
            return exit_ok;
        }

        if (*ver) {
            const Graph g = load_graph(ver_graph);
            const ThresholdAssignment tau = ver_tau.resolve(g);
            const VertexSet s = vertex_set_from_json(load_json(ver_set), g);
            if (ver_kind == "monopoly") {
                const MonopolyCheck r = is_static_monopoly(g, tau, s);
                if (r.holds) {
                    std::cout << "monopoly: PASS (" << s.size() << " vertices)\n";
                    return exit_ok;
                }
                std::cout << "monopoly: FAIL (vertex " << *r.witness
                          << " lacks threshold support)\n";
                return exit_verify_failed;
            }
            if (ver_kind == "dynamo") {
                const ActivationTrace t = activate(g, tau, s);
                if (t.complete) {
                    std::cout << "dynamo: PASS (" << s.size() << " seeds, "
                              << t.layers.size() - 1 << " rounds)\n";
                    return exit_ok;
                }
                std::cout << "dynamo: FAIL (" << t.activated.size() << "/" << g.vertex_count()
                          << " activated)\n";
                return exit_verify_failed;
            }
            fail(errc::invalid_parameter, "unknown kind \"" + ver_kind + "\"");
        }

        if (*tr) {
            const Graph g = load_graph(tr_graph);
            const ThresholdAssignment tau = tr_tau.resolve(g);
            const VertexSet s = vertex_set_from_json(load_json(tr_seed), g);
            const ActivationTrace t = activate(g, tau, s);
            std::string text = to_json(t).dump(2) + "\n";
            if (tr_grids) text += render_trace_grids(g, t);
            write_output(tr_out, text);
            return exit_ok;
        }

        if (*so) {
            const Graph g = load_graph(so_graph);
            const ThresholdAssignment tau = so_tau.resolve(g);
            SolveBudget budget;
            if (so_maxcand > 0) budget.max_candidates = so_maxcand;
            if (so_maxms > 0) budget.max_time = std::chrono::milliseconds(so_maxms);
            budget.threads = so_threads;
            SolveResult r;
            if (so_kind == "monopoly")
                r = min_monopoly(g, tau, budget);
            else if (so_kind == "dynamo")
                r = min_dynamo_lb_pruned(g, tau, so_lb, budget);
            else
                fail(errc::invalid_parameter, "unknown kind \"" + so_kind + "\"");
            json j = to_json(r);
            j["kind"] = so_kind;
            write_output(so_out, j.dump(2));
            return r.status == SolveStatus::solved ? exit_ok : exit_inconclusive;
        }

        if (*bo) {
            std::map<std::string, int> params;
            for (const std::string& kv : bo_params) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    fail(errc::invalid_parameter, "--param expects key=value, got \"" + kv + "\"");
                params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
            }
            const BoundReport r = dispatch_bound(bo_name, params);
            write_output(bo_out, to_json(r).dump(2));
            return r.applicable ? exit_ok : exit_usage;
        }

        if (*ct) {
            checks::CheckOptions opt;
            opt.seed = ct_seed;
            opt.threads = ct_threads;
            std::vector<std::string> names;
            if (ct_name == "all")
                names = checks::bundle_names();
            else
                names.push_back(ct_name);
            int failed = 0, total = 0;
            for (const std::string& bundle : names) {
                const auto results = checks::run_bundle(bundle, opt);
                int bundle_failed = 0;
                for (const auto& r : results) {
                    ++total;
                    if (!r.pass) {
                        ++failed;
                        ++bundle_failed;
                    }
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << bundle << ": " << r.name;
                    if (!r.detail.empty()) std::cout << " -- " << r.detail;
                    std::cout << '\n';
                }
                std::cout << "== " << bundle << ": "
                          << (results.size() - static_cast<std::size_t>(bundle_failed)) << "/"
                          << results.size() << " passed\n";
            }
            std::cout << "== total: " << (total - failed) << "/" << total << " passed\n";
            return failed == 0 ? exit_ok : exit_verify_failed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
