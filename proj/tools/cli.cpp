#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lcc/clawfree.hpp"
#include "lcc/error.hpp"
#include "lcc/exact.hpp"
#include "lcc/generators.hpp"
#include "lcc/interval.hpp"
#include "lcc/io.hpp"
#include "lcc/rect_cover.hpp"
#include "lcc/representation.hpp"
#include "lcc/setfam.hpp"
#include "lcc/structure.hpp"

namespace lcc::cli {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ULL;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

// Options shared by the subcommands; each command reads what it needs.
struct Options {
    std::string family, method, kind;
    std::string in, out, graph, dot, report;
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    int n = -1, k = -1, r = -1, s = -1;
    int points = -1, intervals = -1, vertices = -1, edges = -1;
    double p = 0.5;
    std::vector<int> parts;
    int max = 25;
    bool exact = false;
    std::vector<std::string> families;
    std::vector<std::uint64_t> seeds{1, 2, 3};
};

struct Context {
    Context(const std::vector<std::string>& a, std::ostream& o_, std::ostream& e) : args(a), out(o_), err(e) {}

    const std::vector<std::string>& args;
    std::ostream& out;
    std::ostream& err;
    Options o;
    Json stats = Json::object();
    std::vector<std::string> outputs;
    std::string input_bytes;
    Clock::time_point start = Clock::now();

    std::uint64_t seed() const {
        if (o.seed) return *o.seed;
        if (const char* env = std::getenv("LCC_SEED")) {
            try {
                std::size_t used = 0;
                auto v = std::stoull(env, &used);
                if (used == std::string(env).size()) return v;
            } catch (const std::exception&) {
            }
            throw MalformedInput(std::string("LCC_SEED is not an unsigned integer: ") + env);
        }
        return 0;
    }

    Json load(const std::string& path) {
        if (path.empty()) throw MalformedInput("--in is required");
        std::ifstream f(path, std::ios::binary);
        if (!f) throw MalformedInput("cannot read " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        input_bytes += ss.str();
        try {
            return Json::parse(ss.str());
        } catch (const Json::exception& e) {
            throw MalformedInput(path + ": " + e.what());
        }
    }

    void emit(const std::string& text) {
        if (o.out.empty()) {
            out << text;
        } else {
            write_text_file(o.out, text);
            outputs.push_back(o.out);
        }
    }

    void write_report() {
        if (o.report.empty()) return;
        std::string cmd;
        for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        Json rep{{"command", cmd},
                 {"input_hash", fnv1a_hex(input_bytes)},
                 {"outputs", outputs},
                 {"stats", stats},
                 {"seed", seed()},
                 {"wall_seconds", secs}};
        write_text_file(o.report, canonical_dump(rep));
    }
};

void need(int v, const char* flag) {
    if (v < 0) throw MalformedInput(std::string("--") + flag + " is required");
}

int cmd_gen(Context& c) {
    const auto& o = c.o;
    const Seed s{c.seed()};
    Json j;
    std::optional<Graph> g;
    if (o.family == "knabla") {
        need(o.n, "n");
        g = gen_k_nabla(o.n);
    } else if (o.family == "knabla-model") {
        need(o.n, "n");
        j = to_json(k_nabla_model(o.n));
    } else if (o.family == "staircase") {
        need(o.n, "n");
        g = gen_staircase_bipartite(o.n);
    } else if (o.family == "multipartite") {
        g = gen_complete_multipartite(o.parts);
    } else if (o.family == "kneser") {
        need(o.n, "n");
        need(o.k, "k");
        g = gen_kneser(o.n, o.k);
    } else if (o.family == "line") {
        need(o.vertices, "vertices");
        need(o.edges, "edges");
        g = gen_line_graph(random_multigraph(o.vertices, o.edges, s));
    } else if (o.family == "cobipartite") {
        need(o.n, "n");
        g = gen_random_cobipartite(o.n, o.p, s);
    } else if (o.family == "interval") {
        need(o.points, "points");
        need(o.intervals, "intervals");
        j = to_json(gen_random_linear_interval(o.points, o.intervals, s));
    } else {
        throw MalformedInput("unknown family \"" + o.family + "\"");
    }
    if (g) {
        j = to_json(*g);
        if (!o.dot.empty()) {
            write_text_file(o.dot, to_dot(*g));
            c.outputs.push_back(o.dot);
        }
        c.stats = {{"n", g->n()}, {"edges", g->edge_count()}, {"delta", g->max_degree()}};
    } else if (!o.dot.empty()) {
        const auto m = interval_model_from_json(j);
        write_text_file(o.dot, to_dot(derived_graph(m)));
        c.outputs.push_back(o.dot);
    }
    c.emit(canonical_dump(j));
    return ok;
}

int report_uncovered(Context& c, const CoverReport& rep) {
    Json bad{{"valid", false}, {"uncovered_edges", Json::array()}, {"non_cliques", rep.non_clique_indices}};
    for (auto [u, v] : rep.uncovered_edges) bad["uncovered_edges"].push_back({u, v});
    c.err << canonical_dump(bad);
    return invalid_certificate;
}

int cmd_cover(Context& c) {
    const auto& o = c.o;
    const SearchBudget budget{o.budget, 0.0};
    if (o.method == "staircase") {
        need(o.n, "n");
        const int r = o.r > 0 ? o.r : lrb_upper(static_cast<std::uint64_t>(o.n));
        const int s = o.s > 0 ? o.s : r;
        const RectCovering rc = staircase_cover(o.n, {r, s});
        const RectReport rep = verify_rect_cover(rc);
        if (!rep.valid) throw InvalidCertificate("internal: staircase covering failed verification");
        c.stats = {{"n", o.n}, {"r", r}, {"s", s}, {"row_valency", rep.max_row_valency},
                   {"col_valency", rep.max_col_valency}, {"rects", rc.rects.size()}};
        Json j = to_json(rc);
        j["stats"] = c.stats;
        c.emit(canonical_dump(j));
        return ok;
    }

    std::optional<Graph> g;
    CliqueCovering cov;
    Json extra = Json::object();
    if (o.method == "interval") {
        const IntervalModel m = interval_model_from_json(c.load(o.in));
        const IntervalCoverResult res = interval_cover(m);
        g = derived_graph(m);
        cov = res.covering;
        c.stats = {{"delta", res.delta},
                   {"valency", res.valency},
                   {"bound", "log2(D)+0.5*log2log2(D)+4"},
                   {"bound_value", interval_envelope(res.delta)},
                   {"segments", res.segments},
                   {"max_group", res.max_group}};
    } else {
        g = graph_from_json(c.load(o.in));
        if (o.method == "exact") {
            const ExactResult ex = exact_lcc(*g, budget);
            cov = ex.certificate;
            c.stats = {{"delta", g->max_degree()}, {"valency", ex.value}, {"proved", ex.proved}, {"nodes", ex.nodes}};
            extra = {{"lcc", ex.value}, {"proved", ex.proved}};
            if (!ex.proved) {
                c.err << "budget exhausted; best covering found has valency " << ex.value << "\n";
                c.emit(canonical_dump([&] {
                    Json j = to_json(cov);
                    j.update(extra);
                    j["stats"] = c.stats;
                    return j;
                }()));
                return budget_exhausted;
            }
        } else if (o.method == "clawfree") {
            const ClawfreeResult res = clawfree_cover(*g, Seed{c.seed()});
            cov = res.covering;
            const double ratio = res.delta ? res.valency * std::log2(res.delta + 2.0) / res.delta : 0.0;
            c.stats = {{"delta", res.delta}, {"valency", res.valency}, {"ratio", ratio},
                       {"raw_valency", res.raw_valency}, {"residual_edges", res.residual_edges}};
        } else {
            throw MalformedInput("unknown method \"" + o.method + "\"");
        }
    }
    const CoverReport rep = verify_covering(*g, cov);
    if (!rep.valid) return report_uncovered(c, rep);
    Json j = to_json(cov);
    j.update(extra);
    j["stats"] = c.stats;
    c.emit(canonical_dump(j));
    return ok;
}

int cmd_verify(Context& c) {
    const auto& o = c.o;
    Json result;
    bool valid = false;
    if (o.kind == "covering" || o.kind == "representation") {
        if (o.graph.empty()) throw MalformedInput("--graph is required");
        const Json gj = c.load(o.graph);
        // an interval model stands in for its derived graph
        const Graph g = gj.contains("points") ? derived_graph(interval_model_from_json(gj)) : graph_from_json(gj);
        const Json in = c.load(o.in);
        if (o.kind == "covering") {
            const CliqueCovering cov = covering_from_json(in);
            const CoverReport rep = verify_covering(g, cov);
            valid = rep.valid;
            result = {{"valid", rep.valid}, {"max_valency", rep.max_valency}, {"uncovered_edges", Json::array()},
                      {"non_cliques", rep.non_clique_indices}};
            for (auto [u, v] : rep.uncovered_edges) result["uncovered_edges"].push_back({u, v});
        } else {
            const auto rep = verify_representation(g, representation_from_json(in));
            valid = rep.valid;
            result = {{"valid", rep.valid}};
            if (!rep.valid) result["pair"] = {rep.u, rep.v};
        }
    } else if (o.kind == "rectcover") {
        const RectReport rep = verify_rect_cover(rect_covering_from_json(c.load(o.in)));
        valid = rep.valid;
        result = {{"valid", rep.valid}, {"row_valency", rep.max_row_valency}, {"col_valency", rep.max_col_valency},
                  {"illegal_rects", rep.illegal_rects}, {"uncovered", Json::array()}};
        for (auto [i, j] : rep.uncovered) result["uncovered"].push_back({i, j});
    } else if (o.kind == "family") {
        const FamilyReport rep = verify_family(family_from_json(c.load(o.in)));
        valid = rep.valid;
        result = {{"valid", rep.valid}, {"sizes_ok", rep.sizes_ok}, {"intersections_ok", rep.intersections_ok},
                  {"within_bound", rep.within_bound}};
        if (rep.violation) result["pair"] = {rep.violation->first, rep.violation->second};
    } else {
        throw MalformedInput("unknown kind \"" + o.kind + "\"");
    }
    c.stats = result;
    c.emit(canonical_dump(result));
    return valid ? ok : invalid_certificate;
}

int cmd_exact(Context& c) {
    const Graph g = graph_from_json(c.load(c.o.in));
    const ExactResult ex = exact_lcc(g, {c.o.budget, 0.0});
    const auto b = lcc_bounds(g);
    c.stats = {{"lcc", ex.value}, {"proved", ex.proved}, {"nodes", ex.nodes}, {"lower", b.lower}, {"upper", b.upper}};
    Json j = to_json(ex.certificate);
    j.update(c.stats);
    c.emit(canonical_dump(j));
    return ex.proved ? ok : budget_exhausted;
}

int cmd_frs(Context& c) {
    if (c.o.max < 1) throw MalformedInput("--max must be >= 1");
    const auto table = f_table(c.o.max);
    std::string csv = "r,s,f_closed,f_recurrence\n";
    for (int r = 1; r <= c.o.max; ++r)
        for (int s = 1; s <= c.o.max; ++s)
            csv += std::to_string(r) + "," + std::to_string(s) + "," + f_closed(r, s).str() + "," + table[r][s].str() + "\n";
    c.emit(csv);
    return ok;
}

int cmd_staircase(Context& c) {
    need(c.o.n, "n");
    const int upper = lrb_upper(static_cast<std::uint64_t>(c.o.n));
    const int r = c.o.r > 0 ? c.o.r : upper;
    const int s = c.o.s > 0 ? c.o.s : r;
    const RectCovering rc = staircase_cover(c.o.n, {r, s});
    const RectReport rep = verify_rect_cover(rc);
    Json j{{"n", c.o.n}, {"lrb_upper", upper}, {"r", r}, {"s", s}, {"covering", to_json(rc)}, {"valid", rep.valid},
           {"row_valency", rep.max_row_valency}, {"col_valency", rep.max_col_valency}};
    int code = rep.valid ? ok : invalid_certificate;
    if (c.o.exact) {
        try {
            j["lrb_exact"] = exact_lrb_staircase(c.o.n, {c.o.budget, 0.0});
        } catch (const BudgetExhausted& e) {
            j["lrb_exact"] = nullptr;
            c.err << e.what() << "\n";
            code = budget_exhausted;
        }
    }
    c.stats = j;
    c.stats.erase("covering");
    c.emit(canonical_dump(j));
    return code;
}

int cmd_bollobas(Context& c) {
    need(c.o.r, "r");
    need(c.o.s, "s");
    const SetPairFamily f = extremal_family(c.o.r, c.o.s);
    c.stats = {{"r", f.r}, {"s", f.s}, {"size", f.pairs.size()}};
    c.emit(canonical_dump(to_json(f)));
    return ok;
}

int cmd_bollobas_verify(Context& c) {
    c.o.kind = "family";
    return cmd_verify(c);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

int cmd_bench(Context& c) {
    std::string csv = "family,n,delta,method,valency,bound,seconds\n";
    auto row = [&](const std::string& fam, long long n, int delta, const std::string& method, long long val,
                   const std::string& bound, Clock::time_point t0) {
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        csv += fam + "," + std::to_string(n) + "," + std::to_string(delta) + "," + method + "," +
               std::to_string(val) + "," + bound + "," + fmt(secs) + "\n";
    };
    for (const auto& fam : c.o.families) {
        if (fam == "frs") {
            for (int r = 1; r <= c.o.max; ++r)
                for (int s = 1; s <= c.o.max; ++s) {
                    auto t0 = Clock::now();
                    const BigInt fc = f_closed(r, s);
                    row("frs", r, s, "closed", static_cast<long long>(fc), f_recurrence(r, s).str(), t0);
                }
        } else if (fam == "knabla") {
            for (int e = 3; e <= 12; ++e) {
                auto t0 = Clock::now();
                const int n = 1 << e;
                const auto res = interval_cover(k_nabla_model(n));
                row("knabla", n, res.delta, "interval", res.valency,
                    std::to_string(lrb_upper(static_cast<std::uint64_t>(n)) + 1), t0);
            }
        } else if (fam == "interval") {
            for (auto sd : c.o.seeds)
                for (int n : {100, 1000, 10000}) {
                    auto t0 = Clock::now();
                    const auto m = gen_random_linear_interval(n, n / 2, Seed{sd});
                    const auto res = interval_cover(m);
                    row("interval", n, res.delta, "interval", res.valency, fmt(interval_envelope(res.delta)), t0);
                }
        } else if (fam == "line" || fam == "cobipartite") {
            for (auto sd : c.o.seeds)
                for (int n : {12, 60, 200}) {
                    auto t0 = Clock::now();
                    const Graph g = fam == "line" ? gen_line_graph(random_multigraph(std::max(2, n / 4), n, Seed{sd}))
                                                  : gen_random_cobipartite(n, 0.5, Seed{sd});
                    const auto res = clawfree_cover(g, Seed{sd});
                    row(fam, g.n(), res.delta, "clawfree", res.valency, fmt(clawfree_envelope(res.delta)), t0);
                }
        } else {
            throw MalformedInput("unknown bench family \"" + fam + "\"");
        }
    }
    c.emit(csv);
    return ok;
}

Json witness_json(const std::string& what, const std::vector<int>& w) {
    return Json{{"error", what}, {"witness", w}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context c(args, out, err);
    auto& o = c.o;
    CLI::App app{"Local clique covers: exact search, constructions and verifiers", "lcc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto seed_opt = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "RNG seed (default: LCC_SEED, else 0)");
    };
    auto out_opts = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "output file (default: stdout)");
        sub->add_option("--report", o.report, "write a run report JSON here");
    };

    auto* gen = app.add_subcommand("gen", "generate a graph or interval model");
    gen->add_option("family", o.family,
                    "knabla | knabla-model | staircase | multipartite | kneser | line | cobipartite | interval")
        ->required();
    gen->add_option("--n", o.n);
    gen->add_option("--k", o.k);
    gen->add_option("--p", o.p)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--parts", o.parts)->delimiter(',');
    gen->add_option("--points", o.points);
    gen->add_option("--intervals", o.intervals);
    gen->add_option("--vertices", o.vertices);
    gen->add_option("--edges", o.edges);
    gen->add_option("--dot", o.dot, "also write Graphviz DOT here");
    seed_opt(gen);
    out_opts(gen);

    auto* cover = app.add_subcommand("cover", "build and verify a covering");
    cover->add_option("--method", o.method, "exact | clawfree | interval | staircase")->required();
    cover->add_option("--in", o.in);
    cover->add_option("--n", o.n, "matrix order (staircase)");
    cover->add_option("--r", o.r);
    cover->add_option("--s", o.s);
    cover->add_option("--budget", o.budget, "node budget for exact search");
    seed_opt(cover);
    out_opts(cover);

    auto* verify = app.add_subcommand("verify", "check a certificate");
    verify->add_option("--kind", o.kind, "covering | rectcover | family | representation")->required();
    verify->add_option("--graph", o.graph, "graph or interval model JSON");
    verify->add_option("--in", o.in)->required();
    out_opts(verify);

    auto* exact = app.add_subcommand("exact", "exact local clique cover number");
    exact->add_option("--in", o.in)->required();
    exact->add_option("--budget", o.budget);
    out_opts(exact);

    auto* frs = app.add_subcommand("frs", "f(r,s) table as CSV");
    frs->add_option("--max", o.max);
    out_opts(frs);

    auto* stair = app.add_subcommand("staircase", "staircase matrix covering");
    stair->add_option("--n", o.n)->required();
    stair->add_option("--r", o.r, "row budget (default: lrb_upper(n))");
    stair->add_option("--s", o.s, "column budget (default: r)");
    stair->add_flag("--exact", o.exact, "also run the exhaustive search");
    stair->add_option("--budget", o.budget);
    out_opts(stair);

    auto* bol = app.add_subcommand("bollobas", "extremal set-pair family");
    bol->add_option("--r", o.r)->required();
    bol->add_option("--s", o.s)->required();
    out_opts(bol);

    auto* bolv = app.add_subcommand("bollobas-verify", "verify a set-pair family");
    bolv->add_option("--in", o.in)->required();
    out_opts(bolv);

    auto* bench = app.add_subcommand("bench", "benchmark sweep as CSV");
    o.families = {"frs", "knabla", "interval", "line", "cobipartite"};
    bench->add_option("--families", o.families, "comma list; empty for header only")->delimiter(',');
    bench->add_option("--seeds", o.seeds)->delimiter(',');
    bench->add_option("--max", o.max, "frs table size");
    out_opts(bench);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return bad_input;
    }
    // "--families ''" arrives as one empty entry
    std::erase(o.families, std::string{});

    try {
        int code = ok;
        if (*gen) code = cmd_gen(c);
        else if (*cover) code = cmd_cover(c);
        else if (*verify) code = cmd_verify(c);
        else if (*exact) code = cmd_exact(c);
        else if (*frs) code = cmd_frs(c);
        else if (*stair) code = cmd_staircase(c);
        else if (*bol) code = cmd_bollobas(c);
        else if (*bolv) code = cmd_bollobas_verify(c);
        else if (*bench) code = cmd_bench(c);
        c.write_report();
        return code;
    } catch (const InvalidCertificate& e) {
        err << canonical_dump(witness_json(e.what(), e.witness));
        return invalid_certificate;
    } catch (const PreconditionFailed& e) {
        err << canonical_dump(witness_json(e.what(), e.witness));
        return precondition_failed;
    } catch (const StructureViolation& e) {
        err << canonical_dump(witness_json(e.what(), e.witness));
        return precondition_failed;
    } catch (const InfeasibleBudget& e) {
        err << canonical_dump(Json{{"error", e.what()}, {"max_feasible", e.max_feasible}});
        return precondition_failed;
    } catch (const BudgetExhausted& e) {
        err << e.what() << "\n";
        return budget_exhausted;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
}

} // namespace lcc::cli
