#include "powercolor/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "powercolor/choosability.hpp"
#include "powercolor/coloring.hpp"
#include "powercolor/construction.hpp"
#include "powercolor/formats.hpp"
#include "powercolor/random_graphs.hpp"
#include "powercolor/report.hpp"
#include "powercolor/verification.hpp"

namespace powercolor {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    int q = 0;
    int k = 0;
    int kpow = 3;
    std::string which;
    std::string graph_path, parts_path, labels_path;
    std::string in_path, out_path, out_prefix;
    std::string dump_path, witness_out, check_witness;
    std::string format = "text";
    std::string label = "graph";
    int t = 2;
    int budget = 30;
    long long effort = kDefaultChoosabilityEffort;
    int random_count = 0;
    int min_n = 6, max_n = 30;
    double edge_prob = 0.25;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
    bool timing = false;
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

FiniteField field_for_order(int q) {
    auto pe = prime_power_decomposition(q);
    if (!pe) throw Error(std::to_string(q) + " is not a prime power");
    return FiniteField(pe->first, pe->second);
}

// Emits the reports in the chosen format (and to --out when given); returns
// the exit code derived from their combined status.
int emit_reports(const Options& opt, const std::string& command,
                 const nlohmann::ordered_json& params,
                 const std::vector<VerificationReport>& reports, std::ostream& out) {
    std::string text;
    if (opt.format == "json") {
        text = consolidated_json(command, params, opt.seed, reports, opt.timing).dump(2);
        text += "\n";
    } else {
        text = reports_to_text(reports);
        text += "seed " + std::to_string(opt.seed) + "\n";
    }
    out << text;
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) throw ParseError("cannot open " + opt.out_path + " for writing");
        file << text;
    }
    for (const auto& r : reports)
        if (!r.passed()) return kExitCheckFailed;
    return kExitPass;
}

ConstructionGraph load_construction(const Options& opt, bool need_labels) {
    if (opt.q > 0) {
        if (opt.k < 2) throw Error("--k must be at least 2");
        return build_construction(opt.q, opt.k);
    }
    if (opt.graph_path.empty() || opt.parts_path.empty())
        throw Error("need either --q/--k or --graph/--parts (and --k)");
    if (opt.k < 2) throw Error("--k must be at least 2");
    Graph g = read_graph_file(opt.graph_path);
    std::vector<Part> parts = read_parts_file(opt.parts_path);
    std::vector<VertexLabel> labels;
    if (!opt.labels_path.empty()) labels = read_labels_file(opt.labels_path);
    if (need_labels && labels.empty()) throw Error("this check needs --labels");
    return assemble_construction(std::move(g), std::move(parts), std::move(labels), opt.k);
}

int cmd_plane(const Options& opt, std::ostream& out) {
    FiniteField field = field_for_order(opt.q);
    AffinePlane plane = plane_build(field);
    if (!opt.dump_path.empty()) {
        std::ofstream dump(opt.dump_path, std::ios::binary);
        if (!dump) throw ParseError("cannot open " + opt.dump_path + " for writing");
        write_plane_dump(dump, plane);
    }
    nlohmann::ordered_json params{{"q", opt.q}};
    return emit_reports(opt, "plane", params, {plane_check(plane)}, out);
}

int cmd_build(const Options& opt, std::ostream& out) {
    if (opt.out_prefix.empty()) throw Error("--out-prefix is required");
    ConstructionGraph G = build_construction(opt.q, opt.k);
    write_graph_file(opt.out_prefix + ".graph", G.graph);
    write_parts_file(opt.out_prefix + ".parts", G.parts);
    write_labels_file(opt.out_prefix + ".labels", G.labels);
    out << "vertices " << G.graph.vertex_count() << "\n"
        << "edges " << G.graph.edge_count() << "\n"
        << "parts " << G.parts.size() << "\n"
        << "part-size " << G.n << "\n"
        << "max-degree " << G.graph.max_degree() << "\n"
        << "connected " << (is_connected(G.graph) ? "yes" : "no") << "\n";
    return kExitPass;
}

int cmd_power(const Options& opt, std::ostream&) {
    if (opt.in_path.empty() || opt.out_path.empty()) throw Error("--in and --out are required");
    if (opt.k < 1) throw Error("--k must be at least 1");
    Graph g = read_graph_file(opt.in_path);
    write_graph_file(opt.out_path, power(g, opt.k, resolve_threads(opt.threads)));
    return kExitPass;
}

int cmd_color(const Options& opt, std::ostream& out) {
    if (opt.in_path.empty()) throw Error("--in is required");
    Graph g = read_graph_file(opt.in_path);
    out << chromatic_exact(g, opt.budget) << "\n";
    return kExitPass;
}

int cmd_choose(const Options& opt, std::ostream& out) {
    if (opt.in_path.empty()) throw Error("--in is required");
    Graph g = read_graph_file(opt.in_path);

    if (!opt.check_witness.empty()) {
        std::vector<std::vector<int>> lists = read_lists_file(opt.check_witness);
        if (static_cast<int>(lists.size()) != g.vertex_count())
            throw ParseError("witness covers " + std::to_string(lists.size()) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
        long long colorings = count_list_colorings_product(g, lists);
        out << "proper-colorings " << colorings << "\n";
        if (colorings == 0) {
            out << "witness confirmed\n";
            return kExitPass;
        }
        out << "witness refuted\n";
        return kExitCheckFailed;
    }

    ChoosabilityResult result = choosable(g, opt.t, opt.effort);
    switch (result.verdict) {
        case ChoosableVerdict::Choosable:
            out << "choosable\n";
            break;
        case ChoosableVerdict::NotChoosable:
            out << "not-choosable\n";
            break;
        case ChoosableVerdict::Unknown:
            out << "unknown\n";
            break;
    }
    out << "assignments-tested " << result.assignments_tested << "\n";
    if (result.verdict == ChoosableVerdict::NotChoosable) {
        write_lists(out, result.witness);
        if (!opt.witness_out.empty()) {
            write_lists_file(opt.witness_out, result.witness);
            out << "witness " << opt.witness_out << "\n";
        }
    }
    return kExitPass;
}

std::vector<VerificationReport> construction_reports(const Options& opt, bool with_plane,
                                                     const std::string& which) {
    std::vector<VerificationReport> reports;
    if (with_plane && opt.q > 0 && (which == "all")) {
        FiniteField field = field_for_order(opt.q);
        AffinePlane plane = plane_build(field);
        reports.push_back(plane_check(plane));
        reports.push_back(verify_incidence(build_H(plane)));
    }
    const bool need_labels = which == "all" || which == "lemma2" || which == "counts";
    ConstructionGraph G = load_construction(opt, need_labels);
    const int threads = resolve_threads(opt.threads);
    if (which == "all" || which == "counts") reports.push_back(verify_counts(G, threads));
    if (which == "all" || which == "lemma1") reports.push_back(verify_lemma1(G, threads));
    if (which == "all" || which == "lemma2") reports.push_back(verify_lemma2(G, threads));
    return reports;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    nlohmann::ordered_json params{{"which", opt.which}};
    if (opt.q > 0) params["q"] = opt.q;
    if (opt.k > 0) params["k"] = opt.k;
    if (!opt.graph_path.empty()) params["graph"] = opt.graph_path;

    std::vector<VerificationReport> reports;
    if (opt.which == "all" || opt.which == "lemma1" || opt.which == "lemma2" ||
        opt.which == "counts") {
        reports = construction_reports(opt, true, opt.which);
    } else if (opt.which == "upper" || opt.which == "fk") {
        auto run_one = [&](const Graph& g, int k, const std::string& name) {
            if (opt.which == "upper")
                reports.push_back(verify_upper_chain(g, k, name, opt.budget));
            else
                reports.push_back(verify_fk_bound(g, k, name, opt.budget));
        };
        if (!opt.graph_path.empty()) {
            run_one(read_graph_file(opt.graph_path), opt.k, opt.label);
        } else if (opt.random_count > 0) {
            params["random"] = opt.random_count;
            std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
            for (int i = 0; i < opt.random_count; ++i) {
                Graph g = random_connected_graph(opt.min_n, opt.max_n, opt.edge_prob, rng);
                run_one(g, opt.k, "random-" + std::to_string(i));
            }
        } else if (opt.q > 0) {
            params["kpow"] = opt.kpow;
            ConstructionGraph G = build_construction(opt.q, opt.k);
            run_one(G.graph, opt.kpow, "construction");
        } else {
            throw Error("verify " + opt.which + " needs --graph, --random or --q/--k");
        }
    } else {
        throw Error("unknown verify target: " + opt.which);
    }
    return emit_reports(opt, "verify", params, reports, out);
}

int cmd_report(const Options& opt, std::ostream& out) {
    if (opt.q <= 0 || opt.k < 2) throw Error("report needs --q and --k");
    nlohmann::ordered_json params{{"q", opt.q}, {"k", opt.k}};
    Options options = opt;
    options.which = "all";
    std::vector<VerificationReport> reports = construction_reports(options, true, "all");
    return emit_reports(opt, "report", params, reports, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph powers from finite planes: construction, verification, coloring"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opt.out_path, "also write the report to this file");
        cmd->add_option("--threads", opt.threads, "worker threads (default: all cores)");
        cmd->add_option("--seed", opt.seed, "seed echoed in reports and used for --random");
        cmd->add_flag("--timing", opt.timing, "include wall-clock timings in JSON output");
    };

    CLI::App* plane = app.add_subcommand("plane", "build AG(2,q) and check the plane axioms");
    plane->add_option("--q", opt.q, "plane order (prime power)")->required();
    plane->add_option("--dump", opt.dump_path, "write a line-by-line plane dump");
    add_common(plane);

    CLI::App* build = app.add_subcommand("build", "build the construction and write its files");
    build->add_option("--q", opt.q, "plane order (prime power)")->required();
    build->add_option("--k", opt.k, "subdivision parameter (>= 2)")->required();
    build->add_option("--out-prefix", opt.out_prefix, "prefix for .graph/.parts/.labels")
        ->required();

    CLI::App* pw = app.add_subcommand("power", "write the k-th power of a graph");
    pw->add_option("--in", opt.in_path, "input graph file")->required();
    pw->add_option("--k", opt.k, "power (>= 1)")->required();
    pw->add_option("--out", opt.out_path, "output graph file")->required();
    pw->add_option("--threads", opt.threads, "worker threads");

    CLI::App* color = app.add_subcommand("color", "exact chromatic number of a small graph");
    color->add_option("--in", opt.in_path, "input graph file")->required();
    color->add_option("--budget", opt.budget, "vertex budget for the exact solver");

    CLI::App* choose = app.add_subcommand("choose", "decide t-choosability / verify witnesses");
    choose->add_option("--in", opt.in_path, "input graph file")->required();
    choose->add_option("--t", opt.t, "list size");
    choose->add_option("--effort", opt.effort, "assignment budget before verdict unknown");
    choose->add_option("--witness-out", opt.witness_out, "write a bad assignment here");
    choose->add_option("--check-witness", opt.check_witness,
                       "re-verify a witness file by full product enumeration");

    CLI::App* verify = app.add_subcommand("verify", "run structural checks");
    verify->add_option("check", opt.which, "one of: lemma1, lemma2, counts, upper, fk, all")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "counts", "upper", "fk", "all"}));
    verify->add_option("--q", opt.q, "plane order (prime power)");
    verify->add_option("--k", opt.k, "construction k, or the power for upper/fk file mode");
    verify->add_option("--kpow", opt.kpow, "power parameter for upper/fk on a construction");
    verify->add_option("--graph", opt.graph_path, "graph file");
    verify->add_option("--parts", opt.parts_path, "partition file");
    verify->add_option("--labels", opt.labels_path, "label file");
    verify->add_option("--label", opt.label, "name used for the graph in reports");
    verify->add_option("--random", opt.random_count, "run on this many seeded random graphs");
    verify->add_option("--min-n", opt.min_n, "random graphs: minimum vertex count");
    verify->add_option("--max-n", opt.max_n, "random graphs: maximum vertex count");
    verify->add_option("--edge-prob", opt.edge_prob, "random graphs: extra edge probability");
    verify->add_option("--budget", opt.budget, "vertex budget for exact chromatic numbers");
    add_common(verify);

    CLI::App* report = app.add_subcommand("report", "consolidated construction report");
    report->add_option("--q", opt.q, "plane order (prime power)")->required();
    report->add_option("--k", opt.k, "subdivision parameter (>= 2)")->required();
    add_common(report);

    std::vector<const char*> argv;
    argv.push_back("powercolor");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(plane)) return cmd_plane(opt, out);
        if (app.got_subcommand(build)) return cmd_build(opt, out);
        if (app.got_subcommand(pw)) return cmd_power(opt, out);
        if (app.got_subcommand(color)) return cmd_color(opt, out);
        if (app.got_subcommand(choose)) return cmd_choose(opt, out);
        if (app.got_subcommand(verify)) return cmd_verify(opt, out);
        if (app.got_subcommand(report)) return cmd_report(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace powercolor
