#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "tnp/errors.hpp"
#include "tnp/graph.hpp"
#include "tnp/instances.hpp"
#include "tnp/lp_export.hpp"
#include "tnp/oracles.hpp"
#include "tnp/tree_decomposition.hpp"
#include "tnp/tree_duality.hpp"
#include "tnp/treewidth_dp.hpp"

using Json = nlohmann::ordered_json;
using namespace tnp;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return std::round(ms * 1000.0) / 1000.0;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string sidecar_path(const std::string& out) {
    return std::filesystem::path(out).replace_extension(".json").string();
}

Json graph_meta(const std::string& file, const Graph& g) {
    Json j;
    j["file"] = file;
    j["n"] = g.n();
    j["m"] = g.m();
    return j;
}

Json labels_of(const RomanFunction& f) { return std::vector<int>(f.labels().begin(), f.labels().end()); }

void emit(Json report, Clock::time_point start) {
    report["time_ms"] = ms_since(start);
    std::cout << report.dump() << '\n';
}

Vertex checked_root(const Graph& g, long long root) {
    if (root < 0 || static_cast<std::size_t>(root) >= g.n())
        throw InputError("root " + std::to_string(root) + " is not a vertex (ids are 0-based)");
    return static_cast<Vertex>(root);
}

// certificate fields, re-checked here rather than trusted
Json certificate_json(const Graph& g, const DualityCertificate& c) {
    const bool ok = is_roman_dominating(g, c.rdf) && is_two_neighbour_packing(g, c.packing) &&
                    c.rdf.weight() == static_cast<int>(c.packing.size()) && c.rdf.weight() == c.value;
    Json j;
    j["root"] = c.root;
    j["gamma_R"] = c.value;
    j["tnp"] = c.packing.size();
    j["gap"] = c.value - static_cast<int>(c.packing.size());
    j["rdf"] = labels_of(c.rdf);
    j["packing"] = c.packing.members();
    j["verified"] = ok;
    return j;
}

// -------------------------------------------------------------------------

struct SolveOptions {
    std::string file;
    std::string method = "dp";
    std::string td_file;
    long long root = 0;
    std::string witness_out;
};

int cmd_solve(const SolveOptions& o) {
    const auto start = Clock::now();
    const Graph g = read_graph_file(o.file);
    Json report = graph_meta(o.file, g);
    report["command"] = "solve";
    report["method"] = o.method;
    Json witness;
    bool verified = false;

    if (o.method == "tree") {
        const auto c = certify_tree(RootedTree(g, checked_root(g, o.root)));
        const Json cj = certificate_json(g, c);
        report["value"] = c.packing.size();
        for (const auto& [k, v] : cj.items()) report[k] = v;
        verified = cj["verified"];
        witness["rdf"] = cj["rdf"];
        witness["packing"] = cj["packing"];
    } else {
        SolveResult r;
        if (o.method == "brute") {
            r = tnp_brute(g, BruteCaps::from_environment().packing);
            report["nodes"] = r.nodes;
        } else {
            TreeDecomposition td;
            if (!o.td_file.empty()) {
                td = read_td_file(o.td_file, g);
            } else {
                td = is_forest(g) ? decompose_tree(g) : decompose_heuristic(g);
            }
            report["width"] = td.width();
            r = dp::solve(g, make_nice(td, g));
        }
        const VertexSet& a = r.packing();
        verified = is_two_neighbour_packing(g, a) && static_cast<int>(a.size()) == r.value;
        report["value"] = r.value;
        report["packing"] = a.members();
        report["verified"] = verified;
        witness["packing"] = a.members();
    }
    if (!o.witness_out.empty()) {
        write_text(o.witness_out, witness.dump() + "\n");
        report["witness"] = o.witness_out;
    }
    emit(report, start);
    return verified ? 0 : 1;
}

int cmd_certify(const std::string& file, long long root) {
    const auto start = Clock::now();
    const Graph g = read_graph_file(file);
    Json report = graph_meta(file, g);
    report["command"] = "certify";
    const auto c = certify_tree(RootedTree(g, checked_root(g, root)));
    const Json cj = certificate_json(g, c);
    for (const auto& [k, v] : cj.items()) report[k] = v;
    const bool ok = cj["verified"];
    emit(report, start);
    return ok ? 0 : 1;
}

int cmd_duality_report(const std::string& file) {
    const auto start = Clock::now();
    const Graph g = read_graph_file(file);
    Json report = graph_meta(file, g);
    report["command"] = "duality-report";
    bool ok;
    if (is_tree(g)) {
        report["method"] = "tree";
        const Json cj = certificate_json(g, certify_tree(RootedTree(g, 0)));
        for (const auto& [k, v] : cj.items()) report[k] = v;
        ok = cj["verified"];
    } else {
        report["method"] = "brute";
        const BruteCaps caps = BruteCaps::from_environment();
        const auto r = roman_brute(g, caps.roman);
        const auto p = tnp_brute(g, caps.packing);
        ok = is_roman_dominating(g, r.rdf()) && r.rdf().weight() == r.value && is_two_neighbour_packing(g, p.packing()) &&
             static_cast<int>(p.packing().size()) == p.value && p.value <= r.value;
        report["gamma_R"] = r.value;
        report["tnp"] = p.value;
        report["gap"] = r.value - p.value;
        report["rdf"] = labels_of(r.rdf());
        report["packing"] = p.packing().members();
        report["verified"] = ok;
    }
    emit(report, start);
    return ok ? 0 : 1;
}

struct GenerateOptions {
    std::string family;
    int n = 0;
    int k = 0;
    std::vector<int> parts;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_generate(const GenerateOptions& o) {
    const auto start = Clock::now();
    Graph g;
    Json side;
    side["family"] = o.family;
    auto need_n = [&](int least) {
        if (o.n < least) throw InputError("--n must be at least " + std::to_string(least) + " for " + o.family);
    };

    if (o.family == "path" || o.family == "cycle") {
        need_n(o.family == "path" ? 1 : 3);
        g = o.family == "path" ? path(o.n) : cycle(o.n);
        const int p[] = {o.n};
        const auto cf = closed_form(o.family == "path" ? Family::Path : Family::Cycle, p);
        side["params"] = {{"n", o.n}};
        side["tnp"] = cf.packing;
        side["roman"] = cf.roman;
    } else if (o.family == "multipartite") {
        if (o.parts.empty()) throw InputError("--parts is required for multipartite");
        g = complete_multipartite(o.parts);
        side["params"] = {{"parts", o.parts}};
        if (o.parts.size() >= 2) {
            const auto cf = closed_form(Family::Multipartite, o.parts);
            side["tnp"] = cf.packing;
            side["roman"] = cf.roman;
        } else {
            side["tnp"] = g.n();
            side["roman"] = g.n();
        }
    } else if (o.family == "gap" || o.family == "kc4") {
        const LabeledInstance inst = o.family == "gap" ? gap_family(o.n) : k_c4(o.k);
        g = inst.graph;
        side["params"] = inst.params;
        if (inst.packing) side["tnp"] = *inst.packing;
        if (inst.roman) side["roman"] = *inst.roman;
        if (inst.roman_lower_bound) side["roman_lower_bound"] = *inst.roman_lower_bound;
    } else if (o.family == "reduction") {
        need_n(1);
        const Graph base = random_graph(o.n, o.p, o.seed);
        const auto r = reduce_independent_set(base);
        g = r.graph;
        const int alpha = independent_set_brute(base, BruteCaps::from_environment().independent_set).value;
        side["params"] = {{"n", o.n}, {"p", o.p}, {"seed", o.seed}};
        side["original_vertices"] = r.original_vertices;
        side["original_edges"] = base.m();
        side["offset"] = r.offset;
        side["alpha"] = alpha;
        side["tnp"] = alpha + r.offset;
    } else if (o.family == "random-tree") {
        need_n(1);
        g = random_tree(o.n, o.seed);
        side["params"] = {{"n", o.n}, {"seed", o.seed}};
        const auto c = certify_tree(RootedTree(g, 0));
        if (c.verified) {
            side["tnp"] = c.value;
            side["roman"] = c.value;
        }
    } else if (o.family == "random-graph") {
        need_n(0);
        g = random_graph(o.n, o.p, o.seed);
        side["params"] = {{"n", o.n}, {"p", o.p}, {"seed", o.seed}};
    } else {
        throw InputError("unknown family " + o.family);
    }
    side["n"] = g.n();
    side["m"] = g.m();

    write_text(o.out, write_graph(g));
    const std::string sc = sidecar_path(o.out);
    write_text(sc, side.dump(2) + "\n");

    Json report;
    report["command"] = "generate";
    report["output"] = o.out;
    report["sidecar"] = sc;
    for (const auto& [k, v] : side.items()) report[k] = v;
    emit(report, start);
    return 0;
}

int cmd_reduce(const std::string& file, const std::string& out) {
    const auto start = Clock::now();
    const Graph g = read_graph_file(file);
    const auto r = reduce_independent_set(g);
    Json side;
    side["source"] = file;
    side["original_vertices"] = r.original_vertices;
    side["original_edges"] = g.m();
    side["offset"] = r.offset;
    side["n"] = r.graph.n();
    side["m"] = r.graph.m();
    const std::size_t cap = BruteCaps::from_environment().independent_set;
    if (g.n() <= cap) {
        const int alpha = independent_set_brute(g, cap).value;
        side["alpha"] = alpha;
        side["tnp"] = alpha + r.offset;
    }
    write_text(out, write_graph(r.graph));
    const std::string sc = sidecar_path(out);
    write_text(sc, side.dump(2) + "\n");

    Json report;
    report["command"] = "reduce";
    report["output"] = out;
    report["sidecar"] = sc;
    for (const auto& [k, v] : side.items()) report[k] = v;
    emit(report, start);
    return 0;
}

int cmd_export_lp(const std::string& file, const std::string& problem, bool integer, const std::string& out) {
    const auto start = Clock::now();
    const Graph g = read_graph_file(file);
    const LpModel m = problem == "primal" ? build_rdp_ilp(g, !integer) : build_tnp_dual(g, integer);
    write_text(out, write_lp(m));
    Json report = graph_meta(file, g);
    report["command"] = "export-lp";
    report["problem"] = problem;
    report["integer"] = integer;
    report["variables"] = m.variables.size();
    report["constraints"] = m.constraints.size();
    report["output"] = out;
    emit(report, start);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-neighbour packing and Roman domination toolkit"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "Maximum two-neighbour packing of a .gr graph");
    solve->add_option("graph", so.file, "input .gr file")->required()->check(CLI::ExistingFile);
    solve->add_option("--method", so.method, "brute | dp | tree")
        ->check(CLI::IsMember({"brute", "dp", "tree"}))
        ->capture_default_str();
    solve->add_option("--td", so.td_file, "tree decomposition (.td) for the dp method")->check(CLI::ExistingFile);
    solve->add_option("--root", so.root, "root vertex for the tree method (0-based)")->capture_default_str();
    solve->add_option("--witness-out", so.witness_out, "write the witness as JSON");

    std::string cert_file;
    long long cert_root = 0;
    auto* certify = app.add_subcommand("certify", "Optimality certificate on a tree");
    certify->add_option("graph", cert_file)->required()->check(CLI::ExistingFile);
    certify->add_option("--root", cert_root, "root vertex (0-based)")->capture_default_str();

    std::string report_file;
    auto* report = app.add_subcommand("duality-report", "Roman domination number, packing number and their gap");
    report->add_option("graph", report_file)->required()->check(CLI::ExistingFile);

    GenerateOptions go;
    auto* gen = app.add_subcommand("generate", "Write a generated instance and its sidecar JSON");
    gen->add_option("--family", go.family)
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "multipartite", "gap", "kc4", "reduction", "random-tree", "random-graph"}));
    gen->add_option("--n", go.n, "vertex count (gap: size of the clique side)");
    gen->add_option("--k", go.k, "number of C4 copies");
    gen->add_option("--parts", go.parts, "part sizes")->delimiter(',');
    gen->add_option("--p", go.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", go.seed);
    gen->add_option("-o,--output", go.out)->required();

    std::string red_file, red_out;
    auto* red = app.add_subcommand("reduce", "Independent set to packing reduction");
    red->add_option("graph", red_file)->required()->check(CLI::ExistingFile);
    red->add_option("-o,--output", red_out)->required();

    std::string lp_file, lp_problem, lp_out;
    bool lp_relax = false, lp_integer = false;
    auto* lp = app.add_subcommand("export-lp", "Write the primal or dual program in LP format");
    lp->add_option("graph", lp_file)->required()->check(CLI::ExistingFile);
    lp->add_option("--problem", lp_problem)->required()->check(CLI::IsMember({"primal", "dual"}));
    auto* relax_flag = lp->add_flag("--relax", lp_relax, "continuous variables in [0,1]");
    auto* int_flag = lp->add_flag("--integer", lp_integer, "binary variables");
    relax_flag->excludes(int_flag);
    int_flag->excludes(relax_flag);
    lp->add_option("-o,--output", lp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? code : 2;
    }

    try {
        if (*solve) return cmd_solve(so);
        if (*certify) return cmd_certify(cert_file, cert_root);
        if (*report) return cmd_duality_report(report_file);
        if (*gen) return cmd_generate(go);
        if (*red) return cmd_reduce(red_file, red_out);
        if (*lp) {
            if (!lp_relax && !lp_integer) {
                std::cerr << "tnp: export-lp needs --relax or --integer\n";
                return 2;
            }
            return cmd_export_lp(lp_file, lp_problem, lp_integer, lp_out);
        }
    } catch (const ParseError& e) {
        std::cerr << "tnp: parse error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "tnp: precondition failed: " << e.what() << '\n';
        return 3;
    } catch (const SizeCapError& e) {
        std::cerr << "tnp: refused: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "tnp: error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
