// Command-line front end over the library: every subcommand parses JSON
// inputs, calls the corresponding library routine and prints one JSON report
// to stdout. Exit codes: 0 decided (either way), 1 input error, 2 budget or
// cap exhausted, 3 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gonal/divisor.hpp"
#include "gonal/fixtures.hpp"
#include "gonal/gonality.hpp"
#include "gonal/graph.hpp"
#include "gonal/hurwitz.hpp"
#include "gonal/hyperelliptic.hpp"
#include "gonal/json_io.hpp"
#include "gonal/morphism.hpp"

using nlohmann::ordered_json;

namespace {

struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gonal::ParseError("cannot open file: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string fnv1a(const std::string& data) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

ordered_json coeffs_json(const gonal::Divisor& d) {
    ordered_json out = ordered_json::object();
    for (const auto& [v, c] : d.coeffs()) out[v] = c;
    return out;
}

ordered_json partition_set_json(const gonal::PartitionSet& p) {
    ordered_json out;
    out["d"] = p.degree();
    out["partitions"] = p.partitions();
    return out;
}

struct Cli {
    std::string graph_file, input_file, out_file, mode = "harmonic", base, name, op;
    std::vector<std::string> divisor_files;
    long long d = 0, r = 1, budget = 20000000;
    int max_subdiv = 1;
    bool hurwitz = false, witness = false, certificate = false, timing = false;
    bool budget_given = false;

    gonal::WeightedGraph load_graph() const {
        if (graph_file.empty()) throw gonal::ParseError("missing --graph");
        return gonal::parse_graph(slurp(graph_file));
    }
    gonal::Divisor load_divisor(std::size_t i = 0) const {
        if (divisor_files.size() <= i) throw gonal::ParseError("missing --divisor");
        return gonal::parse_divisor(slurp(divisor_files[i])).divisor;
    }
    void add_digests(ordered_json& report) const {
        ordered_json in = ordered_json::object();
        if (!graph_file.empty()) in["graph"] = fnv1a(slurp(graph_file));
        for (std::size_t i = 0; i < divisor_files.size(); ++i)
            in[i == 0 ? "divisor" : "divisor" + std::to_string(i + 1)] =
                fnv1a(slurp(divisor_files[i]));
        if (!input_file.empty()) in["input"] = fnv1a(slurp(input_file));
        report["inputs"] = in;
    }
    void write_payload(const std::string& text) const {
        if (out_file.empty()) return;
        std::ofstream out(out_file, std::ios::binary);
        out << text << "\n";
    }
};

int run_validate(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    std::vector<std::string> violations = g.validate();
    report["ok"] = violations.empty();
    report["violations"] = violations;
    return 0;
}

int run_genus(const Cli& cli, ordered_json& report) {
    report["value"] = gonal::genus(cli.load_graph());
    return 0;
}

int run_rank(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    report["value"] = gonal::rank(g, cli.load_divisor());
    return 0;
}

int run_reduce(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    std::string q = cli.base.empty() ? g.vertex_id(0) : cli.base;
    gonal::Divisor reduced = gonal::reduce(g, cli.load_divisor(), q);
    report["base"] = q;
    report["reduced"] = coeffs_json(reduced);
    cli.write_payload(gonal::divisor_to_json(reduced));
    return 0;
}

int run_equiv(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    report["equivalent"] = gonal::is_equivalent(g, cli.load_divisor(0), cli.load_divisor(1));
    return 0;
}

int run_wrd(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    std::vector<gonal::PicardClass> classes = gonal::W_r_d(g, cli.d, cli.r);
    report["d"] = cli.d;
    report["r"] = cli.r;
    report["count"] = classes.size();
    report["nonempty"] = !classes.empty();
    if (cli.witness) {
        ordered_json reps = ordered_json::array();
        for (const gonal::PicardClass& pc : classes) reps.push_back(coeffs_json(pc.representative));
        report["classes"] = reps;
    }
    return 0;
}

ordered_json morphism_report(const gonal::IndexedMorphism& phi) {
    return ordered_json::parse(gonal::morphism_to_json(phi));
}

int run_gonality(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    report["d"] = cli.d;
    report["mode"] = cli.mode;
    if (cli.mode == "divisorial") {
        gonal::GonalWitness w = gonal::is_divisorially_gonal(g, cli.d);
        report["decision"] = w.gonal;
        if (w.witness && cli.witness) report["witness"] = coeffs_json(*w.witness);
        return 0;
    }
    if (cli.mode == "refinement") {
        gonal::RefinementReport rr =
            gonal::find_divisorial_refinement(g, cli.d, cli.r, cli.max_subdiv);
        report["decision"] = rr.found;
        if (rr.found) {
            report["plan"] = rr.plan;
            report["subdivision_total"] = rr.subdivision_total;
            if (cli.witness) report["witness"] = coeffs_json(*rr.witness);
            if (rr.refined) cli.write_payload(gonal::graph_to_json(*rr.refined));
        }
        return 0;
    }
    gonal::MorphismMode mode;
    if (cli.mode == "harmonic")
        mode = gonal::MorphismMode::harmonic;
    else if (cli.mode == "pseudo")
        mode = gonal::MorphismMode::pseudo_harmonic;
    else
        throw gonal::ParseError("unknown mode: " + cli.mode);
    gonal::GonalitySearchOptions opts;
    opts.node_budget = cli.budget;
    opts.hurwitz = cli.hurwitz;
    opts.hurwitz_degree_cap = static_cast<int>(std::max(8LL, cli.d));
    gonal::GonalityReport gr = gonal::find_harmonic_to_tree(g, cli.d, mode, opts);
    const char* outcome = gr.outcome == gonal::GonalityReport::Outcome::found ? "found"
                          : gr.outcome == gonal::GonalityReport::Outcome::not_found
                              ? "not_found"
                              : "inconclusive";
    report["decision"] = gr.decision();
    report["outcome"] = outcome;
    report["budget"] = {{"nodes_explored", gr.nodes_explored},
                        {"trees_tried", gr.trees_tried},
                        {"limit", cli.budget}};
    if (gr.hurwitz_ok.has_value()) report["hurwitz_ok"] = *gr.hurwitz_ok;
    if (gr.certificate) {
        ordered_json cert;
        cert["degree"] = gr.certificate->degree;
        cert["m"] = gr.certificate->m;
        report["certificate"] = cert;
    }
    if (gr.witness && cli.witness) {
        report["witness"] = morphism_report(*gr.witness);
        cli.write_payload(gonal::morphism_to_json(*gr.witness));
    }
    if (gr.outcome == gonal::GonalityReport::Outcome::inconclusive)
        throw Inconclusive("node budget exhausted");
    return 0;
}

int run_hurwitz(const Cli& cli, ordered_json& report) {
    if (cli.input_file.empty()) throw gonal::ParseError("missing --input");
    gonal::PartitionSet p = gonal::parse_partition_set(slurp(cli.input_file));
    report["set"] = partition_set_json(p);
    gonal::RhGenus rg = gonal::rh_genus(p);
    ordered_json genus_report;
    genus_report["integral"] = rg.integral;
    if (rg.integral) {
        genus_report["genus"] = rg.genus;
        genus_report["negative"] = rg.negative;
    }
    report["rh_genus"] = genus_report;
    // the solver cap stays at its default 8 unless --budget raises it
    int cap = cli.budget_given ? static_cast<int>(cli.budget) : 8;
    gonal::HurwitzResult res = gonal::is_hurwitz_type(p, cli.witness, cap);
    report["decision"] = res.realizable;
    if (res.witness && cli.witness) report["witness"] = res.witness->cycle_notation();
    return 0;
}

int run_hyperelliptic(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    gonal::HyperellipticResult res = gonal::is_hyperelliptic(g);
    report["decision"] = res.hyperelliptic;
    report["method"] = res.method;
    if (res.witness && (cli.witness || cli.certificate))
        report["witness"] = coeffs_json(*res.witness);
    if (res.involution && cli.certificate) {
        ordered_json inv;
        inv["vertex_image"] = res.involution->vertex_image;
        inv["edge_image"] = res.involution->edge_image;
        report["involution"] = inv;
    }
    return 0;
}

int run_curve_locus(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    gonal::GonalitySearchOptions opts;
    opts.node_budget = cli.budget;
    gonal::CurveLocusReport res = gonal::stable_curve_hyperelliptic_locus(g, opts);
    report["decision"] = res.in_locus;
    report["hyperelliptic"] = res.hyperelliptic;
    report["bridge_ok"] = res.bridge_ok;
    report["violators"] = res.violators;
    if (res.two_gonal.has_value()) report["two_gonal"] = *res.two_gonal;
    if (res.consistent.has_value()) report["consistent"] = *res.consistent;
    return 0;
}

int run_transform(const Cli& cli, ordered_json& report) {
    gonal::WeightedGraph g = cli.load_graph();
    gonal::WeightedGraph out = [&] {
        if (cli.op == "loopless") return gonal::loopless_model(g);
        if (cli.op == "weightless") return gonal::weightless_model(g);
        if (cli.op == "stabilize") return gonal::stabilize(g);
        if (cli.op == "contract-bridges") return gonal::contract_bridges(g);
        if (cli.op == "refine") {
            if (cli.input_file.empty())
                throw gonal::ParseError("refine needs --input with an edge->count plan");
            return gonal::refine(g, gonal::parse_refinement_plan(slurp(cli.input_file)));
        }
        throw gonal::ParseError("unknown transform op: " + cli.op);
    }();
    report["op"] = cli.op;
    report["vertices"] = out.vertex_count();
    report["edges"] = out.edge_count();
    report["genus"] = gonal::genus(out);
    report["result"] = ordered_json::parse(gonal::graph_to_json(out));
    cli.write_payload(gonal::graph_to_json(out));
    return 0;
}

int run_fixtures(const Cli& cli, ordered_json& report) {
    if (cli.name.empty()) {
        report["names"] = gonal::fixtures::names();
        return 0;
    }
    gonal::WeightedGraph g = gonal::fixtures::by_name(cli.name);
    report["name"] = cli.name;
    report["result"] = ordered_json::parse(gonal::graph_to_json(g));
    cli.write_payload(gonal::graph_to_json(g));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor ranks, harmonic morphisms and gonality on weighted multigraphs"};
    app.require_subcommand(1);

    Cli cli;
    std::map<std::string, int (*)(const Cli&, ordered_json&)> handlers;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", cli.graph_file, "graph JSON file");
        sub->add_option("--divisor", cli.divisor_files, "divisor JSON file (repeatable)");
        sub->add_option("--input", cli.input_file, "auxiliary JSON input");
        sub->add_option("-d", cli.d, "degree");
        sub->add_option("-r", cli.r, "rank bound");
        sub->add_option("--mode", cli.mode, "harmonic|pseudo|divisorial|refinement");
        sub->add_option("--budget", cli.budget, "search node budget / solver cap");
        sub->add_option("--max-subdiv", cli.max_subdiv, "per-edge segment bound");
        sub->add_option("--base", cli.base, "base vertex");
        sub->add_option("--name", cli.name, "fixture name");
        sub->add_option("--op", cli.op, "transform operation");
        sub->add_option("--out", cli.out_file, "write the payload to this file");
        sub->add_flag("--hurwitz", cli.hurwitz, "require Hurwitz-type vertex profiles");
        sub->add_flag("--witness", cli.witness, "include the witness payload");
        sub->add_flag("--certificate", cli.certificate, "include certificates");
        sub->add_flag("--timing", cli.timing, "include wall time (non-reproducible)");
    };

    for (auto& [name, fn] : std::map<std::string, int (*)(const Cli&, ordered_json&)>{
             {"validate", run_validate},
             {"genus", run_genus},
             {"rank", run_rank},
             {"reduce", run_reduce},
             {"equiv", run_equiv},
             {"wrd", run_wrd},
             {"gonality", run_gonality},
             {"hurwitz", run_hurwitz},
             {"hyperelliptic", run_hyperelliptic},
             {"curve-locus", run_curve_locus},
             {"transform", run_transform},
             {"fixtures", run_fixtures}}) {
        add_common(app.add_subcommand(name));
        handlers[name] = fn;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // unknown subcommands and bad flags are input errors
    }
    CLI::App* sub = app.get_subcommands().front();
    cli.budget_given = sub->count("--budget") > 0;

    ordered_json report;
    report["command"] = sub->get_name();
    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        cli.add_digests(report);
        code = handlers.at(sub->get_name())(cli, report);
    } catch (const Inconclusive& e) {
        report["error"] = e.what();
        code = 2;
    } catch (const gonal::DegreeCapExceeded& e) {
        report["error"] = e.what();
        code = 2;
    } catch (const gonal::EnumerationCapExceeded& e) {
        report["error"] = e.what();
        code = 2;
    } catch (const gonal::ParseError& e) {
        report["error"] = e.what();
        code = 1;
    } catch (const std::invalid_argument& e) {
        report["error"] = e.what();
        code = 1;
    } catch (const std::exception& e) {
        report["error"] = std::string("internal: ") + e.what();
        code = 3;
    }
    if (cli.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::cout << report.dump() << "\n";
    return code;
}
