#include "curvlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvlab/curvature_cd.hpp"
#include "curvlab/curvature_cde.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/girth.hpp"
#include "curvlab/graph.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/theorem_verify.hpp"

namespace curvlab::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for input files that cannot be read or do not form a valid graph.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for flag values that parse but make no sense together.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCsvColumns = {"vertex",          "girth",      "cd_bound", "cd_computed",
                                              "cd_margin",       "cde_bound",  "cde_sampled_min",
                                              "cde_margin",      "verdict",    "seed",
                                              "dim"};

Graph load_graph(const std::string& file, bool compact, std::ostream& err) {
    std::string text;
    if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw InputError("cannot open " + file);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        std::vector<std::string> warnings;
        Graph g = parse_edge_list(text, ParseOptions{compact}, &warnings);
        for (const auto& w : warnings) err << "warning: " << w << '\n';
        return g;
    } catch (const GraphError& e) {
        throw InputError(file + ": " + e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(file + ": " + e.what());
    }
}

double parse_dimension(const std::string& text) {
    if (text == "inf" || text == "infinity") return kInfiniteDimension;
    double value = 0.0;
    std::size_t used = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("--dim expects a positive number or 'inf', got '" + text + "'");
    }
    if (used != text.size() || !(value > 0.0) || std::isnan(value)) {
        throw UsageError("--dim expects a positive number or 'inf', got '" + text + "'");
    }
    return value;
}

ordered_json number_or_null(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json dim_json(double n) { return std::isinf(n) ? ordered_json("inf") : ordered_json(n); }

ordered_json girth_json(const GirthValue& g) {
    return g.is_infinite() ? ordered_json("inf") : ordered_json(g.length());
}

ordered_json empty_record(Vertex v, const GirthValue& girth, double dim) {
    ordered_json r;
    r["vertex"] = v;
    r["girth"] = girth_json(girth);
    for (const char* key : {"cd_bound", "cd_computed", "cd_margin", "cde_bound", "cde_sampled_min", "cde_margin",
                            "verdict", "seed"}) {
        r[key] = nullptr;
    }
    r["dim"] = dim_json(dim);
    return r;
}

ordered_json function_json(const VertexFunction& f) {
    ordered_json arr = ordered_json::array();
    for (double v : f.values()) arr.push_back(v);
    return arr;
}

std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    return v.dump();
}

void write_report(std::ostream& out, const ordered_json& doc, const std::string& format) {
    if (format == "json") {
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out << (i ? "," : "") << kCsvColumns[i];
    out << '\n';
    for (const auto& rec : doc.at("records")) {
        for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
            out << (i ? "," : "") << csv_cell(rec.value(kCsvColumns[i], ordered_json(nullptr)));
        }
        out << '\n';
    }
}

ordered_json header(const std::string& command, const Graph& g) {
    ordered_json doc;
    doc["command"] = command;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    return doc;
}

std::vector<Vertex> selected_vertices(const Graph& g, const std::optional<std::size_t>& vertex) {
    if (vertex) {
        if (*vertex >= g.vertex_count()) {
            throw UsageError("--vertex " + std::to_string(*vertex) + " is outside 0.." +
                             std::to_string(g.vertex_count() - 1));
        }
        return {*vertex};
    }
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
}

// ---------------------------------------------------------------- commands

struct GirthArgs {
    std::string file;
    bool per_vertex = false;
    std::string format = "text";
    bool compact = false;
};

int cmd_girth(const GirthArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(a.file, a.compact, err);
    const GirthValue total = graph_girth(g);
    if (a.format == "text") {
        out << total.to_string() << '\n';
        if (a.per_vertex) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) out << v << ' ' << vertex_girth(g, v).to_string() << '\n';
        }
        return kExitOk;
    }
    ordered_json doc = header("girth", g);
    doc["girth"] = girth_json(total);
    ordered_json records = ordered_json::array();
    if (a.per_vertex) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            records.push_back(ordered_json{{"vertex", v}, {"girth", girth_json(vertex_girth(g, v))}});
        }
    }
    doc["records"] = records;
    if (a.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << "vertex,girth\n";
        for (const auto& r : records) out << r["vertex"].dump() << ',' << csv_cell(r["girth"]) << '\n';
    }
    return kExitOk;
}

struct CdArgs {
    std::string file;
    std::string dim = "2";
    std::optional<std::size_t> vertex;
    std::string format = "json";
    bool compact = false;
};

int cmd_curvature_cd(const CdArgs& a, std::ostream& out, std::ostream& err) {
    const double n = parse_dimension(a.dim);
    const Graph g = load_graph(a.file, a.compact, err);
    const auto vertices = selected_vertices(g, a.vertex);

    std::vector<ordered_json> records(vertices.size());
    parallel_for(vertices.size(), [&](std::size_t i) {
        const Vertex v = vertices[i];
        const CdResult cd = cd_curvature(g, v, n);
        ordered_json r = empty_record(v, vertex_girth(g, v), n);
        r["cd_bound"] = cd_bound_girth5(g, v);
        r["cd_computed"] = cd.curvature_k;
        r["cd_margin"] = cd.curvature_k - cd_bound_girth5(g, v);
        records[i] = std::move(r);
    });

    ordered_json doc = header("curvature-cd", g);
    doc["dim"] = dim_json(n);
    doc["records"] = records;
    write_report(out, doc, a.format);
    return kExitOk;
}

struct CdeArgs {
    std::string file;
    std::string dim = "2";
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::optional<std::size_t> vertex;
    std::string format = "json";
    bool compact = false;
};

int cmd_curvature_cde(const CdeArgs& a, std::ostream& out, std::ostream& err) {
    const double n = parse_dimension(a.dim);
    if (a.samples == 0) throw UsageError("--samples must be at least 1");
    const Graph g = load_graph(a.file, a.compact, err);
    const auto vertices = selected_vertices(g, a.vertex);

    std::vector<ordered_json> records(vertices.size());
    parallel_for(vertices.size(), [&](std::size_t i) {
        const Vertex v = vertices[i];
        const CdeEstimate est = cde_estimate(g, v, n, a.samples, a.seed);
        ordered_json r = empty_record(v, vertex_girth(g, v), n);
        const double bound = cde_bound_girth5(g, v);
        r["cde_bound"] = bound;
        r["cde_sampled_min"] = est.sampled_min;
        r["cde_margin"] = est.sampled_min - bound;
        r["seed"] = a.seed;
        r["samples_used"] = est.samples_used;
        r["argmin"] = function_json(est.argmin.function);
        records[i] = std::move(r);
    });

    ordered_json doc = header("curvature-cde", g);
    doc["dim"] = dim_json(n);
    doc["samples"] = a.samples;
    doc["seed"] = a.seed;
    doc["records"] = records;
    write_report(out, doc, a.format);
    return kExitOk;
}

struct VerifyArgs {
    std::string file;
    std::string theorem = "both";
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    bool strict_global_girth = false;
    bool strict_girth = false;
    std::string format = "json";
    bool compact = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.samples == 0) throw UsageError("--samples must be at least 1");
    const Theorem theorem = a.theorem == "cd" ? Theorem::Cd : a.theorem == "cde" ? Theorem::Cde : Theorem::Both;
    const Graph g = load_graph(a.file, a.compact, err);

    VerifyOptions options;
    options.samples = a.samples;
    options.seed = a.seed;
    options.global_girth = a.strict_global_girth;
    options.min_girth = a.strict_girth ? 6 : 5;
    const CurvatureReport report = verify_theorems(g, theorem, options);

    ordered_json doc = header("verify", g);
    doc["theorem"] = a.theorem;
    doc["dim"] = report.dim;
    doc["min_girth"] = options.min_girth;
    doc["girth_gating"] = options.global_girth ? "global" : "vertex";
    doc["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
    doc["samples"] = report.samples ? ordered_json(*report.samples) : ordered_json(nullptr);

    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t unmet = 0;
    std::size_t tight = 0;
    ordered_json records = ordered_json::array();
    for (const auto& rec : report.records) {
        ordered_json r = empty_record(rec.vertex, rec.girth, report.dim);
        if (theorem != Theorem::Cde) {
            r["cd_bound"] = rec.cd_bound;
            r["cd_computed"] = number_or_null(rec.cd_computed);
            r["cd_margin"] = number_or_null(rec.cd_margin);
        }
        if (theorem != Theorem::Cd) {
            r["cde_bound"] = rec.cde_bound;
            r["cde_sampled_min"] = number_or_null(rec.cde_sampled_min);
            r["cde_margin"] = number_or_null(rec.cde_margin);
            r["seed"] = a.seed;
        }
        r["verdict"] = to_string(rec.verdict);
        if (rec.witness) r["witness"] = function_json(*rec.witness);
        records.push_back(std::move(r));

        switch (rec.verdict) {
            case Verdict::Pass: ++pass; break;
            case Verdict::Fail: ++fail; break;
            case Verdict::PreconditionNotMet: ++unmet; break;
        }
        if (rec.tight) {
            ++tight;
            err << "note: vertex " << rec.vertex << " is tight (margin in (-1e-8, 0))\n";
        }
    }
    doc["summary"] = ordered_json{{"pass", pass}, {"fail", fail}, {"precondition_not_met", unmet}, {"tight", tight}};
    doc["records"] = records;
    write_report(out, doc, a.format);

    if (report.any_fail()) return kExitViolation;
    if (report.all_precondition_not_met()) return kExitPreconditionUnmet;
    return kExitOk;
}

struct GenArgs {
    std::string family;
    std::vector<std::size_t> params;
    std::uint64_t seed = 0;
    std::size_t min_girth = 5;
    std::string output;
};

Graph generate(const GenArgs& a, std::ostream& err) {
    const auto need = [&](std::size_t count) {
        if (a.params.size() != count) {
            throw UsageError("family '" + a.family + "' takes " + std::to_string(count) + " parameter(s)");
        }
    };
    try {
        if (a.family == "petersen") {
            need(0);
            return gen::petersen();
        }
        if (a.family == "random-girth") {
            need(2);
            auto result = gen::random_with_girth(a.params[0], a.params[1], a.min_girth, a.seed);
            if (!result.reached_target) {
                err << "warning: stopped at " << result.graph.edge_count() << " of " << a.params[1]
                    << " edges after repeated rejections\n";
            }
            return std::move(result.graph);
        }
        using OneParam = Graph (*)(std::size_t);
        const std::vector<std::pair<std::string, OneParam>> simple = {
            {"cycle", gen::cycle}, {"star", gen::star}, {"path", gen::path}, {"complete", gen::complete}};
        for (const auto& [name, make] : simple) {
            if (a.family == name) {
                need(1);
                return make(a.params[0]);
            }
        }
        if (a.family == "tree") {
            need(1);
            return gen::random_tree(a.params[0], a.seed);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown family '" + a.family + "'");
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = generate(a, err);
    const std::string text = serialize_edge_list(g) + "\n";
    if (a.output.empty() || a.output == "-") {
        out << text;
    } else {
        std::ofstream file(a.output, std::ios::binary);
        if (!file || !(file << text)) throw InputError("cannot write " + a.output);
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bakry-Emery curvature toolkit for finite graphs"};
    app.name("curvlab");
    app.require_subcommand(1);

    GirthArgs girth_args;
    auto* girth = app.add_subcommand("girth", "Graph girth, optionally per vertex");
    girth->add_option("file", girth_args.file, "Edge-list file ('-' for stdin)")->required();
    girth->add_flag("--per-vertex", girth_args.per_vertex, "List the girth through every vertex");
    girth->add_option("--format", girth_args.format)->check(CLI::IsMember({"text", "json", "csv"}));
    girth->add_flag("--compact-ids", girth_args.compact, "Relabel sparse vertex ids");

    CdArgs cd_args;
    auto* cd = app.add_subcommand("curvature-cd", "Exact pointwise CD(K,n) curvature");
    cd->add_option("file", cd_args.file, "Edge-list file ('-' for stdin)")->required();
    cd->add_option("--dim", cd_args.dim, "Dimension n > 0, or 'inf'")->capture_default_str();
    cd->add_option("--vertex", cd_args.vertex, "Only this vertex");
    cd->add_option("--format", cd_args.format)->check(CLI::IsMember({"json", "csv"}));
    cd->add_flag("--compact-ids", cd_args.compact, "Relabel sparse vertex ids");

    CdeArgs cde_args;
    auto* cde = app.add_subcommand("curvature-cde", "Sampled upper bound on the pointwise CDE curvature");
    cde->add_option("file", cde_args.file, "Edge-list file ('-' for stdin)")->required();
    cde->add_option("--dim", cde_args.dim, "Dimension n > 0, or 'inf'")->capture_default_str();
    cde->add_option("--samples", cde_args.samples, "Random samples per vertex")->capture_default_str();
    cde->add_option("--seed", cde_args.seed)->capture_default_str();
    cde->add_option("--vertex", cde_args.vertex, "Only this vertex");
    cde->add_option("--format", cde_args.format)->check(CLI::IsMember({"json", "csv"}));
    cde->add_flag("--compact-ids", cde_args.compact, "Relabel sparse vertex ids");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check the girth >= 5 CD and CDE bounds at every vertex");
    verify->add_option("file", verify_args.file, "Edge-list file ('-' for stdin)")->required();
    verify->add_option("--theorem", verify_args.theorem)->check(CLI::IsMember({"cd", "cde", "both"}));
    verify->add_option("--samples", verify_args.samples, "CDE samples per vertex")->capture_default_str();
    verify->add_option("--seed", verify_args.seed)->capture_default_str();
    verify->add_flag("--strict-global-girth", verify_args.strict_global_girth,
                     "Require the whole graph to have girth >= 5");
    verify->add_flag("--strict-girth", verify_args.strict_girth, "Require girth > 5 instead of >= 5");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--compact-ids", verify_args.compact, "Relabel sparse vertex ids");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen->add_option("family", gen_args.family, "cycle|star|path|complete|tree|petersen|random-girth")->required();
    gen->add_option("params", gen_args.params, "Family parameters");
    gen->add_option("--seed", gen_args.seed)->capture_default_str();
    gen->add_option("--min-girth", gen_args.min_girth, "random-girth only")->capture_default_str();
    gen->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*girth) return cmd_girth(girth_args, out, err);
        if (*cd) return cmd_curvature_cd(cd_args, out, err);
        if (*cde) return cmd_curvature_cde(cde_args, out, err);
        if (*verify) return cmd_verify(verify_args, out, err);
        if (*gen) return cmd_gen(gen_args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitUsage;
}

}  // namespace curvlab::cli
