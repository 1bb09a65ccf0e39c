// lapspec: structural census, Laplacian spectral moments, and spectral
// support bounds for undirected simple graphs.

#include "lapspec/bounds.hpp"
#include "lapspec/census.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/moments.hpp"
#include "lapspec/numerics.hpp"
#include "lapspec/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

struct CommonInput {
    std::string file;
    std::string format = "auto";  // auto | edges | mtx
    bool one_based = false;
    int nodes = 0;
    std::string census_json;
    bool json_out = false;
};

void add_common(CLI::App* cmd, CommonInput& ci, bool with_census) {
    auto* file = cmd->add_option("file", ci.file, "input graph file, or '-' for stdin");
    cmd->add_option("--format", ci.format, "input format: auto, edges, or mtx")
        ->check(CLI::IsMember({"auto", "edges", "mtx"}))
        ->capture_default_str();
    cmd->add_flag("--one-based", ci.one_based, "edge-list node ids start at 1");
    cmd->add_option("--nodes", ci.nodes, "declare the node count (covers trailing isolated nodes)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", ci.json_out, "emit JSON instead of text");
    if (with_census) {
        auto* cj = cmd->add_option("--census-json", ci.census_json,
                                   "replay a structural census from a JSON file instead of a graph");
        file->excludes(cj);
        cj->excludes(file);
    } else {
        file->required();
    }
}

struct Loaded {
    std::optional<lapspec::Graph> graph;
    std::size_t duplicates = 0;
    std::optional<lapspec::StructuralCensus> census;
    std::vector<std::string> warnings;
};

Loaded load_input(const CommonInput& ci) {
    Loaded out;
    if (!ci.census_json.empty()) {
        std::ifstream f(ci.census_json);
        if (!f) throw lapspec::ParseError("cannot open census file '" + ci.census_json + "'");
        json j;
        try {
            f >> j;
        } catch (const json::exception& e) {
            throw lapspec::ParseError("census JSON parse failure: " + std::string(e.what()));
        }
        out.census = lapspec::census_from_json(j);
        return out;
    }
    if (ci.file.empty()) throw lapspec::ParseError("no input file given");

    std::string format = ci.format;
    if (format == "auto")
        format = ci.file.size() > 4 && ci.file.rfind(".mtx") == ci.file.size() - 4 ? "mtx" : "edges";

    std::ifstream fstream;
    std::istream* in = &std::cin;
    if (ci.file != "-") {
        fstream.open(ci.file);
        if (!fstream) throw lapspec::ParseError("cannot open input file '" + ci.file + "'");
        in = &fstream;
    }

    lapspec::ParsedGraph pg;
    if (format == "mtx") {
        pg = lapspec::parse_matrix_market(*in);
    } else {
        lapspec::ParseOptions opt;
        opt.one_based = ci.one_based;
        opt.declared_nodes = ci.nodes;
        pg = lapspec::parse_edge_list(*in, opt);
    }
    out.graph = std::move(pg.graph);
    out.duplicates = pg.duplicate_edges;
    if (out.duplicates > 0)
        out.warnings.push_back("duplicate_edges_collapsed:" + std::to_string(out.duplicates));
    if (lapspec::connected_components(*out.graph).count > 1)
        out.warnings.push_back("disconnected");
    return out;
}

void print_warnings_text(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string rational_text(const lapspec::Rational& r) {
    std::ostringstream os;
    os << lapspec::to_string(r);
    if (!r.is_integer()) os << " (" << std::setprecision(12) << r.to_double() << ")";
    return os.str();
}

int run_census(const CommonInput& ci) {
    Loaded in = load_input(ci);
    lapspec::StructuralCensus c = in.census ? *in.census : lapspec::full_census(*in.graph);
    if (ci.json_out) {
        json j;
        if (in.graph) j["summary"] = lapspec::to_json(lapspec::summarize(*in.graph));
        j["census"] = lapspec::census_to_json(c);
        j["warnings"] = in.warnings;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    print_warnings_text(in.warnings);
    std::cout << "n       " << c.n << "\n";
    if (in.graph) std::cout << "e       " << in.graph->num_edges() << "\n";
    for (std::size_t k = 0; k < c.S.size(); ++k)
        std::cout << "S" << k + 1 << "      " << lapspec::to_string(c.S[k]) << "\n";
    std::cout << "Delta   " << lapspec::to_string(c.Delta) << "\n";
    std::cout << "Q       " << lapspec::to_string(c.Q) << "\n";
    std::cout << "P       " << lapspec::to_string(c.P) << "\n";
    std::cout << "C_dd    " << rational_text(c.corr.C_dd) << "\n";
    std::cout << "C_d2d   " << rational_text(c.corr.C_d2d) << "\n";
    std::cout << "C_dt    " << rational_text(c.corr.C_dt) << "\n";
    std::cout << "C_d2t   " << rational_text(c.corr.C_d2t) << "\n";
    std::cout << "C_dq    " << rational_text(c.corr.C_dq) << "\n";
    std::cout << "D_dd    " << rational_text(c.corr.D_dd) << "\n";
    return 0;
}

int run_moments(const CommonInput& ci, int order, bool oracle) {
    if (order < 1) throw lapspec::ParseError("--order must be >= 1");
    if (order > 5 && !oracle)
        throw lapspec::ParseError("structural moments stop at order 5; pass --oracle for more");
    Loaded in = load_input(ci);
    if (oracle && !in.graph)
        throw lapspec::ParseError("--oracle needs a graph input, not a replayed census");

    lapspec::StructuralCensus c = in.census ? *in.census : lapspec::full_census(*in.graph);
    lapspec::MomentSequence structural = lapspec::moments_structural(c);
    structural.m.resize(std::min<std::size_t>(structural.m.size(), std::size_t(order)),
                        lapspec::Rational());

    std::optional<lapspec::MomentSequence> trace;
    std::string verdict;
    if (oracle) {
        trace = lapspec::moments_trace(lapspec::laplacian_matrix(*in.graph), order);
        verdict = "exact match";
        for (std::size_t k = 0; k < structural.m.size() && k < trace->m.size(); ++k)
            if (!(structural.m[k] == trace->m[k])) verdict = "MISMATCH";
    }

    if (ci.json_out) {
        json j;
        if (in.graph) j["summary"] = lapspec::to_json(lapspec::summarize(*in.graph));
        j["moments"] = lapspec::moments_to_json(structural);
        if (trace) {
            j["oracle"] = json{{"moments", lapspec::moments_to_json(*trace)},
                               {"verdict", verdict}};
        }
        j["warnings"] = in.warnings;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    print_warnings_text(in.warnings);
    for (std::size_t k = 0; k < structural.m.size(); ++k)
        std::cout << "m" << k + 1 << "  " << rational_text(structural.m[k]) << "\n";
    if (structural.n >= 2) {
        auto scaled = structural.scaled();
        for (std::size_t k = 0; k < scaled.size(); ++k)
            std::cout << "m̄" << k + 1 << "  " << rational_text(scaled[k]) << "\n";
    }
    if (trace) {
        for (std::size_t k = 0; k < trace->m.size(); ++k)
            std::cout << "oracle m" << k + 1 << "  " << rational_text(trace->m[k]) << "\n";
        std::cout << "verdict  " << verdict << "\n";
    }
    return 0;
}

int run_bounds(const CommonInput& ci, int s, double tol, bool oracle_moments, bool exact) {
    if (s < 1) throw lapspec::ParseError("--s must be >= 1");
    Loaded in = load_input(ci);

    lapspec::BoundResult br;
    std::optional<lapspec::MomentSequence> moments;
    if (in.census) {
        if (exact) throw lapspec::ParseError("--exact needs a graph input, not a replayed census");
        if (oracle_moments)
            throw lapspec::ParseError("--oracle-moments needs a graph input");
        if (s > 2)
            throw lapspec::ParseError("a census provides five moments, enough for s <= 2 only");
        moments = lapspec::moments_structural(*in.census);
        br = lapspec::bound_report_from_moments(*moments, s, tol);
    } else {
        if (s > 2 && !oracle_moments)
            throw lapspec::ParseError("s > 2 needs --oracle-moments (trace moments beyond order 5)");
        lapspec::BoundOptions opt;
        opt.tol = tol;
        opt.exact_spectrum = exact;
        opt.use_trace_oracle = oracle_moments;
        br = lapspec::bound_report(*in.graph, s, opt);
        moments = oracle_moments
                      ? lapspec::moments_trace(lapspec::laplacian_matrix(*in.graph), 2 * s + 1)
                      : lapspec::moments_structural(lapspec::full_census(*in.graph));
    }
    std::vector<std::string> warnings = in.warnings;
    for (const auto& w : br.warnings)
        if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);

    if (ci.json_out) {
        json j;
        if (in.graph) j["summary"] = lapspec::to_json(lapspec::summarize(*in.graph));
        j["moments"] = lapspec::moments_to_json(*moments);
        j["bounds"] = lapspec::bound_result_to_json(br);
        j["warnings"] = warnings;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    print_warnings_text(warnings);
    std::cout << std::setprecision(9) << std::fixed;
    std::cout << "s      " << br.s << "\n";
    std::cout << "alpha  " << br.alpha << "\n";
    std::cout << "beta   " << br.beta << "\n";
    if (br.lambda2) {
        std::cout << "lambda2  " << *br.lambda2 << "  (alpha slack "
                  << br.alpha - *br.lambda2 << ")\n";
        std::cout << "lambdaN  " << *br.lambdaN << "  (beta slack "
                  << *br.lambdaN - br.beta << ")\n";
    }
    return 0;
}

int run_spectrum(const CommonInput& ci) {
    Loaded in = load_input(ci);
    std::vector<double> eig =
        lapspec::sym_eigenvalues(lapspec::SymMatrix::from_int(lapspec::laplacian_matrix(*in.graph)));
    if (ci.json_out) {
        json j;
        j["summary"] = lapspec::to_json(lapspec::summarize(*in.graph));
        j["spectrum"] = eig;
        j["warnings"] = in.warnings;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    print_warnings_text(in.warnings);
    std::cout << std::setprecision(12);
    for (double v : eig) std::cout << v << "\n";
    return 0;
}

int run_gen(const std::string& kind, int n, double p, std::uint64_t seed) {
    lapspec::Graph g;
    if (kind == "ring") {
        g = lapspec::generate_ring(n);
    } else if (kind == "path") {
        g = lapspec::generate_path(n);
    } else if (kind == "complete") {
        g = lapspec::generate_complete(n);
    } else if (kind == "star") {
        g = lapspec::generate_star(n);
    } else if (kind == "er" || kind == "erdos_renyi") {
        g = lapspec::generate_erdos_renyi(n, p, seed);
    } else {
        throw lapspec::ParseError("unknown generator '" + kind + "'");
    }
    lapspec::write_edge_list(g, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplacian spectral moments and support bounds from local graph structure"};
    app.require_subcommand(1);

    CommonInput ci_census, ci_moments, ci_bounds, ci_spectrum;

    auto* census = app.add_subcommand("census", "structural census of a graph");
    add_common(census, ci_census, true);

    auto* moments = app.add_subcommand("moments", "Laplacian spectral moments");
    add_common(moments, ci_moments, true);
    int order = 5;
    bool oracle = false;
    moments->add_option("--order", order, "number of moments")->capture_default_str();
    moments->add_flag("--oracle", oracle, "also compute exact trace moments and compare");

    auto* bounds = app.add_subcommand("bounds", "spectral gap / radius support bounds");
    add_common(bounds, ci_bounds, true);
    int s = 2;
    double tol = lapspec::kDefaultTol;
    bool oracle_moments = false, exact = false;
    bounds->add_option("--s", s, "relaxation order")->capture_default_str();
    bounds->add_option("--tol", tol, "bisection tolerance")->capture_default_str();
    bounds->add_flag("--oracle-moments", oracle_moments,
                     "use exact trace moments (required for s > 2)");
    bounds->add_flag("--exact", exact, "attach the exact lambda_2 and lambda_n");

    auto* spectrum = app.add_subcommand("spectrum", "full Laplacian spectrum");
    add_common(spectrum, ci_spectrum, false);

    auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    std::string kind;
    int gn = 0;
    double gp = 0.0;
    std::uint64_t gseed = 0;
    gen->add_option("kind", kind, "ring | path | complete | star | er")->required();
    gen->add_option("--n", gn, "node count")->required();
    gen->add_option("--p", gp, "edge probability (er only)");
    gen->add_option("--seed", gseed, "generator seed (er only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (census->parsed()) return run_census(ci_census);
        if (moments->parsed()) return run_moments(ci_moments, order, oracle);
        if (bounds->parsed()) return run_bounds(ci_bounds, s, tol, oracle_moments, exact);
        if (spectrum->parsed()) return run_spectrum(ci_spectrum);
        if (gen->parsed()) return run_gen(kind, gn, gp, gseed);
    } catch (const lapspec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
