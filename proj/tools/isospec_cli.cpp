// SPDX-License-Identifier: MIT
//
// isospec command-line tool: validate and canonicalize graph files, reduce
// graphs over structural vertex sets, compute spectra, raster eigenvalue
// inclusion regions, bound spectral radii, build Laplacians, and suggest
// reduction candidates.
//
// Exit codes: 0 success, 2 validation/structural failure, 3 numeric
// non-convergence.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isospec/apps.hpp"
#include "isospec/charpoly.hpp"
#include "isospec/io.hpp"
#include "isospec/reduce.hpp"
#include "isospec/regions.hpp"
#include "isospec/roots.hpp"

#include <json.hpp>

namespace {

using namespace isospec;
using ordered_json = nlohmann::ordered_json;

/// Parses "v1,v3" or "1,3" into 0-based ids (labels are always 1-based).
std::vector<int> parse_vertices(const std::string& text, int n) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        if (token.front() == 'v' || token.front() == 'V') token.erase(0, 1);
        size_t used = 0;
        int label = 0;
        try {
            label = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("cannot parse vertex label \"" + token + "\"");
        }
        if (used != token.size()) throw ParseError("cannot parse vertex label \"" + token + "\"");
        if (label < 1 || label > n)
            throw ParseError("vertex v" + std::to_string(label) + " out of range (n=" +
                             std::to_string(n) + ")");
        out.push_back(label - 1);
    }
    if (out.empty()) throw ParseError("empty vertex list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string label_list(const std::vector<int>& verts) {
    std::string s;
    for (size_t k = 0; k < verts.size(); ++k) {
        if (k) s += ", ";
        s += "v" + std::to_string(verts[k] + 1);
    }
    return s;
}

std::vector<cplx> sorted_values(std::vector<cplx> vals) {
    std::sort(vals.begin(), vals.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return vals;
}

void print_reduction(const ReductionResult& r) {
    std::cout << "kept vertices: " << label_list(r.kept) << "\n";
    const std::vector<cplx> vals = sorted_values(r.exceptional);
    std::cout << "exceptional values (" << vals.size() << ")";
    if (!vals.empty()) {
        std::cout << ":";
        for (const cplx& v : vals) std::cout << " " << fmt12(v);
    }
    std::cout << "\n";
    if (!r.exceptional_polys.empty()) {
        std::cout << "exceptional polynomials:\n";
        for (const Poly& p : r.exceptional_polys) {
            std::cout << "  " << p.str("z") << "   roots:";
            for (const cplx& root : sorted_values(poly_roots(p)))
                std::cout << " " << fmt12(root);
            std::cout << "\n";
        }
    }
}

Window parse_window(const std::vector<double>& w) {
    Window win{w[0], w[1], w[2], w[3]};
    if (win.re_min >= win.re_max || win.im_min >= win.im_max)
        throw ParseError("window must satisfy re_min < re_max and im_min < im_max");
    return win;
}

int run(int argc, char** argv) {
    CLI::App app{"isospectral graph reductions and eigenvalue inclusion regions"};
    app.require_subcommand(1);

    std::string path, out, keep_arg, elim_arg, seq_arg, kind_arg, strategy_arg;
    std::vector<double> window_arg;
    int res = 400, levels = 1, max_results = 10;
    double tol = 1e-6;
    bool as_json = false;

    CLI::App* c_validate = app.add_subcommand("validate", "parse a graph file and echo it canonicalized");
    c_validate->add_option("path", path, "graph file")->required();

    CLI::App* c_reduce = app.add_subcommand("reduce", "reduce over a structural vertex set");
    c_reduce->add_option("path", path, "graph file")->required();
    CLI::Option* o_keep = c_reduce->add_option("--keep", keep_arg, "vertices to keep, e.g. v1,v2");
    CLI::Option* o_elim = c_reduce->add_option("--eliminate", elim_arg, "vertices to remove");
    CLI::Option* o_seq = c_reduce->add_option(
        "--sequence", seq_arg, "semicolon-separated nested keep sets, e.g. 'v1,v2,v3;v1,v2'");
    o_keep->excludes(o_elim)->excludes(o_seq);
    o_elim->excludes(o_seq);
    c_reduce->add_option("--out", out, "write the reduced graph file here");

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicity");
    c_spectrum->add_option("path", path, "graph file")->required();
    c_spectrum->add_option("--tol", tol, "root clustering tolerance (relative)")
        ->default_val(1e-6);
    c_spectrum->add_flag("--json", as_json, "machine-readable output");

    CLI::App* c_region = app.add_subcommand("region", "raster an inclusion-region family");
    c_region->add_option("path", path, "graph file")->required();
    c_region->add_option("--kind", kind_arg, "gershgorin | brauer | brualdi")->required();
    c_region->add_option("--window", window_arg, "re_min,re_max,im_min,im_max")
        ->expected(4)
        ->delimiter(',');
    c_region->add_option("--res", res, "cells per axis")->default_val(400);
    c_region->add_option("--out", out, "write the raster file here");

    CLI::App* c_rho = app.add_subcommand("rho", "upper bounds on the spectral radius");
    c_rho->add_option("path", path, "graph file")->required();
    c_rho->add_option("--levels", levels, "reduction effort level")->default_val(1);

    CLI::App* c_lap = app.add_subcommand("laplacian", "build a Laplacian graph file");
    c_lap->add_option("path", path, "graph file")->required();
    c_lap->add_option("--kind", kind_arg, "combinatorial | normalized | generalized")
        ->required();
    c_lap->add_option("--out", out, "write the Laplacian graph file here");

    CLI::App* c_suggest = app.add_subcommand("suggest", "propose structural sets to reduce over");
    c_suggest->add_option("path", path, "graph file")->required();
    c_suggest->add_option("--strategy", strategy_arg,
                          "loopless_first | exposed_boundary | exhaustive_small")
        ->required();
    c_suggest->add_option("--max", max_results, "maximum suggestions")->default_val(10);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*c_validate) {
        const GraphFileInfo info = load_graph(path);
        std::cout << "OK: " << info.graph.size() << " vertices, " << info.graph.edge_count()
                  << " edges\n";
        for (const std::string& w : info.warnings) std::cout << "warning: " << w << "\n";
        std::cout << "index_base: " << info.index_base << "\n";
        std::cout << "all weights of relative degree <= 0: "
                  << (info.graph.is_pi_class() ? "yes" : "no") << "\n";
        std::cout << graph_to_json(info.graph, info.index_base);
        return 0;
    }
    if (*c_reduce) {
        const GraphFileInfo info = load_graph(path);
        const int n = info.graph.size();
        ReductionResult r;
        if (o_seq->count() > 0) {
            std::vector<std::vector<int>> keeps;
            std::string part;
            std::stringstream ss(seq_arg);
            while (std::getline(ss, part, ';')) keeps.push_back(parse_vertices(part, n));
            r = reduce_sequence(info.graph, keeps);
        } else if (o_keep->count() > 0) {
            r = reduce_over(info.graph, parse_vertices(keep_arg, n));
        } else if (o_elim->count() > 0) {
            const std::vector<int> gone = parse_vertices(elim_arg, n);
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
            r = reduce_over(info.graph, keep);
        } else {
            throw ParseError("one of --keep, --eliminate, --sequence is required");
        }
        print_reduction(r);
        if (!out.empty()) {
            save_graph(r.graph, out, info.index_base);
            std::cout << "wrote " << out << "\n";
        } else {
            std::cout << graph_to_json(r.graph, info.index_base);
        }
        return 0;
    }
    if (*c_spectrum) {
        const GraphFileInfo info = load_graph(path);
        const SpectrumList spec = spectrum(info.graph, tol);
        if (as_json) {
            ordered_json j;
            j["spectrum"] = ordered_json::array();
            for (const auto& [value, mult] : spec)
                j["spectrum"].push_back({{"value", {round12(value.real()), round12(value.imag())}},
                                         {"multiplicity", mult}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "value multiplicity\n";
            for (const auto& [value, mult] : spec)
                std::cout << fmt12(value) << " " << mult << "\n";
        }
        return 0;
    }
    if (*c_region) {
        const GraphFileInfo info = load_graph(path);
        const PolyExtension ext = poly_extension(info.graph);
        const Window win = window_arg.empty() ? auto_window(ext) : parse_window(window_arg);
        const RasterGrid grid = raster(ext, parse_kind(kind_arg), win, res, res);
        const std::string text = raster_to_json(grid, graph_hash(info.graph));
        size_t cells = 0;
        for (std::uint8_t b : grid.union_mask) cells += b;
        std::cerr << "kind=" << kind_name(grid.kind) << " specs=" << grid.specs.size()
                  << " res=" << res << " union_cells=" << cells << "\n";
        if (!out.empty()) {
            std::ofstream f(out, std::ios::binary);
            if (!f) throw ParseError("cannot write " + out);
            f << text;
            std::cout << "wrote " << out << "\n";
        } else {
            std::cout << text;
        }
        return 0;
    }
    if (*c_rho) {
        const GraphFileInfo info = load_graph(path);
        for (int lvl = 0; lvl <= levels; ++lvl) {
            const RhoReport rep = estimate_rho(info.graph, lvl);
            std::cout << "level " << lvl << ": bound " << fmt12(rep.bound)
                      << " (kept: " << label_list(rep.kept) << ")\n";
        }
        return 0;
    }
    if (*c_lap) {
        const GraphFileInfo info = load_graph(path);
        LaplacianKind kind;
        if (kind_arg == "combinatorial")
            kind = LaplacianKind::combinatorial;
        else if (kind_arg == "normalized")
            kind = LaplacianKind::normalized;
        else if (kind_arg == "generalized")
            kind = LaplacianKind::generalized;
        else
            throw ParseError("unknown laplacian kind \"" + kind_arg + "\"");
        const WeightedDigraph lap = laplacian(info.graph, kind);
        if (!out.empty()) {
            save_graph(lap, out, info.index_base);
            std::cout << "wrote " << out << "\n";
        } else {
            std::cout << graph_to_json(lap, info.index_base);
        }
        return 0;
    }
    if (*c_suggest) {
        const GraphFileInfo info = load_graph(path);
        SuggestStrategy strategy;
        if (strategy_arg == "loopless_first")
            strategy = SuggestStrategy::loopless_first;
        else if (strategy_arg == "exposed_boundary")
            strategy = SuggestStrategy::exposed_boundary;
        else if (strategy_arg == "exhaustive_small")
            strategy = SuggestStrategy::exhaustive_small;
        else
            throw ParseError("unknown strategy \"" + strategy_arg + "\"");
        const std::vector<Suggestion> su =
            suggest_structural_sets(info.graph, strategy, max_results);
        if (su.empty()) {
            std::cout << "no suggestions\n";
            return 0;
        }
        for (size_t k = 0; k < su.size(); ++k)
            std::cout << (k + 1) << ". keep " << label_list(su[k].keep) << " (score "
                      << fmt12(su[k].score) << "): " << su[k].note << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const isospec::RootConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const isospec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const isospec::NotStructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const isospec::CycleOverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
