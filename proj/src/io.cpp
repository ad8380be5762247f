// SPDX-License-Identifier: MIT

#include "isospec/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace isospec {

using json = nlohmann::ordered_json;

std::string fmt12(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::string fmt12(cplx z) {
    // A component more than 12 orders of magnitude below the modulus is
    // invisible at this precision; print it as zero instead of as noise.
    const double mod = std::abs(z);
    const double re = round12(std::abs(z.real()) < 1e-12 * mod ? 0.0 : z.real());
    const double im = round12(std::abs(z.imag()) < 1e-12 * mod ? 0.0 : z.imag());
    if (im == 0.0) return fmt12(re);
    std::string s = fmt12(re);
    s += (im < 0 ? "-" : "+");
    s += fmt12(std::abs(im));
    s += "i";
    return s;
}

namespace {

json coeff_list(const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= std::max(0, p.degree()); ++k) {
        const cplx c = p.coeff(k);
        arr.push_back(json::array({round12(c.real()), round12(c.imag())}));
    }
    return arr;
}

Poly poly_from_coeff_list(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty())
        throw ParseError(where + ": coefficient list must be a non-empty array");
    std::vector<cplx> coeffs;
    for (const json& pair : arr) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError(where + ": coefficients must be [re, im] number pairs");
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return Poly(coeffs);
}

}  // namespace

std::uint64_t graph_hash(const WeightedDigraph& g) {
    const std::string text = graph_to_json(g, 1);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

GraphFileInfo graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (j.contains("format") && j["format"] != "isospec-graph")
        throw ParseError("unrecognized format field (expected \"isospec-graph\")");
    if (!j.contains("index_base") || !j["index_base"].is_number_integer())
        throw ParseError("missing integer field \"index_base\"");
    const int base = j["index_base"].get<int>();
    if (base != 0 && base != 1) throw ParseError("index_base must be 0 or 1");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("missing integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("n must be at least 1");

    GraphFileInfo info;
    info.index_base = base;
    std::vector<RawEdge> edges;
    std::map<std::pair<int, int>, int> seen;
    if (j.contains("entries")) {
        if (!j["entries"].is_array()) throw ParseError("\"entries\" must be an array");
        int idx = 0;
        for (const json& e : j["entries"]) {
            const std::string where = "entries[" + std::to_string(idx) + "]";
            ++idx;
            if (!e.is_object()) throw ParseError(where + ": entry must be an object");
            if (!e.contains("i") || !e.contains("j") || !e["i"].is_number_integer() ||
                !e["j"].is_number_integer())
                throw ParseError(where + ": missing integer fields \"i\" and \"j\"");
            const int i = e["i"].get<int>() - base;
            const int jj = e["j"].get<int>() - base;
            if (i < 0 || i >= n || jj < 0 || jj >= n)
                throw ParseError(where + ": vertex index out of range for n=" +
                                 std::to_string(n));
            if (!e.contains("num")) throw ParseError(where + ": missing \"num\"");
            const Poly num = poly_from_coeff_list(e["num"], where + ".num");
            Poly den = Poly::one();
            if (e.contains("den")) den = poly_from_coeff_list(e["den"], where + ".den");
            Rational w;
            try {
                w = Rational(num, den);
            } catch (const std::domain_error&) {
                throw ParseError("zero denominator at (" + std::to_string(i + base) + "," +
                                 std::to_string(jj + base) + ")");
            }
            ++info.entry_count;
            auto [it, fresh] = seen.emplace(std::make_pair(i, jj), 1);
            if (!fresh) {
                ++it->second;
                info.warnings.push_back("duplicate entry (" + std::to_string(i + base) + "," +
                                        std::to_string(jj + base) + ") summed");
            }
            edges.push_back(RawEdge{i, jj, w});
        }
    }
    info.graph = normalize_input(n, edges);
    return info;
}

GraphFileInfo load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return graph_from_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string graph_to_json(const WeightedDigraph& g, int index_base) {
    json j;
    j["format"] = "isospec-graph";
    j["index_base"] = index_base;
    j["n"] = g.size();
    json entries = json::array();
    for (int i = 0; i < g.size(); ++i) {
        for (int jj = 0; jj < g.size(); ++jj) {
            const Rational& w = g.weight(i, jj);
            if (w.is_zero()) continue;
            json e;
            e["i"] = i + index_base;
            e["j"] = jj + index_base;
            e["num"] = coeff_list(w.num());
            if (w.den().degree() != 0 || w.den().coeff(0) != cplx(1.0))
                e["den"] = coeff_list(w.den());
            entries.push_back(std::move(e));
        }
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

void save_graph(const WeightedDigraph& g, const std::string& path, int index_base) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << graph_to_json(g, index_base);
}

std::string kind_name(RegionKind kind) {
    switch (kind) {
        case RegionKind::gershgorin: return "gershgorin";
        case RegionKind::brauer: return "brauer";
        case RegionKind::brualdi: return "brualdi";
    }
    return "gershgorin";
}

RegionKind parse_kind(const std::string& name) {
    if (name == "gershgorin") return RegionKind::gershgorin;
    if (name == "brauer") return RegionKind::brauer;
    if (name == "brualdi") return RegionKind::brualdi;
    throw ParseError("unknown region kind \"" + name +
                     "\" (expected gershgorin, brauer, or brualdi)");
}

std::string spec_label(const RegionSpec& spec) {
    switch (spec.kind) {
        case RegionKind::gershgorin:
            return "v" + std::to_string(spec.i + 1);
        case RegionKind::brauer:
            return "v" + std::to_string(spec.i + 1) + ",v" + std::to_string(spec.j + 1);
        case RegionKind::brualdi: {
            if (spec.weak) return "v" + std::to_string(spec.cycle.front() + 1) + " (weak)";
            std::string s = "cycle ";
            for (size_t k = 0; k < spec.cycle.size(); ++k) {
                if (k) s += "->";
                s += "v" + std::to_string(spec.cycle[k] + 1);
            }
            return s;
        }
    }
    return "";
}

std::vector<std::int64_t> rle_encode(const std::vector<std::uint8_t>& mask) {
    std::vector<std::int64_t> runs;
    std::uint8_t cur = 0;
    std::int64_t len = 0;
    runs.reserve(16);
    for (std::uint8_t b : mask) {
        if ((b != 0) == (cur != 0)) {
            ++len;
        } else {
            runs.push_back(len);
            cur = b;
            len = 1;
        }
    }
    runs.push_back(len);
    return runs;
}

std::vector<std::uint8_t> rle_decode(const std::vector<std::int64_t>& runs, std::size_t cells) {
    std::vector<std::uint8_t> mask;
    mask.reserve(cells);
    std::uint8_t cur = 0;
    for (std::int64_t r : runs) {
        if (r < 0) throw ParseError("negative run length");
        mask.insert(mask.end(), static_cast<size_t>(r), cur);
        cur = cur ? 0 : 1;
    }
    if (mask.size() != cells)
        throw ParseError("mask decodes to " + std::to_string(mask.size()) + " cells, expected " +
                         std::to_string(cells));
    return mask;
}

std::string raster_to_json(const RasterGrid& grid, std::uint64_t hash_of_graph) {
    json j;
    j["format"] = "isospec-raster";
    j["window"] = {{"re_min", round12(grid.window.re_min)},
                   {"re_max", round12(grid.window.re_max)},
                   {"im_min", round12(grid.window.im_min)},
                   {"im_max", round12(grid.window.im_max)}};
    j["resolution"] = json::array({grid.nx, grid.ny});
    j["kind"] = kind_name(grid.kind);
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash_of_graph));
    j["metadata"] = {{"graph_hash", hex}, {"slack_coefficient", 1e-9}};
    json specs = json::array();
    for (size_t s = 0; s < grid.specs.size(); ++s) {
        json one;
        one["label"] = spec_label(grid.specs[s]);
        one["rle"] = rle_encode(grid.spec_masks[s]);
        specs.push_back(std::move(one));
    }
    j["specs"] = std::move(specs);
    j["union"] = {{"rle", rle_encode(grid.union_mask)}};
    return j.dump(2) + "\n";
}

RasterFileData raster_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "isospec-raster")
        throw ParseError("not a raster file");
    RasterFileData data;
    const json& w = j.at("window");
    data.window.re_min = w.at("re_min").get<double>();
    data.window.re_max = w.at("re_max").get<double>();
    data.window.im_min = w.at("im_min").get<double>();
    data.window.im_max = w.at("im_max").get<double>();
    data.nx = j.at("resolution").at(0).get<int>();
    data.ny = j.at("resolution").at(1).get<int>();
    data.kind = j.at("kind").get<std::string>();
    data.hash_of_graph = j.at("metadata").at("graph_hash").get<std::string>();
    data.slack_coefficient = j.at("metadata").at("slack_coefficient").get<double>();
    const std::size_t cells = static_cast<std::size_t>(data.nx) * data.ny;
    for (const json& one : j.at("specs")) {
        data.labels.push_back(one.at("label").get<std::string>());
        data.spec_masks.push_back(
            rle_decode(one.at("rle").get<std::vector<std::int64_t>>(), cells));
    }
    data.union_mask = rle_decode(j.at("union").at("rle").get<std::vector<std::int64_t>>(), cells);
    return data;
}

}  // namespace isospec
