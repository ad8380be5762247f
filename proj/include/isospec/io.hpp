// SPDX-License-Identifier: MIT
//
// Deterministic JSON file formats: sparse graph files with polynomial
// coefficients, and raster files with run-length-encoded masks.  All
// floating-point values are serialized at 12 significant digits so that
// identical inputs produce byte-identical outputs.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "isospec/graph.hpp"
#include "isospec/regions.hpp"

namespace isospec {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed 12-significant-digit (%.12g) rendering, and the matching
/// value-level rounding applied before any float is serialized.
std::string fmt12(double x);
double round12(double x);
std::string fmt12(cplx z);  // "a+bi" form for human-readable output

/// FNV-1a of the canonical 1-based serialization; identifies the graph a
/// raster was computed from.
std::uint64_t graph_hash(const WeightedDigraph& g);

struct GraphFileInfo {
    WeightedDigraph graph{1};
    int index_base = 1;
    int entry_count = 0;                 // entries present in the file
    std::vector<std::string> warnings;   // e.g. duplicate-entry merges
};

/// Parses the graph-file JSON. Entries are {i, j, num, den} with
/// coefficient lists of [re, im] pairs in ascending degree; den defaults to
/// constant 1; absent entries are zero; duplicate (i, j) entries are summed.
GraphFileInfo graph_from_json(const std::string& text);
GraphFileInfo load_graph(const std::string& path);

/// Canonical serialization: entries sorted by (i, j), zero weights omitted,
/// den omitted when it is 1.
std::string graph_to_json(const WeightedDigraph& g, int index_base = 1);
void save_graph(const WeightedDigraph& g, const std::string& path, int index_base = 1);

std::string kind_name(RegionKind kind);
RegionKind parse_kind(const std::string& name);  // throws ParseError

/// Human-readable label of a region piece, 1-based ("v1", "v1,v2",
/// "cycle v1->v2", "v3 (weak)").
std::string spec_label(const RegionSpec& spec);

/// Alternating run lengths starting with the number of leading zeros.
std::vector<std::int64_t> rle_encode(const std::vector<std::uint8_t>& mask);
std::vector<std::uint8_t> rle_decode(const std::vector<std::int64_t>& runs, std::size_t cells);

std::string raster_to_json(const RasterGrid& grid, std::uint64_t hash_of_graph);

struct RasterFileData {
    Window window;
    int nx = 0, ny = 0;
    std::string kind;
    std::string hash_of_graph;
    double slack_coefficient = 0.0;
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint8_t>> spec_masks;
    std::vector<std::uint8_t> union_mask;
};

RasterFileData raster_from_json(const std::string& text);

}  // namespace isospec
