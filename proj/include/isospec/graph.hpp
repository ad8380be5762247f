// SPDX-License-Identifier: MIT
//
// Weighted digraphs over the rational-function field, their strongly
// connected components, and simple-cycle enumeration (strong cycles plus the
// weak singleton cycles used by Brualdi-type regions).

#pragma once

#include <stdexcept>
#include <vector>

#include "isospec/rational.hpp"

namespace isospec {

/// Dense weighted digraph; absent edge == zero weight.  Vertices are 0-based
/// internally (command-line and file output use 1-based labels).
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    explicit WeightedDigraph(int n) : n_(n), w_(static_cast<size_t>(n) * n) {}

    /// Builds from a square matrix of weights (row-major).
    static WeightedDigraph from_matrix(const std::vector<std::vector<Rational>>& rows);

    int size() const { return n_; }
    const Rational& weight(int i, int j) const { return w_[idx(i, j)]; }
    void set_weight(int i, int j, Rational w) { w_[idx(i, j)] = std::move(w); }
    bool has_edge(int i, int j) const { return !weight(i, j).is_zero(); }

    int edge_count() const;
    bool has_loop(int v) const { return has_edge(v, v); }

    /// True when every weight has relative degree <= 0 (constants, 1/z, ...).
    bool is_pi_class() const;

    /// True for a constant 0/1 symmetric adjacency with empty diagonal.
    bool is_simple() const;

private:
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::out_of_range("vertex index out of range");
        return static_cast<size_t>(i) * n_ + j;
    }
    int n_ = 0;
    std::vector<Rational> w_;
};

/// Input normalization options mirroring the common graph encodings: an
/// undirected edge list becomes two directed edges, missing weights become 1,
/// and parallel edges are merged by summing weights.
struct RawEdge {
    int i = 0, j = 0;
    Rational weight = Rational::one();
};
WeightedDigraph normalize_input(int n, const std::vector<RawEdge>& edges,
                                bool symmetrize = false);

struct SccDecomposition {
    std::vector<int> component_of;          // vertex -> component id
    std::vector<std::vector<int>> components;  // block-lower-triangular order
    std::vector<std::pair<int, int>> scc_edges;  // edges inside one component

    bool edge_in_scc(const WeightedDigraph& g, int i, int j) const {
        return g.has_edge(i, j) && component_of[i] == component_of[j];
    }
};

/// Tarjan's algorithm; components are listed so that grouping rows by
/// component order yields a block-lower-triangular adjacency matrix.
SccDecomposition scc(const WeightedDigraph& g);

struct Cycle {
    std::vector<int> vertices;  // traversal order, smallest vertex first
    bool weak = false;          // singleton for a vertex on no strong cycle
};

struct CycleOverflowError : std::runtime_error {
    explicit CycleOverflowError(size_t cap)
        : std::runtime_error("cycle enumeration exceeded cap of " + std::to_string(cap)) {}
};

/// All simple directed cycles of length >= 2 (enumerated inside SCCs),
/// followed by one weak singleton {v} for every vertex on no strong cycle.
/// Deterministic: cycles sorted by (length, vertex sequence).
std::vector<Cycle> cycles(const WeightedDigraph& g, size_t cap = 1000000);

/// Cycle-neighbourhood classification around a vertex, used by the
/// improved-Brualdi hypothesis test:
///   adjacent: cycles avoiding v that have an intra-component edge into v;
///   through:  cycles containing v;
///   stable:   the subset of `through` passing the relabeling criterion
///             (no interior edge back to v; no intra-component edge from the
///             last cycle vertex to a vertex outside the cycle).
struct CycleNeighbourhood {
    std::vector<Cycle> adjacent;
    std::vector<Cycle> through;
    std::vector<Cycle> stable;
};
CycleNeighbourhood cycle_neighbourhood(const WeightedDigraph& g, int v);

}  // namespace isospec
