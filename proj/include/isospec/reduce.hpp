// SPDX-License-Identifier: MIT
//
// Isospectral graph reduction: structural-set validation, branch enumeration
// with branch products, single-vertex elimination, order-independent closure,
// and the exceptional-value bookkeeping that accompanies each reduction.

#pragma once

#include <string>
#include <vector>

#include "isospec/graph.hpp"
#include "isospec/roots.hpp"

namespace isospec {

struct NotStructuralError : std::runtime_error {
    explicit NotStructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A validated vertex split: the reduction keeps `keep` and removes
/// `removed`.  Valid when the removed subgraph (loops ignored) is acyclic and
/// no removed vertex carries a loop weight identically equal to z.
struct StructuralSet {
    std::vector<int> keep;     // ascending original vertex ids
    std::vector<int> removed;  // ascending complement
};

/// Throws NotStructuralError with a witness description when invalid.
StructuralSet validate_structural(const WeightedDigraph& g, const std::vector<int>& keep);

/// A path or cycle whose endpoints are kept and whose interior vertices are
/// removed (interior vertices distinct).
struct Branch {
    std::vector<int> vertices;  // v_1 .. v_m, m >= 2
};

/// All branches from kept vertex i to kept vertex j (0-based original ids).
/// Includes the two-vertex direct edge when present; for i == j the loop edge
/// counts as a two-vertex branch.
std::vector<Branch> branches(const WeightedDigraph& g, const StructuralSet& s, int i, int j);

/// Branch weight: the first edge weight times, for every interior vertex,
/// (next edge weight) / (z - interior loop weight).
Rational branch_product(const WeightedDigraph& g, const Branch& b);

/// Exceptional values attached to one removed vertex: the roots of
/// p(z) - z*q(z) and of q(z), where the loop weight is p/q.  A loopless
/// vertex contributes exactly {0}.
struct ReductionResult {
    WeightedDigraph graph;     // reduced graph on the kept vertices
    std::vector<int> kept;     // original ids, ascending; row k <-> kept[k]
    std::vector<cplx> exceptional;        // deduplicated values
    std::vector<Poly> exceptional_polys;  // defining polynomials (deduplicated)
    std::vector<std::vector<int>> trace;  // keep sets applied, in order
};

/// Reduction by direct branch summation over a validated structural set.
ReductionResult reduce_over(const WeightedDigraph& g, const std::vector<int>& keep);

/// One-vertex Schur-style elimination; equals reduce_over(g, V\{v}).
ReductionResult eliminate_vertex(const WeightedDigraph& g, int v);

/// Sequence of reductions; each keep set is expressed in original vertex ids
/// and must be a subset of the previous one.  Exceptional values accumulate.
ReductionResult reduce_sequence(const WeightedDigraph& g,
                                const std::vector<std::vector<int>>& keeps);

/// Repeated single-vertex elimination down to `keep`, choosing loop-free
/// vertices first and then minimal degree.  Requires every weight to have
/// relative degree <= 0, which guarantees the process never blocks and the
/// result is independent of elimination order.
ReductionResult reduce_closure(const WeightedDigraph& g, const std::vector<int>& keep);

}  // namespace isospec
