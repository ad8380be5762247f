// SPDX-License-Identifier: MIT
//
// Higher-level workflows built on reductions and inclusion regions:
// Laplacian constructions, staged spectral-radius estimation, and
// heuristics proposing which vertex sets to reduce over.

#pragma once

#include <string>

#include "isospec/graph.hpp"
#include "isospec/regions.hpp"

namespace isospec {

enum class LaplacianKind {
    combinatorial,  // diag(row sums) - M, constant weights
    normalized,     // I - D^{-1/2} M D^{-1/2}, constant weights
    generalized,    // diag(rational row sums) - M, any weights
};

/// Builds the Laplacian of a loop-free graph.  Rows of the result sum to
/// zero (combinatorial/generalized), so 0 is always an eigenvalue.
/// Throws std::domain_error on loops, or on non-constant weights for the
/// two classical kinds.
WeightedDigraph laplacian(const WeightedDigraph& g, LaplacianKind kind);

struct RhoReport {
    int level = 0;
    double bound = 0.0;            // certified upper bound on max |eigenvalue|
    std::vector<int> kept;         // vertices of the final reduced graph
    std::vector<cplx> exceptional; // candidate values folded into the bound
};

/// Upper-bounds the spectral radius via Gershgorin unions of successively
/// reduced graphs.
///   level 0: radial maximum of the union for g itself.
///   level 1: remove a maximal acyclic set of loop-free vertices first.
///   level k>=2: after the loop-free stage, greedily eliminate one more
///   vertex per extra level, choosing the vertex that minimises the bound.
/// Exceptional values produced by a stage are kept in the bound when they
/// lie inside the pre-stage region (they may be eigenvalues of g that the
/// reduced graph no longer sees).
RhoReport estimate_rho(const WeightedDigraph& g, int level);

enum class SuggestStrategy {
    loopless_first,    // one suggestion: drop a maximal acyclic loop-free set
    exposed_boundary,  // rank single-vertex removals by exposed disc boundary
    exhaustive_small,  // enumerate all structural sets (n <= 12), largest first
};

struct Suggestion {
    std::vector<int> keep;
    double score = 0.0;
    std::string note;
};

std::vector<Suggestion> suggest_structural_sets(const WeightedDigraph& g,
                                                SuggestStrategy strategy,
                                                int max_results = 10);

}  // namespace isospec
