// SPDX-License-Identifier: MIT
//
// Simultaneous root finding (Aberth-Ehrlich iteration) with multiplicity
// clustering.  Good for the desk-scale degrees (<= ~30) this library needs;
// no external dependencies.

#pragma once

#include <stdexcept>
#include <vector>

#include "isospec/poly.hpp"

namespace isospec {

/// Thrown when the iteration fails to reach the requested tolerance; carries
/// the best iterate so callers can still report something.
struct RootConvergenceError : std::runtime_error {
    explicit RootConvergenceError(std::vector<cplx> best)
        : std::runtime_error("root finder failed to converge"), best_iterate(std::move(best)) {}
    std::vector<cplx> best_iterate;
};

/// (value, multiplicity) pairs; values pairwise separated by the clustering
/// radius used to produce them.
using SpectrumList = std::vector<std::pair<cplx, int>>;

/// All deg(p) roots, unclustered (multiple roots appear as nearby copies).
/// Roots are sorted by (real, imag) for determinism.
std::vector<cplx> poly_roots(const Poly& p, double tol = 1e-12, int max_iter = 500);

/// Merge roots closer than delta = delta_scale * (1 + max|root|) into their
/// mean, summing multiplicities.
SpectrumList cluster_roots(const std::vector<cplx>& roots, double delta_scale = 1e-6);

}  // namespace isospec
