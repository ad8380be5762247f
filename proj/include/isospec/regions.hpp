// SPDX-License-Identifier: MIT
//
// Eigenvalue inclusion regions for graphs weighted by rational functions:
// the polynomial row extension, Gershgorin-, Brauer-, and Brualdi-type
// membership predicates, raster grids, containment verifiers, and radial
// boundary utilities.

#pragma once

#include <cstdint>

#include "isospec/charpoly.hpp"
#include "isospec/graph.hpp"

namespace isospec {

/// Per-row polynomial form of the region inequalities.  Multiplying row i of
/// M(z) - z*I by the product L_i of the row's denominators clears fractions:
/// the diagonal gap becomes the polynomial L_i(z)*(z - M_ii(z)) and each
/// off-diagonal entry becomes L_i(z)*M_ij(z).  Membership tests evaluate
/// these polynomials, so points where a weight has a pole need no special
/// casing.
struct PolyExtension {
    int n = 0;
    std::vector<Poly> row_factor;               // L_i
    std::vector<std::vector<Poly>> entry;       // extended matrix entries
    std::vector<Poly> diag_gap;                 // L_i * (z - M_ii)
    SccDecomposition comp;                      // off-diagonal structure
    std::vector<Cycle> cycle_set;               // strong cycles + weak singletons
    std::vector<int> row_degree;                // slack scale exponent per row
    bool pi_class = false;

    double row_sum(int i, cplx z) const;        // sum_{j != i} |entry[i][j](z)|
    double scc_row_sum(int i, cplx z) const;    // restricted to i's component
    /// Closed-inequality slack: 1e-9 * (1+|z|)^degree_sum.
    static double slack(cplx z, int degree_sum);
};

PolyExtension poly_extension(const WeightedDigraph& g);

enum class RegionKind { gershgorin, brauer, brualdi };

/// One region piece: a row disc, a row pair, or a cycle.
struct RegionSpec {
    RegionKind kind = RegionKind::gershgorin;
    int i = -1;                 // gershgorin row / first brauer row
    int j = -1;                 // second brauer row
    std::vector<int> cycle;     // brualdi cycle vertices
    bool weak = false;          // brualdi weak singleton
};

/// All pieces of the given family: n rows, the n(n-1)/2 unordered pairs, or
/// one piece per cycle (including weak singletons, whose piece degenerates
/// to the curve |z - extended diagonal| <= 0 within slack).
std::vector<RegionSpec> region_specs(const PolyExtension& ext, RegionKind kind);

bool member(const PolyExtension& ext, const RegionSpec& spec, cplx z);

/// Union membership.  For a single-vertex graph the Brauer family has no
/// pairs; the union falls back to the Gershgorin disc so spectra stay
/// covered (the classical theorem assumes n >= 2).
bool member_union(const PolyExtension& ext, RegionKind kind, cplx z);

struct Window {
    double re_min = -1, re_max = 1, im_min = -1, im_max = 1;
};

struct RasterGrid {
    Window window;
    int nx = 0, ny = 0;
    RegionKind kind = RegionKind::gershgorin;
    std::vector<RegionSpec> specs;
    std::vector<std::vector<std::uint8_t>> spec_masks;  // [spec][iy*nx+ix]
    std::vector<std::uint8_t> union_mask;

    cplx cell_center(int ix, int iy) const;
};

/// Membership evaluated at cell centers; deterministic.
RasterGrid raster(const PolyExtension& ext, std::vector<RegionSpec> specs,
                  const Window& window, int nx, int ny);

/// Convenience overload rastering the whole family (with the single-vertex
/// Brauer fallback).
RasterGrid raster(const PolyExtension& ext, RegionKind kind, const Window& window,
                  int nx, int ny);

/// Radius beyond which no point belongs to any region piece.  Requires all
/// weights to have relative degree <= 0 (otherwise regions can be unbounded).
double outer_radius(const PolyExtension& ext);

/// Square window [-R, R]^2 from outer_radius with a 5% margin.
Window auto_window(const PolyExtension& ext);

struct ImprovementReport {
    bool ok = false;
    int violating_cells = 0;
    int nx = 0, ny = 0;
    Window window;
};

/// Rasters g and its reduction over `keep` on a shared window and counts
/// cells of the reduced union lying outside the original union.
ImprovementReport verify_improvement(const WeightedDigraph& g, const std::vector<int>& keep,
                                     RegionKind kind, int resolution = 400);

struct BoundaryReport {
    int sampled = 0;    // exposed boundary points found
    int excluded = 0;   // of those, non-members of the reduced union
    double fraction_excluded = 0.0;
};

/// Samples boundary points of the removed rows' discs along rays, keeps the
/// ones exposed on the union boundary (outside every other row's region),
/// and tests them against the reduced Gershgorin union.
BoundaryReport boundary_strictness(const WeightedDigraph& g, const std::vector<int>& keep,
                                   int samples);

/// max |z| over the union, by per-ray downward scan + bisection refinement.
double max_abs_over_union(const PolyExtension& ext, RegionKind kind = RegionKind::gershgorin,
                          int rays = 256, double refine = 1e-4);

}  // namespace isospec
