// SPDX-License-Identifier: MIT
//
// Shared regression fixtures: small graphs with rational-function weights
// whose reductions, spectra, and inclusion regions have known closed forms.
// All builders return fresh graphs; vertex ids are 0-based.

#pragma once

#include <complex>
#include <vector>

#include "isospec/charpoly.hpp"
#include "isospec/graph.hpp"
#include "isospec/poly.hpp"
#include "isospec/rational.hpp"
#include "isospec/roots.hpp"

namespace fixtures {

using isospec::cplx;
using isospec::Poly;
using isospec::Rational;
using isospec::WeightedDigraph;

/// Rational from ascending real numerator/denominator coefficients.
inline Rational rat(std::initializer_list<double> num, std::initializer_list<double> den = {1}) {
    return Rational(Poly(num), Poly(den));
}

inline Rational zero() { return Rational::zero(); }

/// Constant 0/1 digraph from a row-major adjacency pattern.
inline WeightedDigraph pattern(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> m;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (int v : row) r.push_back(v ? Rational::constant(static_cast<double>(v)) : zero());
        m.push_back(std::move(r));
    }
    return WeightedDigraph::from_matrix(m);
}

/// 3-vertex graph with rational weights; its characteristic polynomial is
/// (-z^5 + 2z^3 + 2z^2 + 3z + 2) / z^2 with spectrum {-1, -1, i, -i, 2}.
/// Also the exact 3-vertex reduction of digraph5() over {0, 1, 2}.
inline WeightedDigraph rational3() {
    return WeightedDigraph::from_matrix({
        {rat({1, 1}, {0, 0, 1}), rat({1}, {0, 1}), rat({1, 1}, {0, 1})},
        {rat({1, 2}, {0, 0, 1}), rat({1}, {0, 1}), rat({1}, {0, 1})},
        {zero(), rat({1}), zero()},
    });
}

/// 5-vertex 0/1 digraph, strongly connected, loop-free.  Spectrum
/// {-1, -1, -i, i, 2}; reducing over {0, 1, 2} gives rational3().
inline WeightedDigraph digraph5() {
    return pattern({
        {0, 0, 1, 0, 1},
        {0, 0, 0, 1, 1},
        {0, 1, 0, 0, 0},
        {1, 0, 0, 0, 0},
        {1, 1, 1, 1, 0},
    });
}

/// 2-vertex reduction of rational3() over {0, 1}.
inline WeightedDigraph rational2() {
    return WeightedDigraph::from_matrix({
        {rat({1, 1}, {0, 0, 1}), rat({1, 2}, {0, 0, 1})},
        {rat({1, 2}, {0, 0, 1}), rat({1, 1}, {0, 0, 1})},
    });
}

/// Undirected path on three vertices; spectrum {0, sqrt(2), -sqrt(2)}.
inline WeightedDigraph path3() {
    return pattern({
        {0, 1, 0},
        {1, 0, 1},
        {0, 1, 0},
    });
}

/// 4-vertex weighted digraph with one heavy edge pair (10 and 1/10).
/// Spectrum approx {0.524, 1.490, -1.007 +- 0.513i}.  Removing vertex 3
/// satisfies the improved-Brualdi hypotheses; removing vertex 0 does not.
inline WeightedDigraph scaled4() {
    WeightedDigraph g(4);
    g.set_weight(0, 3, rat({10}));
    g.set_weight(3, 0, rat({0.1}));
    g.set_weight(3, 1, rat({0.1}));
    g.set_weight(1, 0, rat({1}));
    g.set_weight(1, 2, rat({1}));
    g.set_weight(2, 1, rat({1}));
    return g;
}

/// Expected reduction of scaled4() keeping {1, 2, 3}.
inline WeightedDigraph scaled4_reduced_tail() {
    return WeightedDigraph::from_matrix({
        {zero(), rat({1}), rat({10}, {0, 1})},
        {rat({1}), zero(), zero()},
        {rat({0.1}), zero(), rat({1}, {0, 1})},
    });
}

/// Expected reduction of scaled4() keeping {0, 1, 2}.
inline WeightedDigraph scaled4_reduced_head() {
    return WeightedDigraph::from_matrix({
        {rat({1}, {0, 1}), rat({1}, {0, 1}), zero()},
        {rat({1}), zero(), rat({1})},
        {zero(), rat({1}), zero()},
    });
}

/// 4-vertex digraph: triangle 0->1->2->0 plus the detour 2->3->0.  One SCC;
/// cycles {0,1,2} and {0,1,2,3}.  Reducing over {1, 2, 3} worsens the
/// Brualdi-type region (vertex 0 fails the stable-cycle criterion).
inline WeightedDigraph theta4() {
    return pattern({
        {0, 1, 0, 0},
        {0, 0, 1, 0},
        {1, 0, 0, 1},
        {1, 0, 0, 0},
    });
}

/// Expected reduction of theta4() keeping {1, 2, 3}.
inline WeightedDigraph theta4_reduced() {
    return WeightedDigraph::from_matrix({
        {zero(), rat({1}), zero()},
        {rat({1}, {0, 1}), zero(), rat({1})},
        {rat({1}, {0, 1}), zero(), zero()},
    });
}

/// Directed bowtie: triangles 0->1->4->0 and 2->3->4->2 sharing vertex 4.
/// Exactly two cycles; reducing over {0, 1, 2, 3} yields three.
inline WeightedDigraph bowtie5() {
    return pattern({
        {0, 1, 0, 0, 0},
        {0, 0, 0, 0, 1},
        {0, 0, 0, 1, 0},
        {0, 0, 0, 0, 1},
        {1, 0, 1, 0, 0},
    });
}

/// Expected reduction of bowtie5() keeping {0, 1, 2, 3}.
inline WeightedDigraph bowtie4_reduced() {
    return WeightedDigraph::from_matrix({
        {zero(), rat({1}), zero(), zero()},
        {rat({1}, {0, 1}), zero(), rat({1}, {0, 1}), zero()},
        {zero(), zero(), zero(), rat({1})},
        {rat({1}, {0, 1}), zero(), rat({1}, {0, 1}), zero()},
    });
}

/// Simple hub graph: vertex 4 adjacent to everything, degrees (1,2,2,3,4).
/// Its combinatorial Laplacian has spectrum {0, 1, 2, 4, 5}.
inline WeightedDigraph hub5() {
    return pattern({
        {0, 0, 0, 0, 1},
        {0, 0, 0, 1, 1},
        {0, 0, 0, 1, 1},
        {0, 1, 1, 0, 1},
        {1, 1, 1, 1, 0},
    });
}

/// Expected reduction of the hub5() combinatorial Laplacian keeping
/// {0, 1, 2, 3} (eliminating the hub).
inline WeightedDigraph hub5_laplacian_reduced() {
    auto d = [](std::initializer_list<double> num) { return rat(num, {-4, 1}); };
    return WeightedDigraph::from_matrix({
        {d({-3, 1}), d({1}), d({1}), d({1})},
        {d({1}), d({-7, 2}), d({1}), d({5, -1})},
        {d({1}), d({1}), d({-7, 2}), d({5, -1})},
        {d({1}), d({5, -1}), d({5, -1}), d({-11, 3})},
    });
}

/// 6-vertex graph with unit loops on {0, 1, 2} and loop-free pendants
/// {3, 4, 5}: 0->3->0, 0->5->2->0, 1->4->{1,2}.  Spectrum
/// {0, 0, 0, 2, (1 +- sqrt(5))/2}; removing the loop-free vertices keeps
/// the spectral radius and tightens the radial bound from 3 to 2.
inline WeightedDigraph looped6() {
    WeightedDigraph g(6);
    for (int v : {0, 1, 2}) g.set_weight(v, v, rat({1}));
    const std::vector<std::pair<int, int>> edges = {
        {0, 3}, {0, 5}, {1, 4}, {2, 0}, {3, 0}, {4, 1}, {4, 2}, {5, 2}};
    for (auto [i, j] : edges) g.set_weight(i, j, rat({1}));
    return g;
}

/// Expected reduction of looped6() keeping {0, 1, 2}.
inline WeightedDigraph looped3_reduced() {
    return WeightedDigraph::from_matrix({
        {rat({1, 1}, {0, 1}), zero(), rat({1}, {0, 1})},
        {zero(), rat({1, 1}, {0, 1}), rat({1}, {0, 1})},
        {rat({1}), zero(), rat({1})},
    });
}

/// 7-vertex simple graph: vertex 0 has degree 4, its neighbours degree 3,
/// plus an isolated edge 5-6.  The boundary circle of vertex 0's row disc
/// (radius 4) lies outside every other row disc, so removing vertex 0 is
/// the top exposed-boundary suggestion.
inline WeightedDigraph core7() {
    WeightedDigraph g(7);
    const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {1, 3}, {2, 4}, {5, 6}};
    for (auto [i, j] : edges) {
        g.set_weight(i, j, rat({1}));
        g.set_weight(j, i, rat({1}));
    }
    return g;
}

/// Entrywise comparison of canonical weights.
inline bool graphs_equal(const WeightedDigraph& a, const WeightedDigraph& b,
                         double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!Rational::approx_equal(a.weight(i, j), b.weight(i, j), tol)) return false;
    return true;
}

/// Multiset comparison of a spectrum (expanded by multiplicity) against
/// expected values; each expected root must be matched exactly once.
inline bool spectrum_matches(const isospec::SpectrumList& got, std::vector<cplx> expected,
                             double tol = 1e-6) {
    std::vector<cplx> roots;
    for (const auto& [value, mult] : got)
        for (int k = 0; k < mult; ++k) roots.push_back(value);
    if (roots.size() != expected.size()) return false;
    for (const cplx& r : roots) {
        bool hit = false;
        for (size_t k = 0; k < expected.size(); ++k) {
            if (std::abs(r - expected[k]) <= tol) {
                expected.erase(expected.begin() + static_cast<long>(k));
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return expected.empty();
}

/// True when `values` and `expected` match as multisets within tol.
inline bool values_match(std::vector<cplx> values, std::vector<cplx> expected,
                         double tol = 1e-6) {
    if (values.size() != expected.size()) return false;
    for (const cplx& r : values) {
        bool hit = false;
        for (size_t k = 0; k < expected.size(); ++k) {
            if (std::abs(r - expected[k]) <= tol) {
                expected.erase(expected.begin() + static_cast<long>(k));
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace fixtures
