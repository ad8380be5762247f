// SPDX-License-Identifier: MIT
//
// Deterministic random graphs for property tests: weights drawn from a pool
// of small rational functions with relative degree <= 0, plus random valid
// keep-sets found by rejection sampling.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "isospec/graph.hpp"
#include "isospec/reduce.hpp"

#include "fixtures.hpp"

namespace fixtures {

/// A random weight with relative degree <= 0: constants, c/z, c/(z - a),
/// (z + c)/z^2, or zero.
inline Rational random_weight(std::mt19937& rng) {
    std::uniform_int_distribution<int> shape(0, 5);
    std::uniform_int_distribution<int> small(-2, 2);
    const double c = static_cast<double>(small(rng));
    switch (shape(rng)) {
        case 0: return Rational::zero();
        case 1: return Rational::constant(c);
        case 2: return Rational(Poly{c}, Poly{0, 1});
        case 3: return Rational(Poly{c}, Poly{static_cast<double>(small(rng)), 1});
        case 4: return Rational(Poly{c, 1}, Poly{0, 0, 1});
        default: return Rational::constant(cplx(c, static_cast<double>(small(rng))));
    }
}

/// Random weighted digraph with about `density` of entries populated; every
/// weight has relative degree <= 0.
inline WeightedDigraph random_pi_graph(std::mt19937& rng, int n, double density = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    WeightedDigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coin(rng) < density) g.set_weight(i, j, random_weight(rng));
    return g;
}

/// Random constant complex matrix as a graph.
inline WeightedDigraph random_constant_graph(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    WeightedDigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.set_weight(i, j, Rational::constant(cplx(u(rng), u(rng))));
    return g;
}

/// Random proper nonempty keep-set that validates as structural, if one can
/// be found in a bounded number of draws.
inline std::optional<std::vector<int>> random_structural_keep(std::mt19937& rng,
                                                              const WeightedDigraph& g,
                                                              int tries = 40) {
    const int n = g.size();
    if (n < 2) return std::nullopt;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < tries; ++t) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (coin(rng)) keep.push_back(v);
        if (keep.empty() || static_cast<int>(keep.size()) == n) continue;
        try {
            isospec::validate_structural(g, keep);
            return keep;
        } catch (const isospec::NotStructuralError&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace fixtures
