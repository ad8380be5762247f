// SPDX-License-Identifier: MIT
//
// Characteristic polynomials det(M(z) - z*I) over the rational-function
// field, spectra with multiplicity, and the division identity that relates a
// graph's characteristic polynomial to its reduction's.

#pragma once

#include "isospec/reduce.hpp"

namespace isospec {

/// det(M(G,z) - z*I) as a canonical rational function.  Cofactor expansion
/// for n <= 8; fraction-free Bareiss elimination over polynomials above that.
Rational char_poly(const WeightedDigraph& g);

/// Eigenvalues with multiplicity: the clustered roots of the canonical
/// numerator of char_poly, minus any root cancelled by the denominator.
SpectrumList spectrum(const WeightedDigraph& g, double cluster_scale = 1e-6);

/// Largest eigenvalue modulus.
double spectral_radius(const WeightedDigraph& g);

struct Prop1Report {
    bool ok = false;
    double residual = 0.0;  // max cross-multiplied coefficient difference
};

/// Checks char_poly(g) == char_poly(reduce_over(g, keep)) * prod over removed
/// v of (loop(v) - z), comparing cross-multiplied numerators coefficientwise.
Prop1Report verify_reduction_identity(const WeightedDigraph& g, const std::vector<int>& keep,
                                      double tol = 1e-8);

}  // namespace isospec
