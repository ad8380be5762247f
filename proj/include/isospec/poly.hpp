// SPDX-License-Identifier: MIT
//
// Dense univariate polynomials over complex<double>, stored as ascending
// coefficient vectors.  All arithmetic trims trailing near-zero coefficients
// relative to the largest coefficient magnitude, so desk-scale integer
// examples stay exact while float noise is suppressed.

#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace isospec {

using cplx = std::complex<double>;

/// Relative tolerance used when trimming trailing coefficients.
inline constexpr double kCoeffTrimTol = 1e-12;

/// Relative tolerance used by the Euclidean gcd to declare a remainder zero.
inline constexpr double kGcdTol = 1e-9;

class Poly {
public:
    /// The zero polynomial (empty coefficient vector, degree -1).
    Poly() = default;

    /// From ascending complex coefficients; trailing near-zeros are trimmed.
    explicit Poly(std::vector<cplx> coeffs);

    /// Convenience for real coefficient lists: Poly{2, 3, 2} = 2 + 3z + 2z^2.
    Poly(std::initializer_list<double> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly{1.0}; }
    static Poly constant(cplx c);
    /// The identity polynomial z.
    static Poly variable() { return Poly{0.0, 1.0}; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    /// Coefficient of z^k (0 beyond the stored degree).
    cplx coeff(int k) const;
    const std::vector<cplx>& coeffs() const { return c_; }
    cplx leading() const;

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_coeff() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(cplx s) const;

    /// Long division: returns (quotient, remainder), deg(rem) < deg(divisor).
    /// Throws std::invalid_argument when dividing by the zero polynomial.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

    /// Horner evaluation.
    cplx eval(cplx z) const;

    Poly derivative() const;

    /// Scaled so the leading coefficient is 1 (zero polynomial unchanged).
    Poly monic() const;

    /// Coefficient-wise comparison; tolerance is relative to the larger
    /// coefficient scale of the two operands (floored at 1).
    static bool approx_equal(const Poly& a, const Poly& b, double tol = 1e-9);

    /// Monic gcd via the Euclidean algorithm with tolerance-based remainder
    /// tests; returns 1 for coprime inputs.
    static Poly gcd(const Poly& a, const Poly& b, double tol = kGcdTol);

    /// Human-readable form, e.g. "-z^5 + 2z^3 + 2z^2 + 3z + 2".
    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<cplx> c_;  // ascending; empty <=> zero polynomial
};

inline Poly operator*(cplx s, const Poly& p) { return p * s; }

}  // namespace isospec
