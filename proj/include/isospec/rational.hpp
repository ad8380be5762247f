// SPDX-License-Identifier: MIT
//
// The coefficient field for weighted digraphs: complex rational functions
// p(z)/q(z) kept in a canonical form — lowest terms (tolerance gcd), monic
// denominator, and the zero element stored as 0/1.

#pragma once

#include <limits>
#include <string>

#include "isospec/poly.hpp"

namespace isospec {

/// Pole-detection tolerance base for pointwise evaluation.
inline constexpr double kPoleTol = 1e-12;

/// Sentinel for the relative-degree index of the zero function.
inline constexpr int kPiNegInf = std::numeric_limits<int>::min();

struct EvalResult {
    cplx value{};
    bool pole = false;
};

class Rational {
public:
    /// Zero (0/1).
    Rational() : num_(), den_(Poly::one()) {}

    /// Canonicalizes: cancels the gcd, makes the denominator monic, and
    /// collapses a zero numerator to 0/1.  Throws on a zero denominator.
    Rational(Poly num, Poly den);

    static Rational zero() { return {}; }
    static Rational one() { return Rational(Poly::one(), Poly::one()); }
    static Rational constant(cplx c) { return Rational(Poly::constant(c), Poly::one()); }
    /// The identity function z.
    static Rational variable() { return Rational(Poly::variable(), Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the function is identically z (checked on canonical forms).
    bool is_variable() const;

    /// Relative degree deg(num) - deg(den); kPiNegInf for the zero function.
    int pi() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator-() const;
    Rational operator*(const Rational& o) const;
    /// Throws std::domain_error when dividing by the zero function.
    Rational operator/(const Rational& o) const;

    /// Pointwise value; reports a pole when |den(z)| falls below
    /// kPoleTol * (1+|z|)^deg(den).
    EvalResult eval(cplx z) const;

    /// Canonical-form coefficient comparison of numerators and denominators.
    static bool approx_equal(const Rational& a, const Rational& b, double tol = 1e-9);

    std::string str(const std::string& var = "z") const;

private:
    Poly num_, den_;
};

}  // namespace isospec
