// SPDX-License-Identifier: MIT
//
// Internal extended-precision polynomial kernels used by the canonical-form
// code.  Remainder sequences and trial divisions on degree-20+ operands lose
// enough digits in plain double to corrupt reduced fractions; these helpers
// run the same algorithms over std::complex<long double> and express
// divisibility decisions as backward relative error, which stays meaningful
// for high-multiplicity factors where plain coefficient norms do not.

#pragma once

#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

#include "isospec/poly.hpp"

namespace isospec {
namespace detail {

using lc = std::complex<long double>;
using lvec = std::vector<lc>;

inline long double max_abs(const lvec& v) {
    long double m = 0.0L;
    for (const lc& c : v)
        m = std::max(m, std::abs(c));
    return m;
}

inline lvec widen(const Poly& p) {
    lvec v;
    v.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k)
        v.emplace_back(p.coeff(k));
    return v;
}

inline Poly narrow(const lvec& v) {
    std::vector<cplx> out(v.size());
    for (size_t k = 0; k < v.size(); ++k)
        out[k] = cplx(static_cast<double>(v[k].real()), static_cast<double>(v[k].imag()));
    return Poly(std::move(out));
}

inline std::pair<lvec, lvec> divrem_l(const lvec& a, const lvec& b) {
    if (a.size() < b.size())
        return {lvec{}, a};
    lvec rem = a;
    lvec quo(a.size() - b.size() + 1);
    const lc lead = b.back();
    for (size_t k = quo.size(); k-- > 0;) {
        const lc q = rem[k + b.size() - 1] / lead;
        quo[k] = q;
        for (size_t j = 0; j < b.size(); ++j)
            rem[k + j] -= q * b[j];
    }
    rem.resize(b.size() - 1);
    return {std::move(quo), std::move(rem)};
}

inline lvec monic_l(lvec v) {
    const lc lead = v.back();
    for (lc& c : v)
        c /= lead;
    return v;
}

/// Extended-precision Euclid with the same remainder cutoff rule as
/// Poly::gcd.  The result is a proposal: callers must confirm it divides
/// both operands before cancelling it.
inline lvec gcd_l(lvec x, lvec y, double tol) {
    x = monic_l(std::move(x));
    y = monic_l(std::move(y));
    while (!y.empty()) {
        if (y.size() == 1)
            return lvec{lc(1.0L)};
        lvec r = divrem_l(x, y).second;
        const long double scale = std::max({1.0L, max_abs(x), max_abs(y)});
        const long double rmax = max_abs(r);
        if (rmax <= static_cast<long double>(tol) * scale) {
            r.clear();
        } else {
            // Leading coefficients at the noise floor would poison the next
            // division step; drop them.
            while (!r.empty() && std::abs(r.back()) <= 1e-17L * rmax)
                r.pop_back();
        }
        x = std::move(y);
        y = r.empty() ? lvec{} : monic_l(std::move(r));
    }
    return x;
}

inline lc eval_l(const lvec& p, lc z) {
    lc acc{};
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

/// Backward error of z as a root of p: |p(z)| measured against the
/// evaluation scale sum_k |p_k| |z|^k.  Small values mean a tiny relative
/// coefficient perturbation of p has an exact root at z; this stays
/// meaningful for multiple roots, where coefficient-norm remainder tests
/// drown in division growth.
inline long double backward_root_error(const lvec& p, lc z) {
    long double scale = 0.0L;
    long double power = 1.0L;
    const long double az = std::abs(z);
    for (const lc& c : p) {
        scale += std::abs(c) * power;
        power *= az;
    }
    const long double v = std::abs(eval_l(p, z));
    if (scale == 0.0L)
        return v == 0.0L ? 0.0L : 1.0L;
    return v / scale;
}

/// A few Newton steps pulling a candidate root of p onto the nearby true
/// root; returns the start point unchanged when the iteration stalls.
inline lc polish_root(const lvec& p, lc z) {
    if (p.size() < 2)
        return z;
    lvec dp(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k)
        dp[k - 1] = static_cast<long double>(k) * p[k];
    lc best = z;
    long double best_err = backward_root_error(p, z);
    for (int it = 0; it < 40; ++it) {
        const lc d = eval_l(dp, z);
        if (std::abs(d) < 1e-300L)
            break;
        const lc step = eval_l(p, z) / d;
        z -= step;
        const long double err = backward_root_error(p, z);
        if (err < best_err) {
            best_err = err;
            best = z;
        }
        if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z)))
            break;
    }
    return best;
}

/// Divide p by the linear factor (x - r); p must have degree >= 1.  The
/// remainder is dropped, so callers decide divisibility beforehand.
inline lvec deflate(const lvec& p, lc r) {
    lvec q(p.size() - 1);
    lc acc = p.back();
    for (size_t k = p.size() - 1; k-- > 0;) {
        q[k] = acc;
        acc = p[k] + r * acc;
    }
    return q;
}

}  // namespace detail
}  // namespace isospec
