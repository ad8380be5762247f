// SPDX-License-Identifier: MIT

#include "isospec/charpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>

#include "longpoly.hpp"

namespace isospec {

namespace {

/// Division-free cofactor expansion of a polynomial matrix, memoized on the
/// set of still-active columns (the row is determined by how many columns
/// have been consumed).  No intermediate division or reduction happens, so
/// integer-coefficient inputs are evaluated exactly.
const Poly& det_poly_minor(const std::vector<std::vector<Poly>>& b, unsigned cols,
                           std::vector<std::unique_ptr<Poly>>& memo) {
    auto& slot = memo[cols];
    if (slot)
        return *slot;
    const int n = static_cast<int>(b.size());
    const int row = n - std::popcount(cols);
    Poly acc;
    if (row == n) {
        acc = Poly::one();
    } else {
        int sign = 1;
        for (unsigned rest = cols; rest != 0; rest &= rest - 1) {
            const int col = std::countr_zero(rest);
            if (!b[row][col].is_zero()) {
                const Poly& minor = det_poly_minor(b, cols ^ (1u << col), memo);
                const Poly term = b[row][col] * minor;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
    }
    slot = std::make_unique<Poly>(std::move(acc));
    return *slot;
}

/// Row-factored polynomial form of M(g) - zI: row i is multiplied by the
/// product L_i of its denominators (built as prefix*suffix products rather
/// than by dividing L_i back out, which would reintroduce rounding noise).
/// The determinant of the result needs dividing by denom = prod L_i.
std::vector<std::vector<Poly>> row_factored(const WeightedDigraph& g, Poly& denom) {
    const int n = g.size();
    std::vector<std::vector<Poly>> b(n, std::vector<Poly>(n));
    denom = Poly::one();
    for (int i = 0; i < n; ++i) {
        std::vector<Poly> pre(n + 1, Poly::one());
        std::vector<Poly> suf(n + 1, Poly::one());
        for (int j = 0; j < n; ++j)
            pre[j + 1] = pre[j] * g.weight(i, j).den();
        for (int j = n; j-- > 0;)
            suf[j] = suf[j + 1] * g.weight(i, j).den();
        const Poly& L = pre[n];
        denom = denom * L;
        for (int j = 0; j < n; ++j) {
            Poly scaled = pre[j] * suf[j + 1] * g.weight(i, j).num();
            if (i == j)
                scaled = scaled - L * Poly::variable();
            b[i][j] = std::move(scaled);
        }
    }
    return b;
}

/// Fraction-free Bareiss elimination for a polynomial matrix.  Pivots are
/// chosen by maximal (degree, magnitude) to limit intermediate growth; an
/// odd number of row swaps flips the determinant sign.
Poly det_bareiss(std::vector<std::vector<Poly>> b) {
    const int n = static_cast<int>(b.size());
    if (n == 0)
        return Poly::one();
    Poly prev = Poly::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (b[r][k].is_zero())
                continue;
            if (pivot == -1 || b[r][k].degree() > b[pivot][k].degree() ||
                (b[r][k].degree() == b[pivot][k].degree() &&
                 b[r][k].max_coeff() > b[pivot][k].max_coeff()))
                pivot = r;
        }
        if (pivot == -1)
            return Poly();  // singular
        if (pivot != k) {
            std::swap(b[pivot], b[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly numer = b[i][j] * b[k][k] - b[i][k] * b[k][j];
                // Division is exact in exact arithmetic; the float remainder
                // is noise and is discarded.
                b[i][j] = Poly::divrem(numer, prev).first;
            }
        prev = b[k][k];
    }
    Poly det = b[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

}  // namespace

Rational char_poly(const WeightedDigraph& g) {
    const int n = g.size();
    if (n == 0)
        return Rational::one();
    Poly denom;
    std::vector<std::vector<Poly>> b = row_factored(g, denom);
    Poly det;
    if (n <= 8) {
        // Memoized cofactors visit 2^n column sets; everything stays in the
        // polynomial ring, so no intermediate reduction happens.
        std::vector<std::unique_ptr<Poly>> memo(std::size_t{1} << n);
        det = det_poly_minor(b, (1u << n) - 1, memo);
    } else {
        // Larger matrices: fraction-free elimination keeps the term count
        // polynomial at the cost of exact-division rounding.
        det = det_bareiss(std::move(b));
    }
    if (det.is_zero())
        return Rational(std::move(det), std::move(denom));
    // The denominator is the product of the individual weight denominators,
    // so every possible common factor vanishes at a root of one of those
    // known low-degree pieces.  Cancelling root by root against the
    // determinant is far better conditioned than a blind high-degree gcd;
    // the roots that fail the backward-error test are exactly the surviving
    // denominator.
    const auto mul_l = [](const detail::lvec& a, const detail::lvec& b) {
        detail::lvec out(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        return out;
    };
    detail::lvec num = detail::widen(det);
    detail::lvec rest{detail::lc(1.0L)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Poly& f = g.weight(i, j).den();
            if (f.degree() < 1)
                continue;
            std::vector<cplx> roots;
            try {
                roots = poly_roots(f);
            } catch (const RootConvergenceError&) {
                rest = mul_l(rest, detail::widen(f));
                continue;
            }
            for (cplx c : roots) {
                const detail::lc r(c);
                if (num.size() > 1 && detail::backward_root_error(num, r) <= kGcdTol)
                    num = detail::deflate(num, r);
                else
                    rest = mul_l(rest, detail::lvec{-r, detail::lc(1.0L)});
            }
        }
    return Rational(detail::narrow(num), detail::narrow(rest));
}

SpectrumList spectrum(const WeightedDigraph& g, double cluster_scale) {
    Rational cp = char_poly(g);
    if (cp.num().is_zero())
        throw std::domain_error("characteristic polynomial is identically zero");
    std::vector<cplx> num_roots = poly_roots(cp.num());
    if (cp.den().degree() >= 1) {
        // Roots shared with the denominator are removable singularities of
        // the canonical form, not eigenvalues; cancel them pairwise.
        for (cplx dr : poly_roots(cp.den())) {
            auto it = std::min_element(num_roots.begin(), num_roots.end(),
                                       [dr](cplx a, cplx b) {
                                           return std::abs(a - dr) < std::abs(b - dr);
                                       });
            if (it != num_roots.end() && std::abs(*it - dr) <= 1e-6 * (1.0 + std::abs(dr)))
                num_roots.erase(it);
        }
    }
    SpectrumList out = cluster_roots(num_roots, cluster_scale);
    // A multiplicity-m cluster mean still carries the finder's O(eps^(1/m))
    // displacement.  The (m-1)-th derivative has a simple root at the true
    // value, so a few Newton steps there restore full precision.
    for (auto& [value, mult] : out) {
        if (mult < 2)
            continue;
        Poly q = cp.num();
        for (int k = 1; k < mult; ++k)
            q = q.derivative();
        const Poly dq = q.derivative();
        cplx z = value;
        for (int it = 0; it < 30; ++it) {
            const cplx d = dq.eval(z);
            if (std::abs(d) < 1e-300)
                break;
            const cplx step = q.eval(z) / d;
            z -= step;
            if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z)))
                break;
        }
        // Accept the refinement only if it stayed inside the cluster.
        if (std::abs(z - value) <= cluster_scale * (1.0 + std::abs(value)))
            value = z;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real())
            return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return out;
}

double spectral_radius(const WeightedDigraph& g) {
    double rho = 0.0;
    for (const auto& [value, mult] : spectrum(g))
        rho = std::max(rho, std::abs(value));
    return rho;
}

Prop1Report verify_reduction_identity(const WeightedDigraph& g, const std::vector<int>& keep,
                                      double tol) {
    StructuralSet s = validate_structural(g, keep);
    if (s.removed.empty())
        throw std::invalid_argument("identity check needs a proper keep set");
    ReductionResult red = reduce_over(g, keep);
    Rational lhs = char_poly(g);
    Rational rhs = char_poly(red.graph);
    Rational divisor = Rational::one();
    for (int v : s.removed)
        divisor = divisor * (g.weight(v, v) - Rational::variable());

    // lhs == rhs * divisor, compared by cross-multiplication.
    Rational prod = rhs * divisor;
    Poly a = lhs.num() * prod.den();
    Poly b = prod.num() * lhs.den();
    double scale = std::max({1.0, a.max_coeff(), b.max_coeff()});
    double residual = 0.0;
    int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
        residual = std::max(residual, std::abs(a.coeff(k) - b.coeff(k)));
    residual /= scale;
    return Prop1Report{residual < tol, residual};
}

}  // namespace isospec
