// SPDX-License-Identifier: MIT

#include "isospec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace isospec {

std::vector<cplx> poly_roots(const Poly& p, double tol, int max_iter) {
    if (p.is_zero())
        throw std::invalid_argument("roots of the zero polynomial");
    // Strip exact zero roots first; they are common (factors of z) and the
    // iteration converges faster without the origin cluster.
    std::vector<cplx> coeffs = p.coeffs();
    size_t zeros_at_origin = 0;
    while (zeros_at_origin + 1 < coeffs.size() && std::abs(coeffs[zeros_at_origin]) == 0.0)
        ++zeros_at_origin;
    coeffs.erase(coeffs.begin(), coeffs.begin() + zeros_at_origin);

    std::vector<cplx> roots(zeros_at_origin, cplx{});
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg >= 1) {
        Poly q{std::vector<cplx>(coeffs)};
        Poly dq = q.derivative();
        // Initial guesses on a circle enclosing all roots (Cauchy-style bound).
        double radius = 0.0;
        for (int k = 0; k < deg; ++k)
            radius = std::max(radius, std::abs(coeffs[k] / coeffs[deg]));
        radius += 1.0;
        std::vector<cplx> z(deg);
        for (int k = 0; k < deg; ++k) {
            double theta = 2.0 * std::numbers::pi * (k + 0.25) / deg + 0.4;
            z[k] = radius * cplx(std::cos(theta), std::sin(theta));
        }
        bool converged = false;
        for (int it = 0; it < max_iter && !converged; ++it) {
            converged = true;
            for (int k = 0; k < deg; ++k) {
                cplx pv = q.eval(z[k]);
                cplx dv = dq.eval(z[k]);
                cplx w = (std::abs(dv) > 0.0) ? pv / dv : cplx(1e-8, 1e-8);
                cplx sum{};
                for (int j = 0; j < deg; ++j)
                    if (j != k)
                        sum += cplx(1.0) / (z[k] - z[j]);
                cplx denom = cplx(1.0) - w * sum;
                cplx step = (std::abs(denom) > 1e-300) ? w / denom : w;
                z[k] -= step;
                if (std::abs(step) > tol * (1.0 + std::abs(z[k])))
                    converged = false;
            }
        }
        if (!converged) {
            // Accept the iterate anyway if residuals are small (flat regions
            // can stall the step-size test); otherwise report failure.
            double scale = q.max_coeff();
            for (int k = 0; k < deg; ++k)
                if (std::abs(q.eval(z[k])) > 1e-8 * scale) {
                    roots.insert(roots.end(), z.begin(), z.end());
                    throw RootConvergenceError(std::move(roots));
                }
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

SpectrumList cluster_roots(const std::vector<cplx>& roots, double delta_scale) {
    double maxmod = 0.0;
    for (cplx r : roots)
        maxmod = std::max(maxmod, std::abs(r));
    const double delta = delta_scale * (1.0 + maxmod);

    // Union-find over the proximity graph, then average each class.  A plain
    // nearest-neighbour sweep would depend on ordering for borderline chains.
    const int n = static_cast<int>(roots.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= delta)
                parent[find(i)] = find(j);

    std::vector<cplx> sum(n);
    std::vector<int> count(n, 0);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        sum[r] += roots[i];
        count[r] += 1;
    }
    SpectrumList out;
    for (int i = 0; i < n; ++i)
        if (count[i] > 0)
            out.emplace_back(sum[i] / static_cast<double>(count[i]), count[i]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real())
            return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return out;
}

}  // namespace isospec
