// SPDX-License-Identifier: MIT

#include "isospec/apps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "isospec/reduce.hpp"

namespace isospec {

namespace {

bool is_constant(const Rational& w) {
    return w.den().degree() == 0 && w.num().degree() <= 0;
}

cplx constant_value(const Rational& w) {
    if (w.is_zero()) return 0.0;
    return w.num().coeff(0) / w.den().coeff(0);
}

/// True when the subgraph induced by `verts` (loops ignored) has no cycle.
bool induced_acyclic(const WeightedDigraph& g, const std::vector<int>& verts) {
    const int n = g.size();
    std::vector<int> color(n, -1);  // -1 outside, 0 unvisited, 1 on stack, 2 done
    for (int v : verts) color[v] = 0;
    for (int start : verts) {
        if (color[start] != 0) continue;
        std::vector<std::pair<int, int>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            bool advanced = false;
            for (int j = next; j < n; ++j) {
                if (j == v || color[j] == -1 || !g.has_edge(v, j)) continue;
                next = j + 1;
                if (color[j] == 1) return false;
                if (color[j] == 0) {
                    color[j] = 1;
                    stack.emplace_back(j, 0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

/// Greedy maximal set of loop-free vertices whose induced subgraph is
/// acyclic; returns the complementary keep set.
std::vector<int> greedy_loopless_keep(const WeightedDigraph& g) {
    std::vector<int> removed;
    for (int v = 0; v < g.size(); ++v) {
        if (g.has_loop(v)) continue;
        removed.push_back(v);
        if (!induced_acyclic(g, removed)) removed.pop_back();
    }
    std::vector<char> gone(g.size(), 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.size(); ++v)
        if (!gone[v]) keep.push_back(v);
    return keep;
}

bool singleton_removal_valid(const WeightedDigraph& g, int v) {
    return g.size() >= 2 && !g.weight(v, v).is_variable();
}

}  // namespace

WeightedDigraph laplacian(const WeightedDigraph& g, LaplacianKind kind) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        if (g.has_loop(i))
            throw std::domain_error("laplacian requires a loop-free graph (vertex " +
                                    std::to_string(i + 1) + " has a loop)");
    if (kind != LaplacianKind::generalized) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!is_constant(g.weight(i, j)))
                    throw std::domain_error(
                        "this laplacian kind requires constant weights; use the "
                        "generalized kind for rational weights");
    }
    WeightedDigraph out(n);
    if (kind == LaplacianKind::normalized) {
        std::vector<cplx> d(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != i) d[i] += constant_value(g.weight(i, j));
        for (int i = 0; i < n; ++i) {
            if (std::abs(d[i]) > 0) out.set_weight(i, i, Rational::constant(1.0));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const cplx w = constant_value(g.weight(i, j));
                const cplx dd = d[i] * d[j];
                if (std::abs(w) == 0.0 || std::abs(dd) == 0.0) continue;
                out.set_weight(i, j, Rational::constant(-w / std::sqrt(dd)));
            }
        }
        return out;
    }
    for (int i = 0; i < n; ++i) {
        Rational diag = Rational::zero();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            diag = diag + g.weight(i, j);
            out.set_weight(i, j, Rational::zero() - g.weight(i, j));
        }
        out.set_weight(i, i, diag);
    }
    return out;
}

RhoReport estimate_rho(const WeightedDigraph& g, int level) {
    if (level < 0) throw std::invalid_argument("level must be non-negative");
    RhoReport rep;
    rep.level = level;
    WeightedDigraph cur = g;
    std::vector<int> kept(g.size());
    std::iota(kept.begin(), kept.end(), 0);
    std::vector<cplx> live;

    auto absorb = [&](const WeightedDigraph& before, const ReductionResult& r) {
        const PolyExtension pre = poly_extension(before);
        for (const cplx& v : r.exceptional)
            if (member_union(pre, RegionKind::gershgorin, v)) live.push_back(v);
    };

    if (level >= 1) {
        const std::vector<int> keep = greedy_loopless_keep(cur);
        if (static_cast<int>(keep.size()) < cur.size()) {
            const ReductionResult r = reduce_over(cur, keep);
            absorb(cur, r);
            std::vector<int> next;
            for (int idx : r.kept) next.push_back(kept[idx]);
            kept = std::move(next);
            cur = r.graph;
        }
    }
    for (int stage = 2; stage <= level && cur.size() > 1; ++stage) {
        int best_v = -1;
        double best_bound = std::numeric_limits<double>::infinity();
        for (int v = 0; v < cur.size(); ++v) {
            if (!singleton_removal_valid(cur, v)) continue;
            std::vector<int> keep;
            for (int u = 0; u < cur.size(); ++u)
                if (u != v) keep.push_back(u);
            const ReductionResult r = reduce_over(cur, keep);
            double b = max_abs_over_union(poly_extension(r.graph));
            const PolyExtension pre = poly_extension(cur);
            for (const cplx& nu : live) b = std::max(b, std::abs(nu));
            for (const cplx& nu : r.exceptional)
                if (member_union(pre, RegionKind::gershgorin, nu))
                    b = std::max(b, std::abs(nu));
            if (b < best_bound - 1e-12) {
                best_bound = b;
                best_v = v;
            }
        }
        if (best_v < 0) break;
        std::vector<int> keep;
        for (int u = 0; u < cur.size(); ++u)
            if (u != best_v) keep.push_back(u);
        const ReductionResult r = reduce_over(cur, keep);
        absorb(cur, r);
        std::vector<int> next;
        for (int idx : r.kept) next.push_back(kept[idx]);
        kept = std::move(next);
        cur = r.graph;
    }

    rep.bound = max_abs_over_union(poly_extension(cur), RegionKind::gershgorin);
    for (const cplx& nu : live) rep.bound = std::max(rep.bound, std::abs(nu));
    rep.kept = kept;
    rep.exceptional = live;
    return rep;
}

std::vector<Suggestion> suggest_structural_sets(const WeightedDigraph& g,
                                                SuggestStrategy strategy, int max_results) {
    std::vector<Suggestion> out;
    const int n = g.size();
    switch (strategy) {
        case SuggestStrategy::loopless_first: {
            const std::vector<int> keep = greedy_loopless_keep(g);
            const int removed = n - static_cast<int>(keep.size());
            if (removed == 0) return out;
            Suggestion s;
            s.keep = keep;
            s.score = removed;
            s.note = "removes " + std::to_string(removed) +
                     " loop-free vertices forming an acyclic set";
            out.push_back(std::move(s));
            break;
        }
        case SuggestStrategy::exposed_boundary: {
            const PolyExtension ext = poly_extension(g);
            const RasterGrid grid =
                raster(ext, RegionKind::gershgorin, auto_window(ext), 256, 256);
            auto at = [&](const std::vector<std::uint8_t>& m, int ix, int iy) -> bool {
                if (ix < 0 || ix >= grid.nx || iy < 0 || iy >= grid.ny) return false;
                return m[static_cast<size_t>(iy) * grid.nx + ix] != 0;
            };
            for (int v = 0; v < n; ++v) {
                if (!singleton_removal_valid(g, v)) continue;
                const std::vector<std::uint8_t>& mv = grid.spec_masks[v];
                int boundary = 0, exposed = 0;
                for (int iy = 0; iy < grid.ny; ++iy) {
                    for (int ix = 0; ix < grid.nx; ++ix) {
                        if (!at(mv, ix, iy)) continue;
                        const bool edge = !at(mv, ix - 1, iy) || !at(mv, ix + 1, iy) ||
                                          !at(mv, ix, iy - 1) || !at(mv, ix, iy + 1);
                        if (!edge) continue;
                        ++boundary;
                        bool covered = false;
                        for (int u = 0; u < n && !covered; ++u)
                            if (u != v && at(grid.spec_masks[u], ix, iy)) covered = true;
                        if (!covered) ++exposed;
                    }
                }
                Suggestion s;
                for (int u = 0; u < n; ++u)
                    if (u != v) s.keep.push_back(u);
                s.score = exposed;
                s.note = "removing v" + std::to_string(v + 1) + " frees " +
                         std::to_string(exposed) + " of " + std::to_string(boundary) +
                         " boundary cells of its disc";
                out.push_back(std::move(s));
            }
            std::stable_sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
                return a.score > b.score;
            });
            break;
        }
        case SuggestStrategy::exhaustive_small: {
            if (n > 12)
                throw std::domain_error("exhaustive enumeration is limited to 12 vertices");
            for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                std::vector<int> keep;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) keep.push_back(v);
                try {
                    validate_structural(g, keep);
                } catch (const NotStructuralError&) {
                    continue;
                }
                Suggestion s;
                s.score = n - static_cast<int>(keep.size());
                s.note = "removes " + std::to_string(n - static_cast<int>(keep.size())) +
                         " vertices";
                s.keep = std::move(keep);
                out.push_back(std::move(s));
            }
            std::stable_sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
                if (a.score != b.score) return a.score > b.score;
                return a.keep < b.keep;
            });
            break;
        }
    }
    if (static_cast<int>(out.size()) > max_results) out.resize(max_results);
    return out;
}

}  // namespace isospec
