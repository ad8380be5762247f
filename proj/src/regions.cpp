// SPDX-License-Identifier: MIT

#include "isospec/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isospec/reduce.hpp"
#include "isospec/roots.hpp"

namespace isospec {

namespace {

double coeff_abs_sum(const Poly& p, int below_degree) {
    double s = 0.0;
    for (int k = 0; k < below_degree && k <= p.degree(); ++k) s += std::abs(p.coeff(k));
    return s;
}

double coeff_abs_sum(const Poly& p) { return coeff_abs_sum(p, p.degree() + 1); }

}  // namespace

double PolyExtension::row_sum(int i, cplx z) const {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
        if (j != i) s += std::abs(entry[i][j].eval(z));
    return s;
}

double PolyExtension::scc_row_sum(int i, cplx z) const {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
        if (j != i && comp.component_of[j] == comp.component_of[i])
            s += std::abs(entry[i][j].eval(z));
    return s;
}

double PolyExtension::slack(cplx z, int degree_sum) {
    return 1e-9 * std::pow(1.0 + std::abs(z), static_cast<double>(degree_sum));
}

PolyExtension poly_extension(const WeightedDigraph& g) {
    const int n = g.size();
    PolyExtension ext;
    ext.n = n;
    ext.pi_class = g.is_pi_class();
    ext.row_factor.resize(n, Poly::one());
    ext.entry.assign(n, std::vector<Poly>(n, Poly::zero()));
    ext.diag_gap.resize(n, Poly::zero());
    ext.row_degree.resize(n, 0);
    const Poly z = Poly::variable();
    for (int i = 0; i < n; ++i) {
        Poly L = Poly::one();
        for (int j = 0; j < n; ++j) L = L * g.weight(i, j).den();
        ext.row_factor[i] = L;
        for (int j = 0; j < n; ++j) {
            // L_i * M_ij computed exactly as num_ij * prod of the other
            // denominators in the row, avoiding a polynomial division.
            Poly other = Poly::one();
            for (int k = 0; k < n; ++k)
                if (k != j) other = other * g.weight(i, k).den();
            ext.entry[i][j] = g.weight(i, j).num() * other;
        }
        ext.diag_gap[i] = L * z - ext.entry[i][i];
        // Extended diagonal entry: L_i*M_ii - L_i*z + z.
        ext.entry[i][i] = ext.entry[i][i] - L * z + z;
        int d = std::max(0, ext.diag_gap[i].degree());
        for (int j = 0; j < n; ++j)
            if (j != i) d = std::max(d, ext.entry[i][j].degree());
        ext.row_degree[i] = d;
    }
    ext.comp = scc(g);
    ext.cycle_set = cycles(g);
    return ext;
}

std::vector<RegionSpec> region_specs(const PolyExtension& ext, RegionKind kind) {
    std::vector<RegionSpec> specs;
    switch (kind) {
        case RegionKind::gershgorin:
            for (int i = 0; i < ext.n; ++i) {
                RegionSpec s;
                s.kind = kind;
                s.i = i;
                specs.push_back(std::move(s));
            }
            break;
        case RegionKind::brauer:
            for (int i = 0; i < ext.n; ++i)
                for (int j = i + 1; j < ext.n; ++j) {
                    RegionSpec s;
                    s.kind = kind;
                    s.i = i;
                    s.j = j;
                    specs.push_back(std::move(s));
                }
            break;
        case RegionKind::brualdi:
            for (const Cycle& c : ext.cycle_set) {
                RegionSpec s;
                s.kind = kind;
                s.cycle = c.vertices;
                s.weak = c.weak;
                specs.push_back(std::move(s));
            }
            break;
    }
    return specs;
}

bool member(const PolyExtension& ext, const RegionSpec& spec, cplx z) {
    switch (spec.kind) {
        case RegionKind::gershgorin: {
            const int i = spec.i;
            const double lhs = std::abs(ext.diag_gap[i].eval(z));
            return lhs <= ext.row_sum(i, z) + PolyExtension::slack(z, ext.row_degree[i]);
        }
        case RegionKind::brauer: {
            const int i = spec.i, j = spec.j;
            const double lhs =
                std::abs(ext.diag_gap[i].eval(z)) * std::abs(ext.diag_gap[j].eval(z));
            const double rhs = ext.row_sum(i, z) * ext.row_sum(j, z);
            return lhs <= rhs + PolyExtension::slack(z, ext.row_degree[i] + ext.row_degree[j]);
        }
        case RegionKind::brualdi: {
            double lhs = 1.0, rhs = 1.0;
            int dsum = 0;
            for (int v : spec.cycle) {
                lhs *= std::abs(ext.diag_gap[v].eval(z));
                rhs *= ext.scc_row_sum(v, z);
                dsum += ext.row_degree[v];
            }
            return lhs <= rhs + PolyExtension::slack(z, dsum);
        }
    }
    return false;
}

bool member_union(const PolyExtension& ext, RegionKind kind, cplx z) {
    std::vector<RegionSpec> specs = region_specs(ext, kind);
    if (specs.empty() && kind == RegionKind::brauer)
        specs = region_specs(ext, RegionKind::gershgorin);
    for (const RegionSpec& s : specs)
        if (member(ext, s, z)) return true;
    return false;
}

cplx RasterGrid::cell_center(int ix, int iy) const {
    const double dx = (window.re_max - window.re_min) / nx;
    const double dy = (window.im_max - window.im_min) / ny;
    return {window.re_min + (ix + 0.5) * dx, window.im_min + (iy + 0.5) * dy};
}

RasterGrid raster(const PolyExtension& ext, std::vector<RegionSpec> specs,
                  const Window& window, int nx, int ny) {
    if (nx <= 0 || ny <= 0) throw std::invalid_argument("raster resolution must be positive");
    RasterGrid grid;
    grid.window = window;
    grid.nx = nx;
    grid.ny = ny;
    grid.kind = specs.empty() ? RegionKind::gershgorin : specs.front().kind;
    grid.specs = std::move(specs);
    grid.spec_masks.assign(grid.specs.size(),
                           std::vector<std::uint8_t>(static_cast<size_t>(nx) * ny, 0));
    grid.union_mask.assign(static_cast<size_t>(nx) * ny, 0);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const cplx z = grid.cell_center(ix, iy);
            const size_t cell = static_cast<size_t>(iy) * nx + ix;
            for (size_t s = 0; s < grid.specs.size(); ++s) {
                if (member(ext, grid.specs[s], z)) {
                    grid.spec_masks[s][cell] = 1;
                    grid.union_mask[cell] = 1;
                }
            }
        }
    }
    return grid;
}

RasterGrid raster(const PolyExtension& ext, RegionKind kind, const Window& window, int nx,
                  int ny) {
    std::vector<RegionSpec> specs = region_specs(ext, kind);
    if (specs.empty() && kind == RegionKind::brauer)
        specs = region_specs(ext, RegionKind::gershgorin);
    RasterGrid grid = raster(ext, std::move(specs), window, nx, ny);
    grid.kind = kind;
    return grid;
}

double outer_radius(const PolyExtension& ext) {
    double R = 1.0;
    for (int i = 0; i < ext.n; ++i) {
        const Poly& gap = ext.diag_gap[i];
        const int d = gap.degree();
        double S = coeff_abs_sum(gap, d);
        for (int j = 0; j < ext.n; ++j) {
            if (j == i) continue;
            if (ext.entry[i][j].degree() >= d)
                throw std::domain_error(
                    "row " + std::to_string(i + 1) +
                    " has an off-diagonal weight of non-negative relative degree; "
                    "the region may be unbounded, provide an explicit window");
            S += coeff_abs_sum(ext.entry[i][j]);
        }
        R = std::max(R, 1.0 + S / std::abs(gap.leading()));
    }
    return R;
}

Window auto_window(const PolyExtension& ext) {
    const double R = outer_radius(ext) * 1.05;
    return Window{-R, R, -R, R};
}

ImprovementReport verify_improvement(const WeightedDigraph& g, const std::vector<int>& keep,
                                     RegionKind kind, int resolution) {
    const ReductionResult red = reduce_over(g, keep);
    const PolyExtension ext_g = poly_extension(g);
    const PolyExtension ext_r = poly_extension(red.graph);
    const double R = std::max(outer_radius(ext_g), outer_radius(ext_r)) * 1.05;
    ImprovementReport rep;
    rep.window = Window{-R, R, -R, R};
    rep.nx = rep.ny = resolution;
    const RasterGrid big = raster(ext_g, kind, rep.window, resolution, resolution);
    const RasterGrid small = raster(ext_r, kind, rep.window, resolution, resolution);
    for (size_t c = 0; c < big.union_mask.size(); ++c)
        if (small.union_mask[c] && !big.union_mask[c]) ++rep.violating_cells;
    rep.ok = rep.violating_cells == 0;
    return rep;
}

namespace {

/// Interior anchor for row i: the fixed point z = M_ii(z) nearest the
/// weight's value at infinity (for a constant weight this is the classical
/// disc centre).
cplx row_center(const WeightedDigraph& g, const PolyExtension& ext, int i) {
    const Rational& w = g.weight(i, i);
    cplx at_inf = 0.0;
    if (!w.is_zero() && w.num().degree() == w.den().degree())
        at_inf = w.num().leading() / w.den().leading();
    std::vector<cplx> roots = poly_roots(ext.diag_gap[i]);
    if (roots.empty()) return at_inf;
    cplx best = roots.front();
    for (const cplx& r : roots)
        if (std::abs(r - at_inf) < std::abs(best - at_inf)) best = r;
    return best;
}

/// Largest t in [0, t_max] with member(c + t*dir), found by a downward
/// coarse scan followed by bisection.  Returns -1 when no point on the ray
/// is a member.
double ray_exit(const PolyExtension& ext, const RegionSpec& spec, cplx c, cplx dir,
                double t_max, double refine) {
    constexpr int kCoarse = 2048;
    int hit = -1;
    for (int s = kCoarse; s >= 0; --s) {
        const double t = t_max * s / kCoarse;
        if (member(ext, spec, c + t * dir)) {
            hit = s;
            break;
        }
    }
    if (hit < 0) return -1.0;
    if (hit == kCoarse) return t_max;
    double lo = t_max * hit / kCoarse;
    double hi = t_max * (hit + 1) / kCoarse;
    while (hi - lo > refine) {
        const double mid = 0.5 * (lo + hi);
        if (member(ext, spec, c + mid * dir))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

BoundaryReport boundary_strictness(const WeightedDigraph& g, const std::vector<int>& keep,
                                   int samples) {
    const ReductionResult red = reduce_over(g, keep);
    const PolyExtension ext_g = poly_extension(g);
    const PolyExtension ext_r = poly_extension(red.graph);
    std::vector<char> kept(g.size(), 0);
    for (int v : keep) kept[v] = 1;
    std::vector<int> removed;
    for (int v = 0; v < g.size(); ++v)
        if (!kept[v]) removed.push_back(v);
    BoundaryReport rep;
    if (removed.empty() || samples <= 0) return rep;
    const double R = outer_radius(ext_g);
    const int rays = std::max(64, (samples + static_cast<int>(removed.size()) - 1) /
                                      static_cast<int>(removed.size()));
    const std::vector<RegionSpec> rows = region_specs(ext_g, RegionKind::gershgorin);
    for (int i : removed) {
        const cplx c = row_center(g, ext_g, i);
        for (int k = 0; k < rays; ++k) {
            const double theta = 2.0 * M_PI * k / rays;
            const cplx dir{std::cos(theta), std::sin(theta)};
            const double t = ray_exit(ext_g, rows[i], c, dir, R + std::abs(c), 1e-6);
            if (t < 0) continue;
            const cplx b = c + t * dir;
            bool exposed = true;
            for (int j = 0; j < g.size() && exposed; ++j)
                if (j != i && member(ext_g, rows[j], b)) exposed = false;
            if (!exposed) continue;
            ++rep.sampled;
            if (!member_union(ext_r, RegionKind::gershgorin, b)) ++rep.excluded;
        }
    }
    rep.fraction_excluded = rep.sampled ? static_cast<double>(rep.excluded) / rep.sampled : 0.0;
    return rep;
}

double max_abs_over_union(const PolyExtension& ext, RegionKind kind, int rays, double refine) {
    const double R = outer_radius(ext);
    std::vector<RegionSpec> specs = region_specs(ext, kind);
    if (specs.empty() && kind == RegionKind::brauer)
        specs = region_specs(ext, RegionKind::gershgorin);
    constexpr int kCoarse = 2048;
    double best = 0.0;
    bool any = false;
    for (int k = 0; k < rays; ++k) {
        const double theta = 2.0 * M_PI * k / rays;
        const cplx dir{std::cos(theta), std::sin(theta)};
        int hit = -1;
        for (int s = kCoarse; s >= 0; --s) {
            const cplx z = (R * s / kCoarse) * dir;
            bool m = false;
            for (const RegionSpec& spec : specs)
                if (member(ext, spec, z)) {
                    m = true;
                    break;
                }
            if (m) {
                hit = s;
                break;
            }
        }
        if (hit < 0) continue;
        any = true;
        double lo = R * hit / kCoarse;
        double hi = hit < kCoarse ? R * (hit + 1) / kCoarse : lo;
        while (hi - lo > refine) {
            const double mid = 0.5 * (lo + hi);
            bool m = false;
            for (const RegionSpec& spec : specs)
                if (member(ext, spec, mid * dir)) {
                    m = true;
                    break;
                }
            if (m)
                lo = mid;
            else
                hi = mid;
        }
        // The outer boundary along this ray lies in [lo, hi]; report the
        // outer end so the result never undercuts the true supremum.
        best = std::max(best, hi);
    }
    // Degenerate pieces (a row with no off-diagonal entries, or a weak
    // singleton) collapse to the roots of the diagonal gap; rays can pass
    // between such points, so test the roots directly.
    for (int i = 0; i < ext.n; ++i) {
        if (ext.diag_gap[i].degree() < 1) continue;
        for (const cplx& z : poly_roots(ext.diag_gap[i])) {
            for (const RegionSpec& spec : specs)
                if (member(ext, spec, z)) {
                    best = std::max(best, std::abs(z));
                    any = true;
                    break;
                }
        }
    }
    return any ? best : 0.0;
}

}  // namespace isospec
