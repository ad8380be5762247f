// SPDX-License-Identifier: MIT

#include "isospec/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace isospec {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Detects a directed cycle in the loop-stripped subgraph induced by `verts`.
bool induced_subgraph_has_cycle(const WeightedDigraph& g, const std::vector<int>& verts,
                                std::vector<int>* witness) {
    std::vector<int> state(g.size(), -1);  // -1 absent, 0 unvisited, 1 open, 2 done
    for (int v : verts)
        state[v] = 0;
    std::vector<int> stack_path;
    std::function<bool(int)> dfs = [&](int v) -> bool {
        state[v] = 1;
        stack_path.push_back(v);
        for (int j : verts) {
            if (j == v || !g.has_edge(v, j))
                continue;
            if (state[j] == 1) {
                if (witness) {
                    auto it = std::find(stack_path.begin(), stack_path.end(), j);
                    witness->assign(it, stack_path.end());
                }
                return true;
            }
            if (state[j] == 0 && dfs(j))
                return true;
        }
        state[v] = 2;
        stack_path.pop_back();
        return false;
    };
    for (int v : verts)
        if (state[v] == 0 && dfs(v))
            return true;
    return false;
}

std::string label(int v) {
    return "v" + std::to_string(v + 1);
}

void add_exceptional(ReductionResult& r, const Poly& defining) {
    if (defining.degree() < 1) {
        if (!defining.is_zero())
            return;  // nonzero constant: no roots
        throw std::logic_error("exceptional polynomial is identically zero");
    }
    bool known = false;
    for (const Poly& p : r.exceptional_polys)
        if (Poly::approx_equal(p.monic(), defining.monic(), 1e-12))
            known = true;
    if (!known)
        r.exceptional_polys.push_back(defining);
    for (cplx root : poly_roots(defining)) {
        bool dup = false;
        for (cplx have : r.exceptional)
            if (std::abs(have - root) <= 1e-9 * (1.0 + std::abs(root)))
                dup = true;
        if (!dup)
            r.exceptional.push_back(root);
    }
}

/// Exceptional contribution of removing a vertex with loop weight p/q:
/// the roots of p - z*q and of q.
void record_removed_vertex(ReductionResult& r, const Rational& loop) {
    add_exceptional(r, loop.num() - Poly::variable() * loop.den());
    if (loop.den().degree() >= 1)
        add_exceptional(r, loop.den());
}

void sort_exceptional(ReductionResult& r) {
    std::sort(r.exceptional.begin(), r.exceptional.end(), [](cplx a, cplx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

}  // namespace

StructuralSet validate_structural(const WeightedDigraph& g, const std::vector<int>& keep) {
    StructuralSet s;
    s.keep = sorted_unique(keep);
    if (s.keep.empty())
        throw NotStructuralError("keep set must be nonempty");
    for (int v : s.keep)
        if (v < 0 || v >= g.size())
            throw NotStructuralError("keep set references vertex " + label(v) +
                                     " outside the graph");
    std::vector<bool> kept(g.size(), false);
    for (int v : s.keep)
        kept[v] = true;
    for (int v = 0; v < g.size(); ++v)
        if (!kept[v])
            s.removed.push_back(v);

    for (int v : s.removed)
        if (g.weight(v, v).is_variable())
            throw NotStructuralError("removed vertex " + label(v) +
                                     " has loop weight identically z");
    std::vector<int> witness;
    if (induced_subgraph_has_cycle(g, s.removed, &witness)) {
        std::string msg = "removed set induces a cycle:";
        for (int v : witness)
            msg += " " + label(v);
        throw NotStructuralError(msg);
    }
    return s;
}

std::vector<Branch> branches(const WeightedDigraph& g, const StructuralSet& s, int i, int j) {
    if (std::find(s.keep.begin(), s.keep.end(), i) == s.keep.end() ||
        std::find(s.keep.begin(), s.keep.end(), j) == s.keep.end())
        throw std::invalid_argument("branch endpoints must be kept vertices");
    std::vector<bool> removed(g.size(), false);
    for (int v : s.removed)
        removed[v] = true;

    std::vector<Branch> out;
    // Depth-first over removed interiors; finite because the removed
    // subgraph is acyclic once loops are stripped.
    std::vector<int> path{i};
    std::vector<bool> used(g.size(), false);
    std::function<void(int)> dfs = [&](int v) {
        if (g.has_edge(v, j)) {
            std::vector<int> verts = path;
            verts.push_back(j);
            out.push_back(Branch{std::move(verts)});
        }
        for (int u = 0; u < g.size(); ++u) {
            if (!removed[u] || used[u] || !g.has_edge(v, u))
                continue;
            used[u] = true;
            path.push_back(u);
            dfs(u);
            path.pop_back();
            used[u] = false;
        }
    };
    dfs(i);
    return out;
}

Rational branch_product(const WeightedDigraph& g, const Branch& b) {
    const auto& v = b.vertices;
    if (v.size() < 2)
        throw std::invalid_argument("branch needs at least two vertices");
    Rational prod = g.weight(v[0], v[1]);
    for (size_t k = 1; k + 1 < v.size(); ++k) {
        const Rational& loop = g.weight(v[k], v[k]);
        Rational denom = Rational::variable() - loop;
        if (denom.is_zero())
            throw std::domain_error("interior vertex has loop weight identically z");
        prod = prod * (g.weight(v[k], v[k + 1]) / denom);
    }
    return prod;
}

ReductionResult reduce_over(const WeightedDigraph& g, const std::vector<int>& keep) {
    StructuralSet s = validate_structural(g, keep);
    ReductionResult r;
    const int m = static_cast<int>(s.keep.size());
    r.graph = WeightedDigraph(m);
    r.kept = s.keep;
    r.trace.push_back(s.keep);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Rational sum;
            for (const Branch& br : branches(g, s, s.keep[a], s.keep[b]))
                sum = sum + branch_product(g, br);
            r.graph.set_weight(a, b, std::move(sum));
        }
    for (int v : s.removed)
        record_removed_vertex(r, g.weight(v, v));
    sort_exceptional(r);
    return r;
}

ReductionResult eliminate_vertex(const WeightedDigraph& g, int v) {
    if (v < 0 || v >= g.size())
        throw std::out_of_range("vertex index out of range");
    if (g.size() < 2)
        throw std::invalid_argument("cannot eliminate the last vertex");
    if (g.weight(v, v).is_variable())
        throw NotStructuralError("vertex " + label(v) + " has loop weight identically z");

    ReductionResult r;
    const int n = g.size();
    r.graph = WeightedDigraph(n - 1);
    for (int u = 0; u < n; ++u)
        if (u != v)
            r.kept.push_back(u);
    r.trace.push_back(r.kept);

    Rational gap = Rational::variable() - g.weight(v, v);
    for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) {
            int i = r.kept[a], j = r.kept[b];
            Rational w = g.weight(i, j);
            if (g.has_edge(i, v) && g.has_edge(v, j))
                w = w + g.weight(i, v) * g.weight(v, j) / gap;
            r.graph.set_weight(a, b, std::move(w));
        }
    record_removed_vertex(r, g.weight(v, v));
    sort_exceptional(r);
    return r;
}

namespace {

/// Applies eliminate_vertex repeatedly to reach `keep`, picking loop-free
/// vertices first and then minimal total degree.  `ids` tracks original
/// vertex ids for the rows of `cur`.
ReductionResult eliminate_down_to(WeightedDigraph cur, std::vector<int> ids,
                                  const std::vector<int>& keep) {
    ReductionResult acc;
    auto is_kept = [&keep](int orig) {
        return std::binary_search(keep.begin(), keep.end(), orig);
    };
    while (static_cast<int>(ids.size()) > static_cast<int>(keep.size())) {
        int best = -1;
        bool best_loopless = false;
        int best_degree = 0;
        for (int k = 0; k < static_cast<int>(ids.size()); ++k) {
            if (is_kept(ids[k]) || cur.weight(k, k).is_variable())
                continue;
            bool loopless = !cur.has_loop(k);
            int degree = 0;
            for (int j = 0; j < cur.size(); ++j)
                degree += (j != k) * (cur.has_edge(k, j) + cur.has_edge(j, k));
            if (best == -1 || (loopless && !best_loopless) ||
                (loopless == best_loopless && degree < best_degree)) {
                best = k;
                best_loopless = loopless;
                best_degree = degree;
            }
        }
        if (best == -1)
            throw NotStructuralError("no removable vertex: every remaining candidate "
                                     "has loop weight identically z");
        ReductionResult step = eliminate_vertex(cur, best);
        for (const Poly& p : step.exceptional_polys)
            acc.exceptional_polys.push_back(p);  // re-deduplicated below
        cur = std::move(step.graph);
        ids.erase(ids.begin() + best);
        acc.trace.push_back(ids);
    }
    acc.graph = std::move(cur);
    acc.kept = std::move(ids);
    // Rebuild the deduplicated value list from the collected polynomials.
    std::vector<Poly> polys = std::move(acc.exceptional_polys);
    acc.exceptional_polys.clear();
    ReductionResult tmp;
    for (const Poly& p : polys)
        add_exceptional(tmp, p);
    acc.exceptional_polys = std::move(tmp.exceptional_polys);
    acc.exceptional = std::move(tmp.exceptional);
    sort_exceptional(acc);
    return acc;
}

}  // namespace

ReductionResult reduce_sequence(const WeightedDigraph& g,
                                const std::vector<std::vector<int>>& keeps) {
    if (keeps.empty())
        throw std::invalid_argument("empty reduction sequence");
    ReductionResult acc;
    WeightedDigraph cur = g;
    std::vector<int> ids(g.size());
    for (int i = 0; i < g.size(); ++i)
        ids[i] = i;
    for (const std::vector<int>& keep_orig : keeps) {
        std::vector<int> keep = sorted_unique(keep_orig);
        std::vector<int> local;
        for (int v : keep) {
            auto it = std::find(ids.begin(), ids.end(), v);
            if (it == ids.end())
                throw NotStructuralError("sequence keep sets must be nested: vertex v" +
                                         std::to_string(v + 1) + " was already removed");
            local.push_back(static_cast<int>(it - ids.begin()));
        }
        ReductionResult step = reduce_over(cur, local);
        cur = std::move(step.graph);
        std::vector<int> new_ids;
        for (int k : step.kept)
            new_ids.push_back(ids[k]);
        ids = std::move(new_ids);
        acc.trace.push_back(ids);
        for (const Poly& p : step.exceptional_polys)
            add_exceptional(acc, p);
    }
    acc.graph = std::move(cur);
    acc.kept = std::move(ids);
    sort_exceptional(acc);
    return acc;
}

ReductionResult reduce_closure(const WeightedDigraph& g, const std::vector<int>& keep) {
    if (!g.is_pi_class())
        throw std::domain_error("closure reduction requires all weights to have "
                                "relative degree <= 0");
    std::vector<int> k = sorted_unique(keep);
    if (k.empty())
        throw NotStructuralError("keep set must be nonempty");
    for (int v : k)
        if (v < 0 || v >= g.size())
            throw NotStructuralError("keep set references a vertex outside the graph");
    std::vector<int> ids(g.size());
    for (int i = 0; i < g.size(); ++i)
        ids[i] = i;
    return eliminate_down_to(g, ids, k);
}

}  // namespace isospec
