// SPDX-License-Identifier: MIT

#include "isospec/graph.hpp"

#include <algorithm>
#include <functional>

namespace isospec {

WeightedDigraph WeightedDigraph::from_matrix(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    WeightedDigraph g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("adjacency matrix must be square");
        for (int j = 0; j < n; ++j)
            g.set_weight(i, j, rows[i][j]);
    }
    return g;
}

int WeightedDigraph::edge_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (has_edge(i, j))
                ++c;
    return c;
}

bool WeightedDigraph::is_pi_class() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Rational& w = weight(i, j);
            if (!w.is_zero() && w.pi() > 0)
                return false;
        }
    return true;
}

bool WeightedDigraph::is_simple() const {
    for (int i = 0; i < n_; ++i) {
        if (has_loop(i))
            return false;
        for (int j = 0; j < n_; ++j) {
            const Rational& w = weight(i, j);
            if (w.is_zero())
                continue;
            if (!Rational::approx_equal(w, Rational::one()) ||
                !Rational::approx_equal(weight(j, i), Rational::one()))
                return false;
        }
    }
    return true;
}

WeightedDigraph normalize_input(int n, const std::vector<RawEdge>& edges, bool symmetrize) {
    WeightedDigraph g(n);
    auto add = [&g](int i, int j, const Rational& w) {
        g.set_weight(i, j, g.weight(i, j) + w);  // parallel edges merge by summing
    };
    for (const RawEdge& e : edges) {
        add(e.i, e.j, e.weight);
        if (symmetrize && e.i != e.j)
            add(e.j, e.i, e.weight);
    }
    return g;
}

SccDecomposition scc(const WeightedDigraph& g) {
    const int n = g.size();
    SccDecomposition out;
    out.component_of.assign(n, -1);

    // Iterative Tarjan.  Components pop in reverse topological order of the
    // condensation, which is exactly the block-lower-triangular labeling.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        int next_child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            bool descended = false;
            for (int j = f.next_child; j < n; ++j) {
                if (!g.has_edge(f.v, j) || j == f.v)
                    continue;
                f.next_child = j + 1;
                if (index[j] == -1) {
                    index[j] = low[j] = next_index++;
                    stack.push_back(j);
                    on_stack[j] = true;
                    call.push_back({j, 0});
                    descended = true;
                    break;
                }
                if (on_stack[j])
                    low[f.v] = std::min(low[f.v], index[j]);
            }
            if (descended)
                continue;
            const int v = f.v;
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component_of[w] = static_cast<int>(out.components.size());
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.components.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j) && out.component_of[i] == out.component_of[j])
                out.scc_edges.emplace_back(i, j);
    return out;
}

namespace {

/// Enumerates simple cycles with minimum vertex `start`, using only vertices
/// >= start inside start's strongly connected component.
void cycles_from(const WeightedDigraph& g, const SccDecomposition& comp, int start,
                 std::vector<int>& path, std::vector<bool>& on_path,
                 std::vector<Cycle>& out, size_t cap) {
    int v = path.back();
    for (int j = start; j < g.size(); ++j) {
        if (j == v || !g.has_edge(v, j))
            continue;
        if (comp.component_of[j] != comp.component_of[start])
            continue;
        if (j == start) {
            if (path.size() >= 2) {
                if (out.size() >= cap)
                    throw CycleOverflowError(cap);
                out.push_back(Cycle{path, false});
            }
            continue;
        }
        if (on_path[j])
            continue;
        path.push_back(j);
        on_path[j] = true;
        cycles_from(g, comp, start, path, on_path, out, cap);
        on_path[j] = false;
        path.pop_back();
    }
}

}  // namespace

std::vector<Cycle> cycles(const WeightedDigraph& g, size_t cap) {
    const int n = g.size();
    SccDecomposition comp = scc(g);
    std::vector<Cycle> strong;
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        std::vector<bool> on_path(n, false);
        on_path[s] = true;
        cycles_from(g, comp, s, path, on_path, strong, cap);
    }
    std::sort(strong.begin(), strong.end(), [](const Cycle& a, const Cycle& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });

    std::vector<bool> on_strong(n, false);
    for (const Cycle& c : strong)
        for (int v : c.vertices)
            on_strong[v] = true;
    for (int v = 0; v < n; ++v)
        if (!on_strong[v])
            strong.push_back(Cycle{{v}, true});
    return strong;
}

CycleNeighbourhood cycle_neighbourhood(const WeightedDigraph& g, int v) {
    if (v < 0 || v >= g.size())
        throw std::out_of_range("vertex index out of range");
    CycleNeighbourhood out;
    SccDecomposition comp = scc(g);
    for (const Cycle& c : cycles(g)) {
        auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
        if (it == c.vertices.end()) {
            // Adjacent if some cycle vertex has an intra-component edge into v.
            for (int u : c.vertices)
                if (comp.edge_in_scc(g, u, v)) {
                    out.adjacent.push_back(c);
                    break;
                }
            continue;
        }
        out.through.push_back(c);
        const size_t m = c.vertices.size();
        if (m == 1) {
            out.stable.push_back(c);  // weak singleton, always stable
            continue;
        }
        // Rotate so the traversal starts at v, preserving edge order.
        std::vector<int> rot(c.vertices.begin(), c.vertices.end());
        std::rotate(rot.begin(), rot.begin() + (it - c.vertices.begin()), rot.end());
        bool ok = true;
        // No edge from an interior cycle vertex back to v ...
        for (size_t j = 1; j + 1 < m && ok; ++j)
            if (g.has_edge(rot[j], v))
                ok = false;
        // ... and no intra-component edge from the last cycle vertex to any
        // vertex outside the cycle.
        if (ok) {
            std::vector<bool> in_cycle(g.size(), false);
            for (int u : rot)
                in_cycle[u] = true;
            for (int k = 0; k < g.size() && ok; ++k)
                if (!in_cycle[k] && comp.edge_in_scc(g, rot[m - 1], k))
                    ok = false;
        }
        if (ok)
            out.stable.push_back(c);
    }
    return out;
}

}  // namespace isospec
