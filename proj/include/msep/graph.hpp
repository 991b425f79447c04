#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace msep {

using Edge = std::pair<int, int>;

/// Undirected simple graph over dense vertex ids 0..n-1.
///
/// Adjacency is symmetric, self-loops are rejected, duplicate edges
/// collapse. Vertices may carry optional string labels (generators use
/// them to mark distinguished vertices). The library treats graphs as
/// immutable values: every structural operation returns a new graph.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }

    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
        ++m_;
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).size(); }

    /// All edges as (u, v) pairs with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    bool has_labels() const { return !labels_.empty(); }

    const std::string& label(int v) const {
        check_vertex(v);
        static const std::string empty;
        if (labels_.empty()) return empty;
        return labels_[static_cast<std::size_t>(v)];
    }

    void set_label(int v, std::string text) {
        check_vertex(v);
        if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
        labels_[static_cast<std::size_t>(v)] = std::move(text);
    }

    /// Vertex carrying the given label, or -1.
    int vertex_by_label(const std::string& text) const {
        for (std::size_t v = 0; v < labels_.size(); ++v)
            if (labels_[v] == text) return static_cast<int>(v);
        return -1;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_ && labels_ == o.labels_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(n_ - 1));
    }
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline void check_bound_to(const Graph& g, const VertexSet& x, const char* what) {
    if (x.universe() != g.vertex_count())
        throw std::invalid_argument(std::string(what) + ": vertex set universe " +
                                    std::to_string(x.universe()) + " does not match graph on " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

/// N(X): vertices outside X with a neighbor in X.
inline VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    check_bound_to(g, x, "neighborhood");
    VertexSet out(g.vertex_count());
    x.for_each([&](int v) { out |= g.neighbors(v); });
    out -= x;
    return out;
}

/// Connected components of the subgraph induced by `alive`, in original ids,
/// sorted by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive) {
    check_bound_to(g, alive, "components_within");
    std::vector<VertexSet> comps;
    VertexSet unseen = alive;
    for (int seed = unseen.lowest(); seed >= 0; seed = unseen.lowest()) {
        VertexSet comp(g.vertex_count());
        comp.insert(seed);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(g.vertex_count());
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        unseen -= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, VertexSet::full(g.vertex_count()));
}

struct VertexRemoval {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for removed vertices
};

/// Induced subgraph on V \ X, re-indexed; the old->new map is part of the result.
inline VertexRemoval remove_vertices(const Graph& g, const VertexSet& x) {
    check_bound_to(g, x, "remove_vertices");
    int n = g.vertex_count();
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!x.contains(v)) old_to_new[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    for (int u = 0; u < n; ++u) {
        int nu = old_to_new[static_cast<std::size_t>(u)];
        if (nu < 0) continue;
        g.neighbors(u).for_each([&](int v) {
            int nv = old_to_new[static_cast<std::size_t>(v)];
            if (nv > nu) out.add_edge(nu, nv);
        });
        if (g.has_labels() && !g.label(u).empty()) out.set_label(nu, g.label(u));
    }
    return {std::move(out), std::move(old_to_new)};
}

/// G/uv: u becomes adjacent to N({u,v}), v is removed, ids above v shift down.
inline Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: " + std::to_string(u) + "-" +
                                    std::to_string(v) + " is not an edge");
    int n = g.vertex_count();
    VertexSet uv = VertexSet::of(n, {u, v});
    VertexSet merged = neighborhood(g, uv);
    auto new_id = [v](int w) { return w < v ? w : w - 1; };
    Graph out(n - 1);
    for (int a = 0; a < n; ++a) {
        if (a == v) continue;
        g.neighbors(a).for_each([&](int b) {
            if (b == v || b == u || a == u) return;
            if (new_id(a) < new_id(b)) out.add_edge(new_id(a), new_id(b));
        });
        if (g.has_labels() && !g.label(a).empty()) out.set_label(new_id(a), g.label(a));
    }
    merged.for_each([&](int w) { out.add_edge(new_id(u), new_id(w)); });
    return out;
}

}  // namespace msep
