#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "graph.hpp"
#include "separators.hpp"

namespace msep {

/// Chordality via greedy simplicial elimination: a graph is chordal iff
/// repeatedly deleting a vertex whose remaining neighborhood is a clique
/// empties it.
inline bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet alive = VertexSet::full(n);
    for (int round = 0; round < n; ++round) {
        int victim = -1;
        for (int v = 0; v < n && victim < 0; ++v) {
            if (!alive.contains(v)) continue;
            VertexSet nb = g.neighbors(v) & alive;
            bool simplicial = true;
            nb.for_each([&](int u) {
                if (!simplicial) return;
                VertexSet rest = nb;
                rest.erase(u);
                if (!rest.is_subset_of(g.neighbors(u))) simplicial = false;
            });
            if (simplicial) victim = v;
        }
        if (victim < 0) return false;
        alive.erase(victim);
    }
    return true;
}

/// All maximal cliques (Bron-Kerbosch with pivoting), canonical order.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<VertexSet> out;
    VertexSet r(n);
    auto expand = [&](auto&& self, VertexSet p, VertexSet x) -> void {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // pivot: the candidate dominating the most of P
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            int deg = (p & g.neighbors(u)).size();
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        });
        VertexSet ext = pivot >= 0 ? p - g.neighbors(pivot) : p;
        ext.for_each([&](int v) {
            if (!p.contains(v)) return;  // moved to X by an earlier iteration
            r.insert(v);
            self(self, p & g.neighbors(v), x & g.neighbors(v));
            r.erase(v);
            p.erase(v);
            x.insert(v);
        });
    };
    expand(expand, VertexSet::full(n), VertexSet(n));
    std::sort(out.begin(), out.end());
    return out;
}

struct Triangulation {
    Graph base;
    std::vector<Edge> fill;  // sorted, disjoint from E(base)

    Graph filled() const {
        Graph h = base;
        for (auto [u, v] : fill) h.add_edge(u, v);
        return h;
    }
};

namespace detail {

inline Graph with_fill(const Graph& g, const std::vector<Edge>& nonedges, std::uint32_t mask) {
    Graph h = g;
    for (std::size_t i = 0; i < nonedges.size(); ++i)
        if (mask >> i & 1) h.add_edge(nonedges[i].first, nonedges[i].second);
    return h;
}

}  // namespace detail

/// All chordal supergraphs of G whose fill is minimal under the subset
/// relation, by scanning every fill subset over the non-edges (n <= 8).
/// Minimality is decided by single-fill-edge removal, which is exact for
/// triangulations; at n <= 6 the full subset check is run as well.
inline std::vector<Triangulation> minimal_triangulations(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("minimal_triangulations: n = " + std::to_string(n) +
                                    " exceeds the fill-subset scan cap of 8");
    std::vector<Edge> nonedges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) nonedges.emplace_back(u, v);

    std::vector<std::uint32_t> chordal_masks;
    std::set<std::uint32_t> chordal_lookup;
    const std::uint32_t mask_end = std::uint32_t{1} << nonedges.size();  // <= 2^28 at n = 8
    for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
        if (is_chordal(detail::with_fill(g, nonedges, mask))) {
            chordal_masks.push_back(mask);
            chordal_lookup.insert(mask);
        }
    }

    std::vector<Triangulation> out;
    for (std::uint32_t mask : chordal_masks) {
        bool minimal = true;
        for (std::size_t i = 0; i < nonedges.size() && minimal; ++i)
            if (mask >> i & 1 && chordal_lookup.count(mask ^ (1u << i))) minimal = false;
        if (minimal && n <= 6) {
            for (std::uint32_t other : chordal_masks) {
                if (other != mask && (other & mask) == other) {
                    minimal = false;
                    break;
                }
            }
        }
        if (!minimal) continue;
        Triangulation t{g, {}};
        for (std::size_t i = 0; i < nonedges.size(); ++i)
            if (mask >> i & 1) t.fill.push_back(nonedges[i]);
        out.push_back(std::move(t));
    }
    return out;
}

enum class PmcSource { definitional, characterization };

struct PmcSet {
    std::vector<VertexSet> members;  // canonical order
    PmcSource source = PmcSource::definitional;
};

/// Union of maximal cliques over all minimal triangulations (n <= 8).
inline PmcSet pmcs_definitional(const Graph& g) {
    std::set<VertexSet> members;
    for (const Triangulation& t : minimal_triangulations(g))
        for (const VertexSet& clique : maximal_cliques(t.filled())) members.insert(clique);
    PmcSet out;
    out.source = PmcSource::definitional;
    out.members.assign(members.begin(), members.end());
    return out;
}

/// Potential-maximal-clique test: no component of G-Omega has neighborhood
/// Omega, and every non-adjacent pair in Omega shares the neighborhood of
/// some component of G-Omega.
inline bool is_pmc(const Graph& g, const VertexSet& omega) {
    check_bound_to(g, omega, "is_pmc");
    if (omega.empty()) throw std::invalid_argument("is_pmc: empty vertex set");

    std::vector<VertexSet> comp_nbrs;
    for (const VertexSet& comp : components_within(g, omega.complement())) {
        VertexSet nb = neighborhood(g, comp);
        if (nb == omega) return false;  // full component: Omega is a separator here
        comp_nbrs.push_back(std::move(nb));
    }

    std::vector<int> members = omega.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int u = members[i], v = members[j];
            if (g.has_edge(u, v)) continue;
            bool covered = false;
            for (const VertexSet& nb : comp_nbrs) {
                if (nb.contains(u) && nb.contains(v)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

/// All PMCs by filtering every nonempty subset through is_pmc.
inline PmcSet pmcs_by_characterization(const Graph& g, int max_n = kDefaultBruteForceCap) {
    detail::check_brute_cap(g, max_n, "pmcs_by_characterization");
    const int n = g.vertex_count();
    PmcSet out;
    out.source = PmcSource::characterization;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet omega = detail::set_from_mask(n, mask);
        if (is_pmc(g, omega)) out.members.push_back(std::move(omega));
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

struct CorollaryReport {
    std::uint64_t pmc_count = 0;
    std::uint64_t sep_count = 0;
    bool holds = false;
};

/// Checks pmc(G) >= sep(G)/n with both counts taken from the subset oracles.
inline CorollaryReport check_corollary(const Graph& g, int max_n = kDefaultBruteForceCap) {
    CorollaryReport rep;
    rep.pmc_count = pmcs_by_characterization(g, max_n).members.size();
    rep.sep_count = brute_force_minimal_separators(g, max_n).size();
    rep.holds = rep.pmc_count * static_cast<std::uint64_t>(std::max(g.vertex_count(), 1)) >=
                rep.sep_count;
    return rep;
}

}  // namespace msep
