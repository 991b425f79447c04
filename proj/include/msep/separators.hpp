#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <thread>
#include <vector>

#include "graph.hpp"

namespace msep {

/// Base of the branching-tree leaf bound: the golden ratio (1+sqrt(5))/2.
inline constexpr double kGoldenRatio = 1.6180339887498948482;

/// Default vertex cap for the 2^n subset scans.
inline constexpr int kDefaultBruteForceCap = 22;

/// True iff a and b lie in different components of G-S. The empty set
/// separates a pair that is already disconnected in G.
inline bool is_ab_separator(const Graph& g, const VertexSet& s, int a, int b) {
    check_bound_to(g, s, "is_ab_separator");
    if (a == b) throw std::invalid_argument("is_ab_separator: a == b");
    if (s.contains(a) || s.contains(b))
        throw std::invalid_argument("is_ab_separator: endpoint inside separator");
    VertexSet alive = s.complement();
    for (const VertexSet& comp : components_within(g, alive)) {
        if (comp.contains(a)) return !comp.contains(b);
        if (comp.contains(b)) return !comp.contains(a);
    }
    return false;  // unreachable for valid inputs
}

/// Minimal (a,b)-separator test via full components: both the component of a
/// and the component of b in G-S must have neighborhood exactly S.
inline bool is_minimal_ab_separator(const Graph& g, const VertexSet& s, int a, int b) {
    check_bound_to(g, s, "is_minimal_ab_separator");
    if (a == b) throw std::invalid_argument("is_minimal_ab_separator: a == b");
    if (s.contains(a) || s.contains(b))
        throw std::invalid_argument("is_minimal_ab_separator: endpoint inside separator");
    VertexSet alive = s.complement();
    const VertexSet* comp_a = nullptr;
    const VertexSet* comp_b = nullptr;
    auto comps = components_within(g, alive);
    for (const VertexSet& comp : comps) {
        if (comp.contains(a)) comp_a = &comp;
        if (comp.contains(b)) comp_b = &comp;
    }
    if (comp_a == comp_b) return false;
    return neighborhood(g, *comp_a) == s && neighborhood(g, *comp_b) == s;
}

/// True iff at least two components of G-S have neighborhood exactly S.
inline bool is_minimal_separator(const Graph& g, const VertexSet& s) {
    check_bound_to(g, s, "is_minimal_separator");
    VertexSet alive = s.complement();
    int full = 0;
    for (const VertexSet& comp : components_within(g, alive))
        if (neighborhood(g, comp) == s && ++full >= 2) return true;
    return false;
}

namespace detail {

inline VertexSet set_from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.insert(v);
    return s;
}

inline void check_brute_cap(const Graph& g, int max_n, const char* what) {
    if (g.vertex_count() > max_n)
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                                    " vertices exceeds the cap of " + std::to_string(max_n));
}

}  // namespace detail

/// The defining oracle: scan all 2^n subsets.
inline std::vector<VertexSet> brute_force_minimal_separators(const Graph& g,
                                                             int max_n = kDefaultBruteForceCap) {
    detail::check_brute_cap(g, max_n, "brute_force_minimal_separators");
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = detail::set_from_mask(n, mask);
        if (is_minimal_separator(g, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VertexSet> brute_force_minimal_ab_separators(const Graph& g, int a, int b,
                                                                int max_n = kDefaultBruteForceCap) {
    detail::check_brute_cap(g, max_n, "brute_force_minimal_ab_separators");
    int n = g.vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::out_of_range("brute_force_minimal_ab_separators: endpoint out of range");
    if (a == b) throw std::invalid_argument("brute_force_minimal_ab_separators: a == b");
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (mask >> a & 1 || mask >> b & 1) continue;
        VertexSet s = detail::set_from_mask(n, mask);
        if (is_minimal_ab_separator(g, s, a, b)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A verified partition (A, S, B) of the vertices: A nonempty and connected,
/// S exactly the neighborhood of A, and |A| <= |B| - imbalance.
struct Separation {
    VertexSet a_side;
    VertexSet separator;
    VertexSet b_side;
    int imbalance = 0;
};

/// Build the partition induced by A (S = N(A), B = the rest) and validate the
/// Separation invariants against the graph.
inline Separation make_separation(const Graph& g, const VertexSet& a_side, int imbalance) {
    check_bound_to(g, a_side, "make_separation");
    if (a_side.empty()) throw std::invalid_argument("make_separation: A is empty");
    if (components_within(g, a_side).size() != 1)
        throw std::invalid_argument("make_separation: A is not connected");
    Separation sep{a_side, neighborhood(g, a_side), VertexSet(g.vertex_count()), imbalance};
    sep.b_side = a_side.complement();
    sep.b_side -= sep.separator;
    if (sep.a_side.size() > sep.b_side.size() - imbalance)
        throw std::invalid_argument("make_separation: |A| > |B| - " + std::to_string(imbalance));
    return sep;
}

enum class EnumerationMode { balanced, all };

struct EnumerationReport {
    std::vector<VertexSet> separators;  // deduplicated, canonical order
    std::uint64_t leaf_count = 0;
    std::uint64_t node_count = 0;
    std::vector<std::uint64_t> root_leaf_counts;  // indexed by root vertex
};

namespace detail {

/// Branching walk for one root: grow a connected set A around `root`, and at
/// each node commit the smallest frontier vertex u either to the separator
/// (sep branch) or to A (grow branch). A node whose frontier is fully
/// committed is a leaf with candidate separator S = N(A); `leaf_fn(A, S)`
/// decides what to keep.
///
/// `balanced` prunes nodes where A exceeds half of the uncommitted vertices
/// (2|A| > n - |S|); separators whose smallest full component is on the other
/// side are still found from roots inside that component. The sep branch
/// drops one unit of the measure n - |S| - 2(|A|-1) and the grow branch two,
/// so leaves per root stay within pow(kGoldenRatio, n).
///
/// `avoid` (when >= 0) kills any node whose frontier reaches that vertex,
/// restricting the walk to separators that keep `avoid` on the far side.
template <class LeafFn>
void branch_from_root(const Graph& g, int root, bool balanced, int avoid,
                      std::uint64_t& leaf_count, std::uint64_t& node_count, LeafFn&& leaf_fn) {
    const int n = g.vertex_count();
    VertexSet a_side(n), sep(n);
    a_side.insert(root);
    VertexSet frontier = g.neighbors(root);

    auto recurse = [&](auto&& self, const VertexSet& frontier_now) -> void {
        ++node_count;
        if (avoid >= 0 && frontier_now.contains(avoid)) return;
        if (balanced && 2 * a_side.size() > n - sep.size()) return;
        VertexSet undecided = frontier_now - sep;
        int u = undecided.lowest();
        if (u < 0) {
            ++leaf_count;
            leaf_fn(a_side, frontier_now);
            return;
        }
        sep.insert(u);
        self(self, frontier_now);
        sep.erase(u);

        a_side.insert(u);
        VertexSet grown = frontier_now | g.neighbors(u);
        grown -= a_side;
        self(self, grown);
        a_side.erase(u);
    };
    recurse(recurse, frontier);
}

struct RootResult {
    std::set<VertexSet> separators;
    std::uint64_t leaf_count = 0;
    std::uint64_t node_count = 0;
};

inline RootResult enumerate_from_root(const Graph& g, int root, bool balanced) {
    RootResult res;
    branch_from_root(g, root, balanced, /*avoid=*/-1, res.leaf_count, res.node_count,
                     [&](const VertexSet& a_side, const VertexSet& sep) {
                         VertexSet far_side = a_side.complement();
                         far_side -= sep;
                         if (far_side.empty()) return;
                         // A is one full component by construction; accept when the
                         // far side contributes another.
                         for (const VertexSet& comp : components_within(g, far_side)) {
                             if (neighborhood(g, comp) == sep) {
                                 res.separators.insert(sep);
                                 return;
                             }
                         }
                     });
    return res;
}

}  // namespace detail

/// Enumerate all minimal separators by branching from every root, merging the
/// per-root results. Both modes return exactly the brute-force set; balanced
/// mode additionally keeps the per-root leaf count within pow(kGoldenRatio, n).
/// Roots are processed concurrently when jobs > 1; the merge is deterministic.
inline EnumerationReport enumerate_minimal_separators(const Graph& g, EnumerationMode mode,
                                                      unsigned jobs = 1) {
    const int n = g.vertex_count();
    const bool balanced = mode == EnumerationMode::balanced;
    std::vector<detail::RootResult> per_root(static_cast<std::size_t>(n));

    if (jobs <= 1 || n <= 1) {
        for (int root = 0; root < n; ++root)
            per_root[static_cast<std::size_t>(root)] = detail::enumerate_from_root(g, root, balanced);
    } else {
        std::vector<std::thread> workers;
        unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(n));
        for (unsigned w = 0; w < count; ++w)
            workers.emplace_back([&, w] {
                for (int root = static_cast<int>(w); root < n; root += static_cast<int>(count))
                    per_root[static_cast<std::size_t>(root)] =
                        detail::enumerate_from_root(g, root, balanced);
            });
        for (auto& t : workers) t.join();
    }

    EnumerationReport report;
    report.root_leaf_counts.resize(static_cast<std::size_t>(n), 0);
    std::set<VertexSet> merged;
    for (int root = 0; root < n; ++root) {
        auto& rr = per_root[static_cast<std::size_t>(root)];
        report.leaf_count += rr.leaf_count;
        report.node_count += rr.node_count;
        report.root_leaf_counts[static_cast<std::size_t>(root)] = rr.leaf_count;
        merged.merge(rr.separators);
    }
    report.separators.assign(merged.begin(), merged.end());
    return report;
}

/// Targeted variant: enumerate the minimal (a,b)-separators by branching from
/// a alone, killing nodes whose frontier reaches b, and accepting a leaf iff
/// the component of b has neighborhood exactly S. No balance pruning.
inline EnumerationReport enumerate_minimal_ab_separators_report(const Graph& g, int a, int b) {
    if (a == b) throw std::invalid_argument("enumerate_minimal_ab_separators: a == b");
    const int n = g.vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::out_of_range("enumerate_minimal_ab_separators: endpoint out of range");

    EnumerationReport report;
    report.root_leaf_counts.resize(static_cast<std::size_t>(n), 0);
    std::set<VertexSet> found;
    detail::branch_from_root(g, a, /*balanced=*/false, /*avoid=*/b, report.leaf_count,
                             report.node_count, [&](const VertexSet& a_side, const VertexSet& sep) {
                                 VertexSet far_side = a_side.complement();
                                 far_side -= sep;
                                 for (const VertexSet& comp : components_within(g, far_side)) {
                                     if (!comp.contains(b)) continue;
                                     if (neighborhood(g, comp) == sep) found.insert(sep);
                                     return;
                                 }
                             });
    report.root_leaf_counts[static_cast<std::size_t>(a)] = report.leaf_count;
    report.separators.assign(found.begin(), found.end());
    return report;
}

inline std::vector<VertexSet> enumerate_minimal_ab_separators(const Graph& g, int a, int b) {
    return enumerate_minimal_ab_separators_report(g, a, b).separators;
}

struct MaxSepResult {
    std::uint64_t count = 0;
    Graph witness;
};

namespace detail {

/// Minimal-separator count for graphs of at most 22 vertices, adjacency given
/// as bitmask rows. Avoids the VertexSet machinery: this sits in the inner
/// loop of the exhaustive edge-mask search.
inline std::uint64_t count_minimal_separators_masks(const std::uint32_t* adj, int n) {
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s <= all; ++s) {
        std::uint32_t rest = all & ~s;
        if (!rest) break;  // s == all is the final mask
        int full = 0;
        std::uint32_t unseen = rest;
        while (unseen) {
            std::uint32_t comp = unseen & (~unseen + 1);
            std::uint32_t frontier = comp;
            std::uint32_t nbrs = 0;
            while (frontier) {
                std::uint32_t expand = 0;
                std::uint32_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    expand |= adj[v];
                }
                nbrs |= expand;
                frontier = expand & rest & ~comp;
                comp |= frontier;
            }
            if ((nbrs & ~comp) == s && ++full >= 2) break;
            unseen &= ~comp;
        }
        if (full >= 2) ++total;
    }
    return total;
}

}  // namespace detail

/// Exact sep(n) by exhausting all 2^(n(n-1)/2) labeled graphs. The first
/// edge mask attaining the maximum is returned as witness.
inline MaxSepResult max_sep_exhaustive(int n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("max_sep_exhaustive: n must be in 0..7, got " +
                                    std::to_string(n));
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::uint64_t best = 0;
    std::uint64_t best_mask = 0;
    std::uint32_t adj[8] = {};
    const std::uint64_t mask_end = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < mask_end; ++mask) {
        for (int v = 0; v < n; ++v) adj[v] = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1) {
                adj[pairs[i].first] |= 1u << pairs[i].second;
                adj[pairs[i].second] |= 1u << pairs[i].first;
            }
        }
        std::uint64_t cnt = n ? detail::count_minimal_separators_masks(adj, n) : 0;
        if (cnt > best) {
            best = cnt;
            best_mask = mask;
        }
    }

    Graph witness(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (best_mask >> i & 1) witness.add_edge(pairs[i].first, pairs[i].second);
    return {best, std::move(witness)};
}

}  // namespace msep
