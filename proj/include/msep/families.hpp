#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"
#include "separators.hpp"

namespace msep {

using BigInt = boost::multiprecision::cpp_int;

/// Parameter bundle for the extremal generators.
///   k:   melon layer count (k >= 1)
///   m:   block layer count (m >= 2; cross edges need two layers)
///   ell: number of glued blocks (ell >= 1)
struct FamilyParams {
    int k = 1;
    int m = 2;
    int ell = 1;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

inline int melon_vertex_id(int i, int j) { return 2 + (j - 1) * 3 + (i - 1); }

/// Endpoints a, b joined by k internally disjoint paths with 3 internal
/// vertices each: n = 3k + 2. Vertex a is 0, b is 1, path j's internals are
/// v_{1,j}, v_{2,j}, v_{3,j} in order from a.
inline Graph melon(int k) {
    detail::require(k >= 1, "melon: k must be >= 1");
    Graph g(3 * k + 2);
    g.set_label(0, "a");
    g.set_label(1, "b");
    for (int j = 1; j <= k; ++j) {
        int v1 = melon_vertex_id(1, j), v2 = melon_vertex_id(2, j), v3 = melon_vertex_id(3, j);
        g.add_edge(0, v1);
        g.add_edge(v1, v2);
        g.add_edge(v2, v3);
        g.add_edge(v3, 1);
        for (int i = 1; i <= 3; ++i)
            g.set_label(melon_vertex_id(i, j),
                        "v_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    return g;
}

inline int block_vertex_id(int i, int j) { return 2 + (j - 1) * 6 + (i - 1); }

namespace detail {

inline std::string block_label(int i, int j, int copy, int ell) {
    std::string base = "v_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    if (ell > 1) base += "^{" + std::to_string(copy) + "}";
    return base;
}

inline void add_block_copy(Graph& g, int m, int copy, int ell) {
    int off = (copy - 1) * 6 * m;
    auto vid = [&](int i, int j) { return off + block_vertex_id(i, j); };
    for (int j = 1; j <= m; ++j) {
        g.add_edge(0, vid(1, j));
        g.add_edge(vid(1, j), vid(2, j));
        g.add_edge(vid(2, j), vid(3, j));
        g.add_edge(vid(4, j), vid(5, j));
        g.add_edge(vid(5, j), vid(6, j));
        g.add_edge(vid(6, j), 1);
        for (int i = 1; i <= 6; ++i) g.set_label(vid(i, j), block_label(i, j, copy, ell));
    }
    // cross edges between the top of one layer and the bottom of every other
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
            if (j != k) g.add_edge(vid(3, j), vid(4, k));
}

}  // namespace detail

/// The layered graph on n = 6m + 2 vertices: per layer j, paths
/// (a, v_{1,j}, v_{2,j}, v_{3,j}) and (v_{4,j}, v_{5,j}, v_{6,j}, b), plus
/// cross edges v_{3,j} v_{4,k} for j != k. Vertex ids: a = 0, b = 1,
/// v_{i,j} = 2 + (j-1)*6 + (i-1).
inline Graph block(int m) {
    detail::require(m >= 2, "block: m must be >= 2");
    Graph g(6 * m + 2);
    g.set_label(0, "a");
    g.set_label(1, "b");
    detail::add_block_copy(g, m, 1, 1);
    return g;
}

/// ell disjoint copies of block(m) sharing a single a and a single b:
/// n = ell*6*m + 2. glued(1, m) is identical to block(m).
inline Graph glued(int ell, int m) {
    detail::require(ell >= 1, "glued: ell must be >= 1");
    detail::require(m >= 2, "glued: m must be >= 2");
    Graph g(ell * 6 * m + 2);
    g.set_label(0, "a");
    g.set_label(1, "b");
    for (int copy = 1; copy <= ell; ++copy) detail::add_block_copy(g, m, copy, ell);
    return g;
}

struct LayerFamily {
    int avoided_layer = 0;
    std::vector<VertexSet> separators;  // canonical order
    std::uint64_t rejected_candidates = 0;
};

/// The minimal (a,b)-separators of a block graph that avoid layer j entirely.
///
/// Candidates come from the Cartesian product of per-layer choices: for every
/// layer k != j, one vertex from the top triple {v_{1,k}, v_{2,k}, v_{3,k}}
/// and one from the bottom triple {v_{4,k}, v_{5,k}, v_{6,k}}. Each candidate
/// is checked with is_minimal_ab_separator and kept only if it passes;
/// rejected_candidates counts the rest.
///
/// For m = 2 all 9 candidates pass. For m >= 3 most candidates fail to
/// separate at all: when some v_{4,k} stays uncut (bottom choice 5 or 6) and
/// some v_{3,l} of a different layer stays uncut (top choice 1 or 2), the
/// path a .. v_{3,j} v_{4,k} v_{3,l} v_{4,j} .. b runs through the avoided
/// layer's free halves and around both cuts. The survivors are exactly the
/// candidates with no such pair, which is 2*3^(m-1) + 4(m-1) - 1 sets.
inline LayerFamily layer_family(const Graph& block_graph, int j) {
    int n = block_graph.vertex_count();
    detail::require(n >= 14 && (n - 2) % 6 == 0, "layer_family: not a block-family graph");
    int m = (n - 2) / 6;
    if (j < 1 || j > m)
        throw std::out_of_range("layer_family: layer " + std::to_string(j) + " outside 1.." +
                                std::to_string(m));

    std::vector<int> other_layers;
    for (int k = 1; k <= m; ++k)
        if (k != j) other_layers.push_back(k);

    LayerFamily fam;
    fam.avoided_layer = j;
    VertexSet sep(n);
    auto emit = [&](auto&& self, std::size_t depth) -> void {
        if (depth == other_layers.size()) {
            if (is_minimal_ab_separator(block_graph, sep, 0, 1))
                fam.separators.push_back(sep);
            else
                ++fam.rejected_candidates;
            return;
        }
        int k = other_layers[depth];
        for (int top = 1; top <= 3; ++top) {
            for (int bottom = 4; bottom <= 6; ++bottom) {
                int tv = block_vertex_id(top, k), bv = block_vertex_id(bottom, k);
                sep.insert(tv);
                sep.insert(bv);
                self(self, depth + 1);
                sep.erase(tv);
                sep.erase(bv);
            }
        }
    };
    emit(emit, 0);
    std::sort(fam.separators.begin(), fam.separators.end());
    return fam;
}

/// Exact family size m * 3^(2(m-1)).
inline BigInt lb_count(int m) {
    detail::require(m >= 2, "lb_count: m must be >= 2");
    return BigInt(m) * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(2 * (m - 1)));
}

/// Decimal value mantissa * 10^-(digits-1), always rounded down, so the
/// stored value never overstates the quantity it approximates.
struct GrowthBase {
    std::int64_t mantissa = 0;
    int digits = 12;

    double to_double() const {
        double scale = 1.0;
        for (int i = 1; i < digits; ++i) scale *= 10.0;
        return static_cast<double>(mantissa) / scale;
    }

    std::string to_string() const {
        std::string s = std::to_string(mantissa);
        return s.substr(0, 1) + "." + s.substr(1);
    }
};

/// Per-vertex base of the family's growth: (m * 3^(2(m-1)))^(1/(6m)),
/// evaluated to 12 significant digits. Computed by exact integer bisection on
/// the mantissa (largest D with D^(6m) <= lb_count(m) * 10^(11*6m)), which
/// guarantees the round-down direction.
inline GrowthBase growth_base(int m) {
    detail::require(m >= 2, "growth_base: m must be >= 2");
    const int digits = 12;
    const unsigned e = static_cast<unsigned>(6 * m);
    using boost::multiprecision::pow;
    BigInt target = lb_count(m) * pow(pow(BigInt(10), digits - 1), e);
    BigInt lo = pow(BigInt(10), digits - 1), hi = pow(BigInt(10), digits);
    // the base lies in (1, 10): lo valid, hi not
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (pow(mid, e) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return {static_cast<std::int64_t>(lo), digits};
}

struct BestLayerCount {
    int m = 0;
    GrowthBase base;
};

/// Argmax of growth_base over 2 <= m <= max_m, ties toward smaller m.
/// Candidates are compared exactly: growth_base(p) > growth_base(q) iff
/// lb_count(p)^q > lb_count(q)^p.
inline BestLayerCount best_layer_count(int max_m) {
    detail::require(max_m >= 2, "best_layer_count: max_m must be >= 2");
    using boost::multiprecision::pow;
    int best = 2;
    for (int m = 3; m <= max_m; ++m) {
        if (pow(lb_count(m), static_cast<unsigned>(best)) >
            pow(lb_count(best), static_cast<unsigned>(m)))
            best = m;
    }
    return {best, growth_base(best)};
}

}  // namespace msep
