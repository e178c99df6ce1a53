#pragma once

#include <array>
#include <limits>
#include <vector>

#include "improper/endpoints.hpp"
#include "improper/graph.hpp"
#include "improper/layout.hpp"
#include "improper/realization.hpp"

namespace improper {

/// Per-vertex containment counts for one representation.
struct ContainmentProfile {
    int order = 0;
    std::array<int, kMaxVertices> counts{};
    int max_imp = 0;
};

/// counts[v] = number of vertices whose range is strictly nested in v's.
inline ContainmentProfile containment_profile(const CliqueLayout& l) {
    ContainmentProfile p;
    p.order = l.order;
    for (Vertex v = 0; v < l.order; ++v) {
        p.counts[v] = set_size(l.nested_in(v));
        p.max_imp = std::max(p.max_imp, p.counts[v]);
    }
    return p;
}

/// counts[v] = number of intervals properly contained in v's interval,
/// measured on the geometry rather than on clique ranges.
inline ContainmentProfile realization_profile(const Realization& r) {
    ContainmentProfile p;
    p.order = r.order;
    for (Vertex v = 0; v < r.order; ++v) {
        for (Vertex u = 0; u < r.order; ++u)
            if (u != v && interval_inside(r.intervals[u], r.intervals[v])) ++p.counts[v];
        p.max_imp = std::max(p.max_imp, p.counts[v]);
    }
    return p;
}

struct ImpResult {
    int imp = 0;
    CliqueLayout witness;                      // lexicographically first optimal layout
    std::array<int, kMaxVertices> per_vertex_min{};  // min attainable counts[v] over layouts
};

/// Exact impropriety by exhaustive scan of consecutive clique orderings.
/// Containment within a layout is strict range nesting; the generic
/// realization makes that the exact geometric containment, so the minimum over
/// layouts is the minimum over representations.
inline ImpResult impropriety(const Graph& g) {
    ImpResult res;
    res.imp = std::numeric_limits<int>::max();
    res.per_vertex_min.fill(std::numeric_limits<int>::max());

    std::vector<int> best_perm;
    std::vector<VertexSet> best_cliques;

    bool any = false;
    scan_clique_orders(g, [&](const std::vector<VertexSet>& cliques, const std::vector<int>& perm,
                              const std::array<int, kMaxVertices>& first,
                              const std::array<int, kMaxVertices>& last) {
        any = true;
        int max_imp = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            int c = 0;
            for (Vertex u = 0; u < g.order(); ++u)
                if (u != v && first[v] < first[u] && last[u] < last[v]) ++c;
            res.per_vertex_min[v] = std::min(res.per_vertex_min[v], c);
            max_imp = std::max(max_imp, c);
        }
        if (max_imp < res.imp) {
            res.imp = max_imp;
            best_perm = perm;
            best_cliques = cliques;
        }
        return true;
    });
    if (!any) throw not_interval_error();
    res.witness = make_layout(g, best_cliques, best_perm);
    return res;
}

inline int impropriety_value(const Graph& g) { return impropriety(g).imp; }

/// Containment count z can never avoid: min over layouts of counts[z].
inline int vertex_min_impropriety(const Graph& g, Vertex z) {
    g.check_vertex(z);
    return impropriety(g).per_vertex_min[z];
}

/// Impropriety extended to disconnected graphs: components can always be laid
/// out side by side, so the minimum is the max over components.
inline int componentwise_impropriety(const Graph& g) {
    int imp = 0;
    for (VertexSet comp : components(g))
        imp = std::max(imp, impropriety(induced_subgraph(g, comp)).imp);
    return imp;
}

/// Independent brute-force route: minimize the max containment count over all
/// valid endpoint orders. u sits inside v iff L_v precedes L_u and R_u
/// precedes R_v. Shares nothing with the clique-order path.
inline int impropriety_oracle(const Graph& g) {
    int n = g.order();
    int best = std::numeric_limits<int>::max();
    for_each_endpoint_order(g, [&](const EndpointOrder& seq) {
        std::array<int, kMaxVertices> open_rank{}, close_rank{};
        int lefts = 0, rights = 0;
        for (const EndpointEvent& e : seq) {
            if (e.is_left)
                open_rank[e.v] = lefts++;
            else
                close_rank[e.v] = rights++;
        }
        int max_imp = 0;
        for (Vertex v = 0; v < n; ++v) {
            int c = 0;
            for (Vertex u = 0; u < n; ++u)
                if (u != v && open_rank[v] < open_rank[u] && close_rank[u] < close_rank[v]) ++c;
            max_imp = std::max(max_imp, c);
        }
        best = std::min(best, max_imp);
        return best > 0;  // 0 cannot be beaten
    });
    if (best == std::numeric_limits<int>::max()) throw not_interval_error();
    return best;
}

}  // namespace improper
