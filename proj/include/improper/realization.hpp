#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "improper/graph.hpp"
#include "improper/layout.hpp"
#include "improper/rational.hpp"

namespace improper {

struct Interval {
    Rational left, right;
};

/// Closed intervals indexed by vertex. realize() always produces pairwise
/// distinct endpoints; transcribed figure data may repeat endpoints, and the
/// geometric predicates below stay exact either way.
struct Realization {
    int order = 0;
    std::vector<Interval> intervals;
};

inline bool intervals_intersect(const Interval& a, const Interval& b) {
    return std::max(a.left, b.left) < std::min(a.right, b.right);
}

/// u properly contained in v.
inline bool interval_inside(const Interval& u, const Interval& v) {
    return v.left < u.left && u.right < v.right;
}

/// Geometric realization of a layout: clique k sits at point k. Left endpoints
/// of the vertices starting at k go into (k-1/2, k) ordered by ascending
/// (l_v, v); right endpoints of those ending at k go into (k, k+1/2) ordered
/// by ascending (f_v, v). With this tie-break two intervals nest exactly when
/// their clique ranges nest strictly, and never otherwise.
inline Realization realize(const CliqueLayout& l) {
    Realization r;
    r.order = l.order;
    r.intervals.resize(l.order);

    // offsets land in (0, 1/2): slot i of a group maps to (i+1)/64
    for (int k = 1; k <= l.size(); ++k) {
        std::vector<Vertex> starters, enders;
        for (Vertex v = 0; v < l.order; ++v) {
            if (l.range[v].first == k) starters.push_back(v);
            if (l.range[v].second == k) enders.push_back(v);
        }
        std::sort(starters.begin(), starters.end(), [&](Vertex a, Vertex b) {
            return std::pair(l.range[a].second, a) < std::pair(l.range[b].second, b);
        });
        std::sort(enders.begin(), enders.end(), [&](Vertex a, Vertex b) {
            return std::pair(l.range[a].first, a) < std::pair(l.range[b].first, b);
        });
        for (std::size_t i = 0; i < starters.size(); ++i)
            r.intervals[starters[i]].left =
                Rational(k) - Rational(1, 2) + Rational(static_cast<long long>(i) + 1, 64);
        for (std::size_t i = 0; i < enders.size(); ++i)
            r.intervals[enders[i]].right =
                Rational(k) + Rational(static_cast<long long>(i) + 1, 64);
    }
    return r;
}

/// Intersection graph: edge uw iff max(left) < min(right). Exact arithmetic.
inline Graph intersection_graph(const Realization& r) {
    Graph g(r.order);
    for (Vertex u = 0; u < r.order; ++u)
        for (Vertex v = u + 1; v < r.order; ++v)
            if (intervals_intersect(r.intervals[u], r.intervals[v])) g.add_edge(u, v);
    return g;
}

/// Ordered (inner, outer) pairs with inner properly contained in outer.
inline std::vector<std::pair<Vertex, Vertex>> containment_pairs(const Realization& r) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < r.order; ++u)
        for (Vertex v = 0; v < r.order; ++v)
            if (u != v && interval_inside(r.intervals[u], r.intervals[v])) out.emplace_back(u, v);
    return out;
}

/// Recover the clique layout a realization exhibits: maximal cliques of the
/// intersection graph ordered by the latest left endpoint among members.
inline CliqueLayout layout_of(const Realization& r) {
    Graph g = intersection_graph(r);
    std::vector<VertexSet> cliques = maximal_cliques(g);
    std::vector<std::pair<Rational, VertexSet>> keyed;
    keyed.reserve(cliques.size());
    for (VertexSet c : cliques) {
        Rational key = r.intervals[first_vertex(c)].left;
        for_each_vertex(c, [&](Vertex v) { key = std::max(key, r.intervals[v].left); });
        keyed.emplace_back(key, c);
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    CliqueLayout l;
    l.order = r.order;
    for (auto& [key, c] : keyed) l.cliques.push_back(c);
    l.recompute_ranges();
    if (!l.consecutive())
        throw std::invalid_argument("realization does not induce a consecutive clique order");
    return l;
}

}  // namespace improper
