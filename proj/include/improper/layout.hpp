#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// Factorial search bound on the number of maximal cliques.
constexpr int kMaxCliquesForSearch = 9;

/// A linear order of all maximal cliques in which the cliques containing any
/// fixed vertex are consecutive. Positions are 1-based; range[v] = (f_v, l_v)
/// is the first/last position of a clique containing v.
struct CliqueLayout {
    int order = 0;  // vertex count of the underlying graph
    std::vector<VertexSet> cliques;
    std::array<std::pair<int, int>, kMaxVertices> range{};

    int size() const { return static_cast<int>(cliques.size()); }

    void recompute_ranges() {
        range.fill({0, 0});
        for (int k = 0; k < size(); ++k) {
            for_each_vertex(cliques[k], [&](Vertex v) {
                if (range[v].first == 0) range[v].first = k + 1;
                range[v].second = k + 1;
            });
        }
    }

    /// Strict range nesting: u's block strictly inside v's block.
    bool nested(Vertex u, Vertex v) const {
        return range[v].first < range[u].first && range[u].second < range[v].second;
    }

    /// Vertices whose block is strictly inside v's block.
    VertexSet nested_in(Vertex v) const {
        VertexSet out = 0;
        for (Vertex u = 0; u < order; ++u)
            if (u != v && nested(u, v)) out |= set_of(u);
        return out;
    }

    bool consecutive() const {
        for (Vertex v = 0; v < order; ++v) {
            int hits = 0;
            for (int k = 0; k < size(); ++k)
                if (set_contains(cliques[k], v)) ++hits;
            if (hits == 0) return false;
            if (range[v].second - range[v].first + 1 != hits) return false;
        }
        return true;
    }

    CliqueLayout reversed() const {
        CliqueLayout out;
        out.order = order;
        out.cliques.assign(cliques.rbegin(), cliques.rend());
        out.recompute_ranges();
        return out;
    }
};

/// Support of a vertex set under a layout: the union of its members' ranges.
/// Distinct local components of a cut vertex always get disjoint supports.
inline std::pair<int, int> support_range(const CliqueLayout& l, VertexSet s) {
    int lo = l.size() + 1, hi = 0;
    for_each_vertex(s, [&](Vertex v) {
        lo = std::min(lo, l.range[v].first);
        hi = std::max(hi, l.range[v].second);
    });
    return {lo, hi};
}

inline std::vector<std::pair<int, int>> layout_ranges(const CliqueLayout& l) {
    std::vector<std::pair<int, int>> out(l.order);
    for (Vertex v = 0; v < l.order; ++v) out[v] = l.range[v];
    return out;
}

/// Maximal cliques sorted by their sorted vertex lists; this order fixes the
/// lexicographic tie-break used everywhere a first witness is reported.
inline std::vector<VertexSet> sorted_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> cliques = maximal_cliques(g);
    std::sort(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
        // ascending vertex lists compare lexicographically like masks read
        // from the low bit, so compare bit-reversed masks numerically
        while (a && b) {
            Vertex va = first_vertex(a), vb = first_vertex(b);
            if (va != vb) return va < vb;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    });
    return cliques;
}

namespace detail {

// DFS over clique permutations in lexicographic order, pruning prefixes that
// already break consecutiveness: appending clique C at position k is legal
// only if every vertex of C is either unseen or was seen at position k-1.
template <class Leaf>
class LayoutScanner {
public:
    LayoutScanner(const Graph& g, std::vector<VertexSet> cliques, Leaf& leaf)
        : g_(g), cliques_(std::move(cliques)), leaf_(leaf) {
        first_.fill(0);
        last_.fill(0);
    }

    bool run() {
        used_.assign(cliques_.size(), false);
        order_.clear();
        return place(0);
    }

private:
    bool place(int depth) {
        int m = static_cast<int>(cliques_.size());
        if (depth == m) return emit();
        for (int i = 0; i < m; ++i) {
            if (used_[i]) continue;
            VertexSet c = cliques_[i];
            bool ok = true;
            for_each_vertex(c, [&](Vertex v) {
                if (last_[v] != 0 && last_[v] != depth) ok = false;
            });
            if (!ok) continue;

            std::array<int, kMaxVertices> saved_first{}, saved_last{};
            for_each_vertex(c, [&](Vertex v) {
                saved_first[v] = first_[v];
                saved_last[v] = last_[v];
                if (first_[v] == 0) first_[v] = depth + 1;
                last_[v] = depth + 1;
            });
            used_[i] = true;
            order_.push_back(i);

            bool keep_going = place(depth + 1);

            order_.pop_back();
            used_[i] = false;
            for_each_vertex(c, [&](Vertex v) {
                first_[v] = saved_first[v];
                last_[v] = saved_last[v];
            });
            if (!keep_going) return false;
        }
        return true;
    }

    bool emit() {
        return leaf_(order_, first_, last_);
    }

    const Graph& g_;
    std::vector<VertexSet> cliques_;
    Leaf& leaf_;
    std::vector<bool> used_;
    std::vector<int> order_;
    std::array<int, kMaxVertices> first_{}, last_{};
};

}  // namespace detail

/// Visit every consecutive ordering of the maximal cliques in lexicographic
/// permutation order. The visitor gets (clique index order, first, last) and
/// returns false to stop the scan early. Returns true if the scan completed.
template <class Visit>
bool scan_clique_orders(const Graph& g, Visit&& visit) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    std::vector<VertexSet> cliques = sorted_maximal_cliques(g);
    if (static_cast<int>(cliques.size()) > kMaxCliquesForSearch)
        throw capacity_error("graph has " + std::to_string(cliques.size()) +
                             " maximal cliques; search bound is " +
                             std::to_string(kMaxCliquesForSearch));
    struct LeafAdapter {
        Visit& visit;
        const std::vector<VertexSet>& cliques;
        int order;
        bool operator()(const std::vector<int>& perm, const std::array<int, kMaxVertices>& first,
                        const std::array<int, kMaxVertices>& last) {
            return visit(cliques, perm, first, last);
        }
    } leaf{visit, cliques, g.order()};
    detail::LayoutScanner<LeafAdapter> scanner(g, cliques, leaf);
    return scanner.run();
}

inline CliqueLayout make_layout(const Graph& g, const std::vector<VertexSet>& cliques,
                                const std::vector<int>& perm) {
    CliqueLayout l;
    l.order = g.order();
    l.cliques.reserve(perm.size());
    for (int i : perm) l.cliques.push_back(cliques[i]);
    l.recompute_ranges();
    return l;
}

/// Visit every CliqueLayout of g. Visitor returns false to stop early.
template <class Visit>
bool for_each_clique_order(const Graph& g, Visit&& visit) {
    return scan_clique_orders(g, [&](const std::vector<VertexSet>& cliques,
                                     const std::vector<int>& perm,
                                     const std::array<int, kMaxVertices>&,
                                     const std::array<int, kMaxVertices>&) {
        return visit(make_layout(g, cliques, perm));
    });
}

inline std::vector<CliqueLayout> enumerate_clique_orders(const Graph& g) {
    std::vector<CliqueLayout> out;
    for_each_clique_order(g, [&](const CliqueLayout& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

/// A connected graph is an interval graph iff some consecutive clique
/// ordering exists.
inline bool is_interval_graph(const Graph& g) {
    bool found = false;
    for_each_clique_order(g, [&](const CliqueLayout&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace improper
