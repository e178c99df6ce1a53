#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "improper/canonical.hpp"
#include "improper/graph.hpp"

namespace improper {

constexpr int kMaxEnumerationVertices = 10;

namespace detail {

// Labeled graph from an edge-subset mask, bits in graph6 column order.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((mask >> bit) & 1) g.add_edge(row, col);
    return g;
}

}  // namespace detail

/// One representative per isomorphism class of connected graphs on n vertices,
/// sorted by certificate. Small n runs the full labeled scan; n >= 7 extends
/// the (n-1)-vertex representatives by one vertex with every neighborhood.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > kMaxEnumerationVertices)
        throw capacity_error("connected-graph enumeration supports n in 1.." +
                             std::to_string(kMaxEnumerationVertices));

    std::vector<std::pair<std::string, Graph>> reps;
    std::unordered_set<std::string> seen;
    auto offer = [&](const Graph& g) {
        CanonicalResult cr = canonical_relabeling(g);
        if (seen.insert(cr.form.cert).second)
            reps.emplace_back(cr.form.cert, apply_permutation(g, cr.relabel));
    };

    if (n <= 6) {
        std::uint64_t all = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < all; ++mask) {
            Graph g = detail::graph_from_edge_mask(n, mask);
            if (is_connected(g)) offer(g);
        }
    } else {
        for (const Graph& base : enumerate_connected_graphs(n - 1)) {
            VertexSet nbhd_limit = VertexSet{1} << (n - 1);
            for (VertexSet nb = 1; nb < nbhd_limit; ++nb) {
                Graph g(n);
                for (int u = 0; u < n - 1; ++u)
                    for (int v = u + 1; v < n - 1; ++v)
                        if (base.adjacent(u, v)) g.add_edge(u, v);
                for_each_vertex(nb, [&](Vertex v) { g.add_edge(v, n - 1); });
                offer(g);
            }
        }
    }

    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [cert, g] : reps) out.push_back(g);
    return out;
}

}  // namespace improper
