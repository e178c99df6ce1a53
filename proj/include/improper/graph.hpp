#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "improper/errors.hpp"

namespace improper {

using Vertex = int;

/// Vertex subsets are bitmasks; bit v stands for vertex v.
using VertexSet = std::uint32_t;

constexpr int kMaxVertices = 16;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, Vertex v) { return (s >> v) & 1u; }
inline VertexSet set_of(Vertex v) { return VertexSet{1} << v; }

/// Lowest vertex in a nonempty set.
inline Vertex first_vertex(VertexSet s) { return std::countr_zero(s); }

template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<Vertex> set_to_vector(VertexSet s) {
    std::vector<Vertex> out;
    for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

/// Simple undirected graph on vertices 0..n-1, adjacency held as one bitmask
/// row per vertex. No self-loops; rows stay symmetric by construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw capacity_error("vertex count " + std::to_string(n) + " outside 1.." +
                                 std::to_string(kMaxVertices));
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u] |= set_of(v);
        adj_[v] |= set_of(u);
    }

    bool adjacent(Vertex u, Vertex v) const { return set_contains(adj_[u], v); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return set_size(adj_[v]); }
    VertexSet vertex_mask() const { return (VertexSet{1} << n_) - 1; }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// ---------------------------------------------------------------------------
// graph6 encoding. Byte = 63 + 6-bit chunk; first byte is n + 63 (n <= 62);
// then the upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...
// zero-padded to a multiple of six.
// ---------------------------------------------------------------------------

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 string", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 126) throw parse_error("byte outside 63..126", 0);
    if (c0 == 126) throw parse_error("multi-byte order prefix not supported (n > 62)", 0);
    int n = c0 - 63;
    if (n < 1 || n > kMaxVertices)
        throw parse_error("vertex count " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxVertices), 0);

    int bits = n * (n - 1) / 2;
    std::size_t need = 1 + (bits + 5) / 6;
    if (text.size() != need)
        throw parse_error("expected " + std::to_string(need) + " bytes, got " +
                          std::to_string(text.size()),
                          text.size() < need ? text.size() : need);

    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            std::size_t byte = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) throw parse_error("byte outside 63..126", byte);
            int chunk = c - 63;
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // padding bits must be zero
    for (int b = bits; b < 6 * ((bits + 5) / 6); ++b) {
        std::size_t byte = 1 + b / 6;
        int chunk = static_cast<unsigned char>(text[byte]) - 63;
        if ((chunk >> (5 - b % 6)) & 1) throw parse_error("nonzero padding bit", byte);
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int chunk = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// Elementary queries.
// ---------------------------------------------------------------------------

/// Induced subgraph on s, vertices relabeled 0..|s|-1 in ascending order of s.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s == 0) throw std::invalid_argument("empty vertex set");
    if (s & ~g.vertex_mask()) throw std::out_of_range("vertex set outside graph");
    std::vector<Vertex> verts = set_to_vector(s);
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
    g.check_vertex(v);
    return induced_subgraph(g, g.vertex_mask() & ~set_of(v));
}

/// Connected components of g restricted to `within`.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (left) {
        VertexSet comp = set_of(first_vertex(left));
        for (;;) {
            VertexSet grown = comp;
            for_each_vertex(comp, [&](Vertex v) { grown |= g.neighbors(v) & within; });
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g, std::optional<Vertex> removed = {}) {
    VertexSet within = g.vertex_mask();
    if (removed) {
        g.check_vertex(*removed);
        if (g.order() < 2) throw std::invalid_argument("cannot remove from a 1-vertex graph");
        within &= ~set_of(*removed);
    }
    return components_within(g, within);
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Hop distances from source measured in the full graph (-1 = unreachable).
inline std::vector<int> distances_from(const Graph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<int> dist(g.order(), -1);
    dist[source] = 0;
    VertexSet frontier = set_of(source), seen = frontier;
    int d = 0;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        next &= ~seen;
        ++d;
        for_each_vertex(next, [&](Vertex v) { dist[v] = d; });
        seen |= next;
        frontier = next;
    }
    return dist;
}

struct ComponentsAndDistances {
    std::vector<VertexSet> components;  // partition of V minus the removed vertex
    std::vector<int> dist;              // hop distances from source in the full graph
};

/// Component partition after deleting `removed` (if given), with hop distances
/// from `source` always measured in the full graph.
inline ComponentsAndDistances components_and_distances(const Graph& g,
                                                       std::optional<Vertex> removed,
                                                       Vertex source) {
    return ComponentsAndDistances{components(g, removed), distances_from(g, source)};
}

/// All inclusion-maximal cliques, by subset scan. 2^n bitmask candidates at
/// n <= 16 is small enough that the obviously-correct route wins.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> out;
    for (VertexSet s = 1; s <= g.vertex_mask(); ++s) {
        bool clique = true;
        for_each_vertex(s, [&](Vertex v) {
            if ((g.neighbors(v) & s) != (s & ~set_of(v))) clique = false;
        });
        if (!clique) continue;
        bool maximal = true;
        for (Vertex v = 0; v < n && maximal; ++v)
            if (!set_contains(s, v) && (g.neighbors(v) & s) == s) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

}  // namespace improper
