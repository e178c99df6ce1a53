#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// Isomorphism certificate. Two graphs share a cert iff they are isomorphic.
/// The cert is itself a graph6 string (of the canonical relabeling).
struct CanonicalForm {
    std::string cert;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// perm[old_label] = new_label.
inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

namespace detail {

// Color refinement: start from degrees, repeatedly split classes by the
// multiset of neighbor colors. The resulting class order is derived only from
// isomorphism-invariant keys, so it is identical across relabelings.
inline std::vector<int> refined_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);

    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.push_back(color[v]);
            for_each_vertex(g.neighbors(v), [&](Vertex u) { key.push_back(color[u]); });
            std::sort(key.begin() + 1, key.end());
            keyed[v] = {std::move(key), v};
        }
        std::vector<std::vector<int>> distinct;
        for (auto& [key, v] : keyed) distinct.push_back(key);
        std::sort(distinct.begin(), distinct.end(), std::greater<>());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = std::lower_bound(distinct.begin(), distinct.end(), keyed[v].first,
                                       std::greater<>());
            next[v] = static_cast<int>(it - distinct.begin());
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline std::vector<bool> triangle_bits(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::vector<bool> bits;
    bits.reserve(n * (n - 1) / 2);
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.adjacent(inv[row], inv[col]));
    return bits;
}

}  // namespace detail

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> relabel;  // relabel[old_label] = canonical label
};

/// Exhaustive search over class-respecting relabelings (classes fixed by
/// color refinement), keeping the lexicographically smallest adjacency bit
/// string. Classes ordered color 0 first, i.e. highest refined key first.
inline CanonicalResult canonical_relabeling(const Graph& g) {
    int n = g.order();
    std::vector<int> color = detail::refined_colors(g);
    int num_colors = *std::max_element(color.begin(), color.end()) + 1;

    std::vector<std::vector<int>> classes(num_colors);
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);

    // position block for each class
    std::vector<int> base(num_colors, 0);
    for (int c = 1; c < num_colors; ++c)
        base[c] = base[c - 1] + static_cast<int>(classes[c - 1].size());

    std::vector<bool> best;
    std::vector<int> best_perm;
    std::vector<int> perm(n);

    auto consider = [&]() {
        std::vector<bool> bits = detail::triangle_bits(g, perm);
        if (best.empty() || bits < best) {
            best = std::move(bits);
            best_perm = perm;
        }
    };

    // product of within-class arrangements, one class at a time
    auto dfs = [&](auto&& self, int c) -> void {
        if (c == num_colors) {
            consider();
            return;
        }
        std::vector<int>& cls = classes[c];
        std::sort(cls.begin(), cls.end());
        do {
            for (std::size_t i = 0; i < cls.size(); ++i) perm[cls[i]] = base[c] + static_cast<int>(i);
            self(self, c + 1);
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    dfs(dfs, 0);

    Graph canon = apply_permutation(g, best_perm);
    return CanonicalResult{CanonicalForm{to_graph6(canon)}, std::move(best_perm)};
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_relabeling(g).form; }

inline std::string canonical_graph6(const Graph& g) { return canonical_relabeling(g).form.cert; }

}  // namespace improper
