#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// Endpoint-sequence search bound; the raw space grows as (2n)!.
constexpr int kMaxEndpointVertices = 6;

struct EndpointEvent {
    Vertex v;
    bool is_left;
};

/// A sequence of 2n endpoint events, each vertex's Left before its Right,
/// whose induced intersection graph equals the source graph.
using EndpointOrder = std::vector<EndpointEvent>;

namespace detail {

// DFS over event sequences. Opening v requires every currently open vertex to
// be a neighbor; closing v requires every neighbor of v to have opened.
// Those two checks are exactly "induced intersection graph = g".
template <class Leaf>
class EndpointScanner {
public:
    EndpointScanner(const Graph& g, Leaf& leaf) : g_(g), leaf_(leaf) {}

    bool run() {
        seq_.clear();
        open_ = opened_ = 0;
        return step(0);
    }

private:
    bool step(int placed) {
        int n = g_.order();
        if (placed == 2 * n) return leaf_(seq_);
        for (Vertex v = 0; v < n; ++v) {
            if (!set_contains(opened_, v) && (open_ & ~g_.neighbors(v)) == 0) {
                opened_ |= set_of(v);
                open_ |= set_of(v);
                seq_.push_back({v, true});
                bool keep = step(placed + 1);
                seq_.pop_back();
                open_ &= ~set_of(v);
                opened_ &= ~set_of(v);
                if (!keep) return false;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (set_contains(open_, v) && (g_.neighbors(v) & ~opened_) == 0) {
                open_ &= ~set_of(v);
                seq_.push_back({v, false});
                bool keep = step(placed + 1);
                seq_.pop_back();
                open_ |= set_of(v);
                if (!keep) return false;
            }
        }
        return true;
    }

    const Graph& g_;
    Leaf& leaf_;
    EndpointOrder seq_;
    VertexSet open_ = 0, opened_ = 0;
};

}  // namespace detail

/// Visit every valid endpoint order of g; visitor returns false to stop.
template <class Visit>
bool for_each_endpoint_order(const Graph& g, Visit&& visit) {
    if (g.order() > kMaxEndpointVertices)
        throw capacity_error("endpoint-order search supports n <= " +
                             std::to_string(kMaxEndpointVertices));
    detail::EndpointScanner<Visit> scanner(g, visit);
    return scanner.run();
}

inline std::vector<EndpointOrder> endpoint_orders(const Graph& g) {
    std::vector<EndpointOrder> out;
    for_each_endpoint_order(g, [&](const EndpointOrder& seq) {
        out.push_back(seq);
        return true;
    });
    return out;
}

inline long long count_endpoint_orders(const Graph& g) {
    long long count = 0;
    for_each_endpoint_order(g, [&](const EndpointOrder&) {
        ++count;
        return true;
    });
    return count;
}

inline bool has_endpoint_order(const Graph& g) {
    bool found = false;
    for_each_endpoint_order(g, [&](const EndpointOrder&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace improper
