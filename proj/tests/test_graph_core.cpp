#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "improper/canonical.hpp"
#include "improper/enumerate.hpp"
#include "improper/figures.hpp"
#include "improper/graph.hpp"

using namespace improper;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// Exhaustive isomorphism test, independent of canonical_form.
bool isomorphic_by_search(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.order() && match; ++u)
            for (int v = u + 1; v < a.order() && match; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("graph6 decoding") {
    SECTION("C~ is K4") {
        Graph g = parse_graph6("C~");
        REQUIRE(g == complete_graph(4));
    }
    SECTION("Cs is the claw with center 0") {
        REQUIRE(parse_graph6("Cs") == star_graph(3));
    }
    SECTION("Ch is the path 0-1-2-3") {
        REQUIRE(parse_graph6("Ch") == path_graph(4));
    }
    SECTION("@ is the single vertex") {
        REQUIRE(parse_graph6("@").order() == 1);
    }
    SECTION("malformed input names the offending byte") {
        REQUIRE_THROWS_AS(parse_graph6(""), parse_error);
        REQUIRE_THROWS_AS(parse_graph6("C"), parse_error);      // too short
        REQUIRE_THROWS_AS(parse_graph6("C~~"), parse_error);    // too long
        REQUIRE_THROWS_AS(parse_graph6("C\x20"), parse_error);  // byte below 63
        REQUIRE_THROWS_AS(parse_graph6("?"), parse_error);      // n = 0
        REQUIRE_THROWS_AS(parse_graph6("~??B"), parse_error);   // n > 62 prefix
        try {
            parse_graph6("C\x20");
        } catch (const parse_error& e) {
            REQUIRE(e.byte_index() == 1);
            REQUIRE(std::string(e.what()).find("1") != std::string::npos);
        }
        // graph6 for n = 17 (one over the supported cap): 'P' + 23 payload bytes
        REQUIRE_THROWS_AS(parse_graph6("P" + std::string(23, '?')), parse_error);
    }
}

TEST_CASE("graph6 encoding") {
    REQUIRE(to_graph6(complete_graph(4)) == "C~");
    // hand encoding: edges 01,02,03 give column-order bits 110100 = 52, 52+63 = 's'
    REQUIRE(to_graph6(star_graph(3)) == "Cs");
    REQUIRE(to_graph6(Graph(1)) == "@");

    SECTION("round trip is the identity on every graph up to n = 5") {
        for (int n = 1; n <= 5; ++n)
            for (const Graph& g : enumerate_connected_graphs(n))
                REQUIRE(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("canonical form") {
    SECTION("claw relabelings share a certificate") {
        Graph center0 = star_graph(3);
        Graph center3 = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
        REQUIRE(canonical_form(center0) == canonical_form(center3));
    }
    SECTION("P4 and the claw differ") {
        REQUIRE(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));
    }
    SECTION("C4 equals K4 minus a perfect matching") {
        Graph c4 = cycle_graph(4);
        Graph k4mm = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        REQUIRE(isomorphic_by_search(c4, k4mm));  // explicit isomorphism exists
        REQUIRE(canonical_form(c4) == canonical_form(k4mm));
    }
    SECTION("certificate is invariant under 500 random relabelings") {
        std::mt19937 rng(20240811);
        for (int trial = 0; trial < 500; ++trial) {
            int n = 2 + static_cast<int>(rng() % 7);  // up to 8 vertices
            Graph g = random_graph(rng, n, 0.4);
            Graph h = apply_permutation(g, random_permutation(rng, n));
            REQUIRE(canonical_form(g) == canonical_form(h));
        }
    }
    SECTION("certificates agree exactly with exhaustive isomorphism at n = 5") {
        std::vector<Graph> reps = enumerate_connected_graphs(5);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                REQUIRE_FALSE(isomorphic_by_search(reps[i], reps[j]));
                REQUIRE(canonical_form(reps[i]) != canonical_form(reps[j]));
            }
    }
}

TEST_CASE("connected graph enumeration") {
    SECTION("class counts for n = 1..6") {
        const int expected[] = {1, 1, 2, 6, 21, 112};
        for (int n = 1; n <= 6; ++n)
            REQUIRE(enumerate_connected_graphs(n).size() == static_cast<std::size_t>(expected[n - 1]));
    }
    SECTION("labeled-scan oracle equality for n = 4..6") {
        for (int n = 4; n <= 6; ++n) {
            std::set<std::string> labeled;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
                Graph g = detail::graph_from_edge_mask(n, mask);
                if (is_connected(g)) labeled.insert(canonical_graph6(g));
            }
            std::vector<Graph> reps = enumerate_connected_graphs(n);
            REQUIRE(reps.size() == labeled.size());
            for (const Graph& g : reps) REQUIRE(labeled.count(to_graph6(g)) == 1);
        }
    }
    SECTION("extension step at n = 7") {
        std::vector<Graph> reps = enumerate_connected_graphs(7);
        REQUIRE(reps.size() == 853);
        std::set<std::string> certs;
        for (const Graph& g : reps) {
            REQUIRE(is_connected(g));
            REQUIRE(to_graph6(g) == canonical_graph6(g));  // stored in canonical labels
            REQUIRE(certs.insert(to_graph6(g)).second);
        }
    }
    SECTION("rejects out-of-range n") {
        REQUIRE_THROWS_AS(enumerate_connected_graphs(0), capacity_error);
        REQUIRE_THROWS_AS(enumerate_connected_graphs(11), capacity_error);
    }
}

TEST_CASE("induced subgraphs") {
    Graph claw = star_graph(3);
    SECTION("claw minus one leaf is a 2-edge star") {
        Graph sub = induced_subgraph(claw, claw.vertex_mask() & ~set_of(3));
        REQUIRE(sub == star_graph(2));
    }
    SECTION("full vertex set gives the graph back") {
        REQUIRE(induced_subgraph(claw, claw.vertex_mask()) == claw);
    }
    SECTION("fig1 minus b keeps six vertices and drops the a-b edge") {
        FigureData f = fig1();
        Graph sub = induced_subgraph(f.graph, f.graph.vertex_mask() & ~set_of(f.id("b")));
        REQUIRE(sub.order() == 6);
        REQUIRE(sub.edge_count() == f.graph.edge_count() - 1);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(induced_subgraph(claw, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(induced_subgraph(claw, set_of(5)), std::out_of_range);
    }
}

TEST_CASE("components and distances") {
    SECTION("claw minus center leaves three singletons") {
        std::vector<VertexSet> comps = components(star_graph(3), Vertex{0});
        REQUIRE(comps.size() == 3);
        for (VertexSet c : comps) REQUIRE(set_size(c) == 1);
    }
    SECTION("fig1 minus z") {
        FigureData f = fig1();
        std::vector<VertexSet> comps = components(f.graph, f.id("z"));
        REQUIRE(comps.size() == 3);
        std::set<VertexSet> got(comps.begin(), comps.end());
        REQUIRE(got.count(f.set({"a", "b"})) == 1);
        REQUIRE(got.count(f.set({"c", "d"})) == 1);
        REQUIRE(got.count(f.set({"e", "f"})) == 1);
    }
    SECTION("fig2 minus z") {
        FigureData f = fig2();
        std::vector<VertexSet> comps = components(f.graph, f.id("z"));
        REQUIRE(comps.size() == 2);
        std::set<VertexSet> got(comps.begin(), comps.end());
        REQUIRE(got.count(f.set({"x", "c", "b1", "b2", "d1", "d2"})) == 1);
        REQUIRE(got.count(f.set({"r1", "r2", "s1", "s2"})) == 1);
    }
    SECTION("distances are measured in the full graph") {
        FigureData f = fig1();
        std::vector<int> dist = distances_from(f.graph, f.id("z"));
        REQUIRE(dist[f.id("z")] == 0);
        REQUIRE(dist[f.id("a")] == 1);
        REQUIRE(dist[f.id("b")] == 2);
        REQUIRE(dist[f.id("e")] == 1);
        ComponentsAndDistances cd = components_and_distances(f.graph, f.id("z"), f.id("z"));
        REQUIRE(cd.components.size() == 3);
        REQUIRE(cd.dist == dist);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(components(star_graph(3), Vertex{9}), std::out_of_range);
        REQUIRE_THROWS_AS(components(Graph(1), Vertex{0}), std::invalid_argument);
    }
}

TEST_CASE("maximal cliques") {
    SECTION("claw") {
        std::vector<VertexSet> cliques = maximal_cliques(star_graph(3));
        REQUIRE(cliques.size() == 3);
        std::set<VertexSet> got(cliques.begin(), cliques.end());
        REQUIRE(got == std::set<VertexSet>{set_of(0) | set_of(1), set_of(0) | set_of(2),
                                           set_of(0) | set_of(3)});
    }
    SECTION("P4") {
        std::vector<VertexSet> cliques = maximal_cliques(path_graph(4));
        REQUIRE(cliques.size() == 3);
    }
    SECTION("fig1 has the four expected cliques") {
        FigureData f = fig1();
        std::vector<VertexSet> cliques = maximal_cliques(f.graph);
        std::set<VertexSet> got(cliques.begin(), cliques.end());
        REQUIRE(got == std::set<VertexSet>{f.set({"a", "b"}), f.set({"z", "a"}),
                                           f.set({"z", "c", "d"}), f.set({"z", "e", "f"})});
    }
    SECTION("clique properties on random graphs") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 2 + static_cast<int>(rng() % 7);
            Graph g = random_graph(rng, n, 0.5);
            VertexSet edge_cover = 0;
            for (VertexSet c : maximal_cliques(g)) {
                // every pair inside is an edge
                for_each_vertex(c, [&](Vertex u) {
                    for_each_vertex(c & ~(set_of(u) | (set_of(u) - 1)), [&](Vertex v) {
                        REQUIRE(g.adjacent(u, v));
                    });
                });
                // no outside vertex extends it
                for (Vertex v = 0; v < n; ++v)
                    if (!set_contains(c, v)) REQUIRE((g.neighbors(v) & c) != c);
            }
            // every edge lies in at least one clique
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (g.adjacent(u, v)) {
                        bool covered = false;
                        for (VertexSet c : maximal_cliques(g))
                            if (set_contains(c, u) && set_contains(c, v)) covered = true;
                        REQUIRE(covered);
                    }
        }
    }
}
