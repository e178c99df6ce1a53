#pragma once

#include <string>
#include <vector>

#include "improper/graph.hpp"
#include "improper/realization.hpp"

namespace improper {

/// Bundled example representation: a named graph together with the interval
/// diagram it was transcribed from.
struct FigureData {
    Graph graph;
    Realization realization;
    std::vector<std::string> names;

    Vertex id(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<Vertex>(i);
        throw std::invalid_argument("unknown vertex name " + name);
    }

    VertexSet set(std::initializer_list<const char*> list) const {
        VertexSet s = 0;
        for (const char* name : list) s |= set_of(id(name));
        return s;
    }
};

/// 7-vertex example with impropriety 2: a long interval with a two-interval
/// tail on the left, a two-clique block on the right, and a nested pair.
/// Vertices: z a b c d e f (ids 0..6).
inline FigureData fig1() {
    FigureData f;
    f.names = {"z", "a", "b", "c", "d", "e", "f"};
    f.graph = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
    f.realization.order = 7;
    f.realization.intervals = {
        {Rational(-3), Rational(3)},           // z
        {Rational(-4), Rational(-5, 2)},       // a
        {Rational(-5), Rational(-7, 2)},       // b
        {Rational(5, 2), Rational(4)},         // c
        {Rational(5, 2), Rational(4)},         // d
        {Rational(-3, 4), Rational(3, 4)},     // e
        {Rational(-3, 4), Rational(3, 4)},     // f
    };
    return f;
}

/// 11-vertex example with impropriety 4: both side components are confined.
/// Vertices: z x c b1 b2 d1 d2 s1 s2 r1 r2 (ids 0..10).
inline FigureData fig2() {
    FigureData f;
    f.names = {"z", "x", "c", "b1", "b2", "d1", "d2", "s1", "s2", "r1", "r2"};
    f.graph = Graph::from_edges(
        11, {{1, 2},  {2, 0},  {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 0}, {4, 0}, {5, 6},
             {5, 0},  {6, 0},  {0, 9}, {0, 10}, {9, 10}, {0, 7}, {0, 8}, {7, 8}, {8, 9}});
    f.realization.order = 11;
    f.realization.intervals = {
        {Rational(-3), Rational(3)},             // z
        {Rational(-21, 4), Rational(-15, 4)},    // x
        {Rational(-9, 2), Rational(-1, 2)},      // c
        {Rational(-7, 2), Rational(-5, 2)},      // b1
        {Rational(-7, 2), Rational(-5, 2)},      // b2
        {Rational(-9, 4), Rational(-5, 4)},      // d1
        {Rational(-9, 4), Rational(-5, 4)},      // d2
        {Rational(5, 4), Rational(7, 4)},        // s1
        {Rational(5, 4), Rational(5, 2)},        // s2
        {Rational(2), Rational(13, 4)},          // r1
        {Rational(11, 4), Rational(13, 4)},      // r2
    };
    return f;
}

}  // namespace improper
