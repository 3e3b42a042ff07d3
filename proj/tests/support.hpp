#pragma once

#include <initializer_list>
#include <vector>

#include "plumbd/plumbd.hpp"

namespace testutil {

using plumbd::Int;
using plumbd::IntMat;
using plumbd::IntVec;
using plumbd::Rat;

inline IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline IntVec vec(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline plumbd::CharVector cvec(std::initializer_list<long> xs) {
    return plumbd::CharVector{vec(xs)};
}

// Independent determinant oracle: cofactor expansion along the first row.
inline Int det_cofactor(const IntMat& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntMat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        Int term = a(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline plumbd::PlumbingGraph e8_graph() {
    plumbd::PlumbingGraph g;
    for (long i = 1; i <= 8; ++i) g.vertices.push_back({i, -2});
    g.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
    return g;
}

inline plumbd::PlumbingGraph single_vertex(long weight) {
    plumbd::PlumbingGraph g;
    g.vertices.push_back({1, weight});
    return g;
}

// Two vertices weighted -2 and -3, joined by an edge; det 5.
inline plumbd::PlumbingGraph pair_graph() {
    plumbd::PlumbingGraph g;
    g.vertices.push_back({1, -2});
    g.vertices.push_back({2, -3});
    g.edges = {{1, 2}};
    return g;
}

}  // namespace testutil
