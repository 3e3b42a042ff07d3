#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plumbd/rational.hpp"

namespace plumbd {

// A weighted tree of surgery vertices. Vertices keep their input order; all
// vectors and matrices downstream are indexed in that order.
struct PlumbingGraph {
    struct Vertex {
        long id;
        long weight;
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<long, long>> edges;  // unordered pairs, stored as given

    std::size_t size() const { return vertices.size(); }
};

enum class ViolationKind {
    EmptyGraph,
    DuplicateVertexId,
    SelfLoop,
    DuplicateEdge,
    UnknownEndpoint,
    CycleFound,
    Disconnected,
};

inline const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::EmptyGraph: return "EmptyGraph";
        case ViolationKind::DuplicateVertexId: return "DuplicateVertexId";
        case ViolationKind::SelfLoop: return "SelfLoop";
        case ViolationKind::DuplicateEdge: return "DuplicateEdge";
        case ViolationKind::UnknownEndpoint: return "UnknownEndpoint";
        case ViolationKind::CycleFound: return "CycleFound";
        case ViolationKind::Disconnected: return "Disconnected";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<long> ids;  // offending vertex ids

    std::string describe() const {
        std::ostringstream os;
        os << violation_name(kind);
        if (!ids.empty()) {
            os << " [";
            for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
            os << "]";
        }
        return os.str();
    }
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string describe() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.describe();
        }
        return s;
    }
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false when x and y were already connected.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        return true;
    }
};

}  // namespace detail

// Lists every violated tree invariant; an empty report certifies a connected
// weighted tree with distinct vertex ids.
inline ValidationReport validate_graph(const PlumbingGraph& g) {
    ValidationReport report;
    const std::size_t s = g.vertices.size();
    if (s == 0) {
        report.violations.push_back({ViolationKind::EmptyGraph, {}});
        return report;
    }

    std::map<long, std::size_t> index;
    for (std::size_t i = 0; i < s; ++i) {
        auto [it, inserted] = index.emplace(g.vertices[i].id, i);
        if (!inserted)
            report.violations.push_back({ViolationKind::DuplicateVertexId, {g.vertices[i].id}});
    }

    detail::UnionFind uf(s);
    std::map<std::pair<long, long>, int> seen;
    for (const auto& [a, b] : g.edges) {
        if (a == b) {
            report.violations.push_back({ViolationKind::SelfLoop, {a}});
            continue;
        }
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            report.violations.push_back({ViolationKind::UnknownEndpoint, {a, b}});
            continue;
        }
        auto key = std::minmax(a, b);
        if (++seen[{key.first, key.second}] > 1) {
            report.violations.push_back({ViolationKind::DuplicateEdge, {a, b}});
            continue;
        }
        if (!uf.unite(ia->second, ib->second))
            report.violations.push_back({ViolationKind::CycleFound, {a, b}});
    }

    std::vector<long> component_heads;
    for (std::size_t i = 0; i < s; ++i)
        if (uf.find(i) == i) component_heads.push_back(g.vertices[i].id);
    if (component_heads.size() > 1)
        report.violations.push_back({ViolationKind::Disconnected, component_heads});

    return report;
}

// Weight vector in input order.
inline IntVec weight_vector(const PlumbingGraph& g) {
    IntVec m;
    m.reserve(g.size());
    for (const auto& v : g.vertices) m.emplace_back(v.weight);
    return m;
}

}  // namespace plumbd
