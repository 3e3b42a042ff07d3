#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plumbd/charvec.hpp"
#include "plumbd/errors.hpp"
#include "plumbd/graph.hpp"
#include "plumbd/optimizer.hpp"
#include "plumbd/plumbing.hpp"
#include "plumbd/rational.hpp"

namespace plumbd {

// A connected component of { x : chi_K(x) <= t } under unit-step adjacency.
struct SublevelComponent {
    std::vector<IntVec> points;  // sorted lexicographically
};

// Enumerates the (finite, by strict convexity) sublevel set of chi_K at
// level t inside its certified ball and partitions it with union-find,
// joining x with x + e_i whenever both lie in the set. Components come back
// ordered by their smallest point. A level below the minimum of chi yields
// an empty list, not a failure.
inline std::vector<SublevelComponent> sublevel_components(const CharVector& k, const Int& t,
                                                          const PlumbingMatrix& m) {
    require_characteristic(k, m);
    if (!m.negative_definite())
        throw NotNegativeDefiniteError("sublevel sets are finite only for negative definite M");

    RatVec xstar = continuous_minimizer(k, m);
    Rat rad_sq = 2 * (Rat(t) - detail::chi_real_min(k, m)) / lambda_lower_bound(m);
    if (rad_sq < 0) return {};

    std::vector<IntVec> points;
    detail::for_each_in_ball(xstar, rad_sq, [&](const IntVec& x) {
        if (chi(k, x, m) <= t) points.push_back(x);
    });
    if (points.empty()) return {};
    std::sort(points.begin(), points.end());

    std::map<IntVec, std::size_t> where;
    for (std::size_t i = 0; i < points.size(); ++i) where.emplace(points[i], i);

    detail::UnionFind uf(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        IntVec nb = points[i];
        for (std::size_t d = 0; d < nb.size(); ++d) {
            nb[d] += 1;
            auto it = where.find(nb);
            if (it != where.end()) uf.unite(i, it->second);
            nb[d] -= 1;
        }
    }

    std::map<std::size_t, std::size_t> root_to_comp;
    std::vector<SublevelComponent> comps;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::size_t r = uf.find(i);
        auto [it, inserted] = root_to_comp.emplace(r, comps.size());
        if (inserted) comps.emplace_back();
        comps[it->second].points.push_back(points[i]);
    }
    // Point lists inherit sortedness; the first point of the first component
    // is the global lex minimum, so components are ordered by smallest point.
    return comps;
}

// Merge tree of sublevel components for t in [min chi, t_max]. Each node at
// level t has its unique containing component at t + 1 as parent; node ids
// are deterministic (components sorted by smallest contained point). The
// grading of a level-t node is (K^2 + s)/4 - 2t.
struct GradedRoot {
    struct Node {
        Int level;
        IntVec min_point;    // deterministic component id
        std::size_t size;    // number of lattice points in the component
        Rat lambda;          // absolute grading
        long parent = -1;    // index into nodes, -1 at the cutoff level
    };

    std::vector<Node> nodes;  // sorted by (level, min_point)
    Int min_level;
    Int cutoff;
    Rat base_grading;  // (K^2 + s)/4
};

inline GradedRoot graded_root(const CharVector& k, const PlumbingMatrix& m, const Int& t_max) {
    MinChiResult mc = min_chi(k, m);
    if (t_max < mc.min_value)
        throw PreconditionError("graded root cutoff below the minimum of chi");

    GradedRoot root;
    root.min_level = mc.min_value;
    root.cutoff = t_max;
    root.base_grading = (square(k, m) + Rat(static_cast<long>(m.size()))) / 4;

    std::vector<std::vector<SublevelComponent>> levels;
    for (Int t = mc.min_value; t <= t_max; ++t)
        levels.push_back(sublevel_components(k, t, m));

    std::vector<std::size_t> offsets;  // node index of each level's first component
    std::size_t running = 0;
    for (const auto& lvl : levels) {
        offsets.push_back(running);
        running += lvl.size();
    }

    for (std::size_t li = 0; li < levels.size(); ++li) {
        Int t = root.min_level + static_cast<long>(li);
        // Membership map of the next level up, for parent resolution.
        std::map<IntVec, std::size_t> up;
        if (li + 1 < levels.size())
            for (std::size_t ci = 0; ci < levels[li + 1].size(); ++ci)
                for (const auto& pt : levels[li + 1][ci].points) up.emplace(pt, ci);
        for (std::size_t ci = 0; ci < levels[li].size(); ++ci) {
            const auto& comp = levels[li][ci];
            GradedRoot::Node node;
            node.level = t;
            node.min_point = comp.points.front();
            node.size = comp.points.size();
            node.lambda = root.base_grading - 2 * Rat(t);
            if (li + 1 < levels.size())
                node.parent = static_cast<long>(offsets[li + 1] + up.at(comp.points.front()));
            root.nodes.push_back(std::move(node));
        }
    }
    return root;
}

// Grading at the start of the minimum-level chain: equals the d-invariant of
// the class of K.
inline Rat d_from_root(const GradedRoot& root) {
    return root.base_grading - 2 * Rat(root.min_level);
}

// Graphviz digraph, edges from each level-t node to its level-(t+1) parent.
inline std::string root_to_dot(const GradedRoot& root, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph \"" << graph_name << "\" {\n";
    os << "  rankdir=BT;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < root.nodes.size(); ++i) {
        const auto& n = root.nodes[i];
        os << "  n" << i << " [label=\"t=" << n.level.get_str()
           << " \xce\xbb=" << rat_str(n.lambda) << "\"];\n";
    }
    for (std::size_t i = 0; i < root.nodes.size(); ++i)
        if (root.nodes[i].parent >= 0) os << "  n" << i << " -> n" << root.nodes[i].parent << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace plumbd
