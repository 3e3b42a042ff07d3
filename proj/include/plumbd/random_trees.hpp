#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plumbd/graph.hpp"
#include "plumbd/plumbing.hpp"

namespace plumbd {

// Corpus generator for verification runs: uniform random trees by Prüfer
// sequence, weights uniform in [weight_min, weight_max], keeping only graphs
// whose plumbing matrix is negative definite. Deterministic for a fixed seed.
struct CorpusParams {
    std::size_t count = 100;
    std::size_t max_vertices = 5;
    long weight_min = -5;
    long weight_max = -1;
    std::uint64_t seed = 0;
};

inline PlumbingGraph tree_from_pruefer(const std::vector<std::size_t>& seq, std::size_t s,
                                       const std::vector<long>& weights) {
    PlumbingGraph g;
    for (std::size_t i = 0; i < s; ++i)
        g.vertices.push_back({static_cast<long>(i + 1), weights[i]});
    if (s == 1) return g;

    std::vector<std::size_t> degree(s, 1);
    for (std::size_t v : seq) ++degree[v];
    std::vector<bool> used(s, false);
    for (std::size_t v : seq) {
        std::size_t leaf = 0;
        while (leaf < s && !(degree[leaf] == 1 && !used[leaf])) ++leaf;
        used[leaf] = true;
        g.edges.emplace_back(static_cast<long>(leaf + 1), static_cast<long>(v + 1));
        --degree[v];
    }
    // Exactly two unused degree-1 vertices remain; they form the last edge.
    std::vector<std::size_t> tail;
    for (std::size_t i = 0; i < s; ++i)
        if (!used[i] && degree[i] == 1) tail.push_back(i);
    g.edges.emplace_back(static_cast<long>(tail.at(0) + 1), static_cast<long>(tail.at(1) + 1));
    return g;
}

inline std::vector<PlumbingGraph> random_tree_corpus(const CorpusParams& params) {
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, params.max_vertices);
    std::uniform_int_distribution<long> weight_dist(params.weight_min, params.weight_max);

    std::vector<PlumbingGraph> corpus;
    corpus.reserve(params.count);
    while (corpus.size() < params.count) {
        std::size_t s = size_dist(rng);
        std::vector<long> weights(s);
        for (auto& w : weights) w = weight_dist(rng);
        std::vector<std::size_t> seq;
        if (s >= 3) {
            std::uniform_int_distribution<std::size_t> vert(0, s - 1);
            seq.resize(s - 2);
            for (auto& v : seq) v = vert(rng);
        }
        PlumbingGraph g = tree_from_pruefer(seq, s, weights);
        try {
            PlumbingMatrix m = PlumbingMatrix::from_graph(g);
            if (!m.negative_definite()) continue;
        } catch (const SingularMatrixError&) {
            continue;
        }
        corpus.push_back(std::move(g));
    }
    return corpus;
}

}  // namespace plumbd
