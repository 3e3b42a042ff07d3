#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>
#include <vector>

#include "plumbd/optimizer.hpp"
#include "plumbd/spinc.hpp"

namespace plumbd {

struct DInvariantReport {
    std::size_t class_index;
    Rat d;                 // (max_square + s) / 4, exact
    CharVector maximizer;  // attains max_square within the class
    Rat max_square;
};

// d of the class containing c, without reference to class indexing.
inline Rat d_of_vector(const CharVector& c, const PlumbingMatrix& m) {
    Rat max_sq = max_square_in_class(c, m).first;
    return (max_sq + Rat(static_cast<long>(m.size()))) / 4;
}

inline DInvariantReport d_invariant(const SpincClass& cls, const PlumbingMatrix& m) {
    auto [max_sq, maximizer] = max_square_in_class(cls.rep, m);
    DInvariantReport rep;
    rep.class_index = cls.index;
    rep.max_square = max_sq;
    rep.maximizer = std::move(maximizer);
    rep.d = (rep.max_square + Rat(static_cast<long>(m.size()))) / 4;
    return rep;
}

// One report per spin^c class, ordered by class index. Classes are
// independent computations, so they may be fanned out across threads; the
// assembly order is by index either way.
inline std::vector<DInvariantReport> d_invariants_all(const PlumbingMatrix& m,
                                                      bool parallel = false) {
    std::vector<SpincClass> classes = enumerate_spinc(m);
    std::vector<DInvariantReport> reports(classes.size());
    if (!parallel || classes.size() < 2) {
        for (std::size_t i = 0; i < classes.size(); ++i) reports[i] = d_invariant(classes[i], m);
        return reports;
    }
    const unsigned workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), classes.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < classes.size(); i = next.fetch_add(1))
                reports[i] = d_invariant(classes[i], m);
        });
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace plumbd
