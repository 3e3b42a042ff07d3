#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "plumbd/charvec.hpp"
#include "plumbd/errors.hpp"
#include "plumbd/plumbing.hpp"
#include "plumbd/rational.hpp"

namespace plumbd {

// U^i tensor [K, E]: a lattice generator. E is a subset of vertex ids.
struct LatticeGenerator {
    CharVector k;
    std::vector<long> e;
    unsigned long u_power = 0;
};

namespace detail {

inline std::vector<std::size_t> subset_indices(const std::vector<long>& ids,
                                               const PlumbingMatrix& m) {
    std::set<long> seen;
    std::vector<std::size_t> idx;
    idx.reserve(ids.size());
    for (long id : ids) {
        if (!seen.insert(id).second)
            throw UnknownVertexError("repeated vertex id " + std::to_string(id) + " in subset");
        idx.push_back(m.index_of(id));
    }
    return idx;
}

}  // namespace detail

// Weight f(K, I) = (sum_{v in I} K(v) + sum_{v,v' in I} (v, v')) / 2, where
// the pairwise sum runs over all ordered pairs including v = v', i.e. the
// second term is E_I^T M E_I. Integral for characteristic K.
inline Int f_weight(const CharVector& k, const std::vector<long>& subset,
                    const PlumbingMatrix& m) {
    require_characteristic(k, m);
    std::vector<std::size_t> idx = detail::subset_indices(subset, m);
    Int twice = 0;
    for (std::size_t a : idx) twice += k.coords[a];
    for (std::size_t a : idx)
        for (std::size_t b : idx) twice += m.entries()(a, b);
    if (twice % 2 != 0) throw Error("f weight is non-integral; vector was not characteristic");
    return twice / 2;
}

// Minimal G-weight g([K, E]) = min over I subset of E of f(K, I). The empty
// subset contributes 0, so g <= 0 always. Enumeration walks the subset tree
// depth-first, extending the doubled weight incrementally along each prefix.
inline Int g_weight(const CharVector& k, const std::vector<long>& e, const PlumbingMatrix& m,
                    std::size_t cap = 20) {
    require_characteristic(k, m);
    std::vector<std::size_t> idx = detail::subset_indices(e, m);
    if (idx.size() > cap)
        throw SubsetCapExceededError("subset of size " + std::to_string(idx.size()) +
                                     " exceeds cap " + std::to_string(cap));
    Int best = 0;  // I = empty set
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, const Int&)> rec = [&](std::size_t next, const Int& twice_f) {
        if (twice_f % 2 != 0) throw Error("f weight is non-integral; vector was not characteristic");
        if (twice_f / 2 < best) best = twice_f / 2;
        for (std::size_t p = next; p < idx.size(); ++p) {
            std::size_t v = idx[p];
            Int delta = k.coords[v] + m.entries()(v, v);
            for (std::size_t w : chosen) delta += 2 * m.entries()(v, w);
            chosen.push_back(v);
            rec(p + 1, twice_f + delta);
            chosen.pop_back();
        }
    };
    rec(0, Int(0));
    return best;
}

// Absolute grading of U^i [K, E]:
//   -2i + 2 g([K, E]) + |E| + (K^2 + s) / 4
// with the trace cobordism contributing chi(W) = s, sigma(W) = -s.
inline Rat grading(const LatticeGenerator& gen, const PlumbingMatrix& m) {
    Int g = g_weight(gen.k, gen.e, m);
    Rat base = (square(gen.k, m) + Rat(static_cast<long>(m.size()))) / 4;
    return base + Rat(2) * Rat(g) - Rat(2) * Rat(static_cast<long>(gen.u_power)) +
           Rat(static_cast<long>(gen.e.size()));
}

}  // namespace plumbd
