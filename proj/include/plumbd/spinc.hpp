#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "plumbd/charvec.hpp"
#include "plumbd/errors.hpp"
#include "plumbd/linalg.hpp"
#include "plumbd/optimizer.hpp"
#include "plumbd/plumbing.hpp"

namespace plumbd {

// One spin^c structure: a coset of 2MZ^s inside Char. `rep` is the
// deterministic enumeration representative derived from the Smith normal
// form; `canonical_rep` upgrades it to the square maximizer.
struct SpincClass {
    CharVector rep;
    std::size_t index;
};

// Enumerates Char / 2MZ^s through Z^s / MZ^s: with M = P diag(d) Q and P, Q
// unimodular, the cosets of MZ^s are { P t : 0 <= t_i < d_i }, and u maps to
// the characteristic vector m + 2u. Ordering is lexicographic in t.
inline std::vector<SpincClass> enumerate_spinc(const PlumbingMatrix& m) {
    const std::size_t s = m.size();
    SmithResult snf = smith_normal_form(m.entries());

    Int total = 1;
    for (const auto& d : snf.diag) total *= d;
    if (total != abs(m.det())) throw Error("Smith normal form disagrees with the determinant");
    if (!total.fits_ulong_p() || total.get_ui() > 50'000'000UL)
        throw Error("spin^c enumeration too large: |H1| = " + total.get_str());
    const unsigned long count = total.get_ui();

    std::vector<SpincClass> classes;
    classes.reserve(count);
    IntVec t(s, Int(0));
    for (unsigned long idx = 0; idx < count; ++idx) {
        IntVec u = mat_vec(snf.left, t);
        IntVec rep(s);
        for (std::size_t i = 0; i < s; ++i) rep[i] = m.weights()[i] + 2 * u[i];
        classes.push_back({CharVector{std::move(rep)}, idx});

        std::size_t i = s;
        while (i > 0) {
            --i;
            if (++t[i] < snf.diag[i]) break;
            t[i] = 0;
        }
    }
    return classes;
}

// Square-maximizing representative, ties broken by lexicographically smallest
// coordinates. Idempotent: a class whose rep already maximizes comes back
// unchanged.
inline CharVector canonical_rep(const SpincClass& cls, const PlumbingMatrix& m) {
    return max_square_in_class(cls.rep, m).second;
}

}  // namespace plumbd
