#pragma once

#include <utility>

#include "plumbd/errors.hpp"
#include "plumbd/plumbing.hpp"
#include "plumbd/rational.hpp"

namespace plumbd {

// Characteristic vector in the dual basis: coordinates congruent to the
// weight vector mod 2 componentwise.
struct CharVector {
    IntVec coords;

    bool operator==(const CharVector& other) const { return coords == other.coords; }
    bool operator<(const CharVector& other) const { return coords < other.coords; }
};

inline bool is_characteristic(const IntVec& c, const PlumbingMatrix& m) {
    if (c.size() != m.size()) throw DimensionMismatchError("vector length != vertex count");
    for (std::size_t i = 0; i < c.size(); ++i)
        if ((c[i] - m.weights()[i]) % 2 != 0) return false;
    return true;
}

inline void require_characteristic(const CharVector& c, const PlumbingMatrix& m) {
    if (!is_characteristic(c.coords, m))
        throw NotCharacteristicError("vector is not characteristic for this plumbing");
}

// c^T M^{-1} c: the square of the class with dual-basis coordinates c.
// Negative definite M makes this <= 0, with equality only at c = 0.
inline Rat square(const CharVector& c, const PlumbingMatrix& m) {
    RatVec y = m.apply_inverse(c.coords);
    Rat acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) acc += y[i] * c.coords[i];
    return acc;
}

// chi_c(x) = -(c.x + x^T M x)/2, integer-valued on characteristic c and
// strictly convex when M is negative definite.
inline Int chi(const CharVector& c, const IntVec& x, const PlumbingMatrix& m) {
    if (x.size() != m.size()) throw DimensionMismatchError("vector length != vertex count");
    Int twice = dot(c.coords, x) + m.quad_form(x);
    if (twice % 2 != 0) throw Error("chi is non-integral; vector was not characteristic");
    return -twice / 2;
}

// Decides k - k' in 2 M Z^s by solving 2 M z = c1 - c2 exactly.
inline bool same_spinc(const CharVector& c1, const CharVector& c2, const PlumbingMatrix& m) {
    require_characteristic(c1, m);
    require_characteristic(c2, m);
    IntVec diff(m.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = c1.coords[i] - c2.coords[i];
    RatVec z = m.apply_inverse(diff);
    for (auto& zi : z) {
        zi /= 2;
        if (zi.get_den() != 1) return false;
    }
    return true;
}

// c + 2 M x, staying in the same spin^c class.
inline CharVector translate(const CharVector& c, const IntVec& x, const PlumbingMatrix& m) {
    IntVec mx = m.apply(x);
    IntVec out(c.coords.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c.coords[i] + 2 * mx[i];
    return CharVector{std::move(out)};
}

}  // namespace plumbd
