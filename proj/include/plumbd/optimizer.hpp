#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "plumbd/charvec.hpp"
#include "plumbd/errors.hpp"
#include "plumbd/plumbing.hpp"
#include "plumbd/rational.hpp"

namespace plumbd {

// Certified global minimum of chi over Z^s. The ball of squared radius
// search_radius_sq around the real stationary point provably contains every
// integer point attaining the minimum, and every integer point of the
// scanned ball was evaluated.
struct MinChiResult {
    Int min_value;
    IntVec argmin;  // lexicographically smallest global minimizer
    Rat search_radius_sq;
    std::uint64_t points_scanned = 0;
};

// Stationary point of the real extension of chi: x* = -M^{-1} c / 2.
inline RatVec continuous_minimizer(const CharVector& c, const PlumbingMatrix& m) {
    if (!m.negative_definite())
        throw NotNegativeDefiniteError("continuous minimizer requires negative definite M");
    RatVec x = m.apply_inverse(c.coords);
    for (auto& xi : x) xi /= -2;
    return x;
}

// 1 / ||(-M)^{-1}||_inf, an exact rational lower bound for the smallest
// eigenvalue of -M (the infinity norm dominates the spectral radius).
inline Rat lambda_lower_bound(const PlumbingMatrix& m) {
    if (!m.negative_definite())
        throw NotNegativeDefiniteError("eigenvalue bound requires negative definite M");
    Rat max_row_sum = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rat row = 0;
        for (std::size_t j = 0; j < m.size(); ++j) row += abs(m.inverse()(i, j));
        if (row > max_row_sum) max_row_sum = row;
    }
    return 1 / max_row_sum;
}

namespace detail {

// Real minimum of chi: chi(x*) = square(c) / 8.
inline Rat chi_real_min(const CharVector& c, const PlumbingMatrix& m) {
    return square(c, m) / 8;
}

inline IntVec round_componentwise(const RatVec& x) {
    IntVec r;
    r.reserve(x.size());
    for (const auto& xi : x) r.push_back(rat_round(xi));
    return r;
}

// Visits every x in Z^s with sum_i (x_i - center_i)^2 <= rad_sq, coordinates
// ascending, hence points in lexicographic order. Bounds per coordinate are
// exact: with center_i = p/q and remaining budget B, admissible t satisfy
// (t q - p)^2 <= floor(B q^2).
template <typename Visit>
std::uint64_t for_each_in_ball(const RatVec& center, const Rat& rad_sq, Visit&& visit) {
    const std::size_t s = center.size();
    IntVec x(s, Int(0));
    std::uint64_t visited = 0;

    std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t i, const Rat& budget) {
        if (i == s) {
            ++visited;
            visit(const_cast<const IntVec&>(x));
            return;
        }
        const Int& p = center[i].get_num();
        const Int& q = center[i].get_den();
        Int cap = rat_floor(budget * q * q);
        Int w = int_sqrt(cap);
        Int lo, hi;
        {
            Int a = p - w;
            mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
            Int b = p + w;
            mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), q.get_mpz_t());
        }
        for (Int t = lo; t <= hi; ++t) {
            Rat d = Rat(t) - center[i];
            x[i] = t;
            rec(i + 1, budget - d * d);
        }
    };

    if (rad_sq >= 0) rec(0, rad_sq);
    return visited;
}

// Unit-step coordinate descent from the rounded stationary point. Stops at a
// local (per-coordinate) minimum; certification never relies on this value
// being globally optimal.
inline IntVec coordinate_descent(const CharVector& c, const PlumbingMatrix& m, IntVec x) {
    Int cur = chi(c, x, m);
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (int step : {1, -1}) {
                for (;;) {
                    x[i] += step;
                    Int v = chi(c, x, m);
                    if (v < cur) {
                        cur = v;
                        improved = true;
                    } else {
                        x[i] -= step;
                        break;
                    }
                }
            }
        }
    }
    return x;
}

struct ScanResult {
    Int min_value;
    IntVec argmin;         // lex-smallest minimizer x
    CharVector maximizer;  // lex-smallest c + 2Mx over minimizing x
    Rat certified_radius_sq;
    std::uint64_t points_scanned;
};

// One certified scan shared by min_chi and max_square_in_class: descend to a
// value V, enumerate the ball that provably contains every point with
// chi <= V, and track both tie-break orders while doing so.
inline ScanResult certified_scan(const CharVector& c, const PlumbingMatrix& m) {
    require_characteristic(c, m);
    RatVec xstar = continuous_minimizer(c, m);
    Rat chi_star = chi_real_min(c, m);
    Rat lambda = lambda_lower_bound(m);

    IntVec warm = coordinate_descent(c, m, round_componentwise(xstar));
    Int v = chi(c, warm, m);

    Rat scan_rad_sq = 2 * (Rat(v) - chi_star) / lambda;

    ScanResult res;
    bool first = true;
    res.points_scanned = for_each_in_ball(xstar, scan_rad_sq, [&](const IntVec& x) {
        Int val = chi(c, x, m);
        if (first || val < res.min_value) {
            first = false;
            res.min_value = val;
            res.argmin = x;  // lex order follows visit order
            res.maximizer = translate(c, x, m);
        } else if (val == res.min_value) {
            CharVector cand = translate(c, x, m);
            if (cand < res.maximizer) res.maximizer = std::move(cand);
        }
    });
    // The warm start lies in the scanned ball, so the scan saw at least it.
    res.certified_radius_sq = 2 * (Rat(res.min_value) - chi_star) / lambda;
    return res;
}

}  // namespace detail

inline MinChiResult min_chi(const CharVector& c, const PlumbingMatrix& m) {
    detail::ScanResult scan = detail::certified_scan(c, m);
    return {scan.min_value, scan.argmin, scan.certified_radius_sq, scan.points_scanned};
}

// Maximum of square over the coset c + 2MZ^s via the exact identity
// square(c + 2Mx) = square(c) - 8 chi_c(x). Ties among maximizing vectors
// break lexicographically.
inline std::pair<Rat, CharVector> max_square_in_class(const CharVector& c,
                                                      const PlumbingMatrix& m) {
    detail::ScanResult scan = detail::certified_scan(c, m);
    Rat best = square(c, m) - 8 * Rat(scan.min_value);
    return {best, scan.maximizer};
}

// Exhaustive oracle: evaluates chi over the full integer box of the given
// radius around the rounded stationary point. Throws unless the box contains
// the certified ball derived from the minimum it found.
inline MinChiResult brute_force_min_chi(const CharVector& c, const PlumbingMatrix& m,
                                        long radius) {
    require_characteristic(c, m);
    if (radius < 0) throw PreconditionError("box radius must be nonnegative");
    const std::size_t s = m.size();
    RatVec xstar = continuous_minimizer(c, m);
    IntVec x0 = detail::round_componentwise(xstar);

    MinChiResult res;
    IntVec x(s);
    std::vector<long> off(s, -radius);
    bool first = true;
    for (;;) {
        for (std::size_t i = 0; i < s; ++i) x[i] = x0[i] + off[i];
        Int val = chi(c, x, m);
        ++res.points_scanned;
        if (first || val < res.min_value) {
            first = false;
            res.min_value = val;
            res.argmin = x;
        }
        std::size_t i = s;
        while (i > 0 && off[i - 1] == radius) off[--i] = -radius;
        if (i == 0) break;
        ++off[i - 1];
    }

    res.search_radius_sq =
        2 * (Rat(res.min_value) - detail::chi_real_min(c, m)) / lambda_lower_bound(m);

    // Certified-ball containment: the per-coordinate integer extent of the
    // ball must fit inside the box.
    for (std::size_t i = 0; i < s; ++i) {
        const Int& p = xstar[i].get_num();
        const Int& q = xstar[i].get_den();
        Int w = int_sqrt(rat_floor(res.search_radius_sq * q * q));
        Int lo, hi;
        Int a = p - w, b = p + w;
        mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), q.get_mpz_t());
        if (lo < x0[i] - radius || hi > x0[i] + radius)
            throw RadiusTooSmallError("box does not contain the certified ball");
    }
    return res;
}

}  // namespace plumbd
