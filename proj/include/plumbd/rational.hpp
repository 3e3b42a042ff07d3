#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plumbd {

// All arithmetic in the library is exact. Integers are GMP bignums and
// rationals are always kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Nearest integer, halves rounded up: floor(x + 1/2).
inline Int rat_round(const Rat& x) {
    Int two_num = 2 * x.get_num() + x.get_den();
    Int q;
    Int two_den = 2 * x.get_den();
    mpz_fdiv_q(q.get_mpz_t(), two_num.get_mpz_t(), two_den.get_mpz_t());
    return q;
}

// floor(sqrt(n)) for n >= 0.
inline Int int_sqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Lowest-terms string: "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Int dot(const IntVec& a, const IntVec& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline bool lex_less(const IntVec& a, const IntVec& b) { return a < b; }

}  // namespace plumbd
