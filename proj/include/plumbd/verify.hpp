#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "plumbd/charvec.hpp"
#include "plumbd/dinvariant.hpp"
#include "plumbd/graded_root.hpp"
#include "plumbd/optimizer.hpp"
#include "plumbd/random_trees.hpp"
#include "plumbd/spinc.hpp"

namespace plumbd {

struct VerifyOptions {
    CorpusParams corpus;
    long oracle_radius = -1;  // < 0: derive from the certified ball
    std::size_t coset_samples = 3;
    Int root_levels = 2;  // graded roots built to min chi + root_levels
};

struct VerifyOutcome {
    std::size_t manifolds = 0;
    std::size_t classes = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

namespace detail {

// Smallest box radius around the rounded stationary point that contains the
// certified ball reported by a scan.
inline long box_radius_for(const CharVector& c, const PlumbingMatrix& m, const Rat& rad_sq) {
    RatVec xstar = continuous_minimizer(c, m);
    IntVec x0 = round_componentwise(xstar);
    Int best = 0;
    for (std::size_t i = 0; i < xstar.size(); ++i) {
        const Int& p = xstar[i].get_num();
        const Int& q = xstar[i].get_den();
        Int w = int_sqrt(rat_floor(rad_sq * q * q));
        Int lo, hi;
        Int a = p - w, b = p + w;
        mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), q.get_mpz_t());
        Int span = hi - x0[i];
        if (span > best) best = span;
        span = x0[i] - lo;
        if (span > best) best = span;
    }
    return best.get_si();
}

// Exhaustive maximum of square over { c + 2Mx : x in box } around the rounded
// stationary point; independent route to max_square_in_class.
inline Rat box_coset_max_square(const CharVector& c, const PlumbingMatrix& m, long radius) {
    const std::size_t s = m.size();
    IntVec x0 = round_componentwise(continuous_minimizer(c, m));
    std::vector<long> off(s, -radius);
    IntVec x(s);
    bool first = true;
    Rat best;
    for (;;) {
        for (std::size_t i = 0; i < s; ++i) x[i] = x0[i] + off[i];
        Rat sq = square(translate(c, x, m), m);
        if (first || sq > best) {
            first = false;
            best = sq;
        }
        std::size_t i = s;
        while (i > 0 && off[i - 1] == radius) off[--i] = -radius;
        if (i == 0) break;
        ++off[i - 1];
    }
    return best;
}

}  // namespace detail

// Cross-checks one manifold: certified optimizer against the exhaustive
// oracle, the graded-root route against the coset-maximum route, and coset
// invariance of d under random translations.
inline void verify_manifold(const PlumbingMatrix& m, const VerifyOptions& opt,
                            std::mt19937_64& rng, VerifyOutcome& out,
                            const std::string& label) {
    auto fail = [&](const std::string& msg) { out.failures.push_back(label + ": " + msg); };

    std::vector<SpincClass> classes = enumerate_spinc(m);
    ++out.manifolds;
    out.classes += classes.size();

    if (Int(static_cast<unsigned long>(classes.size())) != abs(m.det()))
        fail("class count != |det M|");
    ++out.checks;

    std::uniform_int_distribution<long> coord(-2, 2);

    for (const auto& cls : classes) {
        MinChiResult mc = min_chi(cls.rep, m);
        long radius = opt.oracle_radius >= 0
                          ? opt.oracle_radius
                          : detail::box_radius_for(cls.rep, m, mc.search_radius_sq);
        try {
            MinChiResult bf = brute_force_min_chi(cls.rep, m, radius);
            ++out.checks;
            if (bf.min_value != mc.min_value)
                fail("min_chi disagrees with brute force on class " + std::to_string(cls.index));
            if (bf.argmin != mc.argmin)
                fail("argmin disagrees with brute force on class " + std::to_string(cls.index));
            if (bf.search_radius_sq != mc.search_radius_sq)
                fail("certified radius disagrees on class " + std::to_string(cls.index));
        } catch (const RadiusTooSmallError&) {
            fail("oracle box smaller than the certified ball on class " +
                 std::to_string(cls.index));
        }

        auto [max_sq, maximizer] = max_square_in_class(cls.rep, m);
        ++out.checks;
        if (detail::box_coset_max_square(cls.rep, m, radius) != max_sq)
            fail("coset maximum disagrees with box search on class " + std::to_string(cls.index));
        if (!same_spinc(maximizer, cls.rep, m))
            fail("maximizer left its spin^c class on class " + std::to_string(cls.index));
        if (square(maximizer, m) != max_sq)
            fail("maximizer square mismatch on class " + std::to_string(cls.index));

        Rat d = (max_sq + Rat(static_cast<long>(m.size()))) / 4;
        GradedRoot root = graded_root(cls.rep, m, mc.min_value + opt.root_levels);
        ++out.checks;
        if (d_from_root(root) != d)
            fail("d from graded root disagrees on class " + std::to_string(cls.index));

        for (std::size_t k = 0; k < opt.coset_samples; ++k) {
            IntVec x(m.size());
            for (auto& xi : x) xi = coord(rng);
            ++out.checks;
            if (d_of_vector(translate(cls.rep, x, m), m) != d) {
                fail("d not coset invariant on class " + std::to_string(cls.index));
                break;
            }
        }
    }
}

inline VerifyOutcome run_verification(const VerifyOptions& opt, std::ostream& log) {
    VerifyOutcome out;
    std::vector<PlumbingGraph> corpus = random_tree_corpus(opt.corpus);
    std::mt19937_64 rng(opt.corpus.seed + 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        PlumbingMatrix m = PlumbingMatrix::from_graph(corpus[i]);
        verify_manifold(m, opt, rng, out, "tree " + std::to_string(i));
    }
    log << "verified " << out.manifolds << " manifolds, " << out.classes << " spin^c classes, "
        << out.checks << " checks, " << out.failures.size() << " failures\n";
    for (const auto& f : out.failures) log << "MISMATCH " << f << "\n";
    return out;
}

}  // namespace plumbd
