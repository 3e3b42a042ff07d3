#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace plumbd;
using testutil::cvec;
using testutil::vec;

namespace {

// Random characteristic vector m + 2u with u in a small box.
CharVector random_char(const PlumbingMatrix& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> u(-5, 5);
    IntVec c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m.weights()[i] + 2 * u(rng);
    return CharVector{c};
}

IntVec random_vec(std::size_t s, std::mt19937_64& rng, long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntVec x(s);
    for (auto& xi : x) xi = d(rng);
    return x;
}

}  // namespace

TEST_CASE("characteristic membership is the componentwise parity condition") {
    PlumbingMatrix m2 = build_matrix(testutil::single_vertex(-2));
    CHECK(is_characteristic(vec({0}), m2));
    CHECK(!is_characteristic(vec({1}), m2));

    PlumbingMatrix pair = build_matrix(testutil::pair_graph());
    CHECK(is_characteristic(vec({0, 1}), pair));
    CHECK(!is_characteristic(vec({1, 1}), pair));
    CHECK_THROWS_AS(is_characteristic(vec({0}), pair), DimensionMismatchError);
}

TEST_CASE("square is c^T M^-1 c") {
    PlumbingMatrix m1 = build_matrix(testutil::single_vertex(-1));
    CHECK(square(cvec({-1}), m1) == -1);

    PlumbingMatrix m2 = build_matrix(testutil::single_vertex(-2));
    CHECK(square(cvec({-2}), m2) == -2);

    PlumbingMatrix e8 = build_matrix(testutil::e8_graph());
    CHECK(square(CharVector{IntVec(8, Int(0))}, e8) == 0);
}

TEST_CASE("square is nonpositive and vanishes only at zero") {
    std::mt19937_64 rng(3);
    PlumbingMatrix pair = build_matrix(testutil::pair_graph());
    for (int i = 0; i < 100; ++i) {
        CharVector c = random_char(pair, rng);
        Rat sq = square(c, pair);
        CHECK(sq <= 0);
        if (c.coords != IntVec(2, Int(0))) CHECK(sq < 0);
    }
}

TEST_CASE("chi values from the definition") {
    PlumbingMatrix m1 = build_matrix(testutil::single_vertex(-1));
    CHECK(chi(cvec({-1}), vec({0}), m1) == 0);
    CHECK(chi(cvec({-1}), vec({1}), m1) == 1);

    PlumbingMatrix m2 = build_matrix(testutil::single_vertex(-2));
    CHECK(chi(cvec({-2}), vec({1}), m2) == 2);
    CHECK(chi(cvec({-2}), vec({0}), m2) == 0);
}

TEST_CASE("c.x + x^T M x is even for characteristic c") {
    std::mt19937_64 rng(5);
    for (const auto& graph : {testutil::pair_graph(), testutil::e8_graph()}) {
        PlumbingMatrix m = build_matrix(graph);
        for (int i = 0; i < 200; ++i) {
            CharVector c = random_char(m, rng);
            IntVec x = random_vec(m.size(), rng);
            Int val = dot(c.coords, x) + m.quad_form(x);
            CHECK(val % 2 == 0);
        }
    }
}

TEST_CASE("coset identity: square(c + 2Mx) = square(c) - 8 chi(c, x)") {
    std::mt19937_64 rng(9);
    for (const auto& graph : {testutil::pair_graph(), testutil::e8_graph()}) {
        PlumbingMatrix m = build_matrix(graph);
        for (int i = 0; i < 200; ++i) {
            CharVector c = random_char(m, rng);
            IntVec x = random_vec(m.size(), rng);
            CHECK(square(translate(c, x, m), m) == square(c, m) - 8 * Rat(chi(c, x, m)));
        }
    }
}

TEST_CASE("spin^c equivalence by exact solve") {
    PlumbingMatrix m2 = build_matrix(testutil::single_vertex(-2));
    CHECK(same_spinc(cvec({0}), cvec({-4}), m2));
    CHECK(!same_spinc(cvec({0}), cvec({2}), m2));
    CHECK(same_spinc(cvec({-2}), cvec({-2}), m2));
}

TEST_CASE("same_spinc is an equivalence relation on sampled vectors") {
    std::mt19937_64 rng(17);
    PlumbingMatrix m = build_matrix(testutil::pair_graph());
    std::vector<CharVector> sample;
    for (int i = 0; i < 12; ++i) sample.push_back(random_char(m, rng));
    for (const auto& a : sample) CHECK(same_spinc(a, a, m));
    for (const auto& a : sample)
        for (const auto& b : sample) CHECK(same_spinc(a, b, m) == same_spinc(b, a, m));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (same_spinc(a, b, m) && same_spinc(b, c, m)) CHECK(same_spinc(a, c, m));
}

TEST_CASE("translate stays in the class") {
    std::mt19937_64 rng(23);
    PlumbingMatrix m = build_matrix(testutil::pair_graph());
    for (int i = 0; i < 50; ++i) {
        CharVector c = random_char(m, rng);
        IntVec x = random_vec(m.size(), rng);
        CHECK(same_spinc(c, translate(c, x, m), m));
    }
}
