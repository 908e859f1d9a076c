#include "doctest.h"

#include <random>

#include "vass/fourier_motzkin.hpp"
#include "vass/linalg.hpp"

using namespace vass;

namespace {

Subspace span_of(std::initializer_list<IntVector> vs, std::size_t d) {
    std::vector<IntVector> v(vs);
    return span_basis(v, d);
}

} // namespace

TEST_CASE("span basis canonical forms") {
    CHECK(span_basis(std::vector<IntVector>{}, 3).rank() == 0);
    auto s = span_of({make_vector({2, 2}), make_vector({1, 1})}, 2);
    CHECK(s.rank() == 1);
    CHECK(s.integer_basis() == std::vector<IntVector>{make_vector({1, 1})});
    CHECK(span_of({make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({1, 1, 2})}, 3).rank() == 2);
    CHECK_THROWS_AS(span_of({make_vector({1, 0}), make_vector({1})}, 2), Error);
}

TEST_CASE("span basis is order independent and idempotent") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int round = 0; round < 200; ++round) {
        const std::size_t d = 1 + rng() % 5;
        std::vector<IntVector> vs(rng() % 5);
        for (auto& v : vs) {
            v.resize(d);
            for (auto& x : v) x = entry(rng);
        }
        auto s = span_basis(vs, d);
        auto shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(span_basis(shuffled, d) == s);
        CHECK(span_basis(s.integer_basis(), d) == s);
        for (const auto& v : vs) {
            auto c = coordinates(v, s);
            REQUIRE(c);
            CHECK(combine(s, *c) == to_rational(v));
            CHECK(chebyshev_distance_to_span(v, s) == 0);
        }
    }
}

TEST_CASE("membership and coordinates") {
    auto s = span_of({make_vector({1, 1})}, 2);
    auto c = coordinates(make_vector({3, 3}), s);
    REQUIRE(c);
    CHECK((*c)[0] == 3);
    CHECK(in_span(make_vector({0, 0}), s));
    CHECK_FALSE(in_span(make_vector({1, 2}), s));
    CHECK_THROWS_AS(in_span(make_vector({1, 2, 3}), s), Error);
}

TEST_CASE("chebyshev distance to a span") {
    auto plane = span_of({make_vector({1, 0, 1}), make_vector({0, 1, 1})}, 3);
    CHECK(chebyshev_distance_to_span(make_vector({5, 5, 9}), plane) == Rational(1, 3));
    CHECK(chebyshev_distance_to_span(make_vector({0, 0, 0, 7}), Subspace(4)) == 7);
    CHECK(chebyshev_distance_to_span(make_vector({2, 3, 5}), plane) == 0);
    auto line = span_of({make_vector({1, 1})}, 2);
    CHECK(chebyshev_distance_to_span(make_vector({3, 1}), line) == 1);
}

TEST_CASE("distance is zero iff in span and never exceeds the norm") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int round = 0; round < 200; ++round) {
        const std::size_t d = 1 + rng() % 4;
        std::vector<IntVector> vs(rng() % 3);
        for (auto& v : vs) {
            v.resize(d);
            for (auto& x : v) x = entry(rng);
        }
        auto s = span_basis(vs, d);
        IntVector v(d);
        for (auto& x : v) x = entry(rng);
        auto dist = chebyshev_distance_to_span(v, s);
        CHECK((dist == 0) == in_span(v, s));
        CHECK(dist <= Rational(norm(v)));
        CHECK(dist >= 0);
    }
}

TEST_CASE("fourier motzkin feasibility and minimization") {
    fm::System sys(2);
    // x + y <= 4, -x <= -1, -y <= -1, minimize x  => 1
    sys.add(fm::Inequality{{1, 1}, 4});
    sys.add(fm::Inequality{{-1, 0}, -1});
    sys.add(fm::Inequality{{0, -1}, -1});
    CHECK(sys.feasible());
    auto best = fm::minimize(sys, 0);
    REQUIRE(best);
    CHECK(*best == 1);
    sys.add(fm::Equality{{1, -1}, 3});
    CHECK_FALSE(sys.feasible());
}
