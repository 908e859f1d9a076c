#include "doctest.h"

#include "vass/generate.hpp"
#include "vass/geodim.hpp"
#include "vass/projection.hpp"

using namespace vass;

namespace {

Subspace plane_of(const IntVector& a, const IntVector& b) {
    return span_basis(std::vector<IntVector>{a, b}, a.size());
}

} // namespace

TEST_CASE("verify_srp examples") {
    auto z = Orthant::nonnegative(3);
    CHECK(verify_srp(plane_of(make_vector({1, 0, 1}), make_vector({0, 1, 1})), z, 0, 1));
    CHECK_FALSE(verify_srp(plane_of(make_vector({1, 0, -1}), make_vector({0, 1, 0})), z, 0, 1));
    CHECK(verify_srp(Subspace(3), z, 0, 2));
    CHECK_THROWS_AS(verify_srp(Subspace(3), z, 1, 1), Error);
    CHECK_THROWS_AS(verify_srp(Subspace(3), z, 0, 3), Error);
}

TEST_CASE("find_srp examples") {
    auto z = Orthant::nonnegative(3);
    auto w = find_srp(plane_of(make_vector({1, 0, 1}), make_vector({0, 1, 1})), z);
    REQUIRE(w);
    CHECK(w->i1 == 0);
    CHECK(w->i2 == 1);
    CHECK(w->u1 == make_vector({1, 0, 1}));
    CHECK(w->u2 == make_vector({0, 1, 1}));
    CHECK_FALSE(find_srp(plane_of(make_vector({1, 0, -1}), make_vector({0, 1, 0})), z));
    auto axis = find_srp(plane_of(make_vector({1, 0, 0}), make_vector({0, 1, 0})), z);
    REQUIRE(axis);
    CHECK(axis->u1 == make_vector({1, 0, 0}));
    CHECK(axis->u2 == make_vector({0, 1, 0}));
}

TEST_CASE("canonical vectors") {
    auto z = Orthant::nonnegative(3);
    auto [a1, a2] = canonical_vectors(make_vector({1, 0, 1}), make_vector({0, 1, 1}), 0, 1, z);
    CHECK(a1 == make_vector({1, 0, 1}));
    CHECK(a2 == make_vector({0, 1, 1}));
    auto [b1, b2] = canonical_vectors(make_vector({2, 0, 2}), make_vector({0, 2, 2}), 0, 1, z);
    CHECK(b1[0] == b2[1]);
    CHECK(b1 == make_vector({1, 0, 1}));
    CHECK(b2 == make_vector({0, 1, 1}));
    CHECK_THROWS_AS(canonical_vectors(make_vector({1, 0, 1}), make_vector({2, 0, 2}), 0, 1, z), Error);
    CHECK_THROWS_AS(canonical_vectors(make_vector({1, 0, -1}), make_vector({0, 1, 0}), 0, 1, z), Error);
}

TEST_CASE("canonical vectors on random proper planes") {
    Rng rng(41);
    int found = 0;
    for (int round = 0; round < 400 && found < 200; ++round) {
        const std::size_t d = 2 + rng.index(4);
        IntVector v1 = rng.vector(d, 3);
        IntVector v2 = rng.vector(d, 3);
        auto plane = plane_of(v1, v2);
        if (plane.rank() != 2) continue;
        auto z = Orthant::nonnegative(d);
        auto w = find_srp(plane, z);
        if (!w) continue;
        ++found;
        auto [u1, u2] = canonical_vectors(v1, v2, w->i1, w->i2, z);
        const Integer n = std::max(norm(v1), norm(v2));
        CHECK(norm(u1) <= 2 * n * n);
        CHECK(norm(u2) <= 2 * n * n);
        CHECK(u1[w->i2] == 0);
        CHECK(u2[w->i1] == 0);
        CHECK(u1[w->i1] == u2[w->i2]);
        CHECK(u1[w->i1] > 0);
        CHECK(z.contains(u1));
        CHECK(z.contains(u2));
        CHECK(in_span(u1, plane));
        CHECK(in_span(u2, plane));
        for (int k = 0; k < 20; ++k) {
            IntVector p = Integer(rng.uniform(-3, 3)) * v1 + Integer(rng.uniform(-3, 3)) * v2;
            CHECK(lift_from_projection(*w, project(*w, p)) == to_rational(p));
        }
    }
    CHECK(found > 50);
}

TEST_CASE("properness") {
    Vass g(3);
    g.add_state("p");
    g.add_transition(0, make_vector({1, 0, 1}), 0);
    g.add_transition(0, make_vector({0, 1, 1}), 0);
    CHECK(is_proper(g));
    CHECK_FALSE(is_proper(span_basis(std::vector<IntVector>{make_vector({1, -1})}, 2)));
    CHECK_FALSE(is_proper(plane_of(make_vector({1, -1, 0}), make_vector({0, 1, -1}))));
    CHECK(is_proper(plane_of(make_vector({1, 1}), make_vector({1, -1}))));
    auto full = span_basis(std::vector<IntVector>{make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})}, 3);
    CHECK_THROWS_AS(is_proper(full), Error);
}

TEST_CASE("support projection with full support is an isomorphism") {
    Vass g(2);
    g.add_state("p");
    g.add_state("q");
    g.add_transition(0, make_vector({1, 0}), 1);
    g.add_transition(1, make_vector({0, 1}), 0);
    g.add_transition(1, make_vector({-1, 0}), 1);
    auto sp = support_projection(g, false);
    CHECK(sp.vass == g);
}

TEST_CASE("support projection folds bounded coordinates") {
    Vass g(2);
    auto p = g.add_state("p");
    auto q = g.add_state("q");
    g.add_transition(p, make_vector({1, 1}), q);
    g.add_transition(q, make_vector({1, -1}), p);
    auto sp = support_projection(g);
    CHECK(sp.support == std::vector<std::size_t>{0});
    CHECK(sp.vass.dim() == 1);
    CHECK(cycle_space_basis(sp.vass).support() == std::vector<std::size_t>{0});
    CHECK(traversal_number(sp.vass) <= traversal_number(g));
    CHECK(characteristic(sp.vass) <= characteristic(g));
    CHECK(sp.vass.find_state("p__2"));
}

TEST_CASE("support projection preserves traversal number bounds and support") {
    Rng rng(42);
    int done = 0;
    for (int round = 0; round < 400 && done < 100; ++round) {
        const std::size_t d = 1 + rng.index(3);
        Vass g = random_vass(rng, d, 1 + rng.index(4), rng.index(7), 2);
        if (characteristic(g) > 6) continue;
        ++done;
        auto sp = support_projection(g);
        CHECK(traversal_number(sp.vass) <= traversal_number(g));
        CHECK(characteristic(sp.vass) <= characteristic(g));
        std::vector<std::size_t> mapped;
        for (std::size_t i : cycle_space_basis(sp.vass).support()) mapped.push_back(sp.support[i]);
        CHECK(mapped == cycle_space_basis(g).support());
    }
    CHECK(done == 100);
}
