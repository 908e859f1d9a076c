#include "doctest.h"

#include "vass/generate.hpp"
#include "vass/geodim.hpp"

using namespace vass;

namespace {

Vass two_state_example() {
    Vass g(2);
    auto p = g.add_state("p");
    auto q = g.add_state("q");
    g.add_transition(p, make_vector({1, 0}), q);
    g.add_transition(q, make_vector({0, 1}), p);
    g.add_transition(q, make_vector({2, 3}), q);
    return g;
}

bool same_span(const Subspace& a, const Subspace& b) {
    for (const auto& v : a.integer_basis()) {
        if (!in_span(v, b)) return false;
    }
    for (const auto& v : b.integer_basis()) {
        if (!in_span(v, a)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("simple cycle effects") {
    Vass acyclic(1);
    acyclic.add_state("p");
    acyclic.add_state("q");
    acyclic.add_transition(0, make_vector({1}), 1);
    CHECK(simple_cycle_effects(acyclic).empty());

    Vass loop(2);
    loop.add_state("p");
    loop.add_transition(0, make_vector({1, 1}), 0);
    CHECK(simple_cycle_effects(loop) == std::vector<IntVector>{make_vector({1, 1})});

    CHECK(simple_cycle_effects(two_state_example()) ==
          std::vector<IntVector>{make_vector({1, 1}), make_vector({2, 3})});

    Vass big(0);
    for (int i = 0; i < 9; ++i) big.add_state("s" + std::to_string(i));
    CHECK_THROWS_AS(simple_cycle_effects(big), Error);
}

TEST_CASE("shrinking the two-state cycle") {
    Vass g = two_state_example();
    auto r = shrink_cycle(g, std::vector<TransitionId>{0, 1});
    CHECK(r.shrunk.num_states() == 1);
    CHECK(r.shift[1] == make_vector({1, 0}));
    CHECK(r.shift[0] == make_vector({1, 1}));
    CHECK(r.shrunk.transition(0).effect == make_vector({1, 1}));
    CHECK(r.shrunk.transition(1).effect == make_vector({0, 0}));
    CHECK(r.shrunk.transition(2).effect == make_vector({2, 3}));
    CHECK(cycle_space_oracle(r.shrunk) == cycle_space_oracle(g));

    CHECK_THROWS_AS(shrink_cycle(g, std::vector<TransitionId>{2}), Error);
    CHECK_THROWS_AS(shrink_cycle(g, std::vector<TransitionId>{0}), Error);
    CHECK_THROWS_AS(shrink_cycle(g, std::vector<TransitionId>{0, 2, 1, 0, 1}), Error);
}

TEST_CASE("shrinking keeps the cycle space on random strongly connected graphs") {
    Rng rng(21);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 2 + rng.index(4);
        Vass g = random_strongly_connected(rng, 1 + rng.index(3), n, n + rng.index(5), 2);
        // The generator starts with a Hamiltonian cycle over the first n transitions.
        std::vector<TransitionId> theta(n);
        for (std::size_t i = 0; i < n; ++i) theta[i] = i;
        auto r = shrink_cycle(g, theta);
        CHECK(r.shrunk.num_states() < g.num_states());
        CHECK(cycle_space_oracle(r.shrunk) == cycle_space_oracle(g));
        for (TransitionId t = 0; t < g.num_transitions(); ++t) {
            CHECK(r.shrunk.transition(t).src == r.state_map[g.transition(t).src]);
            CHECK(r.shrunk.transition(t).dst == r.state_map[g.transition(t).dst]);
        }
    }
}

TEST_CASE("cycle space basis and gdim") {
    Vass acyclic(2);
    acyclic.add_state("p");
    acyclic.add_state("q");
    acyclic.add_transition(0, make_vector({1, 1}), 1);
    CHECK(gdim(acyclic) == 0);

    Vass colinear(2);
    colinear.add_state("p");
    colinear.add_transition(0, make_vector({1, 1}), 0);
    colinear.add_transition(0, make_vector({2, 2}), 0);
    CHECK(gdim(colinear) == 1);

    Vass single(3);
    single.add_state("p");
    single.add_transition(0, make_vector({1, -1, 0}), 0);
    CHECK(gdim(single) == 1);

    Vass plane(3);
    plane.add_state("p");
    plane.add_transition(0, make_vector({1, 0, 1}), 0);
    plane.add_transition(0, make_vector({0, 1, 1}), 0);
    CHECK(gdim(plane) == 2);
}

TEST_CASE("cycle space basis agrees with the simple cycle oracle") {
    Rng rng(22);
    for (int round = 0; round < 300; ++round) {
        const std::size_t d = 1 + rng.index(4);
        Vass g = random_vass(rng, d, 1 + rng.index(6), rng.index(11), 3);
        auto basis = cycle_space_basis(g);
        CHECK(same_span(basis, cycle_space_oracle(g)));
        CHECK(gdim(reverse(g)) == basis.rank());
    }
}

TEST_CASE("cycle space basis ignores state renaming and transition order") {
    Rng rng(23);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 1 + rng.index(5);
        Vass g = random_vass(rng, 2, n, rng.index(9), 2);
        std::vector<StateId> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
        Vass h(2);
        for (std::size_t i = 0; i < n; ++i) h.add_state("r" + std::to_string(i));
        for (TransitionId t = g.num_transitions(); t-- > 0;) {
            const auto& tr = g.transition(t);
            h.add_transition(perm[tr.src], tr.effect, perm[tr.dst]);
        }
        CHECK(cycle_space_basis(h) == cycle_space_basis(g));
    }
}

TEST_CASE("generator hits the requested geometric dimension") {
    for (std::size_t target = 0; target <= 3; ++target) {
        GeneratorParams p{3, 3, 6, 2, 100 + target, target};
        Vass g = generate(p);
        CHECK(gdim(g) == target);
        CHECK(generate(p) == g);
    }
}
