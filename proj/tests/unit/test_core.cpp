#include "doctest.h"

#include <bit>
#include <functional>
#include <random>

#include "vass/core.hpp"
#include "vass/linalg.hpp"

using namespace vass;

namespace {

// Exhaustive search over (state, visited set) pairs: the largest visited set
// any walk can accumulate.
std::size_t brute_traversal(const Vass& g) {
    const std::size_t n = g.num_states();
    std::vector<std::vector<bool>> reached(n, std::vector<bool>(std::size_t{1} << n, false));
    std::vector<std::pair<StateId, unsigned>> stack;
    for (StateId s = 0; s < n; ++s) {
        reached[s][1u << s] = true;
        stack.emplace_back(s, 1u << s);
    }
    std::size_t best = 0;
    while (!stack.empty()) {
        auto [p, mask] = stack.back();
        stack.pop_back();
        best = std::max<std::size_t>(best, std::popcount(mask));
        for (const auto& t : g.transitions()) {
            if (t.src != p) continue;
            const unsigned next = mask | (1u << t.dst);
            if (!reached[t.dst][next]) {
                reached[t.dst][next] = true;
                stack.emplace_back(t.dst, next);
            }
        }
    }
    return best;
}

Vass random_vass(std::mt19937_64& rng, std::size_t dim, std::size_t states, std::size_t trans, long bound) {
    Vass g(dim);
    for (std::size_t i = 0; i < states; ++i) g.add_state("s" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, states - 1);
    std::uniform_int_distribution<long> entry(-bound, bound);
    for (std::size_t k = 0; k < trans; ++k) {
        IntVector e(dim);
        for (auto& x : e) x = entry(rng);
        g.add_transition(pick(rng), e, pick(rng));
    }
    return g;
}

} // namespace

TEST_CASE("effect sums transition effects along a path") {
    Vass g(2);
    auto p = g.add_state("p");
    auto q = g.add_state("q");
    auto t0 = g.add_transition(p, make_vector({1, 0}), q);
    auto t1 = g.add_transition(q, make_vector({0, 1}), p);
    auto t2 = g.add_transition(p, make_vector({1, -2}), q);
    CHECK(effect(g, std::vector<TransitionId>{}) == make_vector({0, 0}));
    CHECK(effect(g, std::vector<TransitionId>{t2}) == make_vector({1, -2}));
    std::vector<TransitionId> w{t0, t1};
    CHECK(effect(g, w) == make_vector({1, 1}));
    auto run = execute(g, Configuration{p, make_vector({0, 0})}, w);
    REQUIRE(run);
    CHECK(run->back().counters - run->front().counters == effect(g, w));
    CHECK_THROWS_AS(effect(g, std::vector<TransitionId>{t0, t2}), Error);
}

TEST_CASE("execute follows counters and rejects negatives") {
    Vass g(2);
    auto p = g.add_state("p");
    auto a = g.add_transition(p, make_vector({-1, 1}), p);
    auto b = g.add_transition(p, make_vector({-1, 0}), p);
    auto empty = execute(g, Configuration{p, make_vector({0, 0})}, std::vector<TransitionId>{});
    REQUIRE(empty);
    CHECK(empty->size() == 1);
    auto one = execute(g, Configuration{p, make_vector({1, 0})}, std::vector<TransitionId>{a});
    REQUIRE(one);
    CHECK((*one)[1].counters == make_vector({0, 1}));
    CHECK_FALSE(execute(g, Configuration{p, make_vector({0, 0})}, std::vector<TransitionId>{b}));
    CHECK_THROWS_AS(execute(g, Configuration{p, make_vector({0})}, std::vector<TransitionId>{}), Error);
}

TEST_CASE("reverse negates effects and is an involution") {
    Vass g(2);
    auto p = g.add_state("p");
    auto q = g.add_state("q");
    g.add_transition(p, make_vector({2, -1}), q);
    Vass r = reverse(g);
    CHECK(r.transition(0) == Transition{q, make_vector({-2, 1}), p});
    CHECK(reverse(r) == g);
}

TEST_CASE("reverse runs execute from the old target") {
    Vass g(1);
    auto p = g.add_state("p");
    auto q = g.add_state("q");
    auto t0 = g.add_transition(p, make_vector({2}), q);
    auto t1 = g.add_transition(q, make_vector({-1}), q);
    auto t2 = g.add_transition(q, make_vector({1}), p);
    Run run{Configuration{p, make_vector({0})}, {t0, t1, t2}};
    auto forward = execute(g, run.start, run.word);
    REQUIRE(forward);
    Run back = reverse_run(g, run);
    auto backward = execute(reverse(g), back.start, back.word);
    REQUIRE(backward);
    CHECK(backward->back() == forward->front());
}

TEST_CASE("traversal number on small shapes") {
    Vass single(0);
    single.add_state("p");
    CHECK(traversal_number(single) == 1);
    CHECK(characteristic(single) == 0);

    Vass chain(0);
    for (auto n : {"p", "q", "r"}) chain.add_state(n);
    chain.add_transition(0, {}, 1);
    chain.add_transition(1, {}, 2);
    CHECK(traversal_number(chain) == 3);

    Vass disjoint(0);
    for (int i = 0; i < 5; ++i) disjoint.add_state("s" + std::to_string(i));
    disjoint.add_transition(0, {}, 1);
    disjoint.add_transition(1, {}, 2);
    disjoint.add_transition(2, {}, 0);
    disjoint.add_transition(3, {}, 4);
    disjoint.add_transition(4, {}, 3);
    CHECK(traversal_number(disjoint) == 3);
}

TEST_CASE("traversal number matches exhaustive path search") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 6;
        Vass g = random_vass(rng, 1, n, rng() % 10, 2);
        CHECK(traversal_number(g) == brute_traversal(g));
        CHECK(traversal_number(g) <= g.num_states());
        CHECK(traversal_number(reverse(g)) == traversal_number(g));
        CHECK(characteristic(reverse(g)) == characteristic(g));
    }
}

TEST_CASE("simple path effects are bounded by the characteristic") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 100; ++round) {
        Vass g = random_vass(rng, 2, 1 + rng() % 5, rng() % 9, 3);
        const Integer chi = characteristic(g);
        std::vector<bool> seen(g.num_states(), false);
        std::function<void(StateId, StateId, IntVector)> dfs = [&](StateId start, StateId p, IntVector sum) {
            CHECK(norm(sum) <= chi);
            for (const auto& t : g.transitions()) {
                if (t.src != p) continue;
                if (t.dst == start) CHECK(norm(sum + t.effect) <= chi);
                if (seen[t.dst]) continue;
                seen[t.dst] = true;
                dfs(start, t.dst, sum + t.effect);
                seen[t.dst] = false;
            }
        };
        for (StateId s = 0; s < g.num_states(); ++s) {
            seen[s] = true;
            dfs(s, s, zero_vector(2));
            seen[s] = false;
        }
    }
}

TEST_CASE("duplicate states are rejected") {
    Vass g(1);
    g.add_state("p");
    CHECK_THROWS_AS(g.add_state("p"), Error);
    CHECK_THROWS_AS(g.add_transition(0, make_vector({1, 1}), 0), Error);
}
