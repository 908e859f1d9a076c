#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vass/generate.hpp"
#include "vass/geodim.hpp"
#include "vass/linalg.hpp"

namespace vass::testing {

using Node = std::pair<StateId, IntVector>;

/// Configurations reachable by runs of length exactly k, for k = 0..max_len.
inline std::vector<std::set<Node>> layers(const Vass& g, const Configuration& start, std::size_t max_len) {
    const auto out = g.out_edges();
    std::vector<std::set<Node>> result{{Node{start.state, start.counters}}};
    for (std::size_t k = 0; k < max_len; ++k) {
        std::set<Node> next;
        for (const auto& [s, u] : result.back()) {
            for (TransitionId t : out[s]) {
                IntVector v = u + g.transition(t).effect;
                if (is_nonnegative(v)) next.emplace(g.transition(t).dst, std::move(v));
            }
        }
        result.push_back(std::move(next));
    }
    return result;
}

/// States q0..qn with q_{i-1} -a_i-> q_i and q_{i-1} -0-> q_i.
inline Vass subset_sum(const std::vector<long>& values) {
    Vass g(1);
    for (std::size_t i = 0; i <= values.size(); ++i) g.add_state("q" + std::to_string(i));
    for (std::size_t i = 1; i <= values.size(); ++i) {
        g.add_transition(i - 1, make_vector({values[i - 1]}), i);
        g.add_transition(i - 1, make_vector({0}), i);
    }
    return g;
}

/// A 3-VASS whose effects are lattice vectors of norm <= 2 in a plane through
/// a positive vector, closed under reversal so that 0-runs are common. The
/// normal of such a plane has mixed signs. Nullopt when gdim falls below 2.
inline std::optional<Vass> reversible_plane_vass(Rng& rng, std::size_t states) {
    IntVector v(3);
    for (auto& x : v) x = rng.uniform(1, 2);
    const Subspace plane = span_basis(std::vector<IntVector>{v, rng.vector(3, 2)}, 3);
    if (plane.rank() != 2) return std::nullopt;
    std::vector<IntVector> pool;
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            for (long c = -2; c <= 2; ++c) {
                IntVector e = make_vector({a, b, c});
                if (!is_zero(e) && in_span(e, plane)) pool.push_back(e);
            }
        }
    }
    Vass g(3);
    for (std::size_t i = 0; i < states; ++i) g.add_state("s" + std::to_string(i));
    for (std::size_t i = 0; i < states; ++i) g.add_transition(i, pool[rng.index(pool.size())], (i + 1) % states);
    for (int k = 0; k < 2; ++k) {
        const std::size_t s = rng.index(states);
        g.add_transition(s, pool[rng.index(pool.size())], rng.index(states));
    }
    const std::size_t m = g.num_transitions();
    for (std::size_t k = 0; k < m; ++k) {
        const Transition t = g.transition(k);
        g.add_transition(t.dst, -t.effect, t.src);
    }
    if (gdim(g) != 2) return std::nullopt;
    return g;
}

} // namespace vass::testing
