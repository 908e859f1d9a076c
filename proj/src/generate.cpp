#include "vass/generate.hpp"

#include <limits>
#include <numeric>

#include "vass/geodim.hpp"
#include "vass/linalg.hpp"

namespace vass {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw Error(ErrorCode::Precondition, "empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<long>(x % span);
}

IntVector Rng::vector(std::size_t dim, long bound) {
    IntVector v(dim);
    for (auto& x : v) x = uniform(-bound, bound);
    return v;
}

namespace {

Vass with_states(std::size_t dim, std::size_t states) {
    Vass g(dim);
    for (std::size_t i = 0; i < states; ++i) g.add_state("s" + std::to_string(i));
    return g;
}

} // namespace

Vass random_vass(Rng& rng, std::size_t dim, std::size_t states, std::size_t transitions, long bound) {
    if (states == 0) throw Error(ErrorCode::Precondition, "at least one state is required");
    Vass g = with_states(dim, states);
    for (std::size_t k = 0; k < transitions; ++k) {
        const StateId src = rng.index(states);
        IntVector e = rng.vector(dim, bound);
        g.add_transition(src, std::move(e), rng.index(states));
    }
    return g;
}

Vass random_strongly_connected(Rng& rng, std::size_t dim, std::size_t states, std::size_t transitions,
                               long bound) {
    if (states == 0) throw Error(ErrorCode::Precondition, "at least one state is required");
    Vass g = with_states(dim, states);
    std::vector<StateId> order(states);
    std::iota(order.begin(), order.end(), StateId{0});
    for (std::size_t i = states; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    for (std::size_t i = 0; i < states; ++i) {
        g.add_transition(order[i], rng.vector(dim, bound), order[(i + 1) % states]);
    }
    for (std::size_t k = states; k < transitions; ++k) {
        const StateId src = rng.index(states);
        IntVector e = rng.vector(dim, bound);
        g.add_transition(src, std::move(e), rng.index(states));
    }
    return g;
}

std::optional<Vass> random_vass_in_span(Rng& rng, const std::vector<IntVector>& basis, std::size_t dim,
                                        std::size_t states, std::size_t transitions, long bound) {
    if (states == 0) throw Error(ErrorCode::Precondition, "at least one state is required");
    Vass g = with_states(dim, states);
    std::vector<IntVector> phi(states);
    for (auto& p : phi) p = rng.vector(dim, 1);
    for (std::size_t k = 0; k < transitions; ++k) {
        const StateId src = rng.index(states);
        const StateId dst = rng.index(states);
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
            IntVector e = phi[dst] - phi[src];
            for (const auto& b : basis) e = e + Integer(rng.uniform(-2, 2)) * b;
            if (norm(e) <= bound) {
                g.add_transition(src, std::move(e), dst);
                placed = true;
            }
        }
        if (!placed) {
            // Fall back to a zero potential difference, which always fits.
            if (norm(phi[dst] - phi[src]) > bound) return std::nullopt;
            g.add_transition(src, phi[dst] - phi[src], dst);
        }
    }
    return g;
}

Vass generate(const GeneratorParams& params) {
    Rng rng(params.seed);
    if (!params.target_gdim) {
        return random_vass(rng, params.dim, params.num_states, params.num_transitions, params.max_norm);
    }
    const std::size_t target = *params.target_gdim;
    if (target > params.dim) throw Error(ErrorCode::Precondition, "target gdim exceeds the dimension");
    if (target > 0 && params.max_norm == 0) throw Error(ErrorCode::Precondition, "max norm 0 forces gdim 0");
    constexpr int attempts = 20000;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::optional<Vass> g;
        if (target <= 2) {
            std::vector<IntVector> basis;
            for (std::size_t j = 0; j < target; ++j) basis.push_back(rng.vector(params.dim, params.max_norm));
            if (rank_of(basis, params.dim) != target) continue;
            g = random_vass_in_span(rng, basis, params.dim, params.num_states, params.num_transitions,
                                    params.max_norm);
        } else {
            g = random_vass(rng, params.dim, params.num_states, params.num_transitions, params.max_norm);
        }
        if (g && gdim(*g) == target) return *g;
    }
    throw Error(ErrorCode::Precondition, "no instance with the requested gdim found");
}

} // namespace vass
