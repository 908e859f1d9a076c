#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "vass/core.hpp"

namespace vass {

/// Seeded source of bounded integers. The draw is defined here rather than
/// through std::uniform_int_distribution so instances are identical across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
    bool coin() { return uniform(0, 1) == 1; }
    IntVector vector(std::size_t dim, long bound);

private:
    std::mt19937_64 engine_;
};

struct GeneratorParams {
    std::size_t dim = 2;
    std::size_t num_states = 3;
    std::size_t num_transitions = 5;
    long max_norm = 2;
    std::uint64_t seed = 0;
    std::optional<std::size_t> target_gdim;
};

/// States s0..s{n-1}; transitions with uniform endpoints and entries in
/// [-bound, bound].
Vass random_vass(Rng& rng, std::size_t dim, std::size_t states, std::size_t transitions, long bound);

/// As random_vass, but a cycle through all states in a random order comes
/// first, so the result is strongly connected.
Vass random_strongly_connected(Rng& rng, std::size_t dim, std::size_t states, std::size_t transitions,
                               long bound);

/// Every effect is phi(dst) - phi(src) plus an element of span(basis), so
/// Cyc(G) lies in that span. Returns nullopt when no admissible effect of
/// norm <= bound is found for some transition.
std::optional<Vass> random_vass_in_span(Rng& rng, const std::vector<IntVector>& basis, std::size_t dim,
                                        std::size_t states, std::size_t transitions, long bound);

/// Deterministic instance for `params`. With a target geometric dimension
/// the generator resamples until gdim matches, drawing effects from a random
/// subspace of that dimension when it is at most 2; throws Precondition when
/// the target is unattainable or the attempts run out.
Vass generate(const GeneratorParams& params);

} // namespace vass
