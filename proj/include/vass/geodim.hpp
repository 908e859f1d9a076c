#pragma once

#include <cstddef>
#include <vector>

#include "vass/core.hpp"
#include "vass/linalg.hpp"

namespace vass {

/// G/theta together with the homomorphism h (state_map) and the shift s.
/// Transition i of `shrunk` is the image of transition i of the input.
struct ShrinkResult {
    Vass shrunk;
    std::vector<StateId> state_map;
    std::vector<IntVector> shift;
};

inline constexpr std::size_t default_oracle_state_cap = 8;

/// Distinct effects of all simple cycles, self-loops included, sorted.
/// Exponential; throws TooLarge above `state_cap` states.
std::vector<IntVector> simple_cycle_effects(const Vass& g, std::size_t state_cap = default_oracle_state_cap);

/// span(simple_cycle_effects(g)).
Subspace cycle_space_oracle(const Vass& g, std::size_t state_cap = default_oracle_state_cap);

/// Shrinks the simple cycle `theta` (a transition word of length >= 2) into a
/// single state, which takes the position of the smallest state on the cycle.
ShrinkResult shrink_cycle(const Vass& g, std::span<const TransitionId> theta);

/// Cyc(G), by repeated cycle shrinking inside every strongly connected
/// component.
Subspace cycle_space_basis(const Vass& g);

std::size_t gdim(const Vass& g);

} // namespace vass
