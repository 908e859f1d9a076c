#pragma once

#include <cstddef>
#include <vector>

namespace vass {

/// Strongly connected components of a directed graph given as successor
/// lists. Components come out in topological order of the condensation
/// (sources first); states inside a component are sorted ascending.
struct SccDecomposition {
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> component_of;
};

SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors);

} // namespace vass
