#include "vass/scc.hpp"

#include <algorithm>
#include <utility>

namespace vass {

// Iterative Tarjan; recursion depth would follow the state count, which the
// support projection can make large.
SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors) {
    const std::size_t n = successors.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> reverse_topological;
    std::size_t next_index = 0;

    // (vertex, position in its successor list)
    std::vector<std::pair<std::size_t, std::size_t>> call_stack;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call_stack.emplace_back(root, 0);
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            auto& [v, pos] = call_stack.back();
            if (pos < successors[v].size()) {
                const std::size_t w = successors[v][pos++];
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            const std::size_t finished = v;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const std::size_t parent = call_stack.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
            }
            if (lowlink[finished] == index[finished]) {
                std::vector<std::size_t> component;
                std::size_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != finished);
                std::sort(component.begin(), component.end());
                reverse_topological.push_back(std::move(component));
            }
        }
    }

    SccDecomposition result;
    result.components.assign(std::make_move_iterator(reverse_topological.rbegin()),
                             std::make_move_iterator(reverse_topological.rend()));
    result.component_of.assign(n, 0);
    for (std::size_t c = 0; c < result.components.size(); ++c) {
        for (std::size_t v : result.components[c]) result.component_of[v] = c;
    }
    return result;
}

} // namespace vass
