#include "vass/geodim.hpp"

#include <algorithm>
#include <set>

#include "vass/scc.hpp"

namespace vass {

namespace {

struct Edge {
    std::size_t src;
    std::size_t dst;
    IntVector effect;
};

struct Graph {
    std::size_t num_states = 0;
    std::vector<Edge> edges;
};

struct Shrunk {
    Graph graph;
    std::vector<std::size_t> state_map;
    std::vector<IntVector> shift;
};

Shrunk shrink(const Graph& g, const std::vector<std::size_t>& cycle, std::size_t dim) {
    std::vector<bool> on_cycle(g.num_states, false);
    std::vector<IntVector> shift(g.num_states, zero_vector(dim));
    IntVector prefix = zero_vector(dim);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const Edge& e = g.edges[cycle[k]];
        on_cycle[e.src] = true;
        prefix = prefix + e.effect;
        shift[e.dst] = prefix;
    }

    std::size_t merged_position = g.num_states;
    for (std::size_t p = 0; p < g.num_states; ++p) {
        if (on_cycle[p]) {
            merged_position = p;
            break;
        }
    }
    std::vector<std::size_t> state_map(g.num_states);
    std::size_t next = 0;
    std::size_t merged = 0;
    for (std::size_t p = 0; p < g.num_states; ++p) {
        if (p == merged_position) {
            merged = next++;
            state_map[p] = merged;
        } else if (!on_cycle[p]) {
            state_map[p] = next++;
        }
    }
    for (std::size_t p = 0; p < g.num_states; ++p) {
        if (on_cycle[p]) state_map[p] = merged;
    }

    Shrunk out;
    out.graph.num_states = next;
    out.graph.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        out.graph.edges.push_back(
            Edge{state_map[e.src], state_map[e.dst], shift[e.src] + e.effect - shift[e.dst]});
    }
    out.state_map = std::move(state_map);
    out.shift = std::move(shift);
    return out;
}

// A simple cycle through state 0 avoiding self-loops, as edge indices.
std::vector<std::size_t> find_cycle_through_first(const Graph& g) {
    std::vector<std::vector<std::size_t>> out(g.num_states);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].src != g.edges[i].dst) out[g.edges[i].src].push_back(i);
    }
    std::vector<bool> visited(g.num_states, false);
    std::vector<std::size_t> path;
    std::vector<std::size_t> position;
    visited[0] = true;
    position.push_back(0);
    std::size_t current = 0;
    std::vector<std::size_t> state_stack{0};
    while (!state_stack.empty()) {
        current = state_stack.back();
        std::size_t& pos = position.back();
        if (pos == out[current].size()) {
            state_stack.pop_back();
            position.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        const std::size_t edge = out[current][pos++];
        const std::size_t w = g.edges[edge].dst;
        if (w == 0) {
            path.push_back(edge);
            return path;
        }
        if (visited[w]) continue;
        visited[w] = true;
        path.push_back(edge);
        state_stack.push_back(w);
        position.push_back(0);
    }
    return {};
}

void collect_component(Graph g, std::size_t dim, std::vector<IntVector>& effects) {
    for (;;) {
        std::vector<Edge> kept;
        std::set<std::tuple<std::size_t, std::size_t, IntVector>> seen;
        for (auto& e : g.edges) {
            if (e.src == e.dst) {
                // Later shrinks add s(p) - s(p) to a self-loop, so its effect is final.
                if (!is_zero(e.effect)) effects.push_back(e.effect);
                continue;
            }
            if (seen.emplace(e.src, e.dst, e.effect).second) kept.push_back(std::move(e));
        }
        g.edges = std::move(kept);
        if (g.num_states <= 1 || g.edges.empty()) return;
        auto cycle = find_cycle_through_first(g);
        if (cycle.empty()) return;
        g = shrink(g, cycle, dim).graph;
    }
}

} // namespace

std::vector<IntVector> simple_cycle_effects(const Vass& g, std::size_t state_cap) {
    if (g.num_states() > state_cap) {
        throw Error(ErrorCode::TooLarge, std::to_string(g.num_states()) + " states exceed the oracle cap of " +
                                             std::to_string(state_cap));
    }
    const auto out = g.out_edges();
    std::set<IntVector> effects;
    std::vector<bool> on_path(g.num_states(), false);

    // Every simple cycle is enumerated once from its smallest state.
    auto dfs = [&](auto&& self, StateId start, StateId p, const IntVector& sum) -> void {
        for (TransitionId id : out[p]) {
            const auto& t = g.transition(id);
            if (t.dst == start) {
                effects.insert(sum + t.effect);
            } else if (t.dst > start && !on_path[t.dst]) {
                on_path[t.dst] = true;
                self(self, start, t.dst, sum + t.effect);
                on_path[t.dst] = false;
            }
        }
    };
    for (StateId s = 0; s < g.num_states(); ++s) {
        on_path[s] = true;
        dfs(dfs, s, s, zero_vector(g.dim()));
        on_path[s] = false;
    }
    return {effects.begin(), effects.end()};
}

Subspace cycle_space_oracle(const Vass& g, std::size_t state_cap) {
    return span_basis(simple_cycle_effects(g, state_cap), g.dim());
}

ShrinkResult shrink_cycle(const Vass& g, std::span<const TransitionId> theta) {
    if (theta.empty()) throw Error(ErrorCode::NotSimpleCycle, "empty word");
    check_path(g, theta);
    if (g.transition(theta.front()).src != g.transition(theta.back()).dst) {
        throw Error(ErrorCode::NotSimpleCycle, "word does not return to its first state");
    }
    if (theta.size() == 1) throw Error(ErrorCode::SelfLoop, "cannot shrink a self-loop");
    std::vector<bool> seen(g.num_states(), false);
    for (TransitionId id : theta) {
        const StateId p = g.transition(id).src;
        if (seen[p]) throw Error(ErrorCode::NotSimpleCycle, "state '" + g.state_name(p) + "' repeats");
        seen[p] = true;
    }

    Graph graph{g.num_states(), {}};
    for (const auto& t : g.transitions()) graph.edges.push_back(Edge{t.src, t.dst, t.effect});
    Shrunk s = shrink(graph, std::vector<std::size_t>(theta.begin(), theta.end()), g.dim());

    std::vector<std::string> names(s.graph.num_states);
    for (StateId p = 0; p < g.num_states(); ++p) {
        auto& name = names[s.state_map[p]];
        if (!seen[p]) {
            name = g.state_name(p);
        } else {
            name += name.empty() ? "{" : ",";
            name += g.state_name(p);
        }
    }
    ShrinkResult result{Vass(g.dim()), std::move(s.state_map), std::move(s.shift)};
    for (auto& name : names) {
        if (name.front() == '{') name += '}';
        result.shrunk.add_state(name);
    }
    for (const auto& e : s.graph.edges) result.shrunk.add_transition(e.src, e.effect, e.dst);
    return result;
}

Subspace cycle_space_basis(const Vass& g) {
    std::vector<std::vector<std::size_t>> succ(g.num_states());
    for (const auto& t : g.transitions()) succ[t.src].push_back(t.dst);
    const auto scc = strongly_connected_components(succ);

    std::vector<std::vector<Edge>> internal(scc.components.size());
    std::vector<std::size_t> local(g.num_states());
    for (const auto& component : scc.components) {
        for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = i;
    }
    for (const auto& t : g.transitions()) {
        const std::size_t c = scc.component_of[t.src];
        if (c == scc.component_of[t.dst]) internal[c].push_back(Edge{local[t.src], local[t.dst], t.effect});
    }

    std::vector<IntVector> effects;
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
        if (internal[c].empty()) continue;
        collect_component(Graph{scc.components[c].size(), std::move(internal[c])}, g.dim(), effects);
    }
    return span_basis(effects, g.dim());
}

std::size_t gdim(const Vass& g) { return cycle_space_basis(g).rank(); }

} // namespace vass
