#include "vass/core.hpp"

#include <algorithm>

#include "vass/linalg.hpp"
#include "vass/scc.hpp"

namespace vass {

namespace {

void require_same_size(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

} // namespace

IntVector zero_vector(std::size_t dim) { return IntVector(dim, Integer(0)); }

Integer norm(const IntVector& v) {
    Integer m = 0;
    for (const auto& x : v) {
        if (abs(x) > m) m = abs(x);
    }
    return m;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    require_same_size(a, b);
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    require_same_size(a, b);
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVector operator-(const IntVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntVector operator*(const Integer& k, const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
    require_same_size(a, b);
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_nonnegative(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

std::vector<std::size_t> support(const IntVector& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) out.push_back(i);
    }
    return out;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitive(const IntVector& v) {
    const Integer g = content(v);
    if (g <= 1) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

std::string to_string(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out + ")";
}

IntVector make_vector(std::initializer_list<long> entries) {
    IntVector out;
    out.reserve(entries.size());
    for (long x : entries) out.emplace_back(x);
    return out;
}

StateId Vass::add_state(std::string name) {
    if (find_state(name)) throw Error(ErrorCode::DuplicateState, "state '" + name + "' declared twice");
    names_.push_back(std::move(name));
    return names_.size() - 1;
}

TransitionId Vass::add_transition(StateId src, IntVector effect, StateId dst) {
    if (src >= names_.size() || dst >= names_.size()) {
        throw Error(ErrorCode::UnknownState, "transition endpoint is not a declared state");
    }
    if (effect.size() != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "effect of length " + std::to_string(effect.size()) +
                                                      " in a " + std::to_string(dim_) + "-VASS");
    }
    transitions_.push_back(Transition{src, std::move(effect), dst});
    return transitions_.size() - 1;
}

std::optional<StateId> Vass::find_state(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<StateId>(it - names_.begin());
}

Integer Vass::max_norm() const {
    Integer m = 0;
    for (const auto& t : transitions_) {
        Integer n = norm(t.effect);
        if (n > m) m = n;
    }
    return m;
}

std::vector<std::vector<TransitionId>> Vass::out_edges() const {
    std::vector<std::vector<TransitionId>> out(names_.size());
    for (TransitionId t = 0; t < transitions_.size(); ++t) out[transitions_[t].src].push_back(t);
    return out;
}

void check_path(const Vass& g, std::span<const TransitionId> word, std::optional<StateId> start_state) {
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] >= g.num_transitions()) {
            throw Error(ErrorCode::NotAPath, "transition index " + std::to_string(word[k]) + " out of range");
        }
        const auto& t = g.transition(word[k]);
        if (k == 0) {
            if (start_state && t.src != *start_state) {
                throw Error(ErrorCode::NotAPath, "first transition does not leave the start state");
            }
        } else if (g.transition(word[k - 1]).dst != t.src) {
            throw Error(ErrorCode::NotAPath, "transitions " + std::to_string(k - 1) + " and " +
                                                 std::to_string(k) + " are not adjacent");
        }
    }
}

IntVector effect(const Vass& g, std::span<const TransitionId> word) {
    check_path(g, word);
    IntVector sum = zero_vector(g.dim());
    for (TransitionId t : word) {
        const auto& e = g.transition(t).effect;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e[i];
    }
    return sum;
}

std::optional<std::vector<Configuration>> execute(const Vass& g, const Configuration& start,
                                                  std::span<const TransitionId> word) {
    if (start.counters.size() != g.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "configuration does not match the VASS dimension");
    }
    if (start.state >= g.num_states()) throw Error(ErrorCode::UnknownState, "start state out of range");
    check_path(g, word, start.state);
    if (!is_nonnegative(start.counters)) return std::nullopt;
    std::vector<Configuration> out;
    out.reserve(word.size() + 1);
    out.push_back(start);
    for (TransitionId id : word) {
        const auto& t = g.transition(id);
        Configuration next{t.dst, out.back().counters};
        for (std::size_t i = 0; i < next.counters.size(); ++i) {
            next.counters[i] += t.effect[i];
            if (next.counters[i] < 0) return std::nullopt;
        }
        out.push_back(std::move(next));
    }
    return out;
}

Vass reverse(const Vass& g) {
    Vass r(g.dim());
    for (const auto& name : g.state_names()) r.add_state(name);
    for (const auto& t : g.transitions()) r.add_transition(t.dst, -t.effect, t.src);
    return r;
}

Run reverse_run(const Vass& g, const Run& run) {
    auto configs = execute(g, run.start, run.word);
    if (!configs) throw Error(ErrorCode::Precondition, "run is not valid in the VASS");
    Run rev;
    rev.start = configs->back();
    rev.word.assign(run.word.rbegin(), run.word.rend());
    return rev;
}

std::size_t traversal_number(const Vass& g) {
    const std::size_t n = g.num_states();
    if (n == 0) return 0;
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& t : g.transitions()) succ[t.src].push_back(t.dst);
    const auto scc = strongly_connected_components(succ);
    const std::size_t k = scc.components.size();

    // Components are in topological order, so a backwards sweep sees every
    // successor component before its predecessors.
    std::vector<std::size_t> best(k, 0);
    for (std::size_t c = k; c-- > 0;) {
        std::size_t tail = 0;
        for (std::size_t v : scc.components[c]) {
            for (std::size_t w : succ[v]) {
                const std::size_t d = scc.component_of[w];
                if (d != c) tail = std::max(tail, best[d]);
            }
        }
        best[c] = scc.components[c].size() + tail;
    }
    return *std::max_element(best.begin(), best.end());
}

Integer characteristic(const Vass& g) { return Integer(static_cast<unsigned long>(traversal_number(g))) * g.max_norm(); }

bool check_run_coset_invariant(const Vass& g, const Run& run, const Subspace& basis) {
    auto configs = execute(g, run.start, run.word);
    if (!configs) return false;
    const Integer chi = characteristic(g);
    std::vector<std::optional<IntVector>> first(g.num_states());
    for (const auto& c : *configs) {
        auto& anchor = first[c.state];
        if (!anchor) {
            if (chebyshev_distance_to_span(c.counters - run.start.counters, basis) > Rational(chi)) return false;
            anchor = c.counters;
        } else if (!in_span(c.counters - *anchor, basis)) {
            return false;
        }
    }
    return true;
}

} // namespace vass
