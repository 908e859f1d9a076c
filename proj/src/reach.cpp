#include "vass/reach.hpp"

#include <deque>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "vass/geodim.hpp"
#include "vass/linalg.hpp"

namespace vass {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Reachable: return "reachable";
    case Verdict::Unreachable: return "unreachable";
    case Verdict::Unknown: return "unknown";
    }
    return "";
}

std::string LengthMap::describe() const {
    std::string out = "l -> ";
    if (factor != 1) out += std::to_string(factor);
    out += "l";
    if (offset != 0) out += "+" + std::to_string(offset);
    return out;
}

void validate(const ReachQuery& q) {
    for (const auto* c : {&q.source, &q.target}) {
        if (c->state >= q.vass.num_states()) throw Error(ErrorCode::UnknownState, "configuration state out of range");
        if (c->counters.size() != q.vass.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "configuration has " + std::to_string(c->counters.size()) +
                                                          " counters, expected " + std::to_string(q.vass.dim()));
        }
        if (!is_nonnegative(c->counters)) throw Error(ErrorCode::Precondition, "counters must be nonnegative");
    }
}

namespace {

std::string fresh_name(const Vass& g, std::string base) {
    while (g.find_state(base)) base += "_";
    return base;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::string signed_tag(const Integer& d) { return d < 0 ? "m" + Integer(-d).get_str() : "p" + d.get_str(); }

using Node = std::pair<StateId, IntVector>;

// Visited configurations of a breadth-first search with parent pointers.
struct Search {
    std::map<Node, std::size_t> index;
    std::vector<Node> nodes;
    std::vector<std::pair<std::size_t, TransitionId>> parent;
    std::vector<std::size_t> depth;

    std::size_t intern(const Node& n, std::size_t from, TransitionId t, std::size_t dep, bool& inserted) {
        auto [it, fresh] = index.emplace(n, nodes.size());
        inserted = fresh;
        if (fresh) {
            nodes.push_back(n);
            parent.emplace_back(from, t);
            depth.push_back(dep);
        }
        return it->second;
    }

    std::vector<TransitionId> witness(std::size_t k) const {
        std::vector<TransitionId> word;
        while (k != 0) {
            word.push_back(parent[k].second);
            k = parent[k].first;
        }
        return {word.rbegin(), word.rend()};
    }
};

// A small explicit graph used to assemble reduced VASS before pruning.
struct Builder {
    std::size_t dim;
    std::map<std::string, std::size_t> ids;
    std::vector<std::string> names;
    std::vector<std::tuple<std::size_t, IntVector, std::size_t>> edges;

    std::size_t node(const std::string& name) {
        auto [it, fresh] = ids.emplace(name, names.size());
        if (fresh) names.push_back(name);
        return it->second;
    }

    void edge(std::size_t src, IntVector effect, std::size_t dst) { edges.emplace_back(src, std::move(effect), dst); }

    // Keeps the nodes on some path from `from` to `to` (both always kept).
    Vass build(std::size_t from, std::size_t to, StateId& source, StateId& target) const {
        const std::size_t n = names.size();
        std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
        for (const auto& [s, e, t] : edges) {
            fwd[s].push_back(t);
            bwd[t].push_back(s);
        }
        auto reach = [n](std::size_t start, const std::vector<std::vector<std::size_t>>& adj) {
            std::vector<bool> seen(n, false);
            std::vector<std::size_t> stack{start};
            seen[start] = true;
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t y : adj[x]) {
                    if (!seen[y]) {
                        seen[y] = true;
                        stack.push_back(y);
                    }
                }
            }
            return seen;
        };
        const auto a = reach(from, fwd);
        const auto b = reach(to, bwd);
        Vass out(dim);
        std::vector<std::size_t> renumber(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if ((a[k] && b[k]) || k == from || k == to) renumber[k] = out.add_state(names[k]);
        }
        for (const auto& [s, e, t] : edges) {
            if (a[s] && b[s] && a[t] && b[t]) out.add_transition(renumber[s], e, renumber[t]);
        }
        source = renumber[from];
        target = renumber[to];
        return out;
    }
};

std::string counters_tag(const IntVector& v) {
    std::string out;
    for (const auto& x : v) out += "_" + x.get_str();
    return out;
}

} // namespace

ReductionOutput reduce_to_zero_reach(const ReachQuery& q) {
    validate(q);
    ReductionOutput out;
    out.vass = q.vass;
    const StateId src = out.vass.add_state(fresh_name(q.vass, "zero_src"));
    const StateId tgt = out.vass.add_state(fresh_name(out.vass, "zero_tgt"));
    out.vass.add_transition(src, q.source.counters, q.source.state);
    out.vass.add_transition(q.target.state, -q.target.counters, tgt);
    out.source = Configuration{src, zero_vector(q.vass.dim())};
    out.target = Configuration{tgt, zero_vector(q.vass.dim())};
    out.length_map = LengthMap{1, 2};
    return out;
}

ReachAnswer oracle_reach(const ReachQuery& q, const Integer& norm_cap) {
    validate(q);
    ReachAnswer ans;
    if (norm(q.source.counters) > norm_cap) {
        ans.bound_used = "source exceeds norm cap " + norm_cap.get_str();
        return ans;
    }
    const auto out = q.vass.out_edges();
    Search s;
    bool inserted = false;
    s.intern({q.source.state, q.source.counters}, 0, 0, 0, inserted);
    bool cut = false;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        const Node cur = s.nodes[k];
        if (cur.first == q.target.state && cur.second == q.target.counters) {
            ans.verdict = Verdict::Reachable;
            ans.witness = s.witness(k);
            ans.bound_used = "norm cap " + norm_cap.get_str() + ", " + std::to_string(s.nodes.size()) + " configurations";
            return ans;
        }
        for (TransitionId t : out[cur.first]) {
            IntVector next = cur.second + q.vass.transition(t).effect;
            if (!is_nonnegative(next)) continue;
            if (norm(next) > norm_cap) {
                cut = true;
                continue;
            }
            s.intern({q.vass.transition(t).dst, std::move(next)}, k, t, s.depth[k] + 1, inserted);
        }
    }
    ans.verdict = cut ? Verdict::Unknown : Verdict::Unreachable;
    ans.bound_used = "norm cap " + norm_cap.get_str() + ", " + std::to_string(s.nodes.size()) + " configurations" +
                     (cut ? ", cap reached" : ", closed");
    return ans;
}

ReachAnswer bounded_reach(const ReachQuery& q, std::size_t max_len, bool bound_is_complete, std::size_t config_cap) {
    validate(q);
    ReachAnswer ans;
    const auto out = q.vass.out_edges();
    Search s;
    bool inserted = false;
    s.intern({q.source.state, q.source.counters}, 0, 0, 0, inserted);
    bool truncated = false;
    bool overflow = false;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        const Node cur = s.nodes[k];
        if (cur.first == q.target.state && cur.second == q.target.counters) {
            ans.verdict = Verdict::Reachable;
            ans.witness = s.witness(k);
            ans.bound_used = "length <= " + std::to_string(max_len);
            return ans;
        }
        for (TransitionId t : out[cur.first]) {
            IntVector next = cur.second + q.vass.transition(t).effect;
            if (!is_nonnegative(next)) continue;
            Node succ{q.vass.transition(t).dst, std::move(next)};
            if (s.depth[k] == max_len) {
                if (!s.index.count(succ)) truncated = true;
                continue;
            }
            if (s.nodes.size() >= config_cap) {
                overflow = true;
                continue;
            }
            s.intern(succ, k, t, s.depth[k] + 1, inserted);
        }
    }
    ans.bound_used = "length <= " + std::to_string(max_len) + ", " + std::to_string(s.nodes.size()) + " configurations";
    if (overflow) {
        ans.bound_used += ", configuration cap reached";
    } else if (!truncated) {
        ans.verdict = Verdict::Unreachable;
        ans.bound_used += ", closed";
    } else if (bound_is_complete) {
        ans.verdict = Verdict::Unreachable;
    }
    return ans;
}

ReachAnswer decide_geo0(const ReachQuery& q) {
    validate(q);
    if (cycle_space_basis(q.vass).rank() != 0) throw Error(ErrorCode::NotGeoZero, "gdim is not 0");
    if (q.vass.num_states() > 64) throw Error(ErrorCode::TooLarge, "state-simple search supports at most 64 states");
    const auto out = q.vass.out_edges();
    std::set<std::tuple<std::uint64_t, StateId, IntVector>> failed;
    std::vector<TransitionId> word;

    auto dfs = [&](auto&& self, StateId at, const IntVector& counters, std::uint64_t visited) -> bool {
        if (at == q.target.state && counters == q.target.counters) return true;
        if (failed.count({visited, at, counters})) return false;
        for (TransitionId t : out[at]) {
            const auto& tr = q.vass.transition(t);
            if (visited >> tr.dst & 1) continue;
            IntVector next = counters + tr.effect;
            if (!is_nonnegative(next)) continue;
            word.push_back(t);
            if (self(self, tr.dst, next, visited | (std::uint64_t{1} << tr.dst))) return true;
            word.pop_back();
        }
        failed.insert({visited, at, counters});
        return false;
    };

    ReachAnswer ans;
    ans.bound_used = "state-simple runs, length <= " + std::to_string(q.vass.num_states() - 1);
    if (dfs(dfs, q.source.state, q.source.counters, std::uint64_t{1} << q.source.state)) {
        ans.verdict = Verdict::Reachable;
        ans.witness = word;
    } else {
        ans.verdict = Verdict::Unreachable;
    }
    return ans;
}

IntVector normal_vector(const Vass& g) {
    if (g.dim() != 3) throw Error(ErrorCode::WrongDimension, "normal vectors are defined for 3-VASS");
    const Subspace cyc = cycle_space_basis(g);
    if (cyc.rank() != 2) throw Error(ErrorCode::WrongGdim, "gdim is " + std::to_string(cyc.rank()) + ", expected 2");
    const auto basis = cyc.integer_basis();
    const IntVector& x = basis[0];
    const IntVector& y = basis[1];
    IntVector n{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
    n = primitive(n);
    for (const auto& e : n) {
        if (e != 0) {
            if (e < 0) n = -n;
            break;
        }
    }
    return n;
}

std::vector<std::pair<Integer, Integer>> minimal_solutions(const Integer& a, const Integer& b, const Integer& dval) {
    if (dval <= 0) return {{0, 0}};
    if (a == 0 && b > 0) return {{0, ceil_div(dval, b)}};
    if (a > 0 && b == 0) return {{ceil_div(dval, a), 0}};
    std::vector<std::pair<Integer, Integer>> out;
    if (a > 0 && b > 0) {
        const Integer last = ceil_div(dval, a);
        for (Integer x = 0; x <= last; ++x) out.emplace_back(x, ceil_div(dval - a * x, b));
    }
    return out;
}

Vass pad_to_gdim2(const Vass& g) {
    if (g.dim() < 2) throw Error(ErrorCode::WrongDimension, "a plane needs dimension at least 2");
    const Subspace cyc = cycle_space_basis(g);
    if (cyc.rank() > 2) throw Error(ErrorCode::GdimTooHigh, "gdim exceeds 2");
    if (cyc.rank() == 2) return g;
    std::vector<IntVector> loops = cyc.integer_basis();
    for (std::size_t i = 0; i < g.dim() && loops.size() < 2; ++i) {
        IntVector e = zero_vector(g.dim());
        e[i] = 1;
        if (!in_span(e, span_basis(loops, g.dim()))) {
            loops.push_back(e);
        }
    }
    Vass out = g;
    const StateId pad = out.add_state(fresh_name(g, "pad"));
    for (auto& e : loops) out.add_transition(pad, std::move(e), pad);
    return out;
}

int reduction_case(const IntVector& n) {
    bool pos = false;
    bool neg = false;
    for (const auto& x : n) {
        pos = pos || x > 0;
        neg = neg || x < 0;
    }
    return pos && neg ? 2 : 1;
}

Integer run_in_cd_bound(const Vass& g, const IntVector& n) { return 3 * characteristic(g) * norm(n); }

ReductionOutput reduce_3vass_to_2vass(const ReachQuery& q) {
    validate(q);
    if (q.vass.dim() != 3) throw Error(ErrorCode::WrongDimension, "the reduction takes a 3-VASS");
    if (!is_zero(q.source.counters) || !is_zero(q.target.counters)) {
        throw Error(ErrorCode::Precondition, "source and target counters must be 0; reduce to 0-reachability first");
    }
    const Vass g = pad_to_gdim2(q.vass);
    IntVector n = normal_vector(g);
    const Integer bound = run_in_cd_bound(g, n);
    const auto out_edges = g.out_edges();
    ReductionOutput out;

    if (reduction_case(n) == 1) {
        bool negative = false;
        for (const auto& x : n) negative = negative || x < 0;
        if (negative) n = -n;
        const std::vector<std::size_t> fold = support(n);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < 3; ++i) {
            if (n[i] == 0) keep.push_back(i);
        }
        Builder b{keep.size(), {}, {}, {}};
        std::map<Node, std::size_t> seen;
        std::deque<Node> queue;
        auto visit = [&](const Node& node) {
            auto it = seen.find(node);
            if (it != seen.end()) return it->second;
            const std::size_t id = b.node(g.state_name(node.first) + "_" + counters_tag(node.second));
            seen.emplace(node, id);
            queue.push_back(node);
            return id;
        };
        const std::size_t from = visit({q.source.state, IntVector(fold.size(), 0)});
        const std::size_t to = visit({q.target.state, IntVector(fold.size(), 0)});
        while (!queue.empty()) {
            const Node cur = queue.front();
            queue.pop_front();
            const std::size_t src = seen.at(cur);
            for (TransitionId t : out_edges[cur.first]) {
                const auto& tr = g.transition(t);
                IntVector next = cur.second;
                bool inside = true;
                for (std::size_t k = 0; k < fold.size(); ++k) {
                    next[k] += tr.effect[fold[k]];
                    inside = inside && next[k] >= 0 && next[k] <= bound;
                }
                if (!inside) continue;
                IntVector effect;
                for (std::size_t i : keep) effect.push_back(tr.effect[i]);
                b.edge(src, std::move(effect), visit({tr.dst, next}));
            }
        }
        StateId s = 0;
        StateId t = 0;
        out.vass = b.build(from, to, s, t);
        out.source = Configuration{s, zero_vector(keep.size())};
        out.target = Configuration{t, zero_vector(keep.size())};
        out.length_map = LengthMap{1, 0};
        return out;
    }

    std::size_t negatives = 0;
    for (const auto& x : n) negatives += x < 0 ? 1 : 0;
    if (negatives > 1) n = -n;
    std::size_t k3 = 0;
    while (n[k3] >= 0) ++k3;
    std::vector<std::size_t> xy;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i != k3) xy.push_back(i);
    }
    const Integer a = n[xy[0]];
    const Integer bb = n[xy[1]];

    Builder b{2, {}, {}, {}};
    auto checked = [&](StateId s, const Integer& d) { return b.node(g.state_name(s) + "__" + signed_tag(d)); };
    auto unchecked = [&](StateId s, const Integer& d) { return b.node(g.state_name(s) + "__bar_" + signed_tag(d)); };

    // Explore abstract states (s, d, is_checked) from p^0.
    std::set<std::tuple<StateId, Integer, bool>> seen;
    std::deque<std::tuple<StateId, Integer, bool>> queue;
    auto push = [&](StateId s, const Integer& d, bool is_checked) {
        if (seen.insert({s, d, is_checked}).second) queue.emplace_back(s, d, is_checked);
    };
    const std::size_t from = checked(q.source.state, 0);
    const std::size_t to = checked(q.target.state, 0);
    push(q.source.state, 0, true);
    while (!queue.empty()) {
        const auto [s, d, is_checked] = queue.front();
        queue.pop_front();
        if (is_checked) {
            const std::size_t src = checked(s, d);
            for (TransitionId t : out_edges[s]) {
                const auto& tr = g.transition(t);
                const Integer d2 = d + dot(n, tr.effect);
                if (abs(d2) > bound) continue;
                b.edge(src, IntVector{tr.effect[xy[0]], tr.effect[xy[1]]}, unchecked(tr.dst, d2));
                push(tr.dst, d2, false);
            }
        } else {
            const std::size_t src = unchecked(s, d);
            const std::size_t dst = checked(s, d);
            for (const auto& [mx, my] : minimal_solutions(a, bb, d)) {
                const std::size_t mid = b.node(g.state_name(s) + "__bar_" + signed_tag(d) + "__" + signed_tag(mx) +
                                               "_" + signed_tag(my));
                b.edge(src, IntVector{-mx, -my}, mid);
                b.edge(mid, IntVector{mx, my}, dst);
            }
            push(s, d, true);
        }
    }
    StateId s = 0;
    StateId t = 0;
    out.vass = b.build(from, to, s, t);
    out.source = Configuration{s, zero_vector(2)};
    out.target = Configuration{t, zero_vector(2)};
    out.length_map = LengthMap{3, 0};
    return out;
}

std::size_t theoretical_length_bound(const Vass& g, unsigned exp_const, std::size_t cap) {
    Integer base = characteristic(g);
    if (base < 2) base = 2;
    const std::size_t d = g.dim();
    const Integer exponent = Integer(exp_const) * Integer(static_cast<unsigned long>(traversal_number(g))) *
                             Integer(static_cast<unsigned long>(d * d * d * d));
    const Integer limit(static_cast<unsigned long>(cap));
    Integer value = 1;
    for (Integer e = 0; e < exponent; ++e) {
        value *= base;
        if (value >= limit) return cap;
    }
    return static_cast<std::size_t>(value.get_ui());
}

ReachAnswer decide_reach(const ReachQuery& q, const ReachBudget& budget) {
    validate(q);
    if (cycle_space_basis(q.vass).rank() == 0) return decide_geo0(q);

    const std::size_t huge = std::numeric_limits<std::size_t>::max() / 4;
    const std::size_t theory = theoretical_length_bound(q.vass, budget.exp_const, huge);
    const bool complete = theory <= budget.max_len;
    const std::size_t len = complete ? theory : budget.max_len;

    const ReductionOutput red = reduce_to_zero_reach(q);
    ReachAnswer ans = bounded_reach(ReachQuery{red.vass, red.source, red.target}, len + 2, complete, budget.config_cap);
    if (ans.witness) {
        auto& w = *ans.witness;
        ans.witness = std::vector<TransitionId>(w.begin() + 1, w.end() - 1);
    }
    ans.bound_used = "0-reachability search, " + ans.bound_used + " (theoretical bound " +
                     (theory >= huge ? std::string("saturated") : std::to_string(theory)) + ")";
    if (ans.verdict != Verdict::Reachable) {
        ReachAnswer oracle = oracle_reach(q, budget.norm_cap);
        if (oracle.verdict != Verdict::Unknown) return oracle;
        if (ans.verdict == Verdict::Unknown) ans.bound_used += "; oracle " + oracle.bound_used;
    }
    return ans;
}

} // namespace vass
