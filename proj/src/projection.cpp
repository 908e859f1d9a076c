#include "vass/projection.hpp"

#include <map>

#include "vass/geodim.hpp"

namespace vass {

bool Orthant::contains(const IntVector& v) const {
    if (v.size() != signs.size()) throw Error(ErrorCode::DimensionMismatch, "orthant dimension");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) * signs[i] < 0) return false;
    }
    return true;
}

bool Orthant::contains(const QVector& v) const {
    if (v.size() != signs.size()) throw Error(ErrorCode::DimensionMismatch, "orthant dimension");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) * signs[i] < 0) return false;
    }
    return true;
}

namespace {

void check_indices(const Subspace& plane, const Orthant& z, std::size_t i1, std::size_t i2) {
    if (z.dim() != plane.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "orthant and subspace differ");
    if (i1 == i2 || i1 >= plane.ambient_dim() || i2 >= plane.ambient_dim()) {
        throw Error(ErrorCode::BadIndices, "need two distinct indices below " + std::to_string(plane.ambient_dim()));
    }
}

Vec2 chart_normal(const Subspace& plane, std::size_t i, int sign) {
    return Vec2{sign * plane.rows()[0][i], sign * plane.rows()[1][i]};
}

QVector from_chart(const Subspace& plane, const Vec2& lambda) { return combine(plane, QVector{lambda.x, lambda.y}); }

} // namespace

Cone2D orthant_cone_in_chart(const Subspace& plane, const Orthant& z) {
    if (plane.rank() != 2) throw Error(ErrorCode::Precondition, "a plane (rank 2) is required");
    if (z.dim() != plane.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "orthant and subspace differ");
    std::vector<Vec2> normals;
    for (std::size_t i = 0; i < plane.ambient_dim(); ++i) normals.push_back(chart_normal(plane, i, z.signs[i]));
    return Cone2D::from_constraints(normals);
}

bool verify_srp(const Subspace& plane, const Orthant& z, std::size_t i1, std::size_t i2) {
    check_indices(plane, z, i1, i2);
    switch (plane.rank()) {
    case 0: return true;
    case 1: {
        const QVector& b = plane.rows()[0];
        for (int sign : {1, -1}) {
            const bool projected_inside = sign * sgn(b[i1]) * z.signs[i1] >= 0 && sign * sgn(b[i2]) * z.signs[i2] >= 0;
            if (!projected_inside) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (sign * sgn(b[j]) * z.signs[j] < 0) return false;
            }
        }
        return true;
    }
    case 2: {
        auto cone = Cone2D::from_constraints(
            {chart_normal(plane, i1, z.signs[i1]), chart_normal(plane, i2, z.signs[i2])});
        for (const auto& ray : cone.spanning_rays()) {
            if (!z.contains(from_chart(plane, ray))) return false;
        }
        return true;
    }
    default: throw Error(ErrorCode::Precondition, "sign-reflecting projections are only decided for rank <= 2");
    }
}

std::pair<IntVector, IntVector> canonical_vectors(const IntVector& v1, const IntVector& v2, std::size_t i1,
                                                  std::size_t i2, const Orthant& z) {
    if (v1.size() != v2.size() || v1.size() != z.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "basis vectors and orthant differ in dimension");
    }
    const Subspace plane = span_basis(std::vector<IntVector>{v1, v2}, v1.size());
    if (plane.rank() != 2) throw Error(ErrorCode::DependentBasis, "v1 and v2 are linearly dependent");
    if (!verify_srp(plane, z, i1, i2)) {
        throw Error(ErrorCode::NotSignReflecting, "{" + std::to_string(i1 + 1) + "," + std::to_string(i2 + 1) +
                                                      "} is not sign-reflecting");
    }
    IntVector u1 = v2[i2] * v1 - v1[i2] * v2;
    IntVector u2 = v1[i1] * v2 - v2[i1] * v1;
    if (sgn(u1[i1]) != z.signs[i1]) u1 = -u1;
    if (sgn(u2[i2]) != z.signs[i2]) u2 = -u2;
    const Integer g = gcd(content(u1), content(u2));
    for (auto& x : u1) x /= g;
    for (auto& x : u2) x /= g;
    return {u1, u2};
}

std::optional<SrpWitness> find_srp(const Subspace& plane, const Orthant& z) {
    if (plane.rank() != 2) throw Error(ErrorCode::Precondition, "find_srp needs a plane (rank 2)");
    if (!orthant_cone_in_chart(plane, z).is_nontrivial()) return std::nullopt;
    const auto basis = plane.integer_basis();
    const std::size_t d = plane.ambient_dim();
    for (std::size_t i1 = 0; i1 < d; ++i1) {
        for (std::size_t i2 = i1 + 1; i2 < d; ++i2) {
            if (!verify_srp(plane, z, i1, i2)) continue;
            auto [u1, u2] = canonical_vectors(basis[0], basis[1], i1, i2, z);
            return SrpWitness{i1, i2, std::move(u1), std::move(u2)};
        }
    }
    return std::nullopt;
}

QVector lift_from_projection(const SrpWitness& w, const Vec2& x) {
    const Rational a = x.x / Rational(w.u1[w.i1]);
    const Rational b = x.y / Rational(w.u2[w.i2]);
    QVector v(w.u1.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * w.u1[i] + b * w.u2[i];
    return v;
}

Vec2 project(const SrpWitness& w, const QVector& v) { return Vec2{v.at(w.i1), v.at(w.i2)}; }
Vec2 project(const SrpWitness& w, const IntVector& v) { return Vec2{Rational(v.at(w.i1)), Rational(v.at(w.i2))}; }

bool is_proper(const Subspace& cycle_space) {
    if (cycle_space.rank() > 2) throw Error(ErrorCode::GdimTooHigh, "properness is defined for gdim <= 2");
    if (cycle_space.rank() < 2) return false;
    return orthant_cone_in_chart(cycle_space, Orthant::nonnegative(cycle_space.ambient_dim())).is_nontrivial();
}

bool is_proper(const Vass& g) { return is_proper(cycle_space_basis(g)); }

SupportProjection support_projection(const Vass& g, bool pruned, std::size_t state_cap) {
    const Subspace cyc = cycle_space_basis(g);
    const std::size_t d = g.dim();
    SupportProjection out;
    out.support = cyc.support();
    std::vector<std::size_t> complement;
    {
        std::vector<bool> in_support(d, false);
        for (std::size_t i : out.support) in_support[i] = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (!in_support[i]) complement.push_back(i);
        }
    }
    const Integer chi = characteristic(g);
    const Integer bound = 2 * chi;
    Integer size = Integer(static_cast<unsigned long>(g.num_states()));
    for (std::size_t k = 0; k < complement.size(); ++k) size *= bound + 1;
    if (size > Integer(static_cast<unsigned long>(state_cap))) {
        throw Error(ErrorCode::TooLarge, "support projection exceeds " + std::to_string(state_cap) + " states");
    }

    using Key = std::pair<StateId, IntVector>;
    std::map<Key, std::size_t> index;
    std::vector<Key> states;
    auto intern = [&](const Key& key) {
        auto [it, inserted] = index.emplace(key, states.size());
        if (inserted) states.push_back(key);
        return it->second;
    };

    if (pruned) {
        for (StateId q = 0; q < g.num_states(); ++q) intern({q, IntVector(complement.size(), chi)});
    } else {
        IntVector v(complement.size(), Integer(0));
        for (;;) {
            for (StateId q = 0; q < g.num_states(); ++q) intern({q, v});
            std::size_t k = v.size();
            while (k > 0 && v[k - 1] == bound) v[--k] = 0;
            if (k == 0) break;
            ++v[k - 1];
        }
    }

    const auto out_edges = g.out_edges();
    struct Edge {
        std::size_t src;
        IntVector effect;
        std::size_t dst;
    };
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < states.size(); ++s) {
        const Key key = states[s];
        for (TransitionId id : out_edges[key.first]) {
            const auto& t = g.transition(id);
            IntVector next = key.second;
            bool inside = true;
            for (std::size_t k = 0; k < complement.size(); ++k) {
                next[k] += t.effect[complement[k]];
                if (next[k] < 0 || next[k] > bound) inside = false;
            }
            if (!inside) continue;
            const Key target{t.dst, next};
            std::size_t dst = 0;
            if (pruned) {
                dst = intern(target);
            } else {
                dst = index.at(target);
            }
            IntVector effect;
            for (std::size_t i : out.support) effect.push_back(t.effect[i]);
            edges.push_back(Edge{s, std::move(effect), dst});
        }
    }

    std::vector<bool> keep(states.size(), !pruned);
    for (const auto& e : edges) keep[e.src] = keep[e.dst] = true;
    std::vector<std::size_t> renumber(states.size(), 0);
    out.vass = Vass(out.support.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (!keep[s]) continue;
        std::string name = g.state_name(states[s].first);
        if (!complement.empty()) {
            name += "_";
            for (const auto& x : states[s].second) name += "_" + x.get_str();
        }
        renumber[s] = out.vass.add_state(name);
        out.original_state.push_back(states[s].first);
        out.folded.push_back(states[s].second);
    }
    for (auto& e : edges) out.vass.add_transition(renumber[e.src], std::move(e.effect), renumber[e.dst]);
    return out;
}

} // namespace vass
